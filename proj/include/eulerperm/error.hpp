#pragma once

#include <stdexcept>

namespace eulerperm {

// Base type for all domain errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };           // unparseable text input
struct InvalidWordError : Error { using Error::Error; };     // duplicate or zero letters
struct NotStandardError : Error { using Error::Error; };     // letters are not exactly {1..n}
struct NotDisjointError : Error { using Error::Error; };
struct MalformedError : Error { using Error::Error; };       // structural precondition violated
struct MalformedTreeError : Error { using Error::Error; };
struct ResourceLimitError : Error { using Error::Error; };
struct LetterPresentError : Error { using Error::Error; };
struct SlotOutOfRangeError : Error { using Error::Error; };
struct IndexOutOfRangeError : Error { using Error::Error; };
struct BadBoundsError : Error { using Error::Error; };
struct NoPreimageError : Error { using Error::Error; };
struct NotAShuffleError : Error { using Error::Error; };
struct NotSimsunError : Error { using Error::Error; };
struct NotAndre2Error : Error { using Error::Error; };

} // namespace eulerperm
