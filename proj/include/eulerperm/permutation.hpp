#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "eulerperm/error.hpp"

namespace eulerperm {

using Letter = std::uint64_t;

// A word of pairwise distinct positive letters.  "Standard" means the letters
// are exactly {1,...,n}.  Positions are 1-based throughout the statistics API.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<Letter> word);

    // Accepts contiguous digits ("21473658"), comma-separated ("10,2,1"),
    // and "" or the epsilon sign for the empty word.
    static Permutation parse(std::string_view text);
    static Permutation identity(std::size_t n);

    std::size_t size() const { return word_.size(); }
    bool empty() const { return word_.empty(); }
    Letter at(std::size_t pos) const;                // 1-based
    const std::vector<Letter>& word() const { return word_; }
    bool is_standard() const { return standard_; }

    // Contiguous digits iff every letter <= 9, otherwise comma-separated;
    // the empty word renders as the epsilon sign.
    std::string str() const;

    bool operator==(const Permutation& o) const { return word_ == o.word_; }
    std::strong_ordering operator<=>(const Permutation& o) const {
        return word_ <=> o.word_;                    // lexicographic
    }

private:
    std::vector<Letter> word_;
    bool standard_ = true;
};

struct StatVector {
    int des = 0;
    long long maj = 0;
    int ides = 0;
    long long imaj = 0;
    long long inv = 0;
    int rlmin = 0;
    bool operator==(const StatVector&) const = default;
};

// Descent positions, 1-based; defined for any distinct-letter word.
std::vector<int> descent_set(const Permutation& p);
int des(const Permutation& p);
long long maj(const Permutation& p);

Permutation inverse(const Permutation& p);           // requires standard
std::vector<int> idescent_set(const Permutation& p); // Des of the inverse
long long inv(const Permutation& p);
int rlmin(const Permutation& p);                     // count of right-to-left minima
std::vector<Letter> rlmin_values(const Permutation& p); // their values, increasing
StatVector statistics(const Permutation& p);         // requires standard

Permutation standardize(const Permutation& p);       // order-isomorphic standard word

// Recursive min-decomposition predicates; defined for any distinct-letter
// word, with the empty and one-letter words in both classes.
bool is_andre1(const Permutation& p);
bool is_andre2(const Permutation& p);
// Ends in n, no double descents, preserved under deleting n, n-1, ...;
// requires standard.
bool is_simsun(const Permutation& p);

enum class PermClass { Andre1, Andre2, Simsun, All };

PermClass parse_class(std::string_view name);        // andre1|andre2|simsun|all
std::string class_name(PermClass cls);

inline constexpr int kDefaultEnumCap = 10;

// Lexicographically sorted members.  n <= 8 filters all n! words; larger n
// uses the recursive constructions.  Throws ResourceLimit past the cap.
std::vector<Permutation> enumerate_class(PermClass cls, int n, int cap = kDefaultEnumCap);

// Both generation strategies, exposed so they can be cross-checked.
std::vector<Permutation> enumerate_class_filter(PermClass cls, int n);
std::vector<Permutation> enumerate_class_recursive(PermClass cls, int n);

} // namespace eulerperm
