#pragma once

#include <vector>

#include "eulerperm/permutation.hpp"

namespace eulerperm {

enum class ShuffleVariant { Plain, L, Ls, Ll };

ShuffleVariant parse_shuffle_variant(std::string_view name); // plain|l|ls|ll
std::string shuffle_variant_name(ShuffleVariant v);

struct ShuffleFamily {
    ShuffleVariant variant = ShuffleVariant::Plain;
    Permutation pi;
    Permutation delta;
    std::vector<Permutation> members;                 // lexicographically sorted
};

// All interleavings of pi and delta (disjoint letter sets), keeping both as
// subsequences.  L fixes the first letter to delta_1, Ls additionally the
// last letter to delta_m, Ll instead the second letter to delta_2.  A
// restricted variant with too few delta letters has no members.
ShuffleFamily shuffle(const Permutation& pi, const Permutation& delta, ShuffleVariant v);

enum class ComposeVariant { Diamond, Up, Down };

ComposeVariant parse_compose_variant(std::string_view name); // diamond|up|down
std::string compose_variant_name(ComposeVariant v);

// Words sigma'·1·tau' on {1..j+k+1} where sigma' and tau' standardize to
// sigma and tau.  Up forces the largest letter j+k+1 into tau'; Down forces
// the letter 2 into tau'.  Requires standard inputs; sorted output.
std::vector<Permutation> compose_sets(const Permutation& sigma,
                                      const Permutation& tau,
                                      ComposeVariant v);

// For mu = sigma'·1·tau' with the 1 at position j+1: returns mu^{-1}, which
// lies in the first-letter-restricted shuffle of pi = sigma^{-1} with
// delta = (j+1)·(tau^{-1} shifted up by j+1).
Permutation to_shuffle(const Permutation& mu, int j);

} // namespace eulerperm
