#pragma once

#include "eulerperm/permutation.hpp"

namespace eulerperm {

// Shape-preserving bijection from simsun to Andre II permutations: relabel
// the right spine {v_0 < ... < v_m} of the min-factorization tree as
// v_0 -> 1, v_i -> v_{i-1}+1, and every other label s -> s+1, then read the
// in-order word.  Throws NotSimsun on inputs outside the domain.
Permutation omega(const Permutation& sigma);

// Inverse relabeling: spine labels {w_0 < ... < w_m} map to w_i -> w_{i+1}-1
// (w_m -> n), every other label s -> s-1.  Throws NotAndre2 outside the domain.
Permutation omega_inv(const Permutation& tau);

} // namespace eulerperm
