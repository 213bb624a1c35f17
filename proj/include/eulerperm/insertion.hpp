#pragma once

#include <vector>

#include "eulerperm/permutation.hpp"
#include "eulerperm/qpoly.hpp"

namespace eulerperm {

// New word with r placed after the first `slot` letters; slot ranges 0..n.
Permutation insert_letter(const Permutation& sigma, int slot, Letter r);

// Major increment sequence: mis[i] = maj(insert_letter(sigma, i, r)) - maj(sigma)
// for every slot.  A shuffling of (k+1,...,n) and (k,...,1,0) where k = des(sigma).
std::vector<long long> mis(const Permutation& sigma, Letter r);

// Number of descent positions of pi that are >= i; 1 <= i <= |pi|.
int d_tail(const Permutation& pi, int i);

struct PartitionPair {
    Partition lambda;
    Partition mu;
    bool operator==(const PartitionPair&) const = default;
};

// Partition encoding of a shuffle: remove pi's letters from alpha left to
// right; step i contributes t(i) = maj drop minus d_tail(pi, i).  Steps that
// destroy a descent yield lambda (recorded largest-first), the remaining
// steps yield mu.  Then maj(alpha) = |lambda| + |mu| + maj(delta) + maj(pi),
// with m >= lambda_1 >= ... >= lambda_{d-r} >= d-s >= mu_1 >= ... >= 0.
PartitionPair phi(const Permutation& alpha, const Permutation& delta,
                  const Permutation& pi);

// Search-based inverse over the (delta, pi) shuffle family restricted to d
// descents.  Throws NoPreimage when the box bounds are violated or no member
// maps to (lambda, mu).
Permutation phi_inv(const Partition& lambda, const Partition& mu,
                    const Permutation& delta, const Permutation& pi, int d);

} // namespace eulerperm
