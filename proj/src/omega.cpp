#include "eulerperm/omega.hpp"

#include "eulerperm/tree.hpp"

#include <vector>

namespace eulerperm {

namespace {

// Collect the labels along the right spine of the tree rooted at `root`.
std::vector<Letter> right_spine(const IncreasingBinaryTree& t) {
    std::vector<Letter> spine;
    int idx = t.root();
    while (idx >= 0) {
        spine.push_back(t.node(idx).label);
        idx = t.node(idx).right;
    }
    return spine;
}

IncreasingBinaryTree relabel(const IncreasingBinaryTree& t,
                             const std::vector<Letter>& map) {
    IncreasingBinaryTree out;
    const std::size_t n = t.size();
    for (std::size_t i = 0; i < n; ++i)
        out.add_node(map[t.node(static_cast<int>(i)).label]);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& nd = t.node(static_cast<int>(i));
        out.link(static_cast<int>(i), nd.left, nd.right);
    }
    out.set_root(t.root());
    out.validate();
    return out;
}

} // namespace

Permutation omega(const Permutation& sigma) {
    if (!is_simsun(sigma))
        throw NotSimsunError("input is not simsun");
    if (sigma.empty()) return sigma;
    const std::size_t n = sigma.size();
    IncreasingBinaryTree t = psi(sigma);
    std::vector<Letter> spine = right_spine(t);
    // v_0 -> 1, v_i -> v_{i-1} + 1, all other labels shift up by one.
    std::vector<Letter> map(n + 1, 0);
    std::vector<bool> on_spine(n + 1, false);
    for (Letter v : spine) on_spine[v] = true;
    map[spine[0]] = 1;
    for (std::size_t i = 1; i < spine.size(); ++i) map[spine[i]] = spine[i - 1] + 1;
    for (Letter v = 1; v <= n; ++v)
        if (!on_spine[v]) map[v] = v + 1;
    return psi_inv(relabel(t, map));
}

Permutation omega_inv(const Permutation& tau) {
    if (!is_andre2(tau))
        throw NotAndre2Error("input is not in the second Andre class");
    if (tau.empty()) return tau;
    const std::size_t n = tau.size();
    IncreasingBinaryTree t = psi(tau);
    std::vector<Letter> spine = right_spine(t);
    // w_i -> w_{i+1} - 1, the last spine label -> n, all other labels shift down.
    std::vector<Letter> map(n + 1, 0);
    std::vector<bool> on_spine(n + 1, false);
    for (Letter v : spine) on_spine[v] = true;
    for (std::size_t i = 0; i + 1 < spine.size(); ++i) map[spine[i]] = spine[i + 1] - 1;
    map[spine.back()] = static_cast<Letter>(n);
    for (Letter v = 1; v <= n; ++v)
        if (!on_spine[v]) map[v] = v - 1;
    return psi_inv(relabel(t, map));
}

} // namespace eulerperm
