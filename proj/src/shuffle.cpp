#include "eulerperm/shuffle.hpp"

#include <algorithm>
#include <unordered_set>

namespace eulerperm {

namespace {

void check_disjoint(const Permutation& a, const Permutation& b) {
    std::unordered_set<Letter> seen(a.word().begin(), a.word().end());
    for (Letter v : b.word())
        if (seen.count(v)) throw NotDisjointError("words share a letter");
}

void interleave(const std::vector<Letter>& a, const std::vector<Letter>& b,
                std::size_t ia, std::size_t ib, std::vector<Letter>& buf,
                std::vector<std::vector<Letter>>& out) {
    if (ia == a.size() && ib == b.size()) {
        out.push_back(buf);
        return;
    }
    if (ia < a.size()) {
        buf.push_back(a[ia]);
        interleave(a, b, ia + 1, ib, buf, out);
        buf.pop_back();
    }
    if (ib < b.size()) {
        buf.push_back(b[ib]);
        interleave(a, b, ia, ib + 1, buf, out);
        buf.pop_back();
    }
}

} // namespace

ShuffleVariant parse_shuffle_variant(std::string_view name) {
    if (name == "plain") return ShuffleVariant::Plain;
    if (name == "l") return ShuffleVariant::L;
    if (name == "ls") return ShuffleVariant::Ls;
    if (name == "ll") return ShuffleVariant::Ll;
    throw ParseError("unknown shuffle variant");
}

std::string shuffle_variant_name(ShuffleVariant v) {
    switch (v) {
        case ShuffleVariant::Plain: return "plain";
        case ShuffleVariant::L: return "l";
        case ShuffleVariant::Ls: return "ls";
        case ShuffleVariant::Ll: return "ll";
    }
    return "?";
}

ShuffleFamily shuffle(const Permutation& pi, const Permutation& delta, ShuffleVariant v) {
    check_disjoint(pi, delta);
    ShuffleFamily fam{v, pi, delta, {}};
    const auto& d = delta.word();
    // Restrictions anchor to delta letters that must exist.
    if (v != ShuffleVariant::Plain && d.empty()) return fam;
    if (v == ShuffleVariant::Ll && d.size() < 2) return fam;

    std::vector<std::vector<Letter>> words;
    std::vector<Letter> buf;
    buf.reserve(pi.size() + d.size());
    interleave(pi.word(), d, 0, 0, buf, words);
    std::sort(words.begin(), words.end());
    for (auto& w : words) {
        if (v != ShuffleVariant::Plain && (w.empty() || w.front() != d.front())) continue;
        if (v == ShuffleVariant::Ls && w.back() != d.back()) continue;
        if (v == ShuffleVariant::Ll && (w.size() < 2 || w[1] != d[1])) continue;
        fam.members.emplace_back(Permutation{std::move(w)});
    }
    return fam;
}

ComposeVariant parse_compose_variant(std::string_view name) {
    if (name == "diamond") return ComposeVariant::Diamond;
    if (name == "up") return ComposeVariant::Up;
    if (name == "down") return ComposeVariant::Down;
    throw ParseError("unknown compose variant");
}

std::string compose_variant_name(ComposeVariant v) {
    switch (v) {
        case ComposeVariant::Diamond: return "diamond";
        case ComposeVariant::Up: return "up";
        case ComposeVariant::Down: return "down";
    }
    return "?";
}

std::vector<Permutation> compose_sets(const Permutation& sigma, const Permutation& tau,
                                      ComposeVariant v) {
    if (!sigma.is_standard() || !tau.is_standard())
        throw NotStandardError("compose sets require standard inputs");
    const std::size_t j = sigma.size(), k = tau.size();
    const Letter top = static_cast<Letter>(j + k + 1);
    std::vector<std::vector<Letter>> words;

    // Choose which letters of {2..j+k+1} feed the order-isomorphic copy of
    // sigma; the rest feed tau's copy.
    std::vector<bool> pick(j + k, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(j), true);
    std::sort(pick.begin(), pick.end(), std::greater<>());
    do {
        std::vector<Letter> sletters, tletters;
        for (std::size_t i = 0; i < j + k; ++i)
            (pick[i] ? sletters : tletters).push_back(static_cast<Letter>(i + 2));
        if (v == ComposeVariant::Up &&
            (tletters.empty() || tletters.back() != top)) continue;
        if (v == ComposeVariant::Down &&
            (tletters.empty() || tletters.front() != 2)) continue;
        std::vector<Letter> w;
        w.reserve(j + k + 1);
        for (Letter x : sigma.word()) w.push_back(sletters[static_cast<std::size_t>(x - 1)]);
        w.push_back(1);
        for (Letter x : tau.word()) w.push_back(tletters[static_cast<std::size_t>(x - 1)]);
        words.push_back(std::move(w));
    } while (std::prev_permutation(pick.begin(), pick.end()));

    std::sort(words.begin(), words.end());
    std::vector<Permutation> out;
    out.reserve(words.size());
    for (auto& w : words) out.emplace_back(Permutation{std::move(w)});
    return out;
}

Permutation to_shuffle(const Permutation& mu, int j) {
    if (j < 0 || static_cast<std::size_t>(j) >= mu.size())
        throw MalformedError("split position out of range");
    if (mu.at(static_cast<std::size_t>(j) + 1) != 1)
        throw MalformedError("the letter 1 must sit at position j+1");
    return inverse(mu);
}

} // namespace eulerperm
