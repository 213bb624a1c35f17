#include "eulerperm/insertion.hpp"

#include "eulerperm/shuffle.hpp"

#include <algorithm>
#include <unordered_set>

namespace eulerperm {

namespace {

long long word_maj(const std::vector<Letter>& w) {
    long long s = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) s += static_cast<long long>(i) + 1;
    return s;
}

int word_des(const std::vector<Letter>& w) {
    int c = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) ++c;
    return c;
}

bool is_subsequence(const std::vector<Letter>& part, const std::vector<Letter>& whole) {
    std::size_t i = 0;
    for (Letter v : whole)
        if (i < part.size() && part[i] == v) ++i;
    return i == part.size();
}

} // namespace

Permutation insert_letter(const Permutation& sigma, int slot, Letter r) {
    if (slot < 0 || static_cast<std::size_t>(slot) > sigma.size())
        throw SlotOutOfRangeError("insertion slot out of range");
    const auto& w = sigma.word();
    if (std::find(w.begin(), w.end(), r) != w.end())
        throw LetterPresentError("letter already present");
    std::vector<Letter> out(w.begin(), w.begin() + slot);
    out.push_back(r);
    out.insert(out.end(), w.begin() + slot, w.end());
    return Permutation(std::move(out));
}

std::vector<long long> mis(const Permutation& sigma, Letter r) {
    const long long base = maj(sigma);
    std::vector<long long> out;
    out.reserve(sigma.size() + 1);
    for (int slot = 0; slot <= static_cast<int>(sigma.size()); ++slot)
        out.push_back(maj(insert_letter(sigma, slot, r)) - base);
    return out;
}

int d_tail(const Permutation& pi, int i) {
    if (i < 1 || static_cast<std::size_t>(i) > pi.size())
        throw IndexOutOfRangeError("tail index out of range");
    int c = 0;
    for (int dpos : descent_set(pi))
        if (dpos >= i) ++c;
    return c;
}

PartitionPair phi(const Permutation& alpha, const Permutation& delta, const Permutation& pi) {
    {
        std::unordered_set<Letter> seen(delta.word().begin(), delta.word().end());
        for (Letter v : pi.word())
            if (seen.count(v)) throw NotDisjointError("words share a letter");
    }
    if (alpha.size() != delta.size() + pi.size() ||
        !is_subsequence(delta.word(), alpha.word()) ||
        !is_subsequence(pi.word(), alpha.word()))
        throw NotAShuffleError("word is not a shuffle of the given pair");

    const std::size_t n = pi.size();
    // tail[i] = number of descent positions of pi at or after i.
    std::vector<int> tail(n + 1, 0);
    {
        std::vector<int> dpos;
        const auto& w = pi.word();
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) dpos.push_back(static_cast<int>(i) + 1);
        for (std::size_t i = 1; i <= n; ++i)
            tail[i] = static_cast<int>(dpos.end() -
                                       std::lower_bound(dpos.begin(), dpos.end(), static_cast<int>(i)));
    }

    std::vector<Letter> cur = alpha.word();
    long long cur_maj = word_maj(cur);
    int cur_des = word_des(cur);
    std::vector<int> lambda_rev, mu;
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<Letter> next;
        next.reserve(cur.size() - 1);
        for (Letter v : cur)
            if (v != pi.word()[i - 1]) next.push_back(v);
        long long next_maj = word_maj(next);
        int next_des = word_des(next);
        int t_i = static_cast<int>(cur_maj - next_maj) - tail[i];
        if (cur_des == next_des + 1)
            lambda_rev.push_back(t_i);
        else
            mu.push_back(t_i);
        cur = std::move(next);
        cur_maj = next_maj;
        cur_des = next_des;
    }
    std::reverse(lambda_rev.begin(), lambda_rev.end());
    return PartitionPair{Partition{std::move(lambda_rev)}, Partition{std::move(mu)}};
}

Permutation phi_inv(const Partition& lambda, const Partition& mu,
                    const Permutation& delta, const Permutation& pi, int d) {
    const int m = static_cast<int>(delta.size());
    const int n = static_cast<int>(pi.size());
    const int r = des(delta);
    const int s = des(pi);
    if (d < r || lambda.parts_count() != static_cast<std::size_t>(d - r) ||
        n - d + r < 0 || mu.parts_count() != static_cast<std::size_t>(n - d + r))
        throw NoPreimageError("partition part counts do not fit the descent number");
    if (!lambda.parts().empty() &&
        (lambda.parts().front() > m || lambda.parts().back() < d - s))
        throw NoPreimageError("lambda violates its box bounds");
    if (!mu.parts().empty() && mu.parts().front() > d - s)
        throw NoPreimageError("mu violates its box bounds");

    for (const Permutation& alpha : shuffle(pi, delta, ShuffleVariant::Plain).members) {
        if (des(alpha) != d) continue;
        if (phi(alpha, delta, pi) == PartitionPair{lambda, mu}) return alpha;
    }
    throw NoPreimageError("no shuffle maps to the given partition pair");
}

} // namespace eulerperm
