#include "eulerperm/qpoly.hpp"

#include <json.hpp>

#include <algorithm>
#include <mutex>
#include <utility>

namespace eulerperm {

MultiPoly::MultiPoly(BigInt constant) {
    if (constant != 0) terms_[Monomial{}] = std::move(constant);
}

MultiPoly MultiPoly::monomial(BigInt coeff, int s, int t, int q) {
    MultiPoly p;
    if (coeff != 0) p.terms_[Monomial{s, t, q}] = std::move(coeff);
    return p;
}

BigInt MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt{0} : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else if ((it->second += c) == 0) {
            terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = -c;
        } else if ((it->second -= c) == 0) {
            terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    TermMap prod;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m{ma.s + mb.s, ma.t + mb.t, ma.q + mb.q};
            auto it = prod.find(m);
            if (it == prod.end()) {
                prod[m] = ca * cb;
            } else if ((it->second += ca * cb) == 0) {
                prod.erase(it);
            }
        }
    terms_ = std::move(prod);
    return *this;
}

MultiPoly MultiPoly::eval_one(char var) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        Monomial k = m;
        switch (var) {
            case 's': k.s = 0; break;
            case 't': k.t = 0; break;
            case 'q': k.q = 0; break;
            default: throw ParseError("unknown variable");
        }
        out += monomial(c, k.s, k.t, k.q);
    }
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        BigInt a = c;
        if (first) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string vars;
        for (auto [name, e] : {std::pair{'s', m.s}, {'t', m.t}, {'q', m.q}}) {
            if (e == 0) continue;
            vars += name;
            if (e > 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            out += a.str();
        } else {
            if (a != 1) out += a.str();
            out += vars;
        }
        first = false;
    }
    return out;
}

std::string MultiPoly::json_terms() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : terms_)
        arr.push_back({{"s", m.s}, {"t", m.t}, {"q", m.q}, {"coeff", c.str()}});
    return arr.dump();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw BadBoundsError("negative part");
        if (i && parts_[i - 1] < parts_[i]) throw BadBoundsError("parts must be weakly decreasing");
    }
}

int Partition::part(std::size_t i) const {
    if (i < 1 || i > parts_.size()) throw IndexOutOfRangeError("part index out of range");
    return parts_[i - 1];
}

long long Partition::weight() const {
    long long w = 0;
    for (int p : parts_) w += p;
    return w;
}

std::string Partition::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

MultiPoly gauss_binom(int n, int m) {
    if (m < 0 || n < 0 || m > n) return {};
    static std::map<std::pair<int, int>, MultiPoly> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({n, m});
        if (it != cache.end()) return it->second;
    }
    // Pascal recurrence [a b] = [a-1 b-1] + q^b [a-1 b], exact in Z[q].
    std::vector<MultiPoly> row{MultiPoly{1}};           // a = 0
    for (int a = 1; a <= n; ++a) {
        std::vector<MultiPoly> next(static_cast<std::size_t>(std::min(a, m)) + 1);
        next[0] = MultiPoly{1};
        for (int b = 1; b <= std::min(a, m); ++b) {
            MultiPoly v = (b - 1 < static_cast<int>(row.size())) ? row[static_cast<std::size_t>(b - 1)] : MultiPoly{};
            if (b < static_cast<int>(row.size()))
                v += MultiPoly::monomial(1, 0, 0, b) * row[static_cast<std::size_t>(b)];
            next[static_cast<std::size_t>(b)] = std::move(v);
        }
        row = std::move(next);
    }
    MultiPoly result = m < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(m)] : MultiPoly{};
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(std::pair{n, m}, std::move(result)).first->second;
}

std::vector<Partition> partitions_in_box(int n, int t, int m) {
    if (n < 0 || t < 0 || m < 0) throw BadBoundsError("negative box parameter");
    if (n > 0 && t > m) throw BadBoundsError("box floor exceeds ceiling");
    std::vector<Partition> out;
    std::vector<int> acc;
    std::function<void(int, int)> rec = [&](int i, int hi) {
        if (i == n) {
            out.emplace_back(Partition{acc});
            return;
        }
        for (int v = t; v <= hi; ++v) {
            acc.push_back(v);
            rec(i + 1, v);
            acc.pop_back();
        }
    };
    rec(0, m);
    std::sort(out.begin(), out.end());
    return out;
}

MultiPoly thm12_rhs(ComposeVariant v, int j, int k, int jp, int kp) {
    MultiPoly out;
    for (int i = 1; i <= j + k + 2; ++i) {
        BigInt f1 = (v == ComposeVariant::Diamond)
                        ? binomial(k - kp + jp + 1, i + jp - kp)
                        : binomial(k - kp + jp, i + jp - kp);
        BigInt f2 = binomial(j - jp + kp - 1, i - 1);
        if (f1 != 0 && f2 != 0) out += MultiPoly::monomial(f1 * f2, 0, i + jp, 0);
    }
    return out;
}

MultiPoly stanley_rhs(int m, int n, int r, int s, int k, long long maj_pi, long long maj_delta) {
    MultiPoly p = gauss_binom(m - r + s, k - r) * gauss_binom(n - s + r, k - s);
    long long shift = maj_pi + maj_delta + static_cast<long long>(k - s) * (k - r);
    return p * MultiPoly::monomial(1, 0, 0, static_cast<int>(shift));
}

MultiPoly refined_rhs(ShuffleVariant v, int m, int n, int r, int s, int d,
                      long long maj_delta, long long maj_pi) {
    MultiPoly first;
    long long cross = 0;
    switch (v) {
        case ShuffleVariant::L:
            first = gauss_binom(m - r + s, d - r);
            cross = static_cast<long long>(d - s) * (d - r);
            break;
        case ShuffleVariant::Ls:
            first = gauss_binom(m - r + s - 1, d - r);
            cross = static_cast<long long>(d - s) * (d - r);
            break;
        case ShuffleVariant::Ll:
            first = gauss_binom(m - r + s - 1, d - r);
            cross = static_cast<long long>(d - s + 1) * (d - r);
            break;
        case ShuffleVariant::Plain:
            throw MalformedError("refined form needs a restricted variant");
    }
    MultiPoly p = first * gauss_binom(n - s + r - 1, d - s - 1);
    long long shift = maj_delta + maj_pi + cross;
    return p * MultiPoly::monomial(1, 0, 0, static_cast<int>(shift));
}

MultiPoly class_polynomial(PermClass cls, int n, const std::string& vars, int cap) {
    if (vars.empty()) throw ParseError("variable set must be nonempty");
    bool use_s = false, use_t = false, use_q = false;
    for (char c : vars) {
        switch (c) {
            case 's': use_s = true; break;
            case 't': use_t = true; break;
            case 'q': use_q = true; break;
            default: throw ParseError("variables must come from s, t, q");
        }
    }
    MultiPoly out;
    for (const Permutation& p : enumerate_class(cls, n, cap)) {
        StatVector st = statistics(p);
        out += MultiPoly::monomial(1, use_s ? st.ides : 0, use_t ? st.des : 0,
                                   use_q ? static_cast<int>(st.maj) : 0);
    }
    return out;
}

} // namespace eulerperm
