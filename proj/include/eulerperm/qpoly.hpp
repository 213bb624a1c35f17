#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "eulerperm/permutation.hpp"
#include "eulerperm/shuffle.hpp"

namespace eulerperm {

using BigInt = boost::multiprecision::cpp_int;

struct Monomial {
    int s = 0;
    int t = 0;
    int q = 0;
    auto operator<=>(const Monomial&) const = default;
};

// Exact polynomial in Z[s,t,q].  Canonical text form: terms ordered by
// (deg_s, deg_t, deg_q) descending, "^" for powers, coefficient 1 omitted
// before a variable; e.g. "4s + 1", "2s^3 + 32s^2 + 26s + 1", zero -> "0".
class MultiPoly {
public:
    using TermMap = std::map<Monomial, BigInt, std::greater<Monomial>>;

    MultiPoly() = default;
    explicit MultiPoly(BigInt constant);
    static MultiPoly monomial(BigInt coeff, int s, int t, int q);

    bool is_zero() const { return terms_.empty(); }
    BigInt coeff(const Monomial& m) const;
    const TermMap& terms() const { return terms_; }

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }

    MultiPoly eval_one(char var) const;               // substitute var ('s','t','q') = 1

    std::string str() const;
    std::string json_terms() const;                   // [{"s":..,"t":..,"q":..,"coeff":".."},..]

    bool operator==(const MultiPoly&) const = default;

private:
    TermMap terms_;                                   // no zero coefficients stored
};

// Fixed-length weakly decreasing part vector; zero parts are significant
// (the number of parts is part of the value).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);       // validates decreasing, >= 0

    std::size_t parts_count() const { return parts_.size(); }
    int part(std::size_t i) const;                    // 1-based
    const std::vector<int>& parts() const { return parts_; }
    long long weight() const;
    std::string str() const;                          // "(2,1)", empty -> "()"

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    std::strong_ordering operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

private:
    std::vector<int> parts_;
};

BigInt binomial(long long n, long long k);            // 0 outside 0 <= k <= n

// Gaussian binomial [n over m]_q; zero polynomial if m < 0, m > n, or n < 0.
MultiPoly gauss_binom(int n, int m);

// All weakly decreasing (lambda_1,...,lambda_n) with t <= lambda_i <= m,
// in increasing lexicographic order.  Throws BadBounds when the box is
// inconsistent (t > m with n > 0, or negative arguments).
std::vector<Partition> partitions_in_box(int n, int t, int m);

// Closed-form ides generating function (a polynomial in t) of the composed
// sets; the sum over i >= 1 terminates when either binomial vanishes.
MultiPoly thm12_rhs(ComposeVariant v, int j, int k, int jp, int kp);

// maj generating function (in q) of the shuffles of pi (m letters, r
// descents) and delta (n letters, s descents) having exactly k descents.
MultiPoly stanley_rhs(int m, int n, int r, int s, int k,
                      long long maj_pi, long long maj_delta);

// maj generating function of the restricted shuffles with d descents, for
// delta of m letters with r descents and pi of n letters with s descents,
// under the delta-dominance hypotheses.  Variant must not be Plain.
MultiPoly refined_rhs(ShuffleVariant v, int m, int n, int r, int s, int d,
                      long long maj_delta, long long maj_pi);

// Sum of s^ides t^des q^maj over the class members, restricted to the
// variables named in vars (a nonempty subset of "stq", in any order).
MultiPoly class_polynomial(PermClass cls, int n, const std::string& vars,
                           int cap = kDefaultEnumCap);

} // namespace eulerperm
