#include "eulerperm/omega.hpp"

#include "eulerperm/tree.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace eulerperm;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

} // namespace

TEST_CASE("right-spine relabeling on the worked example") {
    CHECK(omega(P("21473658")) == P("31582746"));
    CHECK(omega_inv(P("31582746")) == P("21473658"));
    CHECK(omega(P("")) == P(""));
    CHECK(omega(P("1")) == P("1"));
    CHECK(omega(P("12")) == P("12"));
    CHECK_THROWS_AS(omega(P("21")), NotSimsunError);
    CHECK_THROWS_AS(omega_inv(P("21")), NotAndre2Error);
}

TEST_CASE("statistic transport on the worked example") {
    const StatVector a = statistics(P("21473658"));
    const StatVector b = statistics(omega(P("21473658")));
    CHECK(b.ides == a.ides);
    CHECK(b.imaj == a.imaj + a.ides);
    CHECK(b.inv == a.inv + 8 - a.rlmin);
}

TEST_CASE("shape-preserving bijection onto the second kind") {
    for (int n = 0; n <= 6; ++n) {
        std::vector<Permutation> image;
        for (const auto& sigma : enumerate_class(PermClass::Simsun, n)) {
            const Permutation tau = omega(sigma);
            CHECK(is_andre2(tau));
            CHECK(omega_inv(tau) == sigma);
            if (n > 0) CHECK(shape(psi(tau)) == shape(psi(sigma)));
            image.push_back(tau);
        }
        std::sort(image.begin(), image.end());
        CHECK(image == enumerate_class(PermClass::Andre2, n));
    }
}
