#include "eulerperm/insertion.hpp"
#include "eulerperm/shuffle.hpp"

#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

using namespace eulerperm;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

PartitionPair PP(std::vector<int> lam, std::vector<int> mu) {
    return PartitionPair{Partition(std::move(lam)), Partition(std::move(mu))};
}

} // namespace

TEST_CASE("letter insertion") {
    CHECK(insert_letter(P("132"), 0, 4).str() == "4132");
    CHECK(insert_letter(P("132"), 2, 4).str() == "1342");
    CHECK(insert_letter(P("132"), 3, 4).str() == "1324");
    CHECK(insert_letter(P(""), 0, 1).str() == "1");
    CHECK_THROWS_AS(insert_letter(P("132"), 4, 5), SlotOutOfRangeError);
    CHECK_THROWS_AS(insert_letter(P("132"), -1, 5), SlotOutOfRangeError);
    CHECK_THROWS_AS(insert_letter(P("132"), 1, 3), LetterPresentError);
}

TEST_CASE("major increment sequence") {
    CHECK(mis(P("132"), 4) == std::vector<long long>{2, 3, 1, 0});
    CHECK(mis(P("1"), 2) == std::vector<long long>{1, 0});
    CHECK(mis(P(""), 1) == std::vector<long long>{0});
    CHECK_THROWS_AS(mis(P("12"), 2), LetterPresentError);

    // Inserting the new largest letter: slot 0 raises maj by des+1, the last
    // slot leaves it unchanged, and the increments exhaust {0..n}.
    for (int n = 0; n <= 5; ++n)
        for (const auto& p : enumerate_class(PermClass::All, n)) {
            auto m = mis(p, static_cast<Letter>(n + 1));
            REQUIRE(m.size() == static_cast<std::size_t>(n) + 1);
            if (n > 0) CHECK(m.front() == des(p) + 1);
            CHECK(m.back() == 0);
            std::sort(m.begin(), m.end());
            std::vector<long long> all(static_cast<std::size_t>(n) + 1);
            for (int i = 0; i <= n; ++i) all[static_cast<std::size_t>(i)] = i;
            CHECK(m == all);
        }
}

TEST_CASE("descent tails") {
    CHECK(d_tail(P("263"), 1) == 1);
    CHECK(d_tail(P("263"), 2) == 1);
    CHECK(d_tail(P("263"), 3) == 0);
    CHECK(d_tail(P("21"), 1) == 1);
    CHECK(d_tail(P("123"), 1) == 0);
    CHECK(d_tail(P("321"), 2) == 1);
    CHECK_THROWS_AS(d_tail(P("263"), 0), IndexOutOfRangeError);
    CHECK_THROWS_AS(d_tail(P("263"), 4), IndexOutOfRangeError);
}

TEST_CASE("partition pair of the worked instances") {
    CHECK(phi(P("12345"), P("45"), P("123")) == PP({}, {0, 0, 0}));

    const struct {
        const char* alpha;
        std::vector<int> lam, mu;
    } rows[] = {
        {"12463", {2}, {0, 0}},    {"12634", {1}, {0, 0}},
        {"12643", {2, 2}, {1}},    {"14263", {2, 2}, {0}},
        {"21463", {2, 1}, {0}},    {"21634", {1, 1}, {0}},
        {"21643", {2, 2, 2}, {}},  {"26134", {0}, {0, 0}},
        {"26143", {2, 1}, {1}},    {"26314", {1, 1}, {1}},
    };
    for (const auto& row : rows) {
        const Permutation alpha = P(row.alpha);
        const PartitionPair pp = phi(alpha, P("14"), P("263"));
        CHECK(pp == PP(row.lam, row.mu));
        // maj(alpha) = |lambda| + |mu| + maj(delta) + maj(pi)
        CHECK(maj(alpha) == pp.lambda.weight() + pp.mu.weight() + maj(P("14")) +
                                maj(P("263")));
        CHECK(phi_inv(pp.lambda, pp.mu, P("14"), P("263"), des(alpha)) == alpha);
    }
}

TEST_CASE("partition map errors") {
    CHECK_THROWS_AS(phi(P("213"), P("12"), P("3")), NotAShuffleError);
    CHECK_THROWS_AS(phi(P("12"), P("12"), P("3")), NotAShuffleError);
    CHECK_THROWS_AS(phi(P("123"), P("12"), P("23")), NotDisjointError);
    CHECK_THROWS_AS(phi_inv(Partition({5}), Partition{}, P("14"), P("263"), 1),
                    NoPreimageError);
    CHECK_THROWS_AS(phi_inv(Partition({1, 1}), Partition{}, P("14"), P("263"), 1),
                    NoPreimageError);
}

TEST_CASE("partition bounds separate the restricted families") {
    // Dominant regime: delta-letters above the pi-letters, m >= 2, first delta
    // letter below the second.  Within the plain family, mu_1 <= d-s-1 picks
    // out the last-letter-restricted members; within those, lambda_1 <= m-1
    // and lambda_{d-r} >= d-s+1 (vacuous for an empty lambda) pick out the
    // two finer families.
    for (int total = 3; total <= 6; ++total) {
        for (int m = 2; m < total; ++m) {
            const int n = total - m;
            std::vector<Letter> letters;
            for (int i = 0; i < m; ++i) letters.push_back(static_cast<Letter>(n + 1 + i));
            std::vector<Permutation> deltas;
            do {
                if (letters[0] < letters[1]) deltas.emplace_back(letters);
            } while (std::next_permutation(letters.begin(), letters.end()));
            for (const auto& pi : enumerate_class(PermClass::All, n)) {
                const int s = des(pi);
                for (const auto& delta : deltas) {
                    const int r = des(delta);
                    const auto plain = shuffle(pi, delta, ShuffleVariant::Plain).members;
                    const auto l = shuffle(pi, delta, ShuffleVariant::L).members;
                    const auto ls = shuffle(pi, delta, ShuffleVariant::Ls).members;
                    const auto ll = shuffle(pi, delta, ShuffleVariant::Ll).members;
                    const auto member = [](const std::vector<Permutation>& fam,
                                           const Permutation& x) {
                        return std::binary_search(fam.begin(), fam.end(), x);
                    };
                    for (const auto& alpha : plain) {
                        const int d = des(alpha);
                        const auto parts = phi(alpha, delta, pi);
                        const long long mu1 =
                            parts.mu.parts_count() ? parts.mu.part(1) : 0;
                        const bool in_l = member(l, alpha);
                        REQUIRE((mu1 <= d - s - 1) == in_l);
                        if (!in_l) continue;
                        REQUIRE(parts.lambda.parts_count() ==
                                static_cast<std::size_t>(d - r));
                        const bool small_top = parts.lambda.parts_count() == 0 ||
                                               parts.lambda.part(1) <= m - 1;
                        REQUIRE(small_top == member(ls, alpha));
                        const bool high_bottom =
                            parts.lambda.parts_count() == 0 ||
                            parts.lambda.part(parts.lambda.parts_count()) >= d - s + 1;
                        REQUIRE(high_bottom == member(ll, alpha));
                    }
                }
            }
        }
    }
}
