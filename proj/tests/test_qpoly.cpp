#include "eulerperm/qpoly.hpp"
#include "eulerperm/shuffle.hpp"

#include <doctest.h>
#include <json.hpp>

#include <map>
#include <vector>

using namespace eulerperm;

TEST_CASE("polynomial arithmetic and canonical text") {
    const MultiPoly a6 = MultiPoly::monomial(2, 3, 0, 0) + MultiPoly::monomial(32, 2, 0, 0) +
                         MultiPoly::monomial(26, 1, 0, 0) + MultiPoly::monomial(1, 0, 0, 0);
    CHECK(a6.str() == "2s^3 + 32s^2 + 26s + 1");
    CHECK(MultiPoly{}.str() == "0");
    CHECK(MultiPoly(BigInt(7)).str() == "7");
    CHECK(MultiPoly::monomial(1, 1, 1, 1).str() == "stq");
    CHECK(MultiPoly::monomial(-3, 0, 2, 1).str() == "-3t^2q");
    CHECK((MultiPoly::monomial(1, 1, 0, 0) - MultiPoly::monomial(2, 0, 0, 0)).str() ==
          "s - 2");
    CHECK((MultiPoly::monomial(1, 1, 0, 0) - MultiPoly::monomial(1, 1, 0, 0)).str() == "0");
    CHECK((MultiPoly::monomial(1, 0, 1, 0) * MultiPoly::monomial(1, 0, 1, 1)).str() ==
          "t^2q");

    // Ordering key is (deg_s, deg_t, deg_q) descending.
    const MultiPoly mixed = MultiPoly::monomial(1, 0, 1, 1) + MultiPoly::monomial(1, 0, 2, 0) +
                            MultiPoly::monomial(1, 1, 0, 0);
    CHECK(mixed.str() == "s + t^2 + tq");

    CHECK(a6.coeff(Monomial{2, 0, 0}) == 32);
    CHECK(a6.coeff(Monomial{5, 0, 0}) == 0);
    CHECK(a6.eval_one('s').str() == "61");

    const auto terms = nlohmann::json::parse(a6.json_terms());
    REQUIRE(terms.size() == 4);
    CHECK(terms[0]["s"] == 3);
    CHECK(terms[0]["coeff"] == "2");
    CHECK(terms[3]["coeff"] == "1");
}

TEST_CASE("partitions") {
    CHECK(Partition({2, 1}).str() == "(2,1)");
    CHECK(Partition{}.str() == "()");
    CHECK(Partition({2, 1}).weight() == 3);
    CHECK(Partition({2, 1}).parts_count() == 2);
    CHECK(Partition({2, 1}).part(1) == 2);
    CHECK(Partition({2, 1}).part(2) == 1);
    CHECK_THROWS_AS(Partition({1, 2}), BadBoundsError);
    CHECK_THROWS_AS(Partition({-1}), BadBoundsError);
}

TEST_CASE("binomials") {
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(40, 20) == BigInt("137846528820"));
}

TEST_CASE("gaussian binomials") {
    CHECK(gauss_binom(4, 2).str() == "q^4 + q^3 + 2q^2 + q + 1");
    CHECK(gauss_binom(2, 1).str() == "q + 1");
    CHECK(gauss_binom(3, 1).str() == "q^2 + q + 1");
    CHECK(gauss_binom(3, 0) == MultiPoly(BigInt(1)));
    CHECK(gauss_binom(3, 5).is_zero());
    CHECK(gauss_binom(-1, 0).is_zero());
    CHECK(gauss_binom(4, 2).eval_one('q') == MultiPoly(BigInt(6)));

    for (int n = 0; n <= 6; ++n)
        for (int m = 0; m <= n; ++m) {
            CHECK(gauss_binom(n, m) == gauss_binom(n, n - m));
            if (n > 0 && m > 0)
                CHECK(gauss_binom(n, m) ==
                      gauss_binom(n - 1, m - 1) +
                          MultiPoly::monomial(1, 0, 0, m) * gauss_binom(n - 1, m));
        }
}

TEST_CASE("partitions in a box") {
    const std::vector<Partition> expected = {Partition({1, 1}), Partition({2, 1}),
                                             Partition({2, 2})};
    CHECK(partitions_in_box(2, 1, 2) == expected);
    CHECK(partitions_in_box(1, 0, 1) ==
          std::vector<Partition>{Partition({0}), Partition({1})});
    CHECK(partitions_in_box(3, 2, 2) == std::vector<Partition>{Partition({2, 2, 2})});
    CHECK(partitions_in_box(0, 0, 3) == std::vector<Partition>{Partition{}});
    CHECK(partitions_in_box(0, 5, 3) == std::vector<Partition>{Partition{}});
    CHECK(partitions_in_box(3, 0, 3).size() == 20);
    CHECK_THROWS_AS(partitions_in_box(2, 3, 1), BadBoundsError);
    CHECK_THROWS_AS(partitions_in_box(-1, 0, 0), BadBoundsError);
    CHECK_THROWS_AS(partitions_in_box(2, -1, 3), BadBoundsError);

    // Box generating function: sum of q^{|lambda|} over n parts in [t, m].
    MultiPoly sum;
    for (const auto& lam : partitions_in_box(2, 1, 3))
        sum += MultiPoly::monomial(1, 0, 0, static_cast<int>(lam.weight()));
    CHECK(sum == MultiPoly::monomial(1, 0, 0, 2) * gauss_binom(4, 2));
}

TEST_CASE("composed-set closed form at t = 1") {
    for (int j = 1; j <= 4; ++j)
        for (int k = 0; k <= 3; ++k)
            CHECK(thm12_rhs(ComposeVariant::Diamond, j, k, 0, 0).eval_one('t') ==
                  MultiPoly(binomial(j + k, j)));

    CHECK(thm12_rhs(ComposeVariant::Diamond, 1, 1, 0, 0).str() == "2t");
    CHECK(thm12_rhs(ComposeVariant::Up, 1, 1, 0, 0).str() == "t");
    CHECK(thm12_rhs(ComposeVariant::Down, 1, 1, 0, 0).str() == "t");
}

TEST_CASE("shuffle closed form on the worked instance") {
    CHECK(stanley_rhs(3, 2, 1, 0, 0, 2, 0).is_zero());
    CHECK(stanley_rhs(3, 2, 1, 0, 1, 2, 0).str() == "q^4 + q^3 + q^2");
    CHECK(stanley_rhs(3, 2, 1, 0, 2, 2, 0).str() == "q^7 + 2q^6 + 2q^5 + q^4");
    CHECK(stanley_rhs(3, 2, 1, 0, 3, 2, 0).str() == "q^8");
}

TEST_CASE("refined closed forms on a dominant instance") {
    // pi = 1, delta = 23: the three restricted families are {213, 231},
    // {213}, and {231}.
    CHECK(refined_rhs(ShuffleVariant::L, 2, 1, 0, 0, 1, 0, 0).str() == "q^2 + q");
    CHECK(refined_rhs(ShuffleVariant::Ls, 2, 1, 0, 0, 1, 0, 0).str() == "q");
    CHECK(refined_rhs(ShuffleVariant::Ll, 2, 1, 0, 0, 1, 0, 0).str() == "q^2");
    CHECK(refined_rhs(ShuffleVariant::L, 2, 1, 0, 0, 0, 0, 0).is_zero());
    CHECK_THROWS_AS(refined_rhs(ShuffleVariant::Plain, 2, 1, 0, 0, 1, 0, 0),
                    MalformedError);
}

TEST_CASE("refined closed form on a nine-letter instance") {
    // pi = 34152 (s = 2, maj = 6) against delta = 6978 (m = 4, r = 1, maj = 2):
    // bucket the restricted family by descent count and compare maj series.
    const auto fam = shuffle(Permutation::parse("34152"), Permutation::parse("6978"),
                             ShuffleVariant::L);
    std::map<int, MultiPoly> by_des;
    for (const auto& alpha : fam.members)
        by_des[des(alpha)] += MultiPoly::monomial(1, 0, 0, static_cast<int>(maj(alpha)));
    for (int d = 0; d <= 9; ++d) {
        const auto it = by_des.find(d);
        const MultiPoly got = it == by_des.end() ? MultiPoly() : it->second;
        CHECK(got == refined_rhs(ShuffleVariant::L, 4, 5, 1, 2, d, 2, 6));
    }
}

TEST_CASE("class generating polynomials") {
    CHECK(class_polynomial(PermClass::Simsun, 4, "s").str() == "4s + 1");
    CHECK(class_polynomial(PermClass::Andre2, 1, "stq") == MultiPoly(BigInt(1)));
    CHECK(class_polynomial(PermClass::Andre1, 6, "s").str() ==
          "2s^3 + 32s^2 + 26s + 1");
    CHECK(class_polynomial(PermClass::All, 3, "tq").str() ==
          "t^2q^3 + 2tq^2 + 2tq + 1");
    CHECK(class_polynomial(PermClass::All, 0, "stq") == MultiPoly(BigInt(1)));
    CHECK_THROWS_AS(class_polynomial(PermClass::All, 3, "x"), ParseError);
    CHECK_THROWS_AS(class_polynomial(PermClass::All, 3, ""), ParseError);
}
