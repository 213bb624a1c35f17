#include "eulerperm/shuffle.hpp"

#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

using namespace eulerperm;

namespace {

std::vector<std::string> words(const std::vector<Permutation>& v) {
    std::vector<std::string> out;
    for (const auto& p : v) out.push_back(p.str());
    return out;
}

Permutation P(const char* s) { return Permutation::parse(s); }

} // namespace

TEST_CASE("plain shuffle family") {
    const auto fam = shuffle(P("12"), P("34"), ShuffleVariant::Plain);
    CHECK(words(fam.members) ==
          std::vector<std::string>{"1234", "1324", "1342", "3124", "3142", "3412"});
    CHECK(fam.variant == ShuffleVariant::Plain);

    CHECK(words(shuffle(P(""), P("34"), ShuffleVariant::Plain).members) ==
          std::vector<std::string>{"34"});
    CHECK(words(shuffle(P("12"), P(""), ShuffleVariant::Plain).members) ==
          std::vector<std::string>{"12"});
    CHECK_THROWS_AS(shuffle(P("12"), P("23"), ShuffleVariant::Plain), NotDisjointError);
}

TEST_CASE("restricted shuffle families") {
    CHECK(words(shuffle(P("12"), P("34"), ShuffleVariant::L).members) ==
          std::vector<std::string>{"3124", "3142", "3412"});
    CHECK(words(shuffle(P("12"), P("34"), ShuffleVariant::Ls).members) ==
          std::vector<std::string>{"3124"});
    CHECK(words(shuffle(P("12"), P("34"), ShuffleVariant::Ll).members) ==
          std::vector<std::string>{"3412"});

    // Too few delta letters leaves a restricted family empty.
    CHECK(shuffle(P("12"), P(""), ShuffleVariant::L).members.empty());
    CHECK(shuffle(P("12"), P("4"), ShuffleVariant::Ll).members.empty());
}

TEST_CASE("worked shuffle instance") {
    const auto fam = shuffle(P("263"), P("14"), ShuffleVariant::Plain);
    CHECK(words(fam.members) ==
          std::vector<std::string>{"12463", "12634", "12643", "14263", "21463",
                                   "21634", "21643", "26134", "26143", "26314"});
    CHECK(words(shuffle(P("263"), P("14"), ShuffleVariant::L).members) ==
          std::vector<std::string>{"12463", "12634", "12643", "14263"});
    CHECK(words(shuffle(P("263"), P("14"), ShuffleVariant::Ls).members) ==
          std::vector<std::string>{"12634"});
    CHECK(words(shuffle(P("263"), P("14"), ShuffleVariant::Ll).members) ==
          std::vector<std::string>{"14263"});
}

TEST_CASE("composed sets") {
    CHECK(words(compose_sets(P("1"), P("1"), ComposeVariant::Diamond)) ==
          std::vector<std::string>{"213", "312"});
    CHECK(words(compose_sets(P("1"), P("1"), ComposeVariant::Up)) ==
          std::vector<std::string>{"213"});
    CHECK(words(compose_sets(P("1"), P("1"), ComposeVariant::Down)) ==
          std::vector<std::string>{"312"});
    CHECK(words(compose_sets(P("1"), P(""), ComposeVariant::Diamond)) ==
          std::vector<std::string>{"21"});
    CHECK(compose_sets(P("1"), P(""), ComposeVariant::Up).empty());

    CHECK(compose_sets(P("12"), P("21"), ComposeVariant::Diamond).size() == 6);
    CHECK(compose_sets(P("12"), P("21"), ComposeVariant::Up).size() == 3);
    CHECK(compose_sets(P("12"), P("21"), ComposeVariant::Down).size() == 3);
}

TEST_CASE("shuffle transport of composed words") {
    CHECK(to_shuffle(P("213"), 1) == P("213"));
    CHECK(to_shuffle(P("312"), 1) == P("231"));

    const auto diamonds = compose_sets(P("35124"), P("231"), ComposeVariant::Diamond);
    CHECK(std::find(diamonds.begin(), diamonds.end(), P("692581473")) != diamonds.end());
    CHECK(to_shuffle(P("692581473"), 5) == P("639741852"));
    CHECK(to_shuffle(P("682571493"), 5) == P("639741528"));
    CHECK(to_shuffle(P("693581472"), 5) == P("693741852"));

    CHECK_THROWS_AS(to_shuffle(P("123"), 1), MalformedError);
    CHECK_THROWS_AS(to_shuffle(P("213"), 0), MalformedError);
}

TEST_CASE("variant names") {
    CHECK(parse_shuffle_variant("ls") == ShuffleVariant::Ls);
    CHECK(shuffle_variant_name(ShuffleVariant::Ll) == "ll");
    CHECK(parse_compose_variant("diamond") == ComposeVariant::Diamond);
    CHECK(compose_variant_name(ComposeVariant::Down) == "down");
    CHECK_THROWS_AS(parse_shuffle_variant("bogus"), ParseError);
    CHECK_THROWS_AS(parse_compose_variant("bogus"), ParseError);
}
