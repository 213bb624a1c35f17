#include "eulerperm/verify.hpp"

#include "eulerperm/error.hpp"

#include <doctest.h>
#include <json.hpp>

#include <string>
#include <vector>

using namespace eulerperm;
using verify::CheckReport;

TEST_CASE("independent alternating-word oracle") {
    const std::vector<long long> expected = {1, 1, 1, 2, 5, 16, 61};
    for (int n = 0; n <= 6; ++n) CHECK(verify::count_alternating(n) == expected[static_cast<std::size_t>(n)]);
}

TEST_CASE("checks pass at reduced caps") {
    for (const char* theorem : {"counts", "main", "shape", "omega", "prop43", "prop44"}) {
        const CheckReport rep = verify::run_check(theorem, 5);
        CHECK(rep.pass);
        CHECK(rep.theorem == theorem);
        CHECK(!rep.rows.empty());
        for (const auto& row : rep.rows) CHECK(row.pass);
    }
    CHECK(verify::run_check("prop23", 5).pass);
    CHECK(verify::run_check("thm12", 4).pass);
    CHECK(verify::run_check("stanley", 4).pass);
    CHECK(verify::run_check("refined", 5).pass);
    CHECK(verify::run_check("phi", 5).pass);
}

TEST_CASE("unknown theorem token") {
    CHECK_THROWS_AS(verify::run_check("bogus", 3), ParseError);
}

TEST_CASE("report rendering") {
    const CheckReport rep = verify::run_check("counts", 4);
    REQUIRE(rep.pass);

    const std::string text = verify::render_text(rep);
    CHECK(text.find("counts: PASS") == 0);
    CHECK(text.find("[ ok ]") != std::string::npos);
    CHECK(text.find("[FAIL]") == std::string::npos);

    const auto j = nlohmann::json::parse(verify::render_json(rep));
    CHECK(j["theorem"] == "counts");
    CHECK(j["pass"] == true);
    CHECK(j["rows"].is_array());
    CHECK(!j["rows"].empty());
    CHECK(j["rows"][0]["pass"] == true);

    const std::string csv = verify::render_csv(rep);
    CHECK(csv.find("theorem,instance,pass,expected,actual") == 0);

    // Failing reports carry the first counterexample witness.
    CheckReport bad;
    bad.theorem = "demo";
    bad.add("instance one", true);
    bad.add("instance two", false, "1 + q", "2q");
    CHECK_FALSE(bad.pass);
    const std::string bt = verify::render_text(bad);
    CHECK(bt.find("demo: FAIL") == 0);
    CHECK(bt.find("[FAIL] instance two") != std::string::npos);
    CHECK(bt.find("expected: 1 + q") != std::string::npos);
    CHECK(bt.find("actual:   2q") != std::string::npos);
}
