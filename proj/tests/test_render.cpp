#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <string>

#include "ostro/render.hpp"

using namespace ostro;
using nlohmann::json;

namespace {
RenderSpec garden_spec(long d, long rows, long cols, RenderFormat f) {
    RenderSpec s;
    s.d = d;
    s.rows = rows;
    s.cols_right = cols;
    s.format = f;
    return s;
}

RenderSpec tower_spec(long d, long rows, long left, RenderFormat f) {
    RenderSpec s;
    s.d = d;
    s.rows = rows;
    s.cols_left = left;
    s.format = f;
    return s;
}
}  // namespace

TEST_CASE("format names") {
    CHECK(render_format_from_name("ascii") == RenderFormat::ascii);
    CHECK(render_format_from_name("csv") == RenderFormat::csv);
    CHECK(render_format_from_name("json") == RenderFormat::json);
    CHECK_THROWS_AS(render_format_from_name("xml"), std::invalid_argument);
}

TEST_CASE("garden csv is the bare grid") {
    std::string out = render_garden(garden_spec(2, 3, 4, RenderFormat::csv));
    CHECK(out == "0,1,2,5,12\n1,3,7,17,41\n2,4,10,24,58\n");
}

TEST_CASE("garden ascii aligns and draws the right wall") {
    std::string out = render_garden(garden_spec(2, 3, 4, RenderFormat::ascii));
    CHECK(out ==
          "0 | 1  2  5 12\n"
          "1 | 3  7 17 41\n"
          "2 | 4 10 24 58\n");
}

TEST_CASE("garden json carries words and wall geometry") {
    json out = json::parse(render_garden(garden_spec(2, 3, 4, RenderFormat::json)));
    CHECK(out["d"] == 2);
    REQUIRE(out["rows"].size() == 3);
    const json& r3 = out["rows"][2];
    CHECK(r3["m"] == 3);
    CHECK(r3["word"] == "20");  // msd form of the label 02
    CHECK(r3["wall"] == 2);
    CHECK(r3["terms"] == json::array({4, 10, 24, 58}));
    CHECK(r3["red_col"] == -1);
    CHECK(r3["offset_i"] == 1);
    CHECK(r3["palindrome"]["kind"] == "deedee");
    CHECK(r3["palindrome"]["multiplier"] == "2");

    const json& r2 = out["rows"][1];
    CHECK(r2["palindrome"]["kind"] == "edee");
    CHECK(r2["palindrome"]["multiplier"] == "1/2");
}

TEST_CASE("garden supports d = 1 without left-wall fields") {
    json out = json::parse(render_garden(garden_spec(1, 2, 3, RenderFormat::json)));
    REQUIRE(out["rows"].size() == 2);
    CHECK(out["rows"][0].contains("wall"));
    CHECK_FALSE(out["rows"][0].contains("offset_i"));
    CHECK_FALSE(out["rows"][0].contains("palindrome"));
    // row 1 of the d = 1 array: Fibonacci tail 1, 2, 3
    CHECK(out["rows"][0]["terms"] == json::array({1, 2, 3}));
}

TEST_CASE("tower ascii reproduces the one-row example") {
    std::string out = render_tower(tower_spec(2, 1, 6, RenderFormat::ascii));
    CHECK(out == "-70 29 -12 5 -2 1 | 0 | 1\n");
}

TEST_CASE("tower ascii marks terraced and coinciding walls differently") {
    std::string out = render_tower(tower_spec(2, 2, 2, RenderFormat::ascii));
    CHECK(out ==
          "-2   1 | 0 | 1\n"
          "-1 : 1   1 | 3\n");
}

TEST_CASE("tower ascii with labels and underlines") {
    RenderSpec s = tower_spec(2, 2, 2, RenderFormat::ascii);
    s.labels = true;
    s.underline_palindromes = true;
    std::string out = render_tower(s);
    CHECK(out ==
          "1   -2   1 | 0 | 1\n"
          "    ~~   ~   ~   ~\n"
          "11  -1 : 1   1 | 3\n"
          "    ~~   ~   ~   ~\n");
}

TEST_CASE("tower csv rows carry geometry columns") {
    RenderSpec s = tower_spec(2, 5, 6, RenderFormat::csv);
    s.labels = true;
    std::string out = render_tower(s);
    // row 5 of the d = 2 tower with its full window
    CHECK(out.find("5,111,-2,1,-53,22,-9,4,-1,2,3,8\n") != std::string::npos);
    // row 1: coinciding walls, offset 0
    CHECK(out.find("1,1,0,0,-70,29,-12,5,-2,1,0,1\n") == 0);
}

TEST_CASE("tower json includes palindrome classification") {
    json out = json::parse(render_tower(tower_spec(2, 3, 3, RenderFormat::json)));
    CHECK(out["d"] == 2);
    const json& r1 = out["rows"][0];
    CHECK(r1["m"] == 1);
    CHECK(r1["word"] == "1");
    CHECK(r1["wall"] == 0);
    CHECK(r1["red_col"] == 0);
    CHECK(r1["offset_i"] == 0);
    CHECK(r1["terms"] == json::array({5, -2, 1, 0, 1}));
    CHECK(r1["palindrome"]["kind"] == "deedee");
    CHECK(r1["palindrome"]["multiplier"] == "1");
}

TEST_CASE("zero rows renders to nothing") {
    CHECK(render_garden(garden_spec(2, 0, 4, RenderFormat::csv)).empty());
    CHECK(render_garden(garden_spec(2, 0, 4, RenderFormat::ascii)).empty());
    CHECK(render_tower(tower_spec(2, 0, 3, RenderFormat::csv)).empty());
    json out = json::parse(render_garden(garden_spec(2, 0, 4, RenderFormat::json)));
    CHECK(out["rows"].empty());
}

TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS(render_tower(tower_spec(1, 3, 3, RenderFormat::ascii)),
                    std::invalid_argument);
    CHECK_THROWS_AS(render_garden(garden_spec(0, 3, 3, RenderFormat::ascii)),
                    std::invalid_argument);
    CHECK_THROWS_AS(render_garden(garden_spec(2, -1, 3, RenderFormat::ascii)),
                    std::invalid_argument);
    CHECK_THROWS_AS(render_garden(garden_spec(2, 3, 0, RenderFormat::ascii)),
                    std::invalid_argument);
}
