#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "ostro/bfile.hpp"
#include "ostro/numeration.hpp"
#include "ostro/towers.hpp"

using namespace ostro;

TEST_CASE("parse accepts comments, blanks and CRLF") {
    std::string text =
        "# OEIS b-file style comment\r\n"
        "\r\n"
        "0 0\n"
        "1 1\r\n"
        "2 -7\n"
        "10 123456789012345678901234567890\n";
    BFile f = parse_bfile(text, "A000000");
    CHECK(f.id == "A000000");
    REQUIRE(f.entries.size() == 4);
    CHECK(f.entries[0].index == 0);
    CHECK(f.entries[2].value == -7);
    CHECK(f.entries[3].index == 10);
    CHECK(f.entries[3].value == Int("123456789012345678901234567890"));
}

TEST_CASE("parse rejects malformed and disordered lines") {
    CHECK_THROWS_AS(parse_bfile("1 2 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bfile("5\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bfile("1 x\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bfile("2 4\n1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bfile("1 2\n1 3\n"), std::invalid_argument);
}

TEST_CASE("serialize -> parse round trip") {
    BFile f;
    f.id = "A123456";
    f.entries = {{1, 4}, {2, -9}, {3, Int("98765432109876543210")}};
    std::string text = serialize_bfile(f);
    BFile back = parse_bfile(text, f.id);
    REQUIRE(back.entries.size() == f.entries.size());
    for (size_t i = 0; i < f.entries.size(); ++i) {
        CHECK(back.entries[i].index == f.entries[i].index);
        CHECK(back.entries[i].value == f.entries[i].value);
    }
    CHECK(serialize_bfile(back) == text);
}

TEST_CASE("diff compares the shared prefix positionally") {
    BFile a{"", {{1, 1}, {2, 2}, {3, 3}}};
    BFile b{"", {{1, 1}, {2, 2}}};
    CHECK(diff_bfiles(a, b).match);  // shorter actual: prefix match
    BFile c{"", {{1, 1}, {2, 5}, {3, 3}}};
    BFileDiff d = diff_bfiles(a, c);
    CHECK_FALSE(d.match);
    CHECK(d.first_bad_index == 2);
    BFile e{"", {{1, 1}, {5, 2}}};
    CHECK_FALSE(diff_bfiles(a, e).match);  // index drift counts as mismatch
}

TEST_CASE("generators agree with the library routes") {
    CHECK(known_sequence("A049472"));
    CHECK(known_sequence("A001950"));
    CHECK(known_sequence("A082845"));
    CHECK(known_sequence("A276879"));
    CHECK_FALSE(known_sequence("A000045"));
    CHECK(known_sequence_ids().size() == 4);
    CHECK_THROWS_AS(generate_sequence("A000045", 5), std::invalid_argument);

    // wall column of the d = 2 array, indexed from 0
    BFile wall = generate_sequence("A049472", 40);
    Context two(2);
    CHECK(wall.entries[0].index == 0);
    CHECK(wall.entries[0].value == 0);
    for (size_t i = 1; i < wall.entries.size(); ++i) {
        CHECK(wall.entries[i].index == static_cast<long>(i));
        CHECK(wall.entries[i].value == wall_term(two, Int(static_cast<long>(i))));
    }

    // first column of the d = 1 array, shifted: the upper Wythoff sequence
    BFile wyth = generate_sequence("A001950", 40);
    Context one(1);
    for (size_t i = 0; i < wyth.entries.size(); ++i) {
        long m = static_cast<long>(i) + 1;
        CHECK(wyth.entries[i].index == m);
        CHECK(wyth.entries[i].value == first_column_value(one, Int(m)) + 1);
    }

    // complement of the d = 2 first column = its out image
    BFile comp = generate_sequence("A082845", 40);
    for (size_t i = 0; i < comp.entries.size(); ++i) {
        long n = static_cast<long>(i) + 1;
        CHECK(comp.entries[i].index == n);
        CHECK(comp.entries[i].value == out_value(two, Int(n)));
    }
    CHECK(comp.entries[0].value == 2);

    // numbers whose red and left walls coincide
    BFile coin = generate_sequence("A276879", 12);
    long expect[] = {1, 6, 11, 18, 23, 30, 35};
    for (long i = 0; i < 7; ++i) {
        CHECK(coin.entries[static_cast<size_t>(i)].index == i + 1);
        CHECK(coin.entries[static_cast<size_t>(i)].value == expect[i]);
    }
    for (const auto& e : coin.entries)
        CHECK(terrace_class(two, e.value) == TerraceClass::coinciding);

    CHECK(generate_sequence("A049472", 0).entries.empty());
}

TEST_CASE("fixture files on disk match the generators") {
    const std::string dir = OSTRO_FIXTURE_DIR;
    struct Probe {
        const char* id;
        const char* file;
    } probes[] = {{"A049472", "/b049472.txt"},
                  {"A001950", "/b001950.txt"},
                  {"A082845", "/b082845.txt"},
                  {"A276879", "/b276879.txt"}};
    for (const auto& p : probes) {
        BFile fixture = read_bfile(dir + p.file, p.id);
        CHECK(fixture.entries.size() >= 50);
        BFile gen = generate_sequence(p.id, static_cast<long>(fixture.entries.size()));
        BFileDiff d = diff_bfiles(fixture, gen);
        CAPTURE(p.id);
        CAPTURE(d.detail);
        CHECK(d.match);
    }
}

TEST_CASE("missing files raise") {
    CHECK_THROWS_AS(read_bfile("/nonexistent/take-this-path.txt"), std::runtime_error);
}
