#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "ostro/numeration.hpp"

using namespace ostro;

TEST_CASE("context sequences and basis") {
    Context ctx(2);
    long dn[] = {0, 1, 2, 5, 12, 29, 70, 169, 408};
    long en[] = {2, 2, 6, 14, 34, 82, 198, 478, 1154};
    for (long n = 0; n <= 8; ++n) {
        CHECK(ctx.denominator(n) == dn[n]);
        CHECK(ctx.companion(n) == en[n]);
    }
    // bilateral: D_{-n} = (-1)^{n+1} D_n, E_{-n} = (-1)^n E_n
    CHECK(ctx.denominator(-1) == 1);
    CHECK(ctx.denominator(-2) == -2);
    CHECK(ctx.denominator(-3) == 5);
    CHECK(ctx.companion(-2) == 6);
    CHECK(ctx.companion(-3) == -14);
    for (long j = 1; j <= 6; ++j) CHECK(ctx.basis(j) == ctx.denominator(j));
    CHECK(ctx.top_basis_index(1) == 1);
    CHECK(ctx.top_basis_index(24) == 4);  // D_4 = 12 <= 24 < D_5 = 29

    Context fib(1);
    long fb[] = {1, 2, 3, 5, 8, 13};
    for (long j = 1; j <= 6; ++j) CHECK(fib.basis(j) == fb[j - 1]);
}

TEST_CASE("encode/decode round trip with canonical digits") {
    for (long d : {1L, 2L, 3L, 5L}) {
        Context ctx(d);
        for (long n = 0; n <= 600; ++n) {
            auto w = encode(ctx, n);
            CHECK(valid_ostrowski(ctx, w.digits));
            CHECK(decode(ctx, w) == n);
            if (n >= 1) {
                CHECK(w.digits.back() != 0);
                CHECK(static_cast<long>(w.length()) == ctx.top_basis_index(n));
            } else {
                CHECK(w.empty());
            }
        }
    }
}

TEST_CASE("digit constraints are enforced") {
    Context ctx(2);
    CHECK(valid_ostrowski(ctx, {1}));
    CHECK(valid_ostrowski(ctx, {0, 2}));     // leading 0, then digit d is legal
    CHECK(valid_ostrowski(ctx, {1, 0, 2}));  // d at position 3 forces 0 at position 2
    CHECK_FALSE(valid_ostrowski(ctx, {2}));        // first digit must be < d
    CHECK_FALSE(valid_ostrowski(ctx, {1, 2}));     // digit d needs a 0 below it
    CHECK_FALSE(valid_ostrowski(ctx, {1, 0}));     // trailing zero: not canonical
    CHECK_FALSE(valid_ostrowski(ctx, {3}));        // digit above d
    CHECK_FALSE(valid_ostrowski(ctx, {-1, 1}));    // negative digit

    Context fib(1);
    CHECK(valid_ostrowski(fib, {1}));
    CHECK(valid_ostrowski(fib, {1, 0, 1}));
    CHECK_FALSE(valid_ostrowski(fib, {1, 1}));  // no two consecutive ones
    CHECK_FALSE(valid_ostrowski(fib, {2}));
}

TEST_CASE("word classification: trimmed vs untrimmed") {
    Context ctx(2);
    CHECK(classify_word(ctx, std::vector<int>{1}) == WordClass::trimmed);
    CHECK(classify_word(ctx, std::vector<int>{0, 2}) == WordClass::trimmed);
    CHECK(classify_word(ctx, std::vector<int>{0, 1}) == WordClass::untrimmed);
    CHECK(classify_word(ctx, std::vector<int>{0, 0, 2}) == WordClass::untrimmed);
    CHECK(classify_word(ctx, std::vector<int>{1, 2}) == WordClass::invalid);

    Context fib(1);
    CHECK(classify_word(fib, std::vector<int>{1, 0, 1}) == WordClass::trimmed);
    CHECK(classify_word(fib, std::vector<int>{0, 1}) == WordClass::untrimmed);
}

TEST_CASE("trimmed words in radix order, d = 2") {
    Context ctx(2);
    auto words = enumerate_trimmed(ctx, 7);
    REQUIRE(words.size() == 7);
    const char* labels[] = {"1", "11", "02", "101", "111", "021", "102"};
    long values[] = {1, 3, 4, 6, 8, 9, 11};
    for (size_t i = 0; i < 7; ++i) {
        CHECK(label_string(ctx, words[i].digits) == labels[i]);
        CHECK(classify_word(ctx, words[i].digits) == WordClass::trimmed);
        CHECK(decode(ctx, words[i]) == values[i]);
    }
}

TEST_CASE("trimmed words in radix order, d = 1") {
    Context ctx(1);
    auto words = enumerate_trimmed(ctx, 5);
    REQUIRE(words.size() == 5);
    const char* labels[] = {"1", "101", "1001", "10001", "10101"};
    long values[] = {1, 4, 6, 9, 12};
    for (size_t i = 0; i < 5; ++i) {
        CHECK(label_string(ctx, words[i].digits) == labels[i]);
        CHECK(decode(ctx, words[i]) == values[i]);
    }
}

TEST_CASE("dual words: constraints, sign law, round trip") {
    Context ctx(2);
    // lsd word (1,1) reads D_{-1} + D_{-2} = 1 - 2 = -1.
    CHECK(dual_decode(ctx, DualWord{{1, 1}}) == -1);
    CHECK(valid_dual(ctx, {1, 1}));
    CHECK(valid_dual(ctx, {2}));          // final digit may be d
    CHECK(valid_dual(ctx, {2, 0, 1}));    // d forces the next digit to 0
    CHECK_FALSE(valid_dual(ctx, {2, 1}));
    CHECK_FALSE(valid_dual(ctx, {1, 0}));  // trailing zero
    CHECK_FALSE(valid_dual(ctx, {3}));

    for (long n = -400; n <= 400; ++n) {
        auto w = dual_encode(ctx, n);
        CHECK(valid_dual(ctx, w.digits));
        CHECK(dual_decode(ctx, w) == n);
        if (n == 0) {
            CHECK(w.empty());
        } else {
            // sign(n) = (-1)^(len+1)
            CHECK((n > 0) == (w.length() % 2 == 1));
        }
    }
}

TEST_CASE("dual text forms pin the -7000 example") {
    Context ctx(2);
    auto w = dual_encode(ctx, -7000);
    CHECK(to_msd_string(ctx, w.digits) == "110101110101");
    DualWord back{parse_msd(ctx, "110101110101")};
    CHECK(dual_decode(ctx, back) == -7000);
}

TEST_CASE("out and nut: closed form vs digit shift") {
    Context ctx(2);
    long out_pairs[][2] = {{1, 2}, {2, 5},  {3, 7},  {4, 10}, {5, 12},
                           {7, 17}, {8, 19}, {10, 24}, {12, 29}};
    for (auto& p : out_pairs) CHECK(out_value(ctx, p[0]) == p[1]);
    CHECK(nut_value(ctx, 1) == -2);
    CHECK(nut_value(ctx, 3) == -7);
    CHECK(nut_value(ctx, 0) == 0);

    for (long d : {1L, 2L, 3L}) {
        Context c(d);
        for (long n = 0; n <= 500; ++n) CHECK(out_value(c, n) == out_via_word(c, n));
        for (long n = -300; n <= 300; ++n) CHECK(nut_value(c, n) == nut_via_word(c, n));
    }
}

TEST_CASE("out floor form, directly") {
    // out(n) = floor(alpha*n + 1/alpha): check against the field arithmetic.
    for (long d : {2L, 3L, 4L}) {
        Context ctx(d);
        for (long n = 1; n <= 200; ++n) {
            auto v = ctx.alpha() * Int(n) + ctx.inv_alpha();
            CHECK(out_value(ctx, n) == v.floor());
        }
    }
}

TEST_CASE("text forms round trip, msd vs label orientation") {
    Context ctx(2);
    CHECK(to_msd_string(ctx, {}) == "0");
    CHECK(parse_msd(ctx, "0").empty());
    CHECK(parse_msd(ctx, "").empty());
    // msd "2000" is the word of 24 (2*D_4): lsd digits 0,0,0,2.
    auto w = encode(ctx, 24);
    CHECK(w.digits == std::vector<int>{0, 0, 0, 2});
    CHECK(to_msd_string(ctx, w.digits) == "2000");
    CHECK(label_string(ctx, w.digits) == "0002");
    CHECK(parse_msd(ctx, "2000") == w.digits);
    // msd padding zeros strip on parse
    CHECK(parse_msd(ctx, "002000") == w.digits);

    for (long n = 0; n <= 300; ++n) {
        auto word = encode(ctx, n);
        CHECK(parse_msd(ctx, to_msd_string(ctx, word.digits)) == word.digits);
    }

    // d >= 10 falls back to comma separation
    Context big(12);
    auto bw = encode(big, 12 * 12 + 7);
    CHECK(to_msd_string(big, bw.digits).find(',') != std::string::npos);
    CHECK(parse_msd(big, to_msd_string(big, bw.digits)) == bw.digits);
}

TEST_CASE("raw decode accepts wall words") {
    Context ctx(2);
    // Dropping the first digit of 0,2 leaves the single digit 2 in position 1,
    // which raw_decode must accept even though it is not canonical.
    CHECK(raw_decode(ctx, {2}) == 2);
    CHECK(raw_dual_decode(ctx, {0, 1}) == -2);
}

TEST_CASE("errors surface as exceptions") {
    Context ctx(2);
    CHECK_THROWS_AS(decode(ctx, OstrowskiWord{{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(dual_decode(ctx, DualWord{{2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(encode(ctx, Int(-1)), std::domain_error);
    CHECK_THROWS_AS(parse_msd(ctx, "1x1"), std::invalid_argument);
    CHECK_THROWS_AS(Context(0), std::invalid_argument);
}
