#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ostro/quadratic.hpp"

using namespace ostro;

namespace {
// alpha for X_{n+1} = d*X_n + X_{n-1}: (d + sqrt(d^2+4)) / 2.
QuadraticValue make_alpha(long d) { return QuadraticValue(d, 1, 2, d * d + 4); }
}  // namespace

TEST_CASE("construction normalizes gcd") {
    QuadraticValue v(2, 4, 6, 8);
    CHECK(v.p() == 1);
    CHECK(v.q() == 2);
    CHECK(v.r() == 3);
    CHECK(v.delta() == 8);
}

TEST_CASE("integer and sqrt_delta factories") {
    auto five = QuadraticValue::integer(5, 8);
    CHECK(five.is_rational());
    CHECK(five.floor() == 5);
    CHECK(five.ceil() == 5);
    CHECK(five.sign() == 1);
    CHECK(QuadraticValue::integer(0, 8).is_zero());

    auto root = QuadraticValue::sqrt_delta(8);
    CHECK(root.floor() == 2);  // sqrt(8) = 2.828...
    CHECK(root.ceil() == 3);
    CHECK_FALSE(root.is_rational());
}

TEST_CASE("sign decided by p^2 vs q^2*delta") {
    CHECK(QuadraticValue(1, -1, 1, 2).sign() == -1);  // 1 - sqrt(2)
    CHECK(QuadraticValue(3, -2, 1, 2).sign() == 1);   // 3 - 2*sqrt(2) = 0.17...
    CHECK(QuadraticValue(-3, 1, 1, 8).sign() == -1);  // sqrt(8) - 3
    CHECK(QuadraticValue(0, 0, 7, 5).sign() == 0);
}

TEST_CASE("sign covers every mixed-sign quadrant both ways") {
    // p > 0, q < 0: rational term dominant, then sqrt term dominant.
    CHECK(QuadraticValue(20, -7, 2, 8).sign() == 1);    // (20-7*sqrt(8))/2 = 0.10...
    CHECK(QuadraticValue(5, -2, 1, 8).sign() == -1);    // 5-2*sqrt(8) = -0.65...
    // p < 0, q > 0: rational term dominant, then sqrt term dominant.
    CHECK(QuadraticValue(-20, 7, 2, 8).sign() == -1);   // mirror of the first
    CHECK(QuadraticValue(-14, 5, 2, 8).sign() == 1);    // (-14+5*sqrt(8))/2 = 0.07...
    CHECK(QuadraticValue(-5, 2, 1, 8).sign() == 1);     // 2*sqrt(8)-5 = 0.65...
    // Same values through the comparison operators.
    auto zero = QuadraticValue::integer(0, 8);
    CHECK(QuadraticValue(-14, 5, 2, 8) > zero);
    CHECK(QuadraticValue(-14, 5, 2, 8) >= zero);
    CHECK(QuadraticValue(14, -5, 2, 8) < zero);
    CHECK(QuadraticValue(-20, 7, 2, 8) <= zero);
}

TEST_CASE("comparisons across unlike denominators") {
    // frac(6*alpha) for d=2 lies inside [1/alpha, 1 - 1/alpha]; these exact
    // comparisons cross r=1 against r=2 representations.
    auto a = make_alpha(2);
    auto inv_a = QuadraticValue::integer(1, 8) / a;       // (-2+sqrt(8))/2
    auto hi = QuadraticValue::integer(1, 8) - inv_a;      // (4-sqrt(8))/2
    auto f1 = (a * Int(1)).frac();                        // equals 1/alpha exactly
    CHECK(f1 == inv_a);
    CHECK(f1 >= inv_a);
    CHECK(f1 <= hi);
    auto f6 = (a * Int(6)).frac();                        // (-8+3*sqrt(8))/1 = 0.48...
    CHECK(f6 > inv_a);
    CHECK(f6 < hi);
    auto f2 = (a * Int(2)).frac();                        // (-2+sqrt(8))/1 = 0.82...
    CHECK(f2 > hi);                                       // lies outside the band
}

TEST_CASE("floor/ceil/frac on negatives") {
    QuadraticValue v(0, -1, 1, 2);  // -sqrt(2)
    CHECK(v.floor() == -2);
    CHECK(v.ceil() == -1);
    auto f = v.frac();
    CHECK(f.sign() >= 0);
    CHECK((f - QuadraticValue::integer(1, 2)).sign() < 0);
    CHECK(f + v.floor() == v);
}

TEST_CASE("alpha satisfies its minimal polynomial") {
    for (long d = 1; d <= 6; ++d) {
        auto a = make_alpha(d);
        CHECK(a * a == a * Int(d) + Int(1));
        // conjugate: alpha*beta = -1, alpha + beta = d
        auto b = a.conj();
        CHECK(a * b == QuadraticValue::integer(-1, d * d + 4));
        CHECK(a + b == QuadraticValue::integer(d, d * d + 4));
        CHECK(a - b == QuadraticValue::sqrt_delta(d * d + 4));
    }
}

TEST_CASE("field operations are exact") {
    auto a = make_alpha(2);
    auto one = QuadraticValue::integer(1, 8);
    CHECK(a / a == one);
    CHECK(a - a == QuadraticValue::integer(0, 8));

    // 1/(alpha*(alpha-1)) has the closed form (d^2-d+2 - (d-1)sqrt(delta))/(2d).
    auto gap = one / (a * (a - Int(1)));
    CHECK(gap == QuadraticValue(4, -1, 4, 8));
    CHECK(gap.sign() == 1);
    CHECK(gap.floor() == 0);
}

TEST_CASE("pow matches repeated multiplication and the recurrence") {
    auto a = make_alpha(2);
    CHECK(pow(a, 0) == QuadraticValue::integer(1, 8));
    CHECK(pow(a, 1) == a);
    CHECK(pow(a, 5) == a * a * a * a * a);
    // alpha^10 = (E_10 + D_10*sqrt(delta))/2 with D_10 = 2378, E_10 = 6726.
    CHECK(pow(a, 10) == QuadraticValue(6726, 2378, 2, 8));
}

TEST_CASE("ordering is total and strict where it should be") {
    auto a = make_alpha(2);  // 2.414...
    CHECK(a > QuadraticValue::integer(2, 8));
    CHECK(a < QuadraticValue::integer(3, 8));
    CHECK(a <= a);
    CHECK(a >= a);
    CHECK(a != a + Int(1));
}

TEST_CASE("floor of alpha powers tracks the denominators") {
    // alpha^n = D_n*alpha + D_{n-1}, so floor(alpha^n) is reachable exactly.
    auto a = make_alpha(2);
    long dn[] = {0, 1, 2, 5, 12, 29, 70};
    for (long n = 1; n <= 6; ++n) {
        auto an = pow(a, n);
        CHECK(an == a * Int(dn[n]) + Int(dn[n - 1]));
    }
}

TEST_CASE("str is a printable diagnostic") {
    CHECK_FALSE(QuadraticValue(1, 2, 3, 8).str().empty());
}
