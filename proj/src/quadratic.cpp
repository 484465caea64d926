#include "ostro/quadratic.hpp"

#include <utility>

namespace ostro {

namespace {

bool is_square(long n) {
    if (n < 0) return false;
    Int s = isqrt(Int(n));
    return s * s == n;
}

}  // namespace

QuadraticValue::QuadraticValue(Int p, Int q, Int r, long delta)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), delta_(delta) {
    if (delta_ <= 0 || is_square(delta_))
        throw std::invalid_argument("QuadraticValue: delta must be positive and not a square");
    if (sgn(r_) == 0) throw std::invalid_argument("QuadraticValue: zero denominator");
    normalize();
}

QuadraticValue QuadraticValue::integer(Int n, long delta) {
    return QuadraticValue(std::move(n), 0, 1, delta);
}

QuadraticValue QuadraticValue::sqrt_delta(long delta) {
    return QuadraticValue(0, 1, 1, delta);
}

void QuadraticValue::normalize() {
    if (sgn(r_) < 0) {
        p_ = -p_;
        q_ = -q_;
        r_ = -r_;
    }
    Int g = gcd(gcd(p_, q_), r_);
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
    }
}

void QuadraticValue::check_same_field(const QuadraticValue& o) const {
    if (delta_ != o.delta_)
        throw std::invalid_argument("QuadraticValue: mixed deltas");
}

int QuadraticValue::sign() const {
    int sp = sgn(p_), sq = sgn(q_);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // Opposite signs: compare |p| against |q|*sqrt(delta) via squares.
    // Equality p^2 == q^2*delta is impossible since delta is not a square.
    // p^2 > q^2*delta means the rational term dominates, so the value takes
    // the sign of p; otherwise the sqrt term wins and it takes the sign of q.
    Int diff = p_ * p_ - q_ * q_ * delta_;
    return sgn(diff) > 0 ? sp : sq;
}

Int QuadraticValue::floor() const {
    // floor((p + q*sqrt(delta))/r) = floor((p + floor(q*sqrt(delta)))/r).
    // q*sqrt(delta) is irrational for q != 0, so its floor is isqrt(q^2*delta)
    // when q > 0 and -isqrt(q^2*delta) - 1 when q < 0.
    Int num = p_;
    if (sgn(q_) != 0) {
        Int root = isqrt(q_ * q_ * delta_);
        num += sgn(q_) > 0 ? root : -root - 1;
    }
    return fdiv(num, r_);
}

Int QuadraticValue::ceil() const { return -(-*this).floor(); }

QuadraticValue QuadraticValue::frac() const { return *this - floor(); }

QuadraticValue QuadraticValue::conj() const { return {p_, -q_, r_, delta_}; }

QuadraticValue QuadraticValue::operator-() const { return {-p_, -q_, r_, delta_}; }

QuadraticValue QuadraticValue::operator+(const QuadraticValue& o) const {
    check_same_field(o);
    return {p_ * o.r_ + o.p_ * r_, q_ * o.r_ + o.q_ * r_, r_ * o.r_, delta_};
}

QuadraticValue QuadraticValue::operator-(const QuadraticValue& o) const {
    check_same_field(o);
    return {p_ * o.r_ - o.p_ * r_, q_ * o.r_ - o.q_ * r_, r_ * o.r_, delta_};
}

QuadraticValue QuadraticValue::operator*(const QuadraticValue& o) const {
    check_same_field(o);
    return {p_ * o.p_ + q_ * o.q_ * delta_, p_ * o.q_ + q_ * o.p_, r_ * o.r_, delta_};
}

QuadraticValue QuadraticValue::operator/(const QuadraticValue& o) const {
    check_same_field(o);
    if (o.is_zero()) throw std::domain_error("QuadraticValue: division by zero");
    // 1/((p + q*sqrt(D))/r) = r*(p - q*sqrt(D)) / (p^2 - q^2*D)
    Int norm = o.p_ * o.p_ - o.q_ * o.q_ * delta_;
    return *this * QuadraticValue(o.r_ * o.p_, -o.r_ * o.q_, norm, delta_);
}

QuadraticValue QuadraticValue::operator+(const Int& n) const {
    return {p_ + n * r_, q_, r_, delta_};
}

QuadraticValue QuadraticValue::operator-(const Int& n) const {
    return {p_ - n * r_, q_, r_, delta_};
}

QuadraticValue QuadraticValue::operator*(const Int& n) const {
    return {p_ * n, q_ * n, r_, delta_};
}

std::string QuadraticValue::str() const {
    std::string s = "(" + p_.get_str();
    s += (sgn(q_) < 0 ? "-" : "+") + std::string();
    Int aq = abs(q_);
    s += aq.get_str() + "*sqrt(" + std::to_string(delta_) + "))/" + r_.get_str();
    return s;
}

QuadraticValue pow(const QuadraticValue& base, long e) {
    if (e < 0) throw std::domain_error("pow: negative exponent");
    QuadraticValue acc = QuadraticValue::integer(1, base.delta());
    QuadraticValue b = base;
    while (e > 0) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

}  // namespace ostro
