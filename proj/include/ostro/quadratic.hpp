#pragma once

#include <string>

#include "ostro/ints.hpp"

namespace ostro {

// Exact element of the real quadratic field Q(sqrt(delta)), stored as
//
//     (p + q*sqrt(delta)) / r         r > 0, gcd(p, q, r) = 1
//
// with delta > 0 and not a perfect square. Signs and floors reduce to
// integer comparisons (p^2 vs q^2*delta, plus one integer square root), so
// no operation here ever rounds. The denominator r is kept general, which
// lets quotients like 1/(alpha*(alpha-1)) stay inside the type.
class QuadraticValue {
  public:
    QuadraticValue(Int p, Int q, Int r, long delta);

    static QuadraticValue integer(Int n, long delta);
    static QuadraticValue sqrt_delta(long delta);  // 0 + 1*sqrt(delta)

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& r() const { return r_; }
    long delta() const { return delta_; }

    bool is_zero() const { return sgn(p_) == 0 && sgn(q_) == 0; }
    bool is_rational() const { return sgn(q_) == 0; }

    // -1, 0 or +1; decided by comparing p^2 against q^2*delta.
    int sign() const;

    Int floor() const;
    Int ceil() const;
    QuadraticValue frac() const;  // *this - floor(), in [0, 1)

    QuadraticValue conj() const;  // q -> -q

    QuadraticValue operator-() const;
    QuadraticValue operator+(const QuadraticValue& o) const;
    QuadraticValue operator-(const QuadraticValue& o) const;
    QuadraticValue operator*(const QuadraticValue& o) const;
    QuadraticValue operator/(const QuadraticValue& o) const;

    QuadraticValue operator+(const Int& n) const;
    QuadraticValue operator-(const Int& n) const;
    QuadraticValue operator*(const Int& n) const;

    bool operator==(const QuadraticValue& o) const { return (*this - o).is_zero(); }
    bool operator!=(const QuadraticValue& o) const { return !(*this == o); }
    bool operator<(const QuadraticValue& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const QuadraticValue& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const QuadraticValue& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const QuadraticValue& o) const { return (*this - o).sign() >= 0; }

    std::string str() const;  // "(p+q*sqrt(delta))/r", for diagnostics

  private:
    void normalize();
    void check_same_field(const QuadraticValue& o) const;

    Int p_, q_, r_;
    long delta_;
};

QuadraticValue pow(const QuadraticValue& base, long e);  // e >= 0

}  // namespace ostro
