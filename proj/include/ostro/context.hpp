#pragma once

#include <shared_mutex>
#include <vector>

#include "ostro/quadratic.hpp"

namespace ostro {

// Everything downstream is parametrized by the recurrence
//
//     X_{n+1} = d*X_n + X_{n-1}
//
// for a fixed integer d >= 1. The context owns the discriminant
// delta = d^2 + 4, the root alpha = (d + sqrt(delta))/2 and its conjugate
// beta = (d - sqrt(delta))/2 (so alpha*beta = -1 and alpha + beta = d), and
// the two fundamental solutions of the recurrence:
//
//     denominators D_n:  D_0 = 0, D_1 = 1      (Binet (alpha^n - beta^n)/(alpha - beta))
//     companions   E_n:  E_0 = 2, E_1 = d      (Binet alpha^n + beta^n)
//
// Both extend to negative indices: D_{-n} = (-1)^{n+1} D_n and
// E_{-n} = (-1)^n E_n. Caches grow on demand; growth is guarded so the
// sweep kernels can share one context across threads.
class Context {
  public:
    explicit Context(long d);

    long d() const { return d_; }
    long delta() const { return delta_; }

    const QuadraticValue& alpha() const { return alpha_; }
    const QuadraticValue& beta() const { return beta_; }
    const QuadraticValue& inv_alpha() const { return inv_alpha_; }  // 1/alpha = alpha - d

    QuadraticValue integer(const Int& n) const { return QuadraticValue::integer(n, delta_); }
    QuadraticValue value(Int p, Int q, Int r) const {
        return QuadraticValue(std::move(p), std::move(q), std::move(r), delta_);
    }

    Int denominator(long n) const;
    Int companion(long n) const;

    // Positional basis of the positive-number system, j >= 1. For d >= 2
    // position j carries D_j; for d = 1 the Zeckendorf convention applies
    // and position j carries D_{j+1} (the Fibonacci numbers 1, 2, 3, 5, ...).
    Int basis(long j) const;

    // Largest basis index i with basis(i) <= n, for n >= 1.
    long top_basis_index(const Int& n) const;

  private:
    void ensure(long n) const;
    Int positive_denominator(long n) const;

    long d_;
    long delta_;
    QuadraticValue alpha_, beta_, inv_alpha_;
    mutable std::vector<Int> den_;   // D_0, D_1, ...
    mutable std::vector<Int> comp_;  // E_0, E_1, ...
    mutable std::shared_mutex mu_;
};

}  // namespace ostro
