#include "ostro/context.hpp"

#include <mutex>

namespace ostro {

namespace {

constexpr long kMaxIndex = 1 << 22;  // ~4M terms; far beyond any caller here

long checked_delta(long d) {
    if (d < 1) throw std::invalid_argument("Context: d must be >= 1");
    if (d > (1LL << 31)) throw std::invalid_argument("Context: d too large");
    return d * d + 4;
}

}  // namespace

Context::Context(long d)
    : d_(d),
      delta_(checked_delta(d)),
      alpha_(Int(d), 1, 2, delta_),
      beta_(Int(d), -1, 2, delta_),
      inv_alpha_(Int(-d), 1, 2, delta_) {
    den_ = {Int(0), Int(1)};
    comp_ = {Int(2), Int(d)};
}

void Context::ensure(long n) const {
    if (n > kMaxIndex) throw std::length_error("Context: index out of supported range");
    {
        std::shared_lock lk(mu_);
        if (static_cast<long>(den_.size()) > n) return;
    }
    std::unique_lock lk(mu_);
    while (static_cast<long>(den_.size()) <= n) {
        size_t k = den_.size();
        den_.push_back(d_ * den_[k - 1] + den_[k - 2]);
        comp_.push_back(d_ * comp_[k - 1] + comp_[k - 2]);
    }
}

Int Context::positive_denominator(long n) const {
    ensure(n);
    std::shared_lock lk(mu_);
    return den_[static_cast<size_t>(n)];
}

Int Context::denominator(long n) const {
    if (n >= 0) return positive_denominator(n);
    // D_{-n} = (-1)^{n+1} D_n
    Int v = positive_denominator(-n);
    return ((-n) % 2 == 0) ? Int(-v) : v;
}

Int Context::companion(long n) const {
    long a = n >= 0 ? n : -n;
    ensure(a);
    Int v;
    {
        std::shared_lock lk(mu_);
        v = comp_[static_cast<size_t>(a)];
    }
    // E_{-n} = (-1)^n E_n
    if (n < 0 && a % 2 == 1) v = -v;
    return v;
}

Int Context::basis(long j) const {
    if (j < 1) throw std::invalid_argument("Context::basis: index must be >= 1");
    return positive_denominator(d_ == 1 ? j + 1 : j);
}

long Context::top_basis_index(const Int& n) const {
    assert(sgn(n) > 0);
    long i = 1;
    while (basis(i + 1) <= n) ++i;
    return i;
}

}  // namespace ostro
