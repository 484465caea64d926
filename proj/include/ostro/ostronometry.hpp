#pragma once

#include <string>
#include <vector>

#include "ostro/context.hpp"

namespace ostro {

// Identity families over the denominators D_n and companions E_n, verified
// exhaustively over index ranges in exact integer arithmetic.
enum class IdentityId { cassini, pell, jacobi, doctagne, gcd, divisibility, carmichael };

struct IdentityReport {
    std::string name;  // id token, e.g. "cassini"
    std::string law;   // the statement that was checked
    unsigned long instances = 0;
    unsigned long failure_count = 0;
    std::vector<std::string> counterexamples;  // capped at a handful
    std::vector<std::string> notes;
    bool passed() const { return failure_count == 0; }
};

const char* identity_name(IdentityId id);
IdentityId identity_from_name(const std::string& name);  // throws on unknown token

// Index ranges are bilateral for cassini/pell (|n| <= range), cubic/square
// grids on [-range, range] for jacobi/doctagne, 1..range for gcd and
// divisibility, and window starts 1..range with lengths <= 6 for carmichael.
IdentityReport verify_identity(const Context& ctx, IdentityId id, long range);

// A_{m,n} walked from index 0 with its Pell companion X_n: the pair solves
// X_n^2 - delta*Y_n^2 = (-1)^n * C with C = X_0^2 - delta*Y_0^2, and
// (2X_n, 2Y_n) are the components of (X_0 + Y_0*sqrt)*(E_n + D_n*sqrt).
struct RowCompanion {
    long d;
    Int m;
    Int y0, y1;
    Int x0, x1;
    Int c;
    Int y(long n) const;
    Int x(long n) const;
};

RowCompanion row_companion(const Context& ctx, const Int& m);

// Row Pell for |n| <= range, the generalized row Jacobi
// 4*(Y_b*Y_{a-1} - Y_a*Y_{b-1}) = (-1)^(b-1)*D_{a-b}*C over the full
// [-range, range]^2 grid, the ring product form, and the reconstruction
// 2*Y_n = X_0*D_n + Y_0*E_n. The commonly printed sign exponent b is run as
// a negative control and must fail; the report notes its first
// counterexample.
IdentityReport verify_row_identity(const Context& ctx, const Int& m, long range);

// Value at index n of the recurrence x_{k+1} = d*x_k + x_{k-1} seeded with
// values a0, a1 at indices 0, 1; n may be negative.
Int recurrence_term(long d, const Int& a0, const Int& a1, long n);

}  // namespace ostro
