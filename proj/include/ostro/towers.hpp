#pragma once

#include <set>
#include <string>
#include <vector>

#include "ostro/numeration.hpp"

namespace ostro {

// The bi-infinite array A_{m,n}: row m is labelled by the m-th trimmed word
// w_m in radix order, A_{m,n} for n >= 1 decodes 0^{n-1} w_m, and the row
// extends to n <= 0 through the backward recurrence
// A_{m,n-1} = A_{m,n+1} - d*A_{m,n}. Column 1 is a Beatty-like sequence,
// column 0 is the wall, and the columns left of 1 - |w_m| form the negative
// array read right-to-left.

struct Position {
    Int m;
    long n;
};

// Geometry of row m left of the wall. red_col = 1 - |w_m| is the leftmost
// in-building column; the negative-array row NEG_{m,n} = A_{m,red_col-n}
// mirrors positive row `partner` with a shift of `offset` in {0,1}:
// A_{partner,n} = |NEG_{m,offset+n}| for all n >= 1. offset = 0 means the
// red wall and the left wall coincide; offset = 1 leaves a one-column
// terrace housing NEG_{m,1}.
struct WallProfile {
    long red_col;
    Int partner;
    int offset;
    bool coincide;
};

enum class TerraceClass { coinciding, terrace };

struct PalindromeClass {
    enum class Kind { none, deedee, edee };
    Kind kind = Kind::none;
    Int mult_num = 0;  // multiplier = mult_num / mult_den; den 2 only for even d
    int mult_den = 1;
    long shift = 0;  // terms = multiplier * SEQ_{n + shift}
};

struct BlockCounts {
    Int deedees;
    Int edees;
};

struct StolarskyReport {
    Int limit;
    unsigned long positions = 0;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

struct TailLocation {
    Int m;
    long shift;  // B_t = A_{m, t + shift}
};

Int array_entry(const Context& ctx, const Int& m, long n);

OstrowskiWord row_word(const Context& ctx, const Int& m);
std::string row_label(const Context& ctx, const Int& m);

// Closed form floor(m/(alpha-1)) for d >= 2, equal to the value of w_m with
// its first digit dropped (wall_word_value) and to A_{m,0}. (At d = 2 the
// slope 1/(alpha-1) coincides with alpha/(alpha+1).)
Int wall_term(const Context& ctx, const Int& m);
Int wall_word_value(const Context& ctx, const Int& m);

// Closed form floor(m*abar - 1/(alpha*(alpha-1))) with abar = alpha/(alpha-1),
// for d >= 2; equals A_{m,1}. first_column_value is the same formula without
// the d >= 2 gate (it also holds for d = 1, where it is kept internal).
Int first_column(const Context& ctx, const Int& m);
Int first_column_value(const Context& ctx, const Int& m);

// Rank of a first-column value V among trimmed values, i.e. the m with
// A_{m,1} = V. Throws if V is not a first-column value.
Int rank_of_value(const Context& ctx, const Int& v);

Position locate(const Context& ctx, const Int& n);  // n >= 1

// Negative array (d >= 2): NEG_{m,n} = A_{m, red_col - n} for n >= 1; equals
// nut^{n-1} applied to the dual reading of the row label.
Int neg_entry(const Context& ctx, const Int& m, long n);

WallProfile wall_profile(const Context& ctx, const Int& m);  // d >= 2

// coinciding iff frac(alpha*N) lies in the closed interval
// [1/alpha, 1 - 1/alpha]; decided exactly. d >= 2, N >= 1.
TerraceClass terrace_class(const Context& ctx, const Int& n);

// Detects rows that are shifted multiples of the denominators (deedee) or of
// the companions (edee, half-integer multiplier allowed for even d) by
// testing two consecutive terms against the cached sequences.
PalindromeClass classify_palindrome(const Context& ctx, const Int& m);

// Exact count of deedee/edee rows in block k (rows with |w| in
// {2k-1, 2k}): deedees are the integers j with alpha^(k-1) <= j < alpha^k,
// edees the j (halves allowed when d is even) with
// alpha^(k-1) <= j*sqrt(delta) < alpha^k. d >= 2.
BlockCounts block_counts(const Context& ctx, long k);

// Checks that every N in 1..limit occupies exactly one position (m, n >= 1)
// of the positive array and every nonzero |N| <= limit exactly one position
// of the negative array, itemizing each coverage failure. d >= 2.
StolarskyReport stolarsky_audit(const Context& ctx, long limit);

// Any recurrence sequence with positive leading Binet coefficient lands in a
// unique row after finitely many steps: B_t = A_{m, t + shift}.
TailLocation tail_locate(const Context& ctx, const Int& b0, const Int& b1);

// Codes consecutive first-column differences: the larger step as 1, the
// smaller as 0. d >= 2.
std::vector<int> sturmian_code(const Context& ctx, long count);

// Distinct consecutive differences within column `col` over rows
// m = 1..count. d >= 2.
std::set<Int> column_difference_pattern(const Context& ctx, long col, long count);

}  // namespace ostro
