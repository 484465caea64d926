#pragma once

#include <vector>

#include "ostro/context.hpp"

namespace ostro {

// Digit words are stored least-significant-digit first: digits[j] is the
// coefficient of basis position j+1. Text forms are msd-first; see
// to_msd_string / parse_msd.
//
// A positive word w = d_1 d_2 ... d_i represents sum d_j * basis(j) under
// the constraints (d >= 2):
//   * 0 <= d_1 < d, 0 <= d_j <= d,
//   * d_j = d forces d_{j-1} = 0,
//   * d_i != 0 (canonical length; the empty word is 0).
// For d = 1 the Zeckendorf rules apply instead: digits in {0,1}, no two
// consecutive ones, basis 1, 2, 3, 5, 8, ...
struct OstrowskiWord {
    std::vector<int> digits;
    bool empty() const { return digits.empty(); }
    size_t length() const { return digits.size(); }
    bool operator==(const OstrowskiWord&) const = default;
};

// A dual word represents sum d_j * D_{-j} over the bilateral denominators
// D_{-1}, D_{-2}, ... = 1, -d, d^2+1, ... under:
//   * 0 <= d_j <= d,
//   * d_j = d forces d_{j+1} = 0 unless j is the final index,
//   * final digit != 0 (canonical; empty = 0).
// The represented number has sign (-1)^{len+1}.
struct DualWord {
    std::vector<int> digits;
    bool empty() const { return digits.empty(); }
    size_t length() const { return digits.size(); }
    bool operator==(const DualWord&) const = default;
};

enum class WordClass { invalid, untrimmed, trimmed };

bool valid_ostrowski(const Context& ctx, const std::vector<int>& digits);
bool valid_dual(const Context& ctx, const std::vector<int>& digits);

// invalid / untrimmed / trimmed. A valid word is untrimmed when it factors
// as 0.v with v itself a valid word; rows of the arrays are labelled by the
// trimmed words. For d >= 2 that means: first digit nonzero, or the word
// starts 0,d. For d = 1 every 0-prefixed word peels, so trimmed means the
// first digit is 1.
WordClass classify_word(const Context& ctx, const std::vector<int>& digits);

OstrowskiWord encode(const Context& ctx, const Int& n);  // n >= 0, greedy
Int decode(const Context& ctx, const OstrowskiWord& w);  // validates

// Plain positional sum without validity checks; also accepts digit d in the
// first position (needed for wall words obtained by digit shifts).
Int raw_decode(const Context& ctx, const std::vector<int>& digits);

DualWord dual_encode(const Context& ctx, const Int& n);  // any integer
Int dual_decode(const Context& ctx, const DualWord& w);  // validates
Int raw_dual_decode(const Context& ctx, const std::vector<int>& digits);

// out(n) = floor(alpha*n + 1/alpha): prepends a zero digit to the word of n.
// nut(n) = ceil(-alpha*n): appends a zero to the msd dual representation.
// The _via_word versions compute the same value through the digit shift and
// exist so the two routes can be compared; they are never collapsed.
Int out_value(const Context& ctx, const Int& n);
Int out_via_word(const Context& ctx, const Int& n);
Int nut_value(const Context& ctx, const Int& n);
Int nut_via_word(const Context& ctx, const Int& n);

// First `count` trimmed words in radix order (= increasing value order).
std::vector<OstrowskiWord> enumerate_trimmed(const Context& ctx, long count);

// Text forms. msd-first; single characters for d <= 9, comma-separated
// integers for larger d. label_string prints lsd-first, which is exactly
// the msd form in the dual system: the same string read both ways names a
// row of the positive and of the negative array.
std::string to_msd_string(const Context& ctx, const std::vector<int>& digits);
std::string label_string(const Context& ctx, const std::vector<int>& digits);
std::vector<int> parse_msd(const Context& ctx, const std::string& text);

}  // namespace ostro
