#pragma once

#include <string>

#include "ostro/towers.hpp"

namespace ostro {

enum class RenderFormat { ascii, csv, json };

// A garden is the right-hand table: wall column plus columns 1..cols_right.
// A tower is the two-sided table: columns -cols_left..1 with wall markers.
// All formats are deterministic bytes for a fixed spec.
struct RenderSpec {
    long d = 2;
    long rows = 9;
    long cols_right = 8;  // garden only
    long cols_left = 6;   // tower only
    RenderFormat format = RenderFormat::ascii;
    bool labels = false;                  // tower: prepend the row label column
    bool underline_palindromes = false;   // tower ascii: mark rows that ride D or E
};

RenderFormat render_format_from_name(const std::string& name);  // throws on unknown

// Garden: any d >= 1. Ascii aligns columns and draws the right wall; csv is
// the bare value grid (wall, then columns 1..cols_right); json follows the
// row-object schema shared with render_tower.
std::string render_garden(const RenderSpec& spec);

// Tower: d >= 2 (the left-side geometry is defined through the dual system).
// Ascii draws '|' at the right wall, ':' at a red wall standing apart from
// the left wall, and '|' where the two coincide. Csv rows are
// m,[label,]red_col,offset_i,values(-cols_left..1). Json adds the palindrome
// classification.
std::string render_tower(const RenderSpec& spec);

}  // namespace ostro
