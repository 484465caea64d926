#include "ostro/render.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <vector>

namespace ostro {

namespace {

using nlohmann::json;

std::string istr(const Int& v) { return v.get_str(); }

std::string pad_left(const std::string& s, size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string kind_string(PalindromeClass::Kind k) {
    switch (k) {
        case PalindromeClass::Kind::deedee: return "deedee";
        case PalindromeClass::Kind::edee: return "edee";
        default: return "none";
    }
}

std::string multiplier_string(const PalindromeClass& pc) {
    if (pc.kind == PalindromeClass::Kind::none) return "";
    std::string s = istr(pc.mult_num);
    if (pc.mult_den != 1) s += "/" + std::to_string(pc.mult_den);
    return s;
}

long json_int(const Int& v) {
    if (!fits_long(v)) throw std::overflow_error("render: value too large for json");
    return to_long(v);
}

void validate(const RenderSpec& spec) {
    if (spec.d < 1) throw std::invalid_argument("render: d must be >= 1");
    if (spec.rows < 0) throw std::invalid_argument("render: rows must be >= 0");
    if (spec.cols_right < 1) throw std::invalid_argument("render: cols must be >= 1");
    if (spec.cols_left < 1) throw std::invalid_argument("render: left must be >= 1");
}

}  // namespace

RenderFormat render_format_from_name(const std::string& name) {
    if (name == "ascii") return RenderFormat::ascii;
    if (name == "csv") return RenderFormat::csv;
    if (name == "json") return RenderFormat::json;
    throw std::invalid_argument("unknown format '" + name + "' (want ascii, csv or json)");
}

std::string render_garden(const RenderSpec& spec) {
    validate(spec);
    Context ctx(spec.d);

    // Row values: wall column, then columns 1..cols_right.
    std::vector<std::vector<Int>> grid;
    for (long m = 1; m <= spec.rows; ++m) {
        std::vector<Int> row;
        row.push_back(spec.d >= 2 ? wall_term(ctx, Int(m)) : array_entry(ctx, Int(m), 0));
        for (long n = 1; n <= spec.cols_right; ++n) row.push_back(array_entry(ctx, Int(m), n));
        grid.push_back(std::move(row));
    }

    if (spec.format == RenderFormat::csv) {
        std::ostringstream os;
        for (const auto& row : grid) {
            for (size_t i = 0; i < row.size(); ++i) {
                if (i) os << ',';
                os << istr(row[i]);
            }
            os << '\n';
        }
        return os.str();
    }

    if (spec.format == RenderFormat::json) {
        json out;
        out["d"] = spec.d;
        out["rows"] = json::array();
        for (long m = 1; m <= spec.rows; ++m) {
            const auto& row = grid[static_cast<size_t>(m - 1)];
            json jr;
            jr["m"] = m;
            OstrowskiWord w = row_word(ctx, Int(m));
            jr["word"] = to_msd_string(ctx, w.digits);
            jr["wall"] = json_int(row[0]);
            json terms = json::array();
            for (size_t i = 1; i < row.size(); ++i) terms.push_back(json_int(row[i]));
            jr["terms"] = std::move(terms);
            jr["red_col"] = 1 - static_cast<long>(w.length());
            if (spec.d >= 2) {
                WallProfile wp = wall_profile(ctx, Int(m));
                jr["offset_i"] = wp.offset;
                PalindromeClass pc = classify_palindrome(ctx, Int(m));
                jr["palindrome"] = {{"kind", kind_string(pc.kind)},
                                    {"multiplier", multiplier_string(pc)}};
            }
            out["rows"].push_back(std::move(jr));
        }
        return out.dump(2) + "\n";
    }

    // ascii: right-aligned columns, single spaces, the right wall after the
    // wall column.
    std::vector<size_t> width(static_cast<size_t>(spec.cols_right) + 1, 1);
    for (const auto& row : grid)
        for (size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], istr(row[i]).size());
    std::ostringstream os;
    for (const auto& row : grid) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i == 1)
                os << " | ";
            else if (i > 1)
                os << ' ';
            os << pad_left(istr(row[i]), width[i]);
        }
        os << '\n';
    }
    return os.str();
}

std::string render_tower(const RenderSpec& spec) {
    validate(spec);
    if (spec.d < 2) throw std::invalid_argument("render: tower requires d >= 2");
    Context ctx(spec.d);

    struct Row {
        long m;
        std::string label;
        WallProfile wp;
        PalindromeClass pc;
        std::vector<Int> vals;  // columns -cols_left .. 1
    };
    std::vector<Row> rows;
    for (long m = 1; m <= spec.rows; ++m) {
        Row r;
        r.m = m;
        r.label = row_label(ctx, Int(m));
        r.wp = wall_profile(ctx, Int(m));
        r.pc = classify_palindrome(ctx, Int(m));
        for (long c = -spec.cols_left; c <= 1; ++c) r.vals.push_back(array_entry(ctx, Int(m), c));
        rows.push_back(std::move(r));
    }

    if (spec.format == RenderFormat::csv) {
        std::ostringstream os;
        for (const auto& r : rows) {
            os << r.m << ',';
            if (spec.labels) os << r.label << ',';
            os << r.wp.red_col << ',' << r.wp.offset;
            for (const Int& v : r.vals) os << ',' << istr(v);
            os << '\n';
        }
        return os.str();
    }

    if (spec.format == RenderFormat::json) {
        json out;
        out["d"] = spec.d;
        out["rows"] = json::array();
        for (const auto& r : rows) {
            json jr;
            jr["m"] = r.m;
            OstrowskiWord w = row_word(ctx, Int(r.m));
            jr["word"] = to_msd_string(ctx, w.digits);
            jr["wall"] = json_int(r.vals[static_cast<size_t>(spec.cols_left)]);
            json terms = json::array();
            for (const Int& v : r.vals) terms.push_back(json_int(v));
            jr["terms"] = std::move(terms);
            jr["red_col"] = r.wp.red_col;
            jr["offset_i"] = r.wp.offset;
            jr["palindrome"] = {{"kind", kind_string(r.pc.kind)},
                                {"multiplier", multiplier_string(r.pc)}};
            out["rows"].push_back(std::move(jr));
        }
        return out.dump(2) + "\n";
    }

    // ascii: '|' marks the right wall, ':' a red wall standing apart from
    // the left wall, '|' where the two coincide. A column boundary widens to
    // " X " only if some visible row puts a marker there, so short tables
    // keep the tight single-space layout while the grid stays aligned.
    const size_t ncols = static_cast<size_t>(spec.cols_left) + 2;
    std::vector<size_t> width(ncols, 1);
    size_t label_width = 0;
    for (const auto& r : rows) {
        label_width = std::max(label_width, r.label.size());
        for (size_t i = 0; i < r.vals.size(); ++i)
            width[i] = std::max(width[i], istr(r.vals[i]).size());
    }

    auto boundary_marker = [&](const Row& r, long c) -> char {
        // Marker on the boundary between columns c-1 and c.
        if (c == 1) return '|';
        if (c == r.wp.red_col) return r.wp.offset == 0 ? '|' : ':';
        if (r.wp.offset == 1 && c == r.wp.red_col - 1) return '|';
        return ' ';
    };

    std::vector<bool> wide(ncols, false);  // boundary before column i
    for (const auto& r : rows)
        for (size_t i = 1; i < ncols; ++i)
            if (boundary_marker(r, -spec.cols_left + static_cast<long>(i)) != ' ')
                wide[i] = true;

    std::ostringstream os;
    for (const auto& r : rows) {
        std::string line, underline;
        if (spec.labels) {
            line += pad_right(r.label, label_width) + "  ";
            underline += std::string(label_width + 2, ' ');
        }
        for (size_t i = 0; i < r.vals.size(); ++i) {
            long c = -spec.cols_left + static_cast<long>(i);
            if (i) {
                if (wide[i]) {
                    line += ' ';
                    line += boundary_marker(r, c);
                    line += ' ';
                    underline += "   ";
                } else {
                    line += ' ';
                    underline += ' ';
                }
            }
            line += pad_left(istr(r.vals[i]), width[i]);
            underline += std::string(width[i], '~');
        }
        os << line << '\n';
        if (spec.underline_palindromes && r.pc.kind != PalindromeClass::Kind::none)
            os << underline << '\n';
    }
    return os.str();
}

}  // namespace ostro
