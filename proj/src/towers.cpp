#include "ostro/towers.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace ostro {

namespace {

void require_wide(const Context& ctx, const char* what) {
    if (ctx.d() < 2)
        throw std::domain_error(std::string(what) + ": not defined for d = 1");
}

// abar = alpha/(alpha-1) is the slope of the first column; wall_gap is the
// constant 1/(alpha*(alpha-1)) it is shifted by.
QuadraticValue abar(const Context& ctx) {
    return ctx.alpha() / (ctx.alpha() - Int(1));
}

QuadraticValue wall_gap(const Context& ctx) {
    return ctx.integer(1) / (ctx.alpha() * (ctx.alpha() - Int(1)));
}

// A_{m,1} and A_{m,2} from the row word: the raw value and the value with
// every digit moved up one position. Everything else follows by recurrence.
std::pair<Int, Int> row_seed(const Context& ctx, const OstrowskiWord& w) {
    Int a1 = raw_decode(ctx, w.digits);
    Int a2 = 0;
    for (size_t j = 0; j < w.digits.size(); ++j)
        if (w.digits[j] != 0) a2 += Int(w.digits[j]) * ctx.basis(static_cast<long>(j + 2));
    return {a1, a2};
}

// Signed value of the row label read as a dual word (msd-first), i.e. the
// first in-building term left of the red wall.
Int label_dual_value(const Context& ctx, const OstrowskiWord& w) {
    std::vector<int> rev(w.digits.rbegin(), w.digits.rend());
    return raw_dual_decode(ctx, rev);
}

Int rank_or_zero(const Context& ctx, const Int& v) {
    if (sgn(v) <= 0) return 0;
    Int rank = ((ctx.integer(v) + Int(1) + wall_gap(ctx)) / abar(ctx)).floor();
    if (sgn(rank) <= 0 || first_column_value(ctx, rank) != v) return 0;
    return rank;
}

}  // namespace

Int first_column_value(const Context& ctx, const Int& m) {
    if (sgn(m) <= 0) throw std::domain_error("first_column: row index must be >= 1");
    return (abar(ctx) * m - wall_gap(ctx)).floor();
}

Int first_column(const Context& ctx, const Int& m) {
    require_wide(ctx, "first_column");
    return first_column_value(ctx, m);
}

Int rank_of_value(const Context& ctx, const Int& v) {
    Int rank = rank_or_zero(ctx, v);
    if (sgn(rank) == 0) throw std::invalid_argument("rank_of_value: not a first-column value");
    return rank;
}

OstrowskiWord row_word(const Context& ctx, const Int& m) {
    OstrowskiWord w = encode(ctx, first_column_value(ctx, m));
    assert(classify_word(ctx, w.digits) == WordClass::trimmed);
    return w;
}

std::string row_label(const Context& ctx, const Int& m) {
    return label_string(ctx, row_word(ctx, m).digits);
}

Int array_entry(const Context& ctx, const Int& m, long n) {
    auto [a, b] = row_seed(ctx, row_word(ctx, m));
    if (n >= 1) {
        for (long t = 1; t < n; ++t) {
            Int next = b * ctx.d() + a;
            a = b;
            b = std::move(next);
        }
        return a;
    }
    for (long t = 1; t > n; --t) {
        Int prev = b - a * ctx.d();
        b = a;
        a = std::move(prev);
    }
    return a;
}

Int wall_term(const Context& ctx, const Int& m) {
    require_wide(ctx, "wall_term");
    if (sgn(m) <= 0) throw std::domain_error("wall_term: row index must be >= 1");
    // floor(m/(alpha-1)): each word v recurs as a wall once per legal first
    // digit, so the wall column grows with slope alpha-1, not alpha+1 over
    // alpha. At d = 2 this equals floor(m*alpha/(alpha+1)), the form usually
    // quoted; for d >= 3 the two differ (m = 2 already separates them) and
    // only this one matches the digit-drop route.
    return (ctx.integer(m) / (ctx.alpha() - Int(1))).floor();
}

Int wall_word_value(const Context& ctx, const Int& m) {
    require_wide(ctx, "wall_word_value");
    OstrowskiWord w = row_word(ctx, m);
    Int acc = 0;
    for (size_t j = 1; j < w.digits.size(); ++j)
        if (w.digits[j] != 0) acc += Int(w.digits[j]) * ctx.basis(static_cast<long>(j));
    return acc;
}

Position locate(const Context& ctx, const Int& n) {
    if (sgn(n) <= 0) throw std::domain_error("locate: argument must be >= 1");
    OstrowskiWord w = encode(ctx, n);
    size_t z = 0;
    while (z < w.digits.size() && w.digits[z] == 0) ++z;
    assert(z < w.digits.size());
    size_t start = z;
    long col = static_cast<long>(z) + 1;
    if (ctx.d() >= 2 && w.digits[z] == ctx.d()) {
        // the trimmed label keeps the zero in front of a leading digit d
        assert(z >= 1);
        start = z - 1;
        col = static_cast<long>(z);
    }
    std::vector<int> label(w.digits.begin() + static_cast<std::ptrdiff_t>(start), w.digits.end());
    return {rank_of_value(ctx, raw_decode(ctx, label)), col};
}

Int neg_entry(const Context& ctx, const Int& m, long n) {
    require_wide(ctx, "neg_entry");
    if (n < 1) throw std::domain_error("neg_entry: column must be >= 1");
    Int v = label_dual_value(ctx, row_word(ctx, m));
    for (long t = 1; t < n; ++t) v = nut_value(ctx, v);
    return v;
}

WallProfile wall_profile(const Context& ctx, const Int& m) {
    require_wide(ctx, "wall_profile");
    OstrowskiWord w = row_word(ctx, m);
    long red = 1 - static_cast<long>(w.digits.size());
    Int v1 = label_dual_value(ctx, w);
    Int v2 = nut_value(ctx, v1);
    Int v3 = nut_value(ctx, v2);
    Int v4 = nut_value(ctx, v3);
    // Two consecutive matching terms pin the mirrored row; the third rules
    // out coincidences. The mirror starts either at the red wall (offset 0)
    // or one column further left (offset 1).
    auto mirror = [&ctx](const Int& a, const Int& b, const Int& c) -> Int {
        Int rank = rank_or_zero(ctx, abs(a));
        if (sgn(rank) == 0) return 0;
        if (out_value(ctx, abs(a)) != abs(b)) return 0;
        if (out_value(ctx, abs(b)) != abs(c)) return 0;
        return rank;
    };
    if (Int partner = mirror(v1, v2, v3); sgn(partner) > 0) return {red, partner, 0, true};
    if (Int partner = mirror(v2, v3, v4); sgn(partner) > 0) return {red, partner, 1, false};
    throw std::logic_error("wall_profile: no mirrored row within offset 1");
}

TerraceClass terrace_class(const Context& ctx, const Int& n) {
    require_wide(ctx, "terrace_class");
    if (sgn(n) <= 0) throw std::domain_error("terrace_class: argument must be >= 1");
    QuadraticValue f = (ctx.alpha() * n).frac();
    // closed interval on both ends: frac(alpha*N) can hit 1/alpha exactly
    return (f >= ctx.inv_alpha() && f <= ctx.integer(1) - ctx.inv_alpha())
               ? TerraceClass::coinciding
               : TerraceClass::terrace;
}

PalindromeClass classify_palindrome(const Context& ctx, const Int& m) {
    PalindromeClass out;
    auto [y1, y2] = row_seed(ctx, row_word(ctx, m));
    Int y0 = y2 - y1 * ctx.d();
    // Multiple-of-denominators test: consecutive denominators are coprime,
    // so the multiplier is forced to gcd(y0, y1); two consecutive matches
    // pin the whole row through the recurrence.
    {
        Int j = gcd(y0, y1);
        Int v = y1 / j;
        for (long idx = 0;; ++idx) {
            Int dv = ctx.denominator(idx + 1);
            if (idx >= 2 && dv > v) break;
            if (dv == v && j * ctx.denominator(idx) == y0) {
                out.kind = PalindromeClass::Kind::deedee;
                out.mult_num = j;
                out.mult_den = 1;
                out.shift = idx;
                return out;
            }
        }
    }
    // Multiple-of-companions test, run on doubled terms so the half-integer
    // multipliers allowed for even d stay integral: gcd of consecutive
    // companions is 2 for even d and 1 for odd d, forcing u = 2*multiplier.
    {
        Int u0 = y0 * 2, u1 = y1 * 2;
        Int g = gcd(u0, u1);
        Int ge = ctx.d() % 2 == 0 ? 2 : 1;
        Int u = g / ge;
        bool integral_ok = ctx.d() % 2 == 0 || u % 2 == 0;
        if (g % ge == 0 && integral_ok) {
            Int v = u1 / u;
            for (long idx = 0;; ++idx) {
                Int ev = ctx.companion(idx + 1);
                if (idx >= 2 && ev > v) break;
                if (ev == v && u * ctx.companion(idx) == u0) {
                    out.kind = PalindromeClass::Kind::edee;
                    if (u % 2 == 0) {
                        out.mult_num = u / 2;
                        out.mult_den = 1;
                    } else {
                        out.mult_num = u;
                        out.mult_den = 2;
                    }
                    out.shift = idx;
                    return out;
                }
            }
        }
    }
    return out;
}

BlockCounts block_counts(const Context& ctx, long k) {
    require_wide(ctx, "block_counts");
    if (k < 1) throw std::domain_error("block_counts: block index must be >= 1");
    QuadraticValue lo = pow(ctx.alpha(), k - 1);
    QuadraticValue hi = pow(ctx.alpha(), k);
    // #{integers u : x <= u < y} = ceil(y) - ceil(x) for 0 < x <= y
    Int deedees = hi.ceil() - lo.ceil();
    QuadraticValue sd = QuadraticValue::sqrt_delta(ctx.delta());
    QuadraticValue xlo = lo / sd;
    QuadraticValue xhi = hi / sd;
    if (ctx.d() % 2 == 0) {  // half-integer multipliers j = u/2 allowed
        xlo = xlo * Int(2);
        xhi = xhi * Int(2);
    }
    Int edees = xhi.ceil() - xlo.ceil();
    return {deedees, edees};
}

StolarskyReport stolarsky_audit(const Context& ctx, long limit) {
    require_wide(ctx, "stolarsky_audit");
    if (limit < 0) throw std::domain_error("stolarsky_audit: limit must be >= 0");
    StolarskyReport rep;
    rep.limit = limit;
    auto flag = [&rep](std::string msg) {
        if (rep.failures.size() < 40) rep.failures.push_back(std::move(msg));
    };

    // Positive side: walk every row whose first column is within range and
    // tally the values; each 1..limit must be hit exactly once, and locate()
    // must point back at a position holding the value it claims.
    std::vector<std::uint32_t> count(static_cast<size_t>(limit) + 1, 0);
    for (Int m = 1;; ++m) {
        Int a = first_column_value(ctx, m);
        if (a > limit) break;
        Int b = out_value(ctx, a);
        while (a <= limit) {
            ++count[static_cast<size_t>(to_long(a))];
            ++rep.positions;
            Int next = b * ctx.d() + a;
            a = std::move(b);
            b = std::move(next);
        }
    }
    for (long n = 1; n <= limit; ++n) {
        if (count[static_cast<size_t>(n)] != 1)
            flag("value " + std::to_string(n) + " covered " +
                 std::to_string(count[static_cast<size_t>(n)]) + " times");
        Position p = locate(ctx, Int(n));
        if (array_entry(ctx, p.m, p.n) != n)
            flag("locate round trip failed at " + std::to_string(n));
    }

    // Negative side: rows whose label starts with a nonzero dual digit own a
    // first negative-array column entry; iterating nut walks the rest. Every
    // nonzero N with |N| <= limit must again be hit exactly once.
    std::vector<std::uint32_t> ncount(2 * static_cast<size_t>(limit) + 1, 0);
    for (long n = -limit; n <= limit; ++n) {
        if (n == 0) continue;
        DualWord w = dual_encode(ctx, Int(n));
        if (w.digits[0] == 0) continue;  // not a first-column dweller
        Int v(n);
        while (abs(v) <= limit) {
            ++ncount[static_cast<size_t>(to_long(v) + limit)];
            ++rep.positions;
            v = nut_value(ctx, v);
        }
    }
    for (long n = -limit; n <= limit; ++n) {
        if (n == 0) continue;
        if (ncount[static_cast<size_t>(n + limit)] != 1)
            flag("negative-array value " + std::to_string(n) + " covered " +
                 std::to_string(ncount[static_cast<size_t>(n + limit)]) + " times");
    }
    return rep;
}

TailLocation tail_locate(const Context& ctx, const Int& b0, const Int& b1) {
    if (sgn(b0) == 0 && sgn(b1) == 0)
        throw std::invalid_argument("tail_locate: zero sequence");
    // Leading Binet coefficient is (B_1 - beta*B_0)/(alpha - beta); only its
    // sign matters, and alpha - beta > 0.
    if ((ctx.integer(b1) - ctx.beta() * b0).sign() <= 0)
        throw std::domain_error("tail_locate: sequence is not eventually positive");
    QuadraticValue eps = ctx.inv_alpha();
    QuadraticValue ceps = ctx.integer(1) - ctx.inv_alpha();
    if (ceps < eps) eps = ceps;  // tighter bound when alpha < 2
    Int x = b0, y = b1;
    long steps = 0;
    for (;; ++steps) {
        if (sgn(x) > 0) {
            QuadraticValue defect = ctx.integer(y) - ctx.alpha() * x;
            if (defect < eps && -defect < eps) break;
        }
        Int next = y * ctx.d() + x;
        x = std::move(y);
        y = std::move(next);
        if (steps > 1000000) throw std::logic_error("tail_locate: no convergence");
    }
    Position p = locate(ctx, x);
    return {p.m, p.n - steps};
}

std::vector<int> sturmian_code(const Context& ctx, long count) {
    require_wide(ctx, "sturmian_code");
    std::vector<int> code;
    if (count <= 0) return code;
    code.reserve(static_cast<size_t>(count));
    Int lo_step = abar(ctx).floor();
    Int hi_step = abar(ctx).ceil();
    Int prev = first_column_value(ctx, 1);
    for (long m = 2; m <= count + 1; ++m) {
        Int cur = first_column_value(ctx, Int(m));
        Int step = cur - prev;
        if (step != lo_step && step != hi_step)
            throw std::logic_error("sturmian_code: step outside the two-letter alphabet");
        code.push_back(step == hi_step ? 1 : 0);
        prev = std::move(cur);
    }
    return code;
}

std::set<Int> column_difference_pattern(const Context& ctx, long col, long count) {
    require_wide(ctx, "column_difference_pattern");
    std::set<Int> steps;
    if (count < 2) return steps;
    Int prev = array_entry(ctx, 1, col);
    for (long m = 2; m <= count; ++m) {
        Int cur = array_entry(ctx, Int(m), col);
        steps.insert(cur - prev);
        prev = std::move(cur);
    }
    return steps;
}

}  // namespace ostro
