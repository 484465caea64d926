#include "ostro/numeration.hpp"

#include <algorithm>
#include <sstream>

namespace ostro {

namespace {

bool digits_in_range(const Context& ctx, const std::vector<int>& digits) {
    for (int dig : digits)
        if (dig < 0 || dig > ctx.d()) return false;
    return true;
}

}  // namespace

bool valid_ostrowski(const Context& ctx, const std::vector<int>& digits) {
    if (digits.empty()) return true;
    if (!digits_in_range(ctx, digits)) return false;
    if (digits.back() == 0) return false;  // canonical length
    const long d = ctx.d();
    if (d >= 2 && digits[0] >= d) return false;
    for (size_t j = 1; j < digits.size(); ++j)
        if (digits[j] == d && digits[j - 1] != 0) return false;
    return true;
}

bool valid_dual(const Context& ctx, const std::vector<int>& digits) {
    if (digits.empty()) return true;
    if (!digits_in_range(ctx, digits)) return false;
    if (digits.back() == 0) return false;
    const long d = ctx.d();
    for (size_t j = 0; j + 1 < digits.size(); ++j)
        if (digits[j] == d && digits[j + 1] != 0) return false;
    return true;
}

WordClass classify_word(const Context& ctx, const std::vector<int>& digits) {
    if (!valid_ostrowski(ctx, digits)) return WordClass::invalid;
    if (digits.empty()) return WordClass::trimmed;  // 0 never labels a row anyway
    if (ctx.d() == 1) return digits[0] == 1 ? WordClass::trimmed : WordClass::untrimmed;
    if (digits[0] != 0) return WordClass::trimmed;
    if (digits.size() >= 2 && digits[1] == ctx.d()) return WordClass::trimmed;
    return WordClass::untrimmed;
}

OstrowskiWord encode(const Context& ctx, const Int& n) {
    if (sgn(n) < 0) throw std::domain_error("encode: negative argument");
    OstrowskiWord w;
    if (sgn(n) == 0) return w;
    long top = ctx.top_basis_index(n);
    w.digits.assign(static_cast<size_t>(top), 0);
    Int rem = n;
    for (long j = top; j >= 1; --j) {
        Int b = ctx.basis(j);
        Int dig = fdiv(rem, b);
        rem -= dig * b;
        w.digits[static_cast<size_t>(j - 1)] = static_cast<int>(to_long(dig));
    }
    assert(sgn(rem) == 0);
    assert(valid_ostrowski(ctx, w.digits));
    return w;
}

Int raw_decode(const Context& ctx, const std::vector<int>& digits) {
    Int acc = 0;
    for (size_t j = 0; j < digits.size(); ++j)
        if (digits[j] != 0) acc += Int(digits[j]) * ctx.basis(static_cast<long>(j + 1));
    return acc;
}

Int decode(const Context& ctx, const OstrowskiWord& w) {
    if (!valid_ostrowski(ctx, w.digits))
        throw std::invalid_argument("decode: invalid digit pattern");
    return raw_decode(ctx, w.digits);
}

Int raw_dual_decode(const Context& ctx, const std::vector<int>& digits) {
    Int acc = 0;
    for (size_t j = 0; j < digits.size(); ++j)
        if (digits[j] != 0)
            acc += Int(digits[j]) * ctx.denominator(-static_cast<long>(j + 1));
    return acc;
}

Int dual_decode(const Context& ctx, const DualWord& w) {
    if (!valid_dual(ctx, w.digits))
        throw std::invalid_argument("dual_decode: invalid digit pattern");
    return raw_dual_decode(ctx, w.digits);
}

DualWord dual_encode(const Context& ctx, const Int& n) {
    DualWord w;
    if (sgn(n) == 0) return w;
    // Greedy expansion against the negative base: with N_{k+1} = ceil(-N_k/alpha),
    // digit x_k = N_k - nut(N_{k+1}); stop when 0 < N_k <= d and emit N_k.
    Int cur = n;
    const long d = ctx.d();
    while (!(sgn(cur) > 0 && cur <= d)) {
        // ceil(-cur/alpha) = ceil(cur*(d - alpha)) = cur*d - floor(cur*alpha)
        // (cur*alpha is irrational here since cur != 0).
        Int next = cur * d - (ctx.alpha() * cur).floor();
        Int digit = cur - nut_value(ctx, next);
        assert(digit >= 0 && digit <= d);
        w.digits.push_back(static_cast<int>(to_long(digit)));
        cur = next;
        assert(sgn(cur) != 0);
    }
    w.digits.push_back(static_cast<int>(to_long(cur)));
    assert(valid_dual(ctx, w.digits));
    assert(raw_dual_decode(ctx, w.digits) == n);
    return w;
}

Int out_value(const Context& ctx, const Int& n) {
    if (sgn(n) < 0) throw std::domain_error("out: negative argument");
    return (ctx.alpha() * n + ctx.inv_alpha()).floor();
}

Int out_via_word(const Context& ctx, const Int& n) {
    OstrowskiWord w = encode(ctx, n);
    Int acc = 0;
    for (size_t j = 0; j < w.digits.size(); ++j)
        if (w.digits[j] != 0) acc += Int(w.digits[j]) * ctx.basis(static_cast<long>(j + 2));
    return acc;
}

Int nut_value(const Context& ctx, const Int& n) {
    if (sgn(n) == 0) return 0;
    return -(ctx.alpha() * n).floor();  // ceil(-n*alpha), n*alpha irrational
}

Int nut_via_word(const Context& ctx, const Int& n) {
    DualWord w = dual_encode(ctx, n);
    Int acc = 0;
    for (size_t j = 0; j < w.digits.size(); ++j)
        if (w.digits[j] != 0)
            acc += Int(w.digits[j]) * ctx.denominator(-static_cast<long>(j + 2));
    return acc;
}

std::vector<OstrowskiWord> enumerate_trimmed(const Context& ctx, long count) {
    std::vector<OstrowskiWord> out;
    if (count <= 0) return out;
    out.reserve(static_cast<size_t>(count));
    for (Int n = 1; static_cast<long>(out.size()) < count; ++n) {
        OstrowskiWord w = encode(ctx, n);
        if (classify_word(ctx, w.digits) == WordClass::trimmed) out.push_back(std::move(w));
    }
    return out;
}

std::string to_msd_string(const Context& ctx, const std::vector<int>& digits) {
    if (digits.empty()) return "0";
    std::ostringstream os;
    if (ctx.d() <= 9) {
        for (auto it = digits.rbegin(); it != digits.rend(); ++it) os << *it;
    } else {
        for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
            if (it != digits.rbegin()) os << ',';
            os << *it;
        }
    }
    return os.str();
}

std::string label_string(const Context& ctx, const std::vector<int>& digits) {
    if (digits.empty()) return "0";
    std::ostringstream os;
    if (ctx.d() <= 9) {
        for (int dig : digits) os << dig;
    } else {
        for (size_t j = 0; j < digits.size(); ++j) {
            if (j) os << ',';
            os << digits[j];
        }
    }
    return os.str();
}

std::vector<int> parse_msd(const Context& ctx, const std::string& text) {
    std::vector<int> digits;
    if (text == "0" || text.empty()) return digits;
    if (ctx.d() <= 9 && text.find(',') == std::string::npos) {
        for (char c : text) {
            if (c < '0' || c > '9') throw std::invalid_argument("parse_msd: bad digit");
            digits.push_back(c - '0');
        }
    } else {
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("parse_msd: bad digit");
            digits.push_back(v);
        }
    }
    std::reverse(digits.begin(), digits.end());
    // Drop msd-side padding zeros so round trips land on canonical words.
    while (!digits.empty() && digits.back() == 0) digits.pop_back();
    return digits;
}

}  // namespace ostro
