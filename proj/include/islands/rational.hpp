#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace islands {

using Int = mpz_class;
using Rat = mpq_class;  // canonical: reduced, denominator > 0

struct Error : std::runtime_error {
    enum class Code { invalid_input, size_limit, degeneracy, validation, no_candidate };
    Code code;
    Error(Code c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

inline Error invalid_input_error(const std::string& msg) { return Error(Error::Code::invalid_input, msg); }
inline Error size_limit_error(const std::string& msg) { return Error(Error::Code::size_limit, msg); }
inline Error degeneracy_error(const std::string& msg) { return Error(Error::Code::degeneracy, msg); }
inline Error validation_error(const std::string& msg) { return Error(Error::Code::validation, msg); }

inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "num", "num/den" and plain decimals ("-2.75"); always exact.
inline Rat parse_rat(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw invalid_input_error("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rat q;
        if (q.set_str(s, 10) != 0) throw invalid_input_error("malformed rational: " + s);
        if (sgn(q.get_den()) == 0) throw invalid_input_error("zero denominator: " + s);
        q.canonicalize();
        return q;
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        Rat q;
        if (q.set_str(s, 10) != 0) throw invalid_input_error("malformed rational: " + s);
        q.canonicalize();
        return q;
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (frac_len == 0 || digits.empty()) throw invalid_input_error("malformed decimal: " + s);
    for (size_t i = 0; i < digits.size(); ++i) {
        if (i == 0 && (digits[i] == '-' || digits[i] == '+')) continue;
        if (!std::isdigit(static_cast<unsigned char>(digits[i]))) throw invalid_input_error("malformed decimal: " + s);
    }
    Int num(digits, 10);
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Canonical text form, always "num/den".
inline std::string format_rat(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Fixed-point decimal with `digits` fractional places, rounding toward zero.
// Used only at rendering boundaries.
inline std::string decimal_string(const Rat& q, int digits) {
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Int scaled = (q.get_num() * scale) / q.get_den();  // truncates toward zero
    bool neg = sgn(scaled) < 0;
    Int mag = abs(scaled);
    Int whole = mag / scale;
    Int frac = mag % scale;
    std::string fs = frac.get_str();
    fs.insert(fs.begin(), digits - fs.size(), '0');
    std::string out = whole.get_str() + "." + fs;
    if (neg && (sgn(whole) != 0 || sgn(frac) != 0)) out.insert(out.begin(), '-');
    return out;
}

// Bounds sqrt(q) for q >= 0 within 2^-precision_bits: returns (lo, hi), lo <= sqrt(q) <= hi.
inline std::pair<Rat, Rat> sqrt_bounds(const Rat& q, unsigned precision_bits) {
    if (sgn(q) < 0) throw invalid_input_error("sqrt of negative rational");
    if (sgn(q) == 0) return {Rat(0), Rat(0)};
    Int two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, precision_bits);
    Int scaled_num = q.get_num() * two_pow * two_pow;
    Int root;
    mpz_fdiv_q(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den().get_mpz_t());
    mpz_sqrt(root.get_mpz_t(), scaled_num.get_mpz_t());  // floor sqrt
    Rat lo(root, two_pow);
    Rat hi(root + 1, two_pow);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

// Largest grid point <= q on the 2^-bits grid.
inline Rat floor_to_grid(const Rat& q, unsigned bits) {
    Int two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, bits);
    Int n = q.get_num() * two_pow;
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), n.get_mpz_t(), q.get_den().get_mpz_t());
    Rat r(f, two_pow);
    r.canonicalize();
    return r;
}

inline Rat ceil_to_grid(const Rat& q, unsigned bits) {
    Int two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, bits);
    Int n = q.get_num() * two_pow;
    Int f;
    mpz_cdiv_q(f.get_mpz_t(), n.get_mpz_t(), q.get_den().get_mpz_t());
    Rat r(f, two_pow);
    r.canonicalize();
    return r;
}

inline Rat pow2(long e) {
    Rat r;
    if (e >= 0) {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
        r = Rat(p);
    } else {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, -e);
        r = Rat(1, p);
        r.canonicalize();
    }
    return r;
}

}  // namespace islands
