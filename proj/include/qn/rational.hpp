#pragma once

#include <gmpxx.h>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qn {

using Rat = mpq_class;
using Int = mpz_class;

/// Complex number with exact rational real and imaginary parts.
struct RatC {
    Rat re{0};
    Rat im{0};

    RatC() = default;
    RatC(Rat r) : re(std::move(r)) {}
    RatC(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    RatC(long r) : re(r) {}
    RatC(long num, long den) : re(Rat(num, den)) { re.canonicalize(); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    RatC conj() const { return {re, -im}; }

    /// |z|^2, exact.
    Rat abs2() const { return re * re + im * im; }

    std::complex<double> to_cd() const { return {re.get_d(), im.get_d()}; }

    RatC operator-() const { return {-re, -im}; }
    RatC& operator+=(const RatC& o) { re += o.re; im += o.im; return *this; }
    RatC& operator-=(const RatC& o) { re -= o.re; im -= o.im; return *this; }

    friend RatC operator+(const RatC& a, const RatC& b) { return {a.re + b.re, a.im + b.im}; }
    friend RatC operator-(const RatC& a, const RatC& b) { return {a.re - b.re, a.im - b.im}; }
    friend RatC operator*(const RatC& a, const RatC& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend RatC operator/(const RatC& a, const RatC& b) {
        Rat d = b.abs2();
        if (sgn(d) == 0) throw std::domain_error("RatC: division by zero");
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend bool operator==(const RatC& a, const RatC& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const RatC& a, const RatC& b) { return !(a == b); }
    friend bool operator<(const RatC& a, const RatC& b) {
        int c = cmp(a.re, b.re);
        if (c != 0) return c < 0;
        return cmp(a.im, b.im) < 0;
    }
};

inline std::string rat_str(const Rat& r) { return r.get_str(); }

/// Render as "a/b", "a/b+c/di" or "c/di".
inline std::string ratc_str(const RatC& z) {
    if (z.is_real()) return rat_str(z.re);
    std::string s;
    if (sgn(z.re) != 0) s += rat_str(z.re);
    if (sgn(z.im) > 0 && !s.empty()) s += "+";
    s += rat_str(z.im) + "i";
    return s;
}

/// Parse "p/q", "p", or a plain integer string. Throws on malformed input.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    std::string t = s[0] == '+' ? s.substr(1) : s;  // mpq set_str rejects '+'
    if (t.empty()) throw std::invalid_argument("bad rational: " + s);
    Rat r;
    if (r.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

/// Parse "a/b", "a/b+c/di", "-1/2i", etc.
inline RatC parse_ratc(std::string s) {
    if (s.empty()) throw std::invalid_argument("empty coefficient");
    if (s.back() != 'i') return RatC(parse_rat(s));
    s.pop_back();
    // split at last +/- that is not the leading sign
    for (size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
            Rat re = parse_rat(s.substr(0, k));
            std::string ims = s.substr(k);
            if (ims == "+") ims = "1"; else if (ims == "-") ims = "-1";
            return {re, parse_rat(ims)};
        }
    }
    if (s.empty() || s == "+") return {Rat(0), Rat(1)};
    if (s == "-") return {Rat(0), Rat(-1)};
    return {Rat(0), parse_rat(s)};
}

/// log of a positive rational, safe against overflow of get_d().
inline double log_rat(const Rat& r) {
    if (sgn(r) <= 0) throw std::domain_error("log_rat: nonpositive");
    long en, ed;
    double mn = mpz_get_d_2exp(&en, r.get_num().get_mpz_t());
    double md = mpz_get_d_2exp(&ed, r.get_den().get_mpz_t());
    return std::log(mn) - std::log(md) + (en - ed) * std::log(2.0);
}

}  // namespace qn
