#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "spectral/error.hpp"

namespace spectral {

// Exact arbitrary-precision scalars. Rat is kept in lowest terms with a
// strictly positive denominator by the backend.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int iabs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline bool is_even(const Int& a) { return (a & 1) == 0; }
inline bool is_odd(const Int& a) { return (a & 1) != 0; }

inline Int pow2(int e) { return Int(1) << e; }

// Rational from any integer pair, den != 0.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) fail(errc::invalid_input, "rational with zero denominator");
    if (den < 0) return Rat(-num, -den);
    return Rat(num, den);
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Floor division remainder, always in [0, |m|).
inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += iabs(m);
    return r;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int rat_floor(const Rat& r) { return floor_div(numerator(r), denominator(r)); }

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }
inline double to_double(const Int& i) { return i.convert_to<double>(); }

/// Nonnegative gcd of the four digit-set generators.
inline Int gcd4(const Int& a1, const Int& a2, const Int& b1, const Int& b2) {
    if (a1 == 0 && a2 == 0 && b1 == 0 && b2 == 0)
        fail(errc::invalid_digit_set, "gcd of four zeros");
    return gcd(gcd(a1, a2), gcd(b1, b2));
}

/// Writes n = 2^eta * gamma with gamma odd; requires n != 0.
inline std::pair<int, Int> split_pow2(Int n) {
    if (n == 0) fail(errc::invalid_input, "2-adic valuation of zero");
    int eta = 0;
    while (is_even(n)) {
        n >>= 1;
        ++eta;
    }
    return {eta, n};
}

struct bezout_result {
    Int g; // gcd(t1, t2) > 0
    Int p;
    Int q; // p*t1 + q*t2 == g
};

// Extended Euclid with a canonical output: among all solutions
// (p + k*t2/g, q - k*t1/g) the one with minimal |q| is returned, ties
// broken toward q >= 0.  For t1 == 0 the same rule is applied to p.
inline bezout_result bezout(const Int& t1, const Int& t2) {
    if (t1 == 0 && t2 == 0) fail(errc::invalid_input, "bezout of (0, 0)");

    Int r0 = t1, r1 = t2;
    Int p0 = 1, p1 = 0;
    Int q0 = 0, q1 = 1;
    while (r1 != 0) {
        Int k = r0 / r1;
        r0 -= k * r1;
        std::swap(r0, r1);
        p0 -= k * p1;
        std::swap(p0, p1);
        q0 -= k * q1;
        std::swap(q0, q1);
    }
    if (r0 < 0) {
        r0 = -r0;
        p0 = -p0;
        q0 = -q0;
    }

    if (t1 != 0) {
        // q is determined mod step; pick the representative closest to zero.
        // On the tie 2q == step the nonnegative one stays.
        Int step = iabs(t1 / r0);
        Int q = mod_floor(q0, step);
        if (2 * q > step) q -= step;
        Int p = (r0 - q * t2) / t1;
        return {r0, p, q};
    }
    // t1 == 0: q = sign(t2) forced, normalize p to 0.
    return {r0, 0, t2 > 0 ? Int(1) : Int(-1)};
}

// "num/den" in lowest terms, bare integer when den == 1.
inline std::string format_rat(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::exception&) {
        fail(errc::invalid_input, "malformed rational '" + text + "'");
    }
}

} // namespace spectral
