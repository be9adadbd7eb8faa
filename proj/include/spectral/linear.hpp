#pragma once

#include <array>
#include <compare>

#include "spectral/numbers.hpp"

namespace spectral {

struct ivec2 {
    Int x{0}, y{0};

    bool operator==(const ivec2&) const = default;
    bool operator<(const ivec2& o) const { return x < o.x || (x == o.x && y < o.y); }

    ivec2 operator+(const ivec2& o) const { return {x + o.x, y + o.y}; }
    ivec2 operator-(const ivec2& o) const { return {x - o.x, y - o.y}; }
    ivec2 operator-() const { return {-x, -y}; }
    ivec2 operator*(const Int& k) const { return {x * k, y * k}; }
};

struct qvec2 {
    Rat x{0}, y{0};

    bool operator==(const qvec2&) const = default;
    bool operator<(const qvec2& o) const { return x < o.x || (x == o.x && y < o.y); }

    qvec2 operator+(const qvec2& o) const { return {x + o.x, y + o.y}; }
    qvec2 operator-(const qvec2& o) const { return {x - o.x, y - o.y}; }
    qvec2 operator-() const { return {-x, -y}; }
    qvec2 operator*(const Rat& k) const { return {x * k, y * k}; }
};

inline qvec2 to_qvec(const ivec2& v) { return {Rat(v.x), Rat(v.y)}; }

inline bool is_integer(const qvec2& v) { return is_integer(v.x) && is_integer(v.y); }

inline ivec2 to_ivec(const qvec2& v) {
    if (!is_integer(v)) fail(errc::non_integer_frequency, "expected an integer vector");
    return {numerator(v.x), numerator(v.y)};
}

inline Rat inf_norm(const qvec2& v) {
    Rat ax = abs(v.x), ay = abs(v.y);
    return ax > ay ? ax : ay;
}

// Row-major [[a,b],[c,d]].
struct imat2 {
    Int a{0}, b{0}, c{0}, d{0};

    bool operator==(const imat2&) const = default;

    static imat2 identity() { return {1, 0, 0, 1}; }
    static imat2 diagonal(const Int& s, const Int& t) { return {s, 0, 0, t}; }

    Int det() const { return a * d - b * c; }
    Int trace() const { return a + d; }
    imat2 transpose() const { return {a, c, b, d}; }
    imat2 adjugate() const { return {d, -b, -c, a}; }

    imat2 operator*(const imat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    ivec2 operator*(const ivec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    qvec2 operator*(const qvec2& v) const {
        return {Rat(a) * v.x + Rat(b) * v.y, Rat(c) * v.x + Rat(d) * v.y};
    }
};

struct qmat2 {
    Rat a{0}, b{0}, c{0}, d{0};

    bool operator==(const qmat2&) const = default;

    static qmat2 identity() { return {1, 0, 0, 1}; }
    static qmat2 diagonal(const Rat& s, const Rat& t) { return {s, 0, 0, t}; }

    Rat det() const { return a * d - b * c; }
    Rat trace() const { return a + d; }
    qmat2 transpose() const { return {a, c, b, d}; }

    qmat2 operator*(const qmat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    qvec2 operator*(const qvec2& v) const {
        return {a * v.x + b * v.y, c * v.x + d * v.y};
    }

    qmat2 inverse() const {
        Rat dt = det();
        if (dt == 0) fail(errc::singular_matrix, "inverse of a singular matrix");
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    bool is_integer() const {
        return spectral::is_integer(a) && spectral::is_integer(b) && spectral::is_integer(c) &&
               spectral::is_integer(d);
    }

    imat2 to_imat() const {
        if (!is_integer()) fail(errc::invalid_input, "matrix has non-integer entries");
        return {numerator(a), numerator(b), numerator(c), numerator(d)};
    }
};

inline qmat2 to_qmat(const imat2& m) { return {Rat(m.a), Rat(m.b), Rat(m.c), Rat(m.d)}; }

inline qmat2 inverse(const imat2& m) { return to_qmat(m).inverse(); }

// Operator infinity norm (max absolute row sum); submultiplicative, and
// |Mv|_inf <= |M|_inf |v|_inf.
inline Rat inf_norm(const qmat2& m) {
    Rat r0 = abs(m.a) + abs(m.b);
    Rat r1 = abs(m.c) + abs(m.d);
    return r0 > r1 ? r0 : r1;
}

/// Both eigenvalues strictly outside the closed unit disk.
///
/// For the characteristic polynomial x^2 - tr x + det this is the integer
/// Schur-Cohn condition on the reciprocal polynomial: |det| > 1 and
/// |tr| < |1 + det|.
inline bool is_expansive(const imat2& m) {
    Int dt = m.det(), tr = m.trace();
    return iabs(dt) > 1 && iabs(tr) < iabs(1 + dt);
}

} // namespace spectral
