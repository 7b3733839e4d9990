#pragma once

#include <cmath>
#include <iosfwd>

namespace coh1 {

/// A quaternion a + bi + cj + dk with double components.
///
/// Hamilton conventions: i*j = k, j*k = i, k*i = j, i*i = j*j = k*k = -1.
struct Quaternion {
    double a = 0.0;  ///< real part
    double b = 0.0;  ///< i part
    double c = 0.0;  ///< j part
    double d = 0.0;  ///< k part

    constexpr Quaternion() = default;
    constexpr Quaternion(double a_, double b_ = 0.0, double c_ = 0.0, double d_ = 0.0)
        : a(a_), b(b_), c(c_), d(d_) {}

    static constexpr Quaternion i() { return {0, 1, 0, 0}; }
    static constexpr Quaternion j() { return {0, 0, 1, 0}; }
    static constexpr Quaternion k() { return {0, 0, 0, 1}; }

    constexpr Quaternion conj() const { return {a, -b, -c, -d}; }
    constexpr double norm2() const { return a * a + b * b + c * c + d * d; }
    double norm() const { return std::sqrt(norm2()); }

    constexpr bool is_real() const { return b == 0.0 && c == 0.0 && d == 0.0; }
    constexpr bool is_complex() const { return c == 0.0 && d == 0.0; }

    constexpr Quaternion operator-() const { return {-a, -b, -c, -d}; }

    constexpr Quaternion& operator+=(const Quaternion& q) {
        a += q.a; b += q.b; c += q.c; d += q.d;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& q) {
        a -= q.a; b -= q.b; c -= q.c; d -= q.d;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        a *= s; b *= s; c *= s; d *= s;
        return *this;
    }

    friend constexpr Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
    friend constexpr Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
    friend constexpr Quaternion operator*(Quaternion p, double s) { return p *= s; }
    friend constexpr Quaternion operator*(double s, Quaternion p) { return p *= s; }

    // Hamilton product.
    friend constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
        return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
                p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
                p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
                p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
    }

    friend constexpr bool operator==(const Quaternion& p, const Quaternion& q) {
        return p.a == q.a && p.b == q.b && p.c == q.c && p.d == q.d;
    }
};

inline double abs_diff(const Quaternion& p, const Quaternion& q) {
    return (p - q).norm();
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace coh1
