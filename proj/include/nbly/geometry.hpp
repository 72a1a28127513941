#pragma once

#include <array>
#include <vector>

#include "nbly/rational.hpp"

namespace nbly {

struct Point4 {
    std::array<Rational, 4> c{};

    Point4() = default;
    Point4(Rational x0, Rational x1, Rational x2, Rational x3)
        : c{std::move(x0), std::move(x1), std::move(x2), std::move(x3)} {}

    const Rational& operator[](std::size_t i) const { return c[i]; }
    Rational& operator[](std::size_t i) { return c[i]; }

    friend bool operator==(const Point4&, const Point4&) = default;

    friend Point4 operator-(const Point4& a, const Point4& b) {
        return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
    }
    friend Point4 operator+(const Point4& a, const Point4& b) {
        return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
    }
    friend Point4 operator*(const Rational& s, const Point4& a) {
        return {s * a[0], s * a[1], s * a[2], s * a[3]};
    }
};

inline Rational dot(const std::array<Rational, 4>& n, const Point4& p) {
    return n[0] * p[0] + n[1] * p[1] + n[2] * p[2] + n[3] * p[3];
}

// Hyperplane {x : normal.x = offset} in canonical form: normal entries are
// coprime integers and the first nonzero entry is positive, so equality of
// hyperplanes is plain field equality.
struct Hyperplane {
    std::array<Rational, 4> normal{};
    Rational offset{};

    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
    friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;

    void canonicalize() {
        Integer lcm_den = 1;
        for (const auto& v : normal) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(v));
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(offset));
        Integer g = 0;
        for (const auto& v : normal) g = boost::multiprecision::gcd(g, numerator(v) * (lcm_den / denominator(v)));
        if (g == 0) throw DegenerateSpan("hyperplane with zero normal");
        Rational scale(lcm_den, g);
        for (auto& v : normal) v *= scale;
        offset *= scale;
        for (const auto& v : normal) {
            if (v == 0) continue;
            if (v < 0) {
                for (auto& w : normal) w = -w;
                offset = -offset;
            }
            break;
        }
    }
};

inline Rational det3(const Rational& a, const Rational& b, const Rational& c,
                     const Rational& d, const Rational& e, const Rational& f,
                     const Rational& g, const Rational& h, const Rational& i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

inline Rational det4(const std::array<Point4, 4>& r) {
    Rational d = 0;
    for (int j = 0; j < 4; ++j) {
        std::array<Rational, 9> m;
        int k = 0;
        for (int row = 1; row < 4; ++row)
            for (int col = 0; col < 4; ++col)
                if (col != j) m[k++] = r[row][col];
        Rational minor = det3(m[0], m[1], m[2], m[3], m[4], m[5], m[6], m[7], m[8]);
        if (j % 2 == 0)
            d += r[0][j] * minor;
        else
            d -= r[0][j] * minor;
    }
    return d;
}

// Sign of the 5x5 determinant with rows (p_i, 1) and (q, 1); zero iff the
// five points are affinely dependent.
inline Sign orient(const Point4& p0, const Point4& p1, const Point4& p2,
                   const Point4& p3, const Point4& q) {
    return sign_of(det4({p0 - q, p1 - q, p2 - q, p3 - q}));
}

// The hyperplane spanned by four affinely independent points.
inline Hyperplane hyperplane_through(const Point4& a, const Point4& b,
                                     const Point4& c, const Point4& d) {
    const Point4 u = b - a, v = c - a, w = d - a;
    Hyperplane h;
    // normal = generalized cross product of u, v, w (cofactors of the 3x4 matrix)
    for (int j = 0; j < 4; ++j) {
        std::array<Rational, 9> m;
        int k = 0;
        for (int col = 0; col < 4; ++col) {
            if (col == j) continue;
            m[k] = u[col];
            m[3 + k] = v[col];
            m[6 + k] = w[col];
            ++k;
        }
        Rational minor = det3(m[0], m[1], m[2], m[3], m[4], m[5], m[6], m[7], m[8]);
        h.normal[j] = (j % 2 == 0) ? minor : -minor;
    }
    bool all_zero = true;
    for (const auto& x : h.normal)
        if (x != 0) all_zero = false;
    if (all_zero) throw DegenerateSpan("four points are affinely dependent");
    h.offset = dot(h.normal, a);
    h.canonicalize();
    return h;
}

inline Sign side_of(const Hyperplane& h, const Point4& q) {
    return sign_of(dot(h.normal, q) - h.offset);
}

// True iff X lies strictly on one open side of H and Y strictly on the other.
inline bool strictly_separates(const Hyperplane& h, const std::vector<Point4>& xs,
                               const std::vector<Point4>& ys) {
    if (xs.empty() || ys.empty()) return false;
    Sign sx = side_of(h, xs.front());
    if (sx == Sign::zero) return false;
    for (const auto& p : xs)
        if (side_of(h, p) != sx) return false;
    Sign sy = opposite(sx);
    for (const auto& p : ys)
        if (side_of(h, p) != sy) return false;
    return true;
}

} // namespace nbly
