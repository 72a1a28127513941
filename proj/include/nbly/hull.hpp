#pragma once

#include <vector>

#include "nbly/geometry.hpp"
#include "nbly/lp.hpp"

namespace nbly {

// Exact LP feasibility: is q a convex combination of pts?
inline bool in_convex_hull(const Point4& q, const std::vector<Point4>& pts) {
    const std::size_t n = pts.size();
    std::vector<std::vector<Rational>> a(5, std::vector<Rational>(n));
    std::vector<Rational> b(5);
    for (int k = 0; k < 4; ++k) {
        for (std::size_t i = 0; i < n; ++i) a[k][i] = pts[i][k];
        b[k] = q[k];
    }
    for (std::size_t i = 0; i < n; ++i) a[4][i] = 1;
    b[4] = 1;
    auto sol = solve_standard_lp(std::move(a), std::move(b), std::vector<Rational>(n, 0));
    return sol.status == LpSolution::Status::optimal;
}

// A hyperplane strictly separating q from conv(pts), found by maximizing the
// minimum slack over normals with |n|_1 <= 1.  Requires q outside the hull.
inline Hyperplane farkas_separator(const Point4& q, const std::vector<Point4>& pts) {
    const std::size_t n = pts.size();
    // variables: n+[4] n-[4] b+ b- t | slack s_0..s_n | u   (all >= 0)
    const std::size_t nv = 11 + (n + 1) + 1;
    const std::size_t rows = n + 2;
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(nv, 0));
    std::vector<Rational> b(rows, 0);
    auto fill = [&](std::size_t row, const Point4& p, Rational coeff) {
        for (int j = 0; j < 4; ++j) {
            a[row][j] = coeff * p[j];
            a[row][4 + j] = -coeff * p[j];
        }
    };
    // n.q - b - t - s_0 = 0
    fill(0, q, 1);
    a[0][8] = -1;
    a[0][9] = 1;
    a[0][10] = -1;
    a[0][11] = -1;
    // b - n.p_i - t - s_i = 0
    for (std::size_t i = 0; i < n; ++i) {
        fill(1 + i, pts[i], -1);
        a[1 + i][8] = 1;
        a[1 + i][9] = -1;
        a[1 + i][10] = -1;
        a[1 + i][11 + 1 + i] = -1;
    }
    // sum |n_j| + u = 1
    for (int j = 0; j < 8; ++j) a[rows - 1][j] = 1;
    a[rows - 1][nv - 1] = 1;
    b[rows - 1] = 1;

    std::vector<Rational> cost(nv, 0);
    cost[10] = -1; // maximize t
    auto sol = solve_standard_lp(std::move(a), std::move(b), cost);
    if (sol.status != LpSolution::Status::optimal || sol.x[10] <= 0)
        throw NotSeparable("point lies in the convex hull");
    Hyperplane h;
    for (int j = 0; j < 4; ++j) h.normal[j] = sol.x[j] - sol.x[4 + j];
    h.offset = sol.x[8] - sol.x[9];
    h.canonicalize();
    if (!strictly_separates(h, {q}, pts))
        throw NotSeparable("separator failed validation");
    return h;
}

} // namespace nbly
