#pragma once

#include <set>
#include <vector>

#include "nbly/figures.hpp"
#include "nbly/linkage.hpp"
#include "nbly/lp.hpp"
#include "nbly/polytope.hpp"

namespace nbly {

// Sewing frame on a universal edge [y1,y2]: the fan y_3..y_a lists the
// quotient polygon around the edge, and the targets are the facets
// [y1,y2,y_t,y_{t+1}] for consecutive fan members -- a path, one polygon
// edge short of the full cycle, so the new vertex is beyond exactly m-3
// facets as an extension of a neighbourly m-vertex polytope requires.
struct SewingFrame {
    Edge edge;
    std::vector<VertexId> fan;
    std::set<Facet> target_facets;
};

struct ExtensionResult {
    Point4 new_vertex;
    Polytope result;
    std::set<Edge> gained_universal;
};

// rotation selects which polygon edge the fan path omits (0 = walk as the
// polygon enumerates, k = start k steps further around).
inline SewingFrame frame_for_edge(const Polytope& q, const Edge& e, int rotation = 0) {
    QuotientPolygon poly = quotient_polygon(q, e); // throws NotUniversalEdge
    const int len = static_cast<int>(poly.cyclic_order.size());
    SewingFrame frame;
    frame.edge = e;
    for (int i = 0; i < len; ++i)
        frame.fan.push_back(poly.cyclic_order[((i + rotation) % len + len) % len]);
    for (int i = 0; i + 1 < len; ++i)
        frame.target_facets.insert(sorted(Facet{e[0], e[1], frame.fan[i], frame.fan[i + 1]}));
    return frame;
}

namespace detail {

inline Rational max_abs_coord(const Polytope& q) {
    Rational m = 0;
    for (const auto& p : q.points())
        for (int j = 0; j < 4; ++j)
            if (abs(p[j]) > m) m = abs(p[j]);
    return m;
}

// Snap an exact LP solution to the coarsest dyadic point that still realizes
// the same beyond set; keeps coordinate growth down across repeated sews.
inline Point4 simplify_beyond_point(const Polytope& q, const Point4& x,
                                    const std::set<Facet>& targets) {
    for (int k = 0; k <= 64; ++k) {
        Integer scale = Integer(1) << k;
        Point4 cand;
        for (int j = 0; j < 4; ++j) {
            Integer num = numerator(x[j]) * scale;
            Integer den = denominator(x[j]);
            // round to nearest
            Integer r;
            if (num >= 0)
                r = (num + den / 2) / den;
            else
                r = -Integer((-num + den / 2) / den);
            cand[j] = Rational(r, scale);
        }
        try {
            if (q.beyond_set(cand) == targets) return cand;
        } catch (const DegeneratePosition&) {
        }
    }
    return x;
}

} // namespace detail

// An exact rational point whose beyond set over Q is exactly `targets`,
// found by maximizing the minimum facet slack inside a bounding box.
inline Point4 point_beyond(const Polytope& q, const std::set<Facet>& targets) {
    if (targets.empty() || targets.size() >= q.facets().size())
        throw Infeasible("targets must be a nonempty proper subset of the facets");
    const auto& facets = q.facets();
    const std::size_t nf = facets.size();
    Rational big = 1000 * (1 + detail::max_abs_coord(q));
    // variables: x+[4] x-[4] t | slack per facet | slack per box side
    const std::size_t nv = 9 + nf + 8;
    const std::size_t rows = nf + 8;
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(nv, 0));
    std::vector<Rational> b(rows, 0);
    for (std::size_t i = 0; i < nf; ++i) {
        const auto& f = facets[i];
        Rational dir = targets.count(f.verts) ? -1 : 1; // beyond targets, beneath the rest
        Rational orient_factor = Rational(to_int(f.inner)) * dir;
        for (int j = 0; j < 4; ++j) {
            a[i][j] = orient_factor * f.plane.normal[j];
            a[i][4 + j] = -orient_factor * f.plane.normal[j];
        }
        a[i][8] = -1;
        a[i][9 + i] = -1;
        b[i] = orient_factor * f.plane.offset;
    }
    for (int j = 0; j < 4; ++j) {
        // x_j <= big and -x_j <= big
        a[nf + 2 * j][j] = 1;
        a[nf + 2 * j][4 + j] = -1;
        a[nf + 2 * j][9 + nf + 2 * j] = 1;
        b[nf + 2 * j] = big;
        a[nf + 2 * j + 1][j] = -1;
        a[nf + 2 * j + 1][4 + j] = 1;
        a[nf + 2 * j + 1][9 + nf + 2 * j + 1] = 1;
        b[nf + 2 * j + 1] = big;
    }
    std::vector<Rational> cost(nv, 0);
    cost[8] = -1; // maximize t
    auto sol = solve_standard_lp(std::move(a), std::move(b), cost);
    if (sol.status != LpSolution::Status::optimal || sol.x[8] <= 0)
        throw Infeasible("no point realizes exactly this beyond set");
    Point4 x;
    for (int j = 0; j < 4; ++j) x[j] = sol.x[j] - sol.x[4 + j];
    x = detail::simplify_beyond_point(q, x, targets);
    if (q.beyond_set(x) != targets)
        throw Infeasible("solver point failed the beyond-set check");
    return x;
}

// Sewing of a new vertex onto the universal edge E of a neighbourly Q.
inline ExtensionResult sew(const Polytope& q, const Edge& e, int rotation = 0) {
    SewingFrame frame = frame_for_edge(q, e, rotation);
    Point4 v = point_beyond(q, frame.target_facets);
    std::vector<Point4> pts = q.points();
    pts.push_back(v);
    ExtensionResult out{v, Polytope::from_vertices(std::move(pts)), {}};
    const Polytope& r = out.result;
    if (!r.is_neighbourly())
        throw PostconditionFailed("sew result is not neighbourly");
    // F(Q) \ F(R) must be exactly the targets
    std::set<Facet> lost;
    for (const auto& f : q.facets())
        if (!r.has_facet(f.verts)) lost.insert(f.verts);
    if (lost != frame.target_facets)
        throw PostconditionFailed("lost facets differ from the sewing targets");
    std::set<Edge> uq = universal_edges_def(q);
    for (const Edge& ue : universal_edges_def(r))
        if (!uq.count(ue)) out.gained_universal.insert(ue);
    VertexId vid = r.size() - 1;
    if (!out.gained_universal.count(make_edge(vid, e[0])) ||
        !out.gained_universal.count(make_edge(vid, e[1])))
        throw PostconditionFailed("sewing did not make [v,y1] and [v,y2] universal");
    return out;
}

namespace detail {

// Two independent linear functionals vanishing on span{u1, u2}.
inline std::array<Point4, 2> plane_conormals(const Point4& u1, const Point4& u2) {
    // Row reduce [u1; u2]; free columns give the null space of the span map.
    std::array<std::array<Rational, 4>, 2> m{{{u1[0], u1[1], u1[2], u1[3]},
                                              {u2[0], u2[1], u2[2], u2[3]}}};
    std::array<int, 2> lead{-1, -1};
    int row = 0;
    for (int col = 0; col < 4 && row < 2; ++col) {
        int pivot = -1;
        for (int i = row; i < 2; ++i)
            if (m[i][col] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(m[row], m[pivot]);
        Rational p = m[row][col];
        for (auto& v : m[row]) v /= p;
        for (int i = 0; i < 2; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (int j = 0; j < 4; ++j) m[i][j] -= f * m[row][j];
        }
        lead[row] = col;
        ++row;
    }
    if (row < 2) throw DegenerateSpan("triangle vertices are affinely dependent");
    std::array<Point4, 2> out;
    int k = 0;
    for (int col = 0; col < 4; ++col) {
        if (col == lead[0] || col == lead[1]) continue;
        Point4 n;
        n[col] = 1;
        n[lead[0]] = -m[0][col];
        n[lead[1]] = -m[1][col];
        out[k++] = n;
    }
    return out;
}

} // namespace detail

// Criterion 3.4: every hyperplane through <a,b,c> strictly separates two of
// e,f,g iff, in the quotient by the plane, the origin is strictly inside the
// triangle of the three images.  When true, neither triple is a face of P.
inline bool linking_triangles(const Polytope& p, const Triangle& abc, const Triangle& efg) {
    const Point4& a = p.point(abc[0]);
    auto conorm = detail::plane_conormals(p.point(abc[1]) - a, p.point(abc[2]) - a);
    auto image = [&](VertexId v) {
        Point4 d = p.point(v) - a;
        return std::array<Rational, 2>{dot(conorm[0].c, d), dot(conorm[1].c, d)};
    };
    std::array<std::array<Rational, 2>, 3> img{image(efg[0]), image(efg[1]), image(efg[2])};
    for (const auto& q : img)
        if (q[0] == 0 && q[1] == 0)
            throw DegenerateQuotient("vertex image coincides with the quotient origin");
    auto cross = [](const std::array<Rational, 2>& u, const std::array<Rational, 2>& v) {
        return sign_of(u[0] * v[1] - u[1] * v[0]);
    };
    Sign s01 = cross(img[0], img[1]);
    Sign s12 = cross(img[1], img[2]);
    Sign s20 = cross(img[2], img[0]);
    bool inside = s01 != Sign::zero && s01 == s12 && s12 == s20;
    if (inside) {
        if (p.is_face({abc[0], abc[1], abc[2]}) || p.is_face({efg[0], efg[1], efg[2]}))
            throw PostconditionFailed("linking triangles must not be faces");
    }
    return inside;
}

} // namespace nbly
