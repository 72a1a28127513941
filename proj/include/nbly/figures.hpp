#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "nbly/hull.hpp"
#include "nbly/polytope.hpp"

namespace nbly {

// Combinatorial vertex figure P/x: the facets of P through x, with x removed.
struct Stacked3 {
    std::vector<VertexId> vertex_ids;
    std::set<Triangle> triangles;
    VertexId base_vertex = -1;

    std::set<Edge> edges() const {
        std::set<Edge> out;
        for (const auto& t : triangles) {
            out.insert(make_edge(t[0], t[1]));
            out.insert(make_edge(t[0], t[2]));
            out.insert(make_edge(t[1], t[2]));
        }
        return out;
    }
};

struct CutDecomposition {
    std::set<Triangle> cuts;
    std::set<Facet> components;
};

struct QuotientPolygon {
    Edge edge;
    std::vector<VertexId> cyclic_order;
};

inline Stacked3 vertex_figure(const Polytope& p, VertexId x) {
    Stacked3 s;
    s.base_vertex = x;
    std::set<VertexId> seen;
    for (const auto& f : p.facets()) {
        if (!std::binary_search(f.verts.begin(), f.verts.end(), x)) continue;
        Triangle t;
        int k = 0;
        for (VertexId v : f.verts)
            if (v != x) t[k++] = v;
        s.triangles.insert(t);
        for (VertexId v : t) seen.insert(v);
    }
    s.vertex_ids.assign(seen.begin(), seen.end());
    return s;
}

namespace detail {

// One greedy peeling pass: smallest vertex of triangle-degree 3 goes first.
// Returns the component tetrahedra in peel order, or nullopt if stuck.
inline std::optional<std::vector<Facet>> peel(const Stacked3& s) {
    std::set<Triangle> tris = s.triangles;
    std::set<VertexId> alive(s.vertex_ids.begin(), s.vertex_ids.end());
    std::vector<Facet> components;
    while (alive.size() > 4) {
        bool peeled = false;
        for (VertexId v : alive) {
            std::vector<Triangle> inc;
            for (const auto& t : tris)
                if (t[0] == v || t[1] == v || t[2] == v) inc.push_back(t);
            if (inc.size() != 3) continue;
            std::set<VertexId> link;
            for (const auto& t : inc)
                for (VertexId u : t)
                    if (u != v) link.insert(u);
            if (link.size() != 3) continue;
            auto it = link.begin();
            Triangle base = sorted(Triangle{*it, *std::next(it), *std::next(it, 2)});
            if (tris.count(base)) continue;
            for (const auto& t : inc) tris.erase(t);
            tris.insert(base);
            alive.erase(v);
            components.push_back(sorted(Facet{v, base[0], base[1], base[2]}));
            peeled = true;
            break;
        }
        if (!peeled) return std::nullopt;
    }
    if (tris.size() != 4) return std::nullopt;
    std::set<VertexId> rest;
    for (const auto& t : tris)
        for (VertexId u : t) rest.insert(u);
    if (rest.size() != 4) return std::nullopt;
    auto it = rest.begin();
    components.push_back(sorted(Facet{*it, *std::next(it), *std::next(it, 2), *std::next(it, 3)}));
    return components;
}

} // namespace detail

inline bool is_stacked(const Stacked3& s) {
    if (s.vertex_ids.size() < 4) return false;
    if (s.triangles.size() != 2 * s.vertex_ids.size() - 4) return false;
    return detail::peel(s).has_value();
}

// Cuts per their definition (triangle of figure edges that is not a facet of
// the figure); components from the peeling order.  Counts cross-checked.
inline CutDecomposition cut_decomposition(const Stacked3& s) {
    auto peeled = detail::peel(s);
    if (!peeled) throw NotStacked("figure does not peel to a tetrahedron");
    CutDecomposition d;
    d.components.insert(peeled->begin(), peeled->end());
    auto es = s.edges();
    const auto& vs = s.vertex_ids;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            for (std::size_t k = j + 1; k < vs.size(); ++k) {
                Triangle t = sorted(Triangle{vs[i], vs[j], vs[k]});
                if (s.triangles.count(t)) continue;
                if (es.count(make_edge(t[0], t[1])) && es.count(make_edge(t[0], t[2])) &&
                    es.count(make_edge(t[1], t[2])))
                    d.cuts.insert(t);
            }
    const std::size_t sv = s.vertex_ids.size();
    if (d.cuts.size() != sv - 4 || d.components.size() != sv - 3)
        throw NotStacked("cut/component counts disagree with stackedness");
    return d;
}

// ---- geometric realizations -------------------------------------------------

// Section of the cone at x with a hyperplane parallel to a strict separator,
// shifted toward x by factor `shift` in (0,1).  Any choice gives the same
// combinatorics; predicates below are invariant in `shift`.
inline std::map<VertexId, Point4> figure_points(const Polytope& p, VertexId x,
                                                const Rational& shift = Rational(1, 2)) {
    std::vector<Point4> others;
    for (VertexId v = 0; v < p.size(); ++v)
        if (v != x) others.push_back(p.point(v));
    Hyperplane h = farkas_separator(p.point(x), others);
    Rational dx = dot(h.normal, p.point(x)) - h.offset;
    std::map<VertexId, Point4> out;
    for (VertexId v = 0; v < p.size(); ++v) {
        if (v == x) continue;
        Rational dv = dot(h.normal, p.point(v)) - h.offset;
        Rational s = (1 - shift) * dx / (dx - dv);
        out[v] = p.point(x) + s * (p.point(v) - p.point(x));
    }
    return out;
}

namespace detail {

inline Point4 normal_point(const Hyperplane& h) {
    return {h.normal[0], h.normal[1], h.normal[2], h.normal[3]};
}

// Side of q relative to plane <a,b,c> inside the 3-flat with normal n.
inline Sign flat_side(const Point4& a, const Point4& b, const Point4& c,
                      const Point4& q, const Point4& n) {
    return sign_of(det4({b - a, c - a, q - a, n}));
}

} // namespace detail

// Fact 2.1: separation in the vertex figure matches ambient hyperplane
// separation through x.  Both directions of the iff are exercised.
inline bool check_corr_21(const Polytope& p, VertexId x,
                          const std::array<VertexId, 5>& y,
                          const Rational& shift = Rational(1, 2)) {
    auto fig = figure_points(p, x, shift);
    std::vector<Point4> others;
    for (VertexId v = 0; v < p.size(); ++v)
        if (v != x) others.push_back(p.point(v));
    Hyperplane h = farkas_separator(p.point(x), others);
    Point4 n = detail::normal_point(h);
    Sign f4 = detail::flat_side(fig.at(y[0]), fig.at(y[1]), fig.at(y[2]), fig.at(y[3]), n);
    Sign f5 = detail::flat_side(fig.at(y[0]), fig.at(y[1]), fig.at(y[2]), fig.at(y[4]), n);
    bool fig_strict = to_int(f4) * to_int(f5) < 0;
    Sign a4 = orient(p.point(x), p.point(y[0]), p.point(y[1]), p.point(y[2]), p.point(y[3]));
    Sign a5 = orient(p.point(x), p.point(y[0]), p.point(y[1]), p.point(y[2]), p.point(y[4]));
    bool amb_strict = to_int(a4) * to_int(a5) < 0;
    return fig_strict == amb_strict;
}

struct QuotientRealization {
    std::map<VertexId, Point4> points; // images of V(P) \ E in a 2-flat
    Point4 n1, n2;                     // normals spanning the flat's complement
};

// Iterated section (P/e2)/e1: the image of z is the intersection of the
// plane <e1,e2,z> with a generic 2-flat cutting the cone off near the edge.
inline QuotientRealization quotient_realization(const Polytope& p, const Edge& e,
                                                const Rational& shift1 = Rational(1, 2),
                                                const Rational& shift2 = Rational(1, 2)) {
    auto fig = figure_points(p, e[1], shift1);
    Point4 apex = fig.at(e[0]);
    std::vector<Point4> rest;
    std::vector<VertexId> rest_ids;
    for (const auto& [v, pt] : fig) {
        if (v == e[0]) continue;
        rest.push_back(pt);
        rest_ids.push_back(v);
    }
    Hyperplane h2 = farkas_separator(apex, rest);
    Rational da = dot(h2.normal, apex) - h2.offset;
    QuotientRealization out;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        Rational dv = dot(h2.normal, rest[i]) - h2.offset;
        Rational s = (1 - shift2) * da / (da - dv);
        out.points[rest_ids[i]] = apex + s * (rest[i] - apex);
    }
    std::vector<Point4> others;
    for (VertexId v = 0; v < p.size(); ++v)
        if (v != e[1]) others.push_back(p.point(v));
    out.n1 = detail::normal_point(farkas_separator(p.point(e[1]), others));
    out.n2 = detail::normal_point(h2);
    return out;
}

// Fact 2.2: line separation in the quotient polygon matches ambient
// separation by the hyperplane through the edge.
inline bool check_corr_22(const Polytope& p, const Edge& e,
                          const std::array<VertexId, 4>& z,
                          const Rational& shift1 = Rational(1, 2),
                          const Rational& shift2 = Rational(1, 2)) {
    auto qr = quotient_realization(p, e, shift1, shift2);
    auto line_side = [&](VertexId q) {
        return sign_of(det4({qr.points.at(z[1]) - qr.points.at(z[0]),
                             qr.points.at(q) - qr.points.at(z[0]), qr.n1, qr.n2}));
    };
    bool fig_strict = to_int(line_side(z[2])) * to_int(line_side(z[3])) < 0;
    Sign a3 = orient(p.point(e[0]), p.point(e[1]), p.point(z[0]), p.point(z[1]), p.point(z[2]));
    Sign a4 = orient(p.point(e[0]), p.point(e[1]), p.point(z[0]), p.point(z[1]), p.point(z[3]));
    bool amb_strict = to_int(a3) * to_int(a4) < 0;
    return fig_strict == amb_strict;
}

inline bool edge_is_universal(const Polytope& p, const Edge& e) {
    for (VertexId z = 0; z < p.size(); ++z) {
        if (z == e[0] || z == e[1]) continue;
        if (!p.is_face({e[0], e[1], z})) return false;
    }
    return true;
}

// Circular order of the remaining vertices around P/E.  Polygon edges are the
// pairs {z1,z2} with [E,z1,z2] a facet of P.
inline QuotientPolygon quotient_polygon(const Polytope& p, const Edge& e) {
    if (!edge_is_universal(p, e)) throw NotUniversalEdge("quotient requires a universal edge");
    std::map<VertexId, std::vector<VertexId>> adj;
    std::vector<VertexId> zs;
    for (VertexId z = 0; z < p.size(); ++z)
        if (z != e[0] && z != e[1]) zs.push_back(z);
    for (std::size_t i = 0; i < zs.size(); ++i)
        for (std::size_t j = i + 1; j < zs.size(); ++j) {
            Facet f = sorted(Facet{e[0], e[1], zs[i], zs[j]});
            if (p.has_facet(f)) {
                adj[zs[i]].push_back(zs[j]);
                adj[zs[j]].push_back(zs[i]);
            }
        }
    for (VertexId z : zs)
        if (adj[z].size() != 2)
            throw NotUniversalEdge("quotient is not a polygon");
    QuotientPolygon poly;
    poly.edge = e;
    VertexId start = zs.front();
    VertexId prev = -1, cur = start;
    do {
        poly.cyclic_order.push_back(cur);
        VertexId next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
    } while (cur != start);
    if (poly.cyclic_order.size() != zs.size())
        throw NotUniversalEdge("polygon adjacency is not a single cycle");
    return poly;
}

} // namespace nbly
