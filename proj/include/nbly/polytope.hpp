#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <vector>

#include "nbly/geometry.hpp"

namespace nbly {

using VertexId = int;
using Facet = std::array<VertexId, 4>;          // sorted vertex ids
using Triangle = std::array<VertexId, 3>;       // sorted
using Edge = std::array<VertexId, 2>;           // sorted

inline Edge make_edge(VertexId a, VertexId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

template <std::size_t N>
std::array<VertexId, N> sorted(std::array<VertexId, N> s) {
    std::sort(s.begin(), s.end());
    return s;
}

// Gale's Evenness Condition for d = 4 over ground set 1..m: a 4-subset is a
// facet of the cyclic polytope iff every maximal run of chosen elements
// strictly between two unchosen ones has even length (end runs exempt).
inline bool gale_evenness(int m, const Facet& s) {
    std::vector<bool> in(m + 1, false);
    for (VertexId v : s) in[v] = true;
    int i = 1;
    while (i <= m) {
        if (!in[i]) { ++i; continue; }
        int j = i;
        while (j <= m && in[j]) ++j;
        int run = j - i;
        bool interior = (i > 1) && (j <= m);
        if (interior && run % 2 != 0) return false;
        i = j;
    }
    return true;
}

// A simplicial 4-polytope in general position: every point a hull vertex,
// no 5 points affinely dependent.  Facets are cached at construction.
class Polytope {
public:
    struct FacetInfo {
        Facet verts;
        Hyperplane plane;
        Sign inner; // side of all non-facet vertices
    };

    static Polytope from_vertices(std::vector<Point4> pts) {
        Polytope p;
        p.verts_ = std::move(pts);
        p.build();
        return p;
    }

    // Moment-curve points (t, t^2, t^3, t^4), t = 1..m.
    static Polytope cyclic(int m) {
        std::vector<Point4> pts;
        pts.reserve(m);
        for (int t = 1; t <= m; ++t) {
            Rational r(t);
            pts.emplace_back(r, r * r, r * r * r, r * r * r * r);
        }
        return from_vertices(std::move(pts));
    }

    int size() const { return static_cast<int>(verts_.size()); }
    const Point4& point(VertexId v) const { return verts_[v]; }
    const std::vector<Point4>& points() const { return verts_; }

    const std::vector<FacetInfo>& facets() const { return facets_; }
    const std::set<Facet>& facet_set() const { return facet_lookup_; }
    bool has_facet(const Facet& f) const { return facet_lookup_.count(f) > 0; }

    std::vector<Point4> facet_points(const Facet& f) const {
        return {verts_[f[0]], verts_[f[1]], verts_[f[2]], verts_[f[3]]};
    }

    // For simplicial polytopes a vertex set is a face iff it sits inside a facet.
    bool is_face(const std::vector<VertexId>& s) const {
        if (s.empty() || s.size() > 4) return false;
        for (const auto& f : facets_) {
            bool inside = true;
            for (VertexId v : s)
                if (!std::binary_search(f.verts.begin(), f.verts.end(), v)) { inside = false; break; }
            if (inside) return true;
        }
        return false;
    }

    bool is_neighbourly() const {
        for (VertexId a = 0; a < size(); ++a)
            for (VertexId b = a + 1; b < size(); ++b)
                if (!is_face({a, b})) return false;
        return true;
    }

    // Facets of Q whose spanned hyperplane strictly separates x from the rest of Q.
    std::set<Facet> beyond_set(const Point4& x) const {
        std::set<Facet> out;
        for (const auto& f : facets_) {
            Sign s = side_of(f.plane, x);
            if (s == Sign::zero)
                throw DegeneratePosition("point lies on a facet hyperplane");
            if (s == opposite(f.inner)) out.insert(f.verts);
        }
        return out;
    }

    bool contains_interior(const Point4& o) const {
        for (const auto& f : facets_)
            if (side_of(f.plane, o) != f.inner) return false;
        return true;
    }

    Point4 centroid() const {
        Point4 c;
        for (const auto& p : verts_) c = c + p;
        Rational inv(1, size());
        return inv * c;
    }

private:
    void build() {
        const int m = size();
        if (m < 5) throw TooFewVertices("need at least 5 vertices");
        check_general_position();
        enumerate_facets();
        check_all_vertices_extreme();
        check_ridges();
    }

    void check_general_position() {
        const int m = size();
        std::array<int, 5> idx{0, 1, 2, 3, 4};
        // all 5-subsets affinely independent
        std::vector<int> sel(5);
        for (sel = {0, 1, 2, 3, 4};;) {
            if (orient(verts_[sel[0]], verts_[sel[1]], verts_[sel[2]], verts_[sel[3]],
                       verts_[sel[4]]) == Sign::zero)
                throw DegeneratePosition("five vertices are affinely dependent");
            int i = 4;
            while (i >= 0 && sel[i] == m - 5 + i) --i;
            if (i < 0) break;
            ++sel[i];
            for (int j = i + 1; j < 5; ++j) sel[j] = sel[j - 1] + 1;
        }
        (void)idx;
    }

    void enumerate_facets() {
        const int m = size();
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                for (int c = b + 1; c < m; ++c)
                    for (int d = c + 1; d < m; ++d) {
                        Sign common = Sign::zero;
                        bool facet = true;
                        for (int q = 0; q < m && facet; ++q) {
                            if (q == a || q == b || q == c || q == d) continue;
                            Sign s = orient(verts_[a], verts_[b], verts_[c], verts_[d], verts_[q]);
                            if (common == Sign::zero)
                                common = s;
                            else if (s != common)
                                facet = false;
                        }
                        if (!facet) continue;
                        FacetInfo info;
                        info.verts = {a, b, c, d};
                        info.plane = hyperplane_through(verts_[a], verts_[b], verts_[c], verts_[d]);
                        for (int q = 0; q < m; ++q) {
                            if (q == a || q == b || q == c || q == d) continue;
                            info.inner = side_of(info.plane, verts_[q]);
                            break;
                        }
                        facets_.push_back(info);
                        facet_lookup_.insert(info.verts);
                    }
    }

    void check_all_vertices_extreme() {
        std::vector<bool> seen(size(), false);
        for (const auto& f : facets_)
            for (VertexId v : f.verts) seen[v] = true;
        for (int v = 0; v < size(); ++v)
            if (!seen[v]) throw NotAllVertices("vertex " + std::to_string(v) + " is not extreme");
    }

    // every ridge of a simplicial 4-polytope lies in exactly two facets
    void check_ridges() {
        std::map<Triangle, int> count;
        for (const auto& f : facets_) {
            const auto& v = f.verts;
            count[{v[0], v[1], v[2]}]++;
            count[{v[0], v[1], v[3]}]++;
            count[{v[0], v[2], v[3]}]++;
            count[{v[1], v[2], v[3]}]++;
        }
        for (const auto& [ridge, n] : count)
            if (n != 2) throw DegeneratePosition("ridge not shared by exactly two facets");
    }

    std::vector<Point4> verts_;
    std::vector<FacetInfo> facets_;
    std::set<Facet> facet_lookup_;
};

// Free-function spellings for the operations above.
inline Polytope from_vertices(std::vector<Point4> pts) { return Polytope::from_vertices(std::move(pts)); }
inline Polytope cyclic(int m) { return Polytope::cyclic(m); }
inline bool is_neighbourly(const Polytope& p) { return p.is_neighbourly(); }
inline bool is_face(const Polytope& p, const std::vector<VertexId>& s) { return p.is_face(s); }
inline std::set<Facet> beyond_set(const Polytope& q, const Point4& x) { return q.beyond_set(x); }
inline bool contains_interior(const Polytope& p, const Point4& o) { return p.contains_interior(o); }

} // namespace nbly
