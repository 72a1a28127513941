#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "nbly/polytope.hpp"

namespace nbly {

// All edges E with [E, z] a 2-face for every other vertex z.
inline std::set<Edge> universal_edges_def(const Polytope& p) {
    std::set<Edge> out;
    for (VertexId a = 0; a < p.size(); ++a)
        for (VertexId b = a + 1; b < p.size(); ++b) {
            bool universal = true;
            for (VertexId z = 0; z < p.size() && universal; ++z) {
                if (z == a || z == b) continue;
                if (!p.is_face({a, b, z})) universal = false;
            }
            if (universal) out.insert({a, b});
        }
    return out;
}

// Fact 2.4 detector: {x,y} is universal iff no hyperplane spanned by four
// other vertices strictly separates x and y.
inline std::set<Edge> universal_edges_sep(const Polytope& p) {
    const int m = p.size();
    std::set<Edge> out;
    for (VertexId a = 0; a < m; ++a)
        for (VertexId b = a + 1; b < m; ++b) {
            std::vector<VertexId> rest;
            for (VertexId v = 0; v < m; ++v)
                if (v != a && v != b) rest.push_back(v);
            bool universal = true;
            const int r = static_cast<int>(rest.size());
            for (int i = 0; i < r && universal; ++i)
                for (int j = i + 1; j < r && universal; ++j)
                    for (int k = j + 1; k < r && universal; ++k)
                        for (int l = k + 1; l < r && universal; ++l) {
                            Hyperplane h = hyperplane_through(
                                p.point(rest[i]), p.point(rest[j]), p.point(rest[k]), p.point(rest[l]));
                            if (to_int(side_of(h, p.point(a))) * to_int(side_of(h, p.point(b))) < 0)
                                universal = false;
                        }
            if (universal) out.insert({a, b});
        }
    return out;
}

// A vertex array x_n > ... > x_1 over a polytope's vertices.  order[i] is the
// vertex id at (1-based) array position i+1; prefixes P_m take the first m.
struct VertexArray {
    std::vector<VertexId> order;

    static VertexArray natural(int n) {
        VertexArray a;
        for (int i = 0; i < n; ++i) a.order.push_back(i);
        return a;
    }
};

// Per-prefix universal edges, the link relation, and chains, all in array
// positions (1-based).  An edge {i,j} here means {x_i, x_j}.
class LinkageStructure {
public:
    LinkageStructure(const Polytope& p, const VertexArray& a) : n_(p.size()) {
        if (static_cast<int>(a.order.size()) != n_)
            throw Error("array length does not match vertex count");
        std::vector<bool> seen(n_, false);
        for (VertexId v : a.order) {
            if (v < 0 || v >= n_ || seen[v]) throw Error("array is not a permutation");
            seen[v] = true;
        }
        for (int m = 5; m <= n_; ++m) {
            std::vector<Point4> pts;
            for (int i = 0; i < m; ++i) pts.push_back(p.point(a.order[i]));
            prefixes_.push_back(Polytope::from_vertices(std::move(pts)));
            const Polytope& pm = prefixes_.back();
            neighbourly_[m] = pm.is_neighbourly();
            std::set<Edge> u;
            for (const Edge& e : universal_edges_def(pm))
                u.insert({e[0] + 1, e[1] + 1}); // prefix vertex id i is position i+1
            universal_[m] = std::move(u);
        }
        for (int t = 7; t <= n_; ++t) {
            std::set<int> cand;
            for (int r = 1; r < t; ++r)
                if (universal_[t].count(make_edge(r, t))) cand.insert(r);
            if (cand.empty()) continue;
            int top = *cand.rbegin();
            if (top >= 7)
                links_[t] = {top}; // any smaller r fails the "no larger j" clause
            else
                links_[t] = cand;  // all base targets qualify; 2.5 fixes no labeling
        }
    }

    int size() const { return n_; }
    const Polytope& prefix(int m) const { return prefixes_[m - 5]; }
    bool prefix_neighbourly(int m) const { return neighbourly_.at(m); }
    const std::set<Edge>& universal_edges(int m) const { return universal_.at(m); }

    // The full link relation at position t (t >= 7).
    std::set<int> links_of(int t) const {
        auto it = links_.find(t);
        return it == links_.end() ? std::set<int>{} : it->second;
    }

    // The single link, when it is unique; several base targets is an ambiguity.
    std::optional<int> link_of(int t) const {
        if (t < 7) throw HypothesisViolated("links are defined for t >= 7 only");
        auto s = links_of(t);
        if (s.empty()) return std::nullopt;
        if (s.size() > 1)
            throw AmbiguousLink("x_" + std::to_string(t) + " has several qualifying links");
        return *s.begin();
    }

    // V^k: union of all chains with least vertex x_k.
    std::set<int> vk(int k) const {
        std::set<int> out{k};
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& [t, targets] : links_)
                if (!out.count(t))
                    for (int r : targets)
                        if (out.count(r)) {
                            out.insert(t);
                            grew = true;
                        }
        }
        return out;
    }

    bool is_chain(const std::set<int>& members) const {
        if (members.size() <= 1) return true;
        auto it = members.begin();
        int lo = *it;
        for (++it; it != members.end(); ++it) {
            int hi = *it;
            if (!links_of(hi).count(lo)) return false;
            lo = hi;
        }
        return true;
    }

    // Maximal chains within positions 7..n (links into the base excluded).
    std::vector<std::vector<int>> maximal_chains() const {
        std::set<int> has_incoming;
        for (const auto& [t, targets] : links_)
            for (int r : targets)
                if (r >= 7) has_incoming.insert(r);
        std::vector<std::vector<int>> out;
        for (int head = n_; head >= 7; --head) {
            if (has_incoming.count(head)) continue;
            std::vector<int> chain{head};
            int cur = head;
            for (;;) {
                auto targets = links_of(cur);
                int next = -1;
                for (int r : targets)
                    if (r >= 7) next = r;
                if (next < 0) break;
                chain.push_back(next);
                cur = next;
            }
            out.push_back(std::move(chain));
        }
        return out;
    }

private:
    int n_;
    std::vector<Polytope> prefixes_;
    std::map<int, bool> neighbourly_;
    std::map<int, std::set<Edge>> universal_;
    std::map<int, std::set<int>> links_;
};

inline bool is_linked(const Polytope& p, const VertexArray& a) {
    LinkageStructure ls(p, a);
    for (int m = 6; m < p.size(); ++m) {
        if (!ls.prefix_neighbourly(m)) throw PrefixNotNeighbourly(m);
        const auto& lo = ls.universal_edges(m);
        bool gain = false;
        for (const Edge& e : ls.universal_edges(m + 1))
            if (!lo.count(e)) gain = true;
        if (!gain) return false;
    }
    if (!ls.prefix_neighbourly(p.size())) throw PrefixNotNeighbourly(p.size());
    return true;
}

inline bool is_simply_linked(const Polytope& p, const VertexArray& a) {
    if (!is_linked(p, a)) throw NotLinked("polytope is not linked under this array");
    LinkageStructure ls(p, a);
    const int n = p.size();
    std::map<int, std::set<int>> vks;
    for (int k = 7; k <= n; ++k) {
        vks[k] = ls.vk(k);
        if (!ls.is_chain(vks[k])) return false;
    }
    for (int c = 7; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
            bool disjoint = true;
            for (int v : vks[c])
                if (vks[d].count(v)) disjoint = false;
            if (!disjoint) continue;
            bool ok = false;
            for (int i : ls.links_of(c)) {
                if (i > 6) continue;
                for (int j : ls.links_of(d)) {
                    if (j > 6 || i == j) continue;
                    if (!ls.universal_edges(6).count(make_edge(i, j))) ok = true;
                }
            }
            if (!ok) return false;
        }
    return true;
}

// Lemma C, C.1 probe: under the hypotheses, a hyperplane spanned from the
// first m array positions must miss conv(V^t) entirely.
inline bool lemma_c_probe(const Polytope& p, const VertexArray& a, const LinkageStructure& ls,
                          int m, int t, int k, const std::array<int, 4>& span) {
    const int n = p.size();
    if (!(6 <= m && m < n)) throw HypothesisViolated("need 6 <= m < n");
    if (!(m < t && k < t)) throw HypothesisViolated("need x_m < x_t and x_k < x_t");
    if (ls.vk(k).count(t)) throw HypothesisViolated("x_t lies in V^k");
    for (int pos : span)
        if (pos < 1 || pos > m) throw HypothesisViolated("span vertex outside x_1..x_m");
    auto pt = [&](int pos) { return p.point(a.order[pos - 1]); };
    Hyperplane h = hyperplane_through(pt(span[0]), pt(span[1]), pt(span[2]), pt(span[3]));
    Sign common = Sign::zero;
    for (int pos : ls.vk(t)) {
        Sign s = side_of(h, pt(pos));
        if (s == Sign::zero) return false;
        if (common == Sign::zero) common = s;
        if (s != common) return false;
    }
    return true;
}

} // namespace nbly
