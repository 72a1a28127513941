#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "nbly/figures.hpp"
#include "nbly/hull.hpp"
#include "nbly/linkage.hpp"
#include "nbly/polytope.hpp"

namespace nbly {

struct SeparationInstance {
    const Polytope* polytope;
    Point4 point;

    SeparationInstance(const Polytope& p, Point4 o) : polytope(&p), point(std::move(o)) {
        if (!p.contains_interior(point))
            throw NotInterior("separation instance needs an interior point");
    }
};

struct SeparationCertificate {
    std::vector<Hyperplane> hyperplanes;
    std::map<Facet, int> assignment; // facet -> index into hyperplanes
};

struct CoverReport {
    int s_value = 0;
    SeparationCertificate certificate;
    std::string optimality_log;
};

// One hyperplane strictly separates O from all of `facets` iff O is outside
// the convex hull of their vertex union.
inline bool coverable(const SeparationInstance& inst, const std::set<Facet>& facets) {
    std::set<VertexId> verts;
    for (const auto& f : facets)
        for (VertexId v : f) verts.insert(v);
    std::vector<Point4> pts;
    for (VertexId v : verts) pts.push_back(inst.polytope->point(v));
    return !in_convex_hull(inst.point, pts);
}

// H separates O from a facet when O is strictly on one side and the facet
// lies in the closed other halfspace.  The closed side matters: hyperplanes
// through a common apex touch every facet at that apex.
inline bool separates(const Hyperplane& h, const Point4& o, const std::vector<Point4>& facet_pts) {
    Sign so = side_of(h, o);
    if (so == Sign::zero) return false;
    for (const auto& p : facet_pts)
        if (side_of(h, p) == so) return false;
    return true;
}

inline bool certificate_valid(const Polytope& p, const Point4& o,
                              const std::set<Facet>& universe,
                              const SeparationCertificate& cert) {
    for (const auto& f : universe) {
        auto it = cert.assignment.find(f);
        if (it == cert.assignment.end()) return false;
        if (it->second < 0 || it->second >= static_cast<int>(cert.hyperplanes.size())) return false;
        if (!separates(cert.hyperplanes[it->second], o, p.facet_points(f)))
            return false;
    }
    return true;
}

namespace detail {

// Exact minimum facet cover by single-hyperplane-separable groups.  The
// separable vertex sets ("caps") form a downward-closed family, so the
// maximal caps are enumerated once per interior point and branching only
// ever considers maximal groups.
class CoverSolver {
public:
    explicit CoverSolver(const SeparationInstance& inst)
        : p_(*inst.polytope), o_(inst.point) {
        enumerate_caps();
        build_groups();
    }

    CoverReport solve(const std::set<Facet>& universe) {
        uint64_t target = 0;
        for (const auto& f : universe) target |= uint64_t(1) << facet_index(f);
        std::ostringstream log;

        // greedy upper bound
        std::vector<int> greedy = greedy_cover(target);
        best_ = greedy;
        log << "greedy=" << greedy.size();

        nodes_ = 0;
        visited_.clear();
        std::vector<int> chosen;
        branch(target, chosen);
        log << " optimal=" << best_.size() << " nodes=" << nodes_;

        CoverReport out;
        out.s_value = static_cast<int>(best_.size());
        out.optimality_log = log.str();
        for (int g : best_) {
            out.certificate.hyperplanes.push_back(separator_for(g));
        }
        for (const auto& f : universe) {
            uint64_t bit = uint64_t(1) << facet_index(f);
            for (std::size_t i = 0; i < best_.size(); ++i)
                if (groups_[best_[i]] & bit) {
                    out.certificate.assignment[f] = static_cast<int>(i);
                    break;
                }
        }
        if (!certificate_valid(p_, o_, universe, out.certificate))
            throw PostconditionFailed("cover certificate failed independent validation");
        return out;
    }

private:
    int facet_index(const Facet& f) const {
        for (std::size_t i = 0; i < p_.facets().size(); ++i)
            if (p_.facets()[i].verts == f) return static_cast<int>(i);
        throw Error("facet not in polytope");
    }

    bool cap_free(uint32_t vmask) {
        auto it = hull_memo_.find(vmask);
        if (it != hull_memo_.end()) return it->second;
        // witness caches: a separating hyperplane certifies every subset of
        // the vertices it cuts off; an enclosing subset condemns every superset
        for (uint32_t w : witness_masks_)
            if ((vmask & ~w) == 0) return true;
        for (uint32_t h : inhull_masks_)
            if ((h & ~vmask) == 0) {
                hull_memo_.emplace(vmask, false);
                return false;
            }
        std::vector<Point4> pts;
        for (int v = 0; v < p_.size(); ++v)
            if (vmask & (uint32_t(1) << v)) pts.push_back(p_.point(v));
        bool free = !in_convex_hull(o_, pts);
        hull_memo_.emplace(vmask, free);
        if (free) {
            Hyperplane h = farkas_separator(o_, pts);
            Sign so = side_of(h, o_);
            uint32_t covered = 0;
            for (int v = 0; v < p_.size(); ++v)
                if (side_of(h, p_.point(v)) == opposite(so)) covered |= uint32_t(1) << v;
            witness_masks_.push_back(covered);
        } else {
            inhull_masks_.push_back(vmask);
        }
        return free;
    }

    void enumerate_caps() {
        dfs_caps(0, 0);
    }

    void dfs_caps(uint32_t s, int start) {
        bool extendable = false;
        for (int c = 0; c < p_.size(); ++c) {
            if (s & (uint32_t(1) << c)) continue;
            if (cap_free(s | (uint32_t(1) << c))) {
                extendable = true;
                break;
            }
        }
        if (!extendable) {
            if (s) caps_.push_back(s);
            return;
        }
        for (int c = start; c < p_.size(); ++c) {
            if (s & (uint32_t(1) << c)) continue;
            if (cap_free(s | (uint32_t(1) << c))) dfs_caps(s | (uint32_t(1) << c), c + 1);
        }
    }

    void build_groups() {
        const auto& facets = p_.facets();
        for (uint32_t cap : caps_) {
            uint64_t g = 0;
            for (std::size_t i = 0; i < facets.size(); ++i) {
                bool inside = true;
                for (VertexId v : facets[i].verts)
                    if (!(cap & (uint32_t(1) << v))) inside = false;
                if (inside) g |= uint64_t(1) << i;
            }
            if (g == 0) continue;
            groups_.push_back(g);
            group_caps_.push_back(cap);
        }
        // drop groups dominated by a superset group
        std::vector<uint64_t> gs;
        std::vector<uint32_t> cs;
        for (std::size_t i = 0; i < groups_.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < groups_.size() && !dominated; ++j)
                if (i != j && (groups_[i] & ~groups_[j]) == 0 &&
                    (groups_[i] != groups_[j] || j < i))
                    dominated = true;
            if (!dominated) {
                gs.push_back(groups_[i]);
                cs.push_back(group_caps_[i]);
            }
        }
        groups_ = std::move(gs);
        group_caps_ = std::move(cs);
    }

    std::vector<int> greedy_cover(uint64_t target) {
        std::vector<int> out;
        uint64_t left = target;
        while (left) {
            int best_g = -1;
            int best_n = 0;
            for (std::size_t g = 0; g < groups_.size(); ++g) {
                int n = __builtin_popcountll(groups_[g] & left);
                if (n > best_n) { best_n = n; best_g = static_cast<int>(g); }
            }
            if (best_g < 0) throw Error("uncoverable facet (impossible: singletons are caps)");
            out.push_back(best_g);
            left &= ~groups_[best_g];
        }
        return out;
    }

    void branch(uint64_t left, std::vector<int>& chosen) {
        ++nodes_;
        if (left == 0) {
            if (chosen.size() < best_.size()) best_ = chosen;
            return;
        }
        if (chosen.size() + 1 >= best_.size()) return;
        auto it = visited_.find(left);
        if (it != visited_.end() && it->second <= chosen.size()) return;
        visited_[left] = chosen.size();
        // branch on the uncovered facet with fewest covering groups
        int pick = -1, pick_count = -1;
        for (int f = 0; f < 64; ++f) {
            if (!(left & (uint64_t(1) << f))) continue;
            int cnt = 0;
            for (uint64_t g : groups_)
                if (g & (uint64_t(1) << f)) ++cnt;
            if (pick < 0 || cnt < pick_count) { pick = f; pick_count = cnt; }
        }
        for (std::size_t g = 0; g < groups_.size(); ++g) {
            if (!(groups_[g] & (uint64_t(1) << pick))) continue;
            chosen.push_back(static_cast<int>(g));
            branch(left & ~groups_[g], chosen);
            chosen.pop_back();
        }
    }

    Hyperplane separator_for(int group) {
        std::vector<Point4> pts;
        uint32_t cap = group_caps_[group];
        for (int v = 0; v < p_.size(); ++v)
            if (cap & (uint32_t(1) << v)) pts.push_back(p_.point(v));
        return farkas_separator(o_, pts);
    }

    const Polytope& p_;
    Point4 o_;
    std::unordered_map<uint32_t, bool> hull_memo_;
    std::vector<uint32_t> witness_masks_;
    std::vector<uint32_t> inhull_masks_;
    std::vector<uint32_t> caps_;
    std::vector<uint64_t> groups_;
    std::vector<uint32_t> group_caps_;
    std::vector<int> best_;
    std::unordered_map<uint64_t, std::size_t> visited_;
    long nodes_ = 0;
};

} // namespace detail

inline CoverReport restricted_min_separation(const SeparationInstance& inst,
                                             const std::set<Facet>& family) {
    detail::CoverSolver solver(inst);
    return solver.solve(family);
}

inline CoverReport min_separation(const SeparationInstance& inst) {
    std::set<Facet> all;
    for (const auto& f : inst.polytope->facets()) all.insert(f.verts);
    return restricted_min_separation(inst, all);
}

// ---- Lemma B constructive certificate --------------------------------------

// Covers the facets of P = [R, w] that contain w: at most four hyperplanes
// through w and a component of P/w when the ray section is interior, at most
// six (two sides, or a three-hyperplane fallback per side) when it lands on
// a cut.
inline SeparationCertificate lemma_b_certificate(const Polytope& p, const Polytope& r,
                                                 VertexId w, const Point4& o) {
    if (w < 0 || w >= p.size()) throw NotApex("w is not a vertex of P");
    if (r.size() + 1 != p.size()) throw NotApex("P must extend R by the single vertex w");
    if (!p.contains_interior(o)) throw NotInterior("O must be interior to P");

    Stacked3 fig = vertex_figure(p, w);
    CutDecomposition dec = cut_decomposition(fig);

    std::set<Facet> w_facets;
    for (const auto& f : p.facets())
        if (std::binary_search(f.verts.begin(), f.verts.end(), w)) w_facets.insert(f.verts);

    // locate the ray section O* = <w,O> cap P/w: solve O - w = sum l_i (v_i - w)
    const Point4 wp = p.point(w);
    const Point4 d = o - wp;
    auto barycentric = [&](const Facet& comp) -> std::optional<std::array<Rational, 4>> {
        std::array<Point4, 4> cols;
        for (int i = 0; i < 4; ++i) cols[i] = p.point(comp[i]) - wp;
        Rational det = det4(cols);
        if (det == 0) return std::nullopt;
        std::array<Rational, 4> l;
        for (int i = 0; i < 4; ++i) {
            std::array<Point4, 4> m = cols;
            m[i] = d;
            l[i] = det4(m) / det;
        }
        for (const auto& li : l)
            if (li < 0) return std::nullopt;
        return l;
    };

    Facet comp{};
    std::array<Rational, 4> lambda{};
    bool located = false;
    for (const auto& c : dec.components) {
        auto l = barycentric(c);
        if (l) {
            comp = c;
            lambda = *l;
            located = true;
            break;
        }
    }
    if (!located) throw Error("no component cone contains the ray through O");

    int zeros = 0, zero_at = -1;
    for (int i = 0; i < 4; ++i)
        if (lambda[i] == 0) { ++zeros; zero_at = i; }

    SeparationCertificate cert;
    auto try_assign = [&](const std::set<Facet>& targets) {
        for (const auto& f : targets) {
            auto pts = p.facet_points(f);
            bool done = false;
            for (std::size_t i = 0; i < cert.hyperplanes.size() && !done; ++i)
                if (separates(cert.hyperplanes[i], o, pts)) {
                    cert.assignment[f] = static_cast<int>(i);
                    done = true;
                }
            if (!done) return false;
        }
        return true;
    };

    if (zeros == 0) {
        // interior case: the four hyperplanes <w, triple of the component>
        for (int skip = 0; skip < 4; ++skip) {
            std::array<VertexId, 3> t;
            int k = 0;
            for (int i = 0; i < 4; ++i)
                if (i != skip) t[k++] = comp[i];
            Hyperplane h = hyperplane_through(wp, p.point(t[0]), p.point(t[1]), p.point(t[2]));
            if (side_of(h, o) != Sign::zero) cert.hyperplanes.push_back(h);
        }
        if (!try_assign(w_facets))
            throw PostconditionFailed("component hyperplanes failed to cover the apex facets");
        return cert;
    }

    // cut case: O lies on <w, C> for the triangle C opposite the zero weight
    Triangle cut = sorted(Triangle{comp[(zero_at + 1) % 4], comp[(zero_at + 2) % 4],
                                   comp[(zero_at + 3) % 4]});
    // split the component tree at C: removing one tree edge leaves exactly
    // two connected groups, one per component adjacent across the cut
    std::set<Facet> side_a, side_b;
    {
        auto tri_of = [](const Facet& c) {
            return std::array<Triangle, 4>{
                sorted(Triangle{c[0], c[1], c[2]}), sorted(Triangle{c[0], c[1], c[3]}),
                sorted(Triangle{c[0], c[2], c[3]}), sorted(Triangle{c[1], c[2], c[3]})};
        };
        std::vector<Facet> comps(dec.components.begin(), dec.components.end());
        std::vector<std::size_t> seeds;
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (const auto& t : tri_of(comps[i]))
                if (t == cut) seeds.push_back(i);
        if (seeds.size() != 2) throw NotStacked("cut not shared by exactly two components");
        std::vector<int> side(comps.size(), -1);
        std::vector<std::size_t> stack{seeds[0]};
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            if (side[i] == 0) continue;
            side[i] = 0;
            for (std::size_t j = 0; j < comps.size(); ++j) {
                if (side[j] == 0 || i == j) continue;
                for (const auto& ti : tri_of(comps[i])) {
                    if (ti == cut) continue;
                    for (const auto& tj : tri_of(comps[j]))
                        if (ti == tj) stack.push_back(j);
                }
            }
        }
        if (side[seeds[1]] == 0) throw NotStacked("cut does not disconnect the component tree");
        for (std::size_t i = 0; i < comps.size(); ++i)
            (side[i] == 0 ? side_a : side_b).insert(comps[i]);
    }
    auto facets_on = [&](const std::set<Facet>& comps) {
        std::set<Facet> out;
        for (const auto& f : w_facets) {
            Triangle t;
            int k = 0;
            for (VertexId v : f)
                if (v != w) t[k++] = v;
            for (const auto& c : comps) {
                bool inside = true;
                for (VertexId v : t)
                    if (!std::binary_search(c.begin(), c.end(), v)) inside = false;
                if (inside) { out.insert(f); break; }
            }
        }
        return out;
    };
    auto vertices_of = [&](const std::set<Facet>& comps) {
        std::set<VertexId> vs{w};
        for (const auto& c : comps)
            for (VertexId v : c) vs.insert(v);
        std::vector<Point4> pts;
        for (VertexId v : vs) pts.push_back(p.point(v));
        return pts;
    };
    SeparationInstance inst(p, o);
    for (const auto* comps : {&side_a, &side_b}) {
        std::set<Facet> targets = facets_on(*comps);
        if (targets.empty()) continue;
        auto pts = vertices_of(*comps);
        bool separated = false;
        if (!in_convex_hull(o, pts)) {
            Hyperplane h = farkas_separator(o, pts);
            cert.hyperplanes.push_back(h);
            separated = try_assign(targets);
        }
        if (!separated) {
            // O on the splitting tetrahedron: Lemma A style fallback per side
            CoverReport sub = restricted_min_separation(inst, targets);
            int base = static_cast<int>(cert.hyperplanes.size());
            for (const auto& h : sub.certificate.hyperplanes) cert.hyperplanes.push_back(h);
            for (const auto& [f, i] : sub.certificate.assignment) cert.assignment[f] = base + i;
        }
    }
    if (!certificate_valid(p, o, w_facets, cert))
        throw PostconditionFailed("cut-case certificate failed validation");
    return cert;
}

// ---- conjecture sweep -------------------------------------------------------

namespace detail {

// splitmix64: tiny, stable across platforms, no distribution-object variance
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

} // namespace detail

struct SampleResult {
    Point4 point;
    int s = 0;
    SeparationCertificate certificate;
};

struct VerificationReport {
    uint64_t seed = 0;
    int requested_samples = 0;
    std::vector<SampleResult> samples;
    int max_s = 0;
    std::map<int, int> histogram;
    bool ok = false; // max_s <= 16
};

// Deterministic interior sweep: the centroid, a point just inside each facet
// (1/1000 of the way from the facet centroid to the centroid), and `samples`
// random convex combinations.  With an array, every third random sample sits
// just inside a random facet of a random prefix subpolytope instead, since
// the hard cases live near prefix boundaries.
inline VerificationReport verify_conjecture(const Polytope& p, const VertexArray* a,
                                            int samples, uint64_t seed, bool force = false) {
    if (a && !force && !is_simply_linked(p, *a))
        throw NotSimplyLinked("array is not simply linked (use force to sweep anyway)");

    const Point4 c = p.centroid();
    const Rational eps(1, 1000);
    auto nudge = [&](const Point4& x) { return x + eps * (c - x); };
    auto facet_centroid = [](const Polytope& q, const Facet& f) {
        Point4 fc;
        for (VertexId v : f) fc = fc + q.point(v);
        return Rational(1, 4) * fc;
    };

    std::vector<Point4> probes{c};
    for (const auto& f : p.facets()) probes.push_back(nudge(facet_centroid(p, f.verts)));

    std::vector<Polytope> prefixes;
    if (a)
        for (int m = 6; m < p.size(); ++m) {
            std::vector<Point4> pts;
            for (int i = 0; i < m; ++i) pts.push_back(p.point(a->order[i]));
            prefixes.push_back(Polytope::from_vertices(std::move(pts)));
        }

    detail::Rng rng(seed);
    for (int k = 0; k < samples; ++k) {
        if (!prefixes.empty() && k % 3 == 2) {
            const Polytope& q = prefixes[rng.next() % prefixes.size()];
            const auto& f = q.facets()[rng.next() % q.facets().size()];
            Facet amb = f.verts;
            for (auto& v : amb) v = a->order[v]; // prefix ids back to P's ids
            probes.push_back(nudge(facet_centroid(p, amb)));
        } else {
            Point4 x;
            Rational total = 0;
            for (const auto& v : p.points()) {
                Rational w(1 + static_cast<long>(rng.next() % 997));
                x = x + w * v;
                total += w;
            }
            probes.push_back(Rational(denominator(total), numerator(total)) * x);
        }
    }

    VerificationReport rep;
    rep.seed = seed;
    rep.requested_samples = samples;
    for (const auto& o : probes) {
        SeparationInstance inst(p, o);
        CoverReport cr = min_separation(inst);
        rep.samples.push_back({o, cr.s_value, std::move(cr.certificate)});
        rep.histogram[cr.s_value]++;
        if (cr.s_value > rep.max_s) rep.max_s = cr.s_value;
    }
    rep.ok = rep.max_s <= 16;
    return rep;
}

} // namespace nbly
