// Acceptance sweep: one pass/fail line per criterion, exit 0 iff all pass.

#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "nbly/construct.hpp"
#include "nbly/io.hpp"
#include "nbly/separation.hpp"

using namespace nbly;

namespace {

int failures = 0;

void report(int idx, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << idx << ": " << what;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

std::set<Facet> gale_facets(int m) {
    std::set<Facet> out;
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
            for (int c = b + 1; c <= m; ++c)
                for (int d = c + 1; d <= m; ++d)
                    if (gale_evenness(m, {a, b, c, d})) out.insert({a, b, c, d});
    return out;
}

std::vector<Polytope> sewn_instances() {
    std::vector<Polytope> out;
    auto p = Polytope::cyclic(6);
    while (p.size() < 11) {
        VertexId last = p.size() - 1;
        Edge pick{-1, -1};
        for (const Edge& e : universal_edges_def(p))
            if (e[0] == last || e[1] == last) pick = e;
        if (pick[0] < 0) pick = *universal_edges_def(p).begin();
        p = sew(p, pick).result;
        out.push_back(p);
    }
    return out;
}

} // namespace

int main() {
    // 1. facet cross-validation against Gale evenness
    {
        bool ok = true;
        for (int m = 5; m <= 10; ++m) {
            std::set<Facet> got;
            for (const auto& f : Polytope::cyclic(m).facets())
                got.insert({f.verts[0] + 1, f.verts[1] + 1, f.verts[2] + 1, f.verts[3] + 1});
            if (got != gale_facets(m)) ok = false;
        }
        report(1, "cyclic facet sets equal the Gale evenness prediction (m=5..10)", ok);
    }

    // 2. neighbourliness
    {
        bool ok = true;
        for (int m = 5; m <= 10; ++m) {
            auto p = Polytope::cyclic(m);
            for (VertexId a = 0; a < m && ok; ++a)
                for (VertexId b = a + 1; b < m && ok; ++b)
                    if (!p.is_face({a, b})) ok = false;
        }
        report(2, "every vertex pair of cyclic(m) is an edge (m=5..10)", ok);
    }

    // 3. new-vertex / figure structure suite
    {
        bool ok = true;
        std::ostringstream detail;
        for (int m = 6; m <= 9; ++m) {
            auto q = Polytope::cyclic(m);
            auto p = Polytope::cyclic(m + 1);
            auto beyond = q.beyond_set(p.point(m));
            if (static_cast<int>(beyond.size()) != m - 3) ok = false;
            std::set<Facet> lost;
            for (const auto& f : q.facets())
                if (!p.has_facet(f.verts)) lost.insert(f.verts);
            Stacked3 fig = vertex_figure(p, m);
            if (!is_stacked(fig)) ok = false;
            CutDecomposition d = cut_decomposition(fig);
            if (d.components != lost) ok = false;
            if (d.cuts.size() != fig.vertex_ids.size() - 4) ok = false;
            if (d.components.size() != fig.vertex_ids.size() - 3) ok = false;
            detail << "m=" << m << ":" << beyond.size() << " ";
        }
        report(3, "new vertex beyond exactly m-3 facets; figure components = lost facets",
               ok, detail.str());
    }

    // 4. universal edge counts, bipartite base structure, detector equivalence
    {
        bool ok = true;
        auto u6 = universal_edges_def(Polytope::cyclic(6));
        if (u6.size() != 9) ok = false;
        bool bipartite = false;
        for (int mask = 0; mask < 64 && !bipartite; ++mask) {
            if (__builtin_popcount(mask) != 3) continue;
            std::set<Edge> cross;
            for (VertexId y = 0; y < 6; ++y)
                for (VertexId z = 0; z < 6; ++z)
                    if ((mask >> y & 1) && !(mask >> z & 1)) cross.insert(make_edge(y, z));
            if (cross == u6) bipartite = true;
        }
        if (!bipartite) ok = false;
        for (int m = 7; m <= 10; ++m)
            if (static_cast<int>(universal_edges_def(Polytope::cyclic(m)).size()) != m)
                ok = false;
        for (int m = 6; m <= 9; ++m) {
            auto p = Polytope::cyclic(m);
            if (universal_edges_def(p) != universal_edges_sep(p)) ok = false;
        }
        report(4, "universal edge counts (9, then m) and detector equivalence", ok);
    }

    // 5. separation correspondence probes
    {
        bool ok = true;
        uint64_t state = 2026;
        auto next = [&] {
            uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            return z ^ (z >> 31);
        };
        for (int m : {6, 7, 8}) {
            auto p = Polytope::cyclic(m);
            for (int trial = 0; trial < 200 && ok; ++trial) {
                VertexId x = static_cast<VertexId>(next() % m);
                std::vector<VertexId> others;
                for (VertexId v = 0; v < m; ++v)
                    if (v != x) others.push_back(v);
                for (int i = 0; i < 16; ++i)
                    std::swap(others[next() % others.size()],
                              others[next() % others.size()]);
                if (!check_corr_21(p, x,
                                   {others[0], others[1], others[2], others[3], others[4]}))
                    ok = false;
                Edge e = make_edge(others[0], others[1]);
                std::array<VertexId, 4> z4{};
                int k = 0;
                for (std::size_t i = 2; i < others.size() && k < 4; ++i)
                    if (others[i] != x) z4[k++] = others[i];
                if (k == 4 && !check_corr_22(p, e, z4)) ok = false;
            }
        }
        report(5, "figure/polygon separation matches ambient separation (200 probes each)",
               ok);
    }

    // 6. sewing pipeline
    std::vector<Polytope> sewn;
    {
        bool ok = true;
        auto p = Polytope::cyclic(6);
        while (p.size() < 11) {
            VertexId last = p.size() - 1;
            Edge pick{-1, -1};
            for (const Edge& e : universal_edges_def(p))
                if (e[0] == last || e[1] == last) pick = e;
            if (pick[0] < 0 && p.size() > 6) ok = false;
            if (pick[0] < 0) pick = *universal_edges_def(p).begin();
            try {
                ExtensionResult ext = sew(p, pick);
                VertexId v = ext.result.size() - 1;
                if (!ext.gained_universal.count(make_edge(v, pick[0])) ||
                    !ext.gained_universal.count(make_edge(v, pick[1])))
                    ok = false;
                if (!ext.result.is_neighbourly()) ok = false;
                p = ext.result;
            } catch (const Error&) {
                ok = false;
                break;
            }
            sewn.push_back(p);
        }
        try {
            if (p.size() != 11 || !is_simply_linked(p, VertexArray::natural(11))) ok = false;
        } catch (const Error&) {
            ok = false;
        }
        report(6, "five sews from cyclic(6) give a simply linked 11-vertex polytope", ok);
    }

    // 7. solver ground truth on the simplex
    {
        auto p = Polytope::from_vertices(
            {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
        SeparationInstance inst(p, p.centroid());
        int s = min_separation(inst).s_value;
        // exhaustive check with the coverable oracle: no 2 facets share a plane side
        bool pairs_uncoverable = true;
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = i + 1; j < 5; ++j)
                if (coverable(inst, {p.facets()[i].verts, p.facets()[j].verts}))
                    pairs_uncoverable = false;
        report(7, "4-simplex centroid needs exactly one hyperplane per facet",
               s == 5 && pairs_uncoverable, "s=" + std::to_string(s));
    }

    // 8. separation bounds as solver facts over seeded sweeps
    {
        bool ok = true;
        int global_max = 0;
        std::ostringstream detail;
        std::vector<Polytope> instances;
        for (int m = 6; m <= 10; ++m) instances.push_back(Polytope::cyclic(m));
        for (const auto& s : sewn) instances.push_back(s);
        for (const auto& p : instances) {
            const int n = p.size();
            VertexArray a = VertexArray::natural(n);
            VerificationReport rep;
            try {
                rep = verify_conjecture(p, &a, 100, 2026);
            } catch (const Error&) {
                ok = false;
                continue;
            }
            if (!rep.ok || static_cast<int>(rep.samples.size()) < 100) ok = false;
            if (rep.max_s > global_max) global_max = rep.max_s;

            // Lemma A family: O on a boundary facet of the one-smaller prefix
            std::vector<Point4> rest(p.points().begin(), p.points().end() - 1);
            auto q = Polytope::from_vertices(std::move(rest));
            std::set<Facet> shared;
            Facet lost{-1, -1, -1, -1};
            for (const auto& f : q.facets()) {
                if (p.has_facet(f.verts))
                    shared.insert(f.verts);
                else
                    lost = f.verts;
            }
            if (lost[0] >= 0) {
                Point4 o;
                for (VertexId v : lost) o = o + q.point(v);
                o = Rational(1, 4) * o;
                if (p.contains_interior(o) && !shared.empty()) {
                    SeparationInstance inst(p, o);
                    if (restricted_min_separation(inst, shared).s_value > 3) ok = false;
                }
            }

            // Lemma B certificates at the last vertex, interior and cut cases
            const VertexId w = n - 1;
            try {
                CutDecomposition dec = cut_decomposition(vertex_figure(p, w));
                SeparationCertificate ic = lemma_b_certificate(p, q, w, p.centroid());
                std::set<Facet> w_facets;
                for (const auto& f : p.facets())
                    if (std::binary_search(f.verts.begin(), f.verts.end(), w))
                        w_facets.insert(f.verts);
                bool on_cut = false;
                for (const auto& cut : dec.cuts)
                    if (side_of(hyperplane_through(p.point(w), p.point(cut[0]),
                                                   p.point(cut[1]), p.point(cut[2])),
                                p.centroid()) == Sign::zero)
                        on_cut = true;
                if (ic.hyperplanes.size() > (on_cut ? 6u : 4u)) ok = false;
                if (!certificate_valid(p, p.centroid(), w_facets, ic)) ok = false;
                if (!dec.cuts.empty()) {
                    Triangle cut = *dec.cuts.begin();
                    Point4 o = Rational(2, 5) * p.point(w);
                    for (VertexId v : cut) o = o + Rational(1, 5) * p.point(v);
                    if (p.contains_interior(o)) {
                        SeparationCertificate cc = lemma_b_certificate(p, q, w, o);
                        if (cc.hyperplanes.size() > 6) ok = false;
                        if (!certificate_valid(p, o, w_facets, cc)) ok = false;
                    }
                }
            } catch (const Error&) {
                ok = false;
            }

            // O just outside the one-smaller prefix: all facets within nine
            Point4 near = p.point(w) + Rational(1, 1000) * (p.centroid() - p.point(w));
            if (!q.contains_interior(near)) {
                SeparationInstance inst(p, near);
                if (min_separation(inst).s_value > 9) ok = false;
            }

            // O in the 6-vertex core: within nine
            Point4 core;
            for (int i = 0; i < 6; ++i) core = core + p.point(i);
            core = Rational(1, 6) * core;
            if (p.contains_interior(core)) {
                SeparationInstance inst(p, core);
                if (min_separation(inst).s_value > 9) ok = false;
            }
            detail << "n" << n << ":max" << rep.max_s << " ";
        }
        report(8, "s(O) <= 16 on all sweeps; Lemma A/B, outside-prefix and core bounds",
               ok, detail.str() + "global_max=" + std::to_string(global_max));
    }

    // 9. chain lemma scans on sewn instances (straight chain and a branchy
    // three-chain instance, so the hypotheses are exercised non-vacuously)
    {
        bool ok = true;
        int probes = 0;
        std::vector<Polytope> scan;
        for (const auto& s : sewn)
            if (s.size() <= 9) scan.push_back(s);
        {
            auto p = Polytope::cyclic(6);
            for (Edge e : {Edge{0, 1}, Edge{0, 5}, Edge{1, 2}}) p = sew(p, e).result;
            scan.push_back(p);
        }
        for (const auto& inst : scan) {
            const int n = inst.size();
            VertexArray a = VertexArray::natural(n);
            LinkageStructure ls(inst, a);
            for (int m = 6; m < n && ok; ++m)
                for (int t = m + 1; t <= n && ok; ++t)
                    for (int k = 7; k < t && ok; ++k) {
                        if (ls.vk(k).count(t)) continue;
                        for (int i1 = 1; i1 <= m && ok; ++i1)
                            for (int i2 = i1 + 1; i2 <= m && ok; ++i2)
                                for (int i3 = i2 + 1; i3 <= m && ok; ++i3)
                                    for (int i4 = i3 + 1; i4 <= m && ok; ++i4)
                                        if (!lemma_c_probe(inst, a, ls, m, t, k,
                                                           {i1, i2, i3, i4}))
                                            ok = false;
                                        else
                                            ++probes;
                    }
            auto chains = ls.maximal_chains();
            if (chains.size() == 3)
                for (const auto& f : inst.facets()) {
                    int met = 0;
                    for (const auto& chain : chains) {
                        bool hit = false;
                        for (int pos : chain)
                            if (std::binary_search(f.verts.begin(), f.verts.end(),
                                                   a.order[pos - 1]))
                                hit = true;
                        if (hit) ++met;
                    }
                    if (met > 2) ok = false;
                }
        }
        report(9, "no counterexamples to the chain-hull and chain-facet lemmas",
               ok && probes > 0, std::to_string(probes) + " probes");
    }

    // 10. determinism of verification reports
    {
        auto p = Polytope::cyclic(7);
        VertexArray a = VertexArray::natural(7);
        VerificationReport r1 = verify_conjecture(p, &a, 20, 77);
        VerificationReport r2 = verify_conjecture(p, &a, 20, 77);
        std::string s1 = verification_json(p, r1).dump(2);
        std::string s2 = verification_json(p, r2).dump(2);
        report(10, "identical seeds produce byte-identical verification reports", s1 == s2);
    }

    if (failures) std::cout << failures << " criterion(s) failed" << std::endl;
    return failures ? 1 : 0;
}
