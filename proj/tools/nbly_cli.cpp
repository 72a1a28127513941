// Command-line front end: generation, analysis, sewing, and separation
// verification for neighbourly 4-polytopes, all in exact rational arithmetic.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nbly/construct.hpp"
#include "nbly/io.hpp"
#include "nbly/linkage.hpp"
#include "nbly/separation.hpp"

using namespace nbly;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBoundViolation = 1;
constexpr int kExitInputError = 2;

VertexArray parse_array(const std::string& text, int n) {
    VertexArray a;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            a.order.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw Error("bad array entry '" + tok + "'");
        }
    }
    if (static_cast<int>(a.order.size()) != n)
        throw Error("array must list all " + std::to_string(n) + " vertex ids");
    return a;
}

Edge parse_edge(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw Error("edge must be 'a,b'");
    try {
        return make_edge(std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1)));
    } catch (const std::exception&) {
        throw Error("edge must be 'a,b'");
    }
}

Point4 parse_point(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    std::vector<Rational> cs;
    while (std::getline(is, tok, ',')) cs.push_back(parse_rational(tok));
    if (cs.size() != 4) throw Error("point must be 'r,r,r,r'");
    return {cs[0], cs[1], cs[2], cs[3]};
}

void emit(const ordered_json& j, const std::string& report_path) {
    std::string text = j.dump(2) + "\n";
    if (report_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(report_path);
        if (!os) throw Error("cannot open " + report_path + " for writing");
        os << text;
    }
}

ordered_json edge_list_json(const std::set<Edge>& edges) {
    ordered_json a = ordered_json::array();
    for (const auto& e : edges) a.push_back({e[0], e[1]});
    return a;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact neighbourly 4-polytope toolkit"};
    app.require_subcommand(1);

    std::string in_path, out_path, report_path, array_text, edge_text, point_text;
    int m = 6;
    int samples = 50;
    uint64_t seed = 0;
    int vertex = 0;
    int rotation = 0;
    bool force = false;

    auto* gen = app.add_subcommand("gen-cyclic", "write a cyclic polytope file");
    gen->add_option("-m,--m", m, "number of vertices (>= 5)")->required();
    gen->add_option("--out", out_path, "output path (default stdout)");

    auto* analyze = app.add_subcommand("analyze", "facets, neighbourliness, figures, edges");
    analyze->add_option("path", in_path)->required();
    analyze->add_option("--report", report_path, "write JSON here instead of stdout");

    auto* figure = app.add_subcommand("figure", "vertex figure and its cut decomposition");
    figure->add_option("path", in_path)->required();
    figure->add_option("-x,--vertex", vertex, "vertex id")->required();
    figure->add_option("--report", report_path);

    auto* quotient = app.add_subcommand("quotient", "polygon order around a universal edge");
    quotient->add_option("path", in_path)->required();
    quotient->add_option("-e,--edge", edge_text, "edge 'a,b'")->required();
    quotient->add_option("--report", report_path);

    auto* uedges = app.add_subcommand("universal-edges", "list universal edges");
    uedges->add_option("path", in_path)->required();
    uedges->add_option("--report", report_path);

    auto* chains = app.add_subcommand("chains", "links and maximal chains under an array");
    chains->add_option("path", in_path)->required();
    chains->add_option("--array", array_text, "comma-separated vertex order");
    chains->add_option("--report", report_path);

    auto* linked = app.add_subcommand("check-linked", "is the array linked?");
    linked->add_option("path", in_path)->required();
    linked->add_option("--array", array_text);

    auto* simply = app.add_subcommand("check-simply-linked", "is the array simply linked?");
    simply->add_option("path", in_path)->required();
    simply->add_option("--array", array_text);

    auto* sew_cmd = app.add_subcommand("sew", "sew a new vertex onto a universal edge");
    sew_cmd->add_option("path", in_path)->required();
    sew_cmd->add_option("-e,--edge", edge_text, "universal edge 'a,b'")->required();
    sew_cmd->add_option("--rotation", rotation, "which polygon edge the fan path omits");
    sew_cmd->add_option("--out", out_path, "extended polytope file")->required();
    sew_cmd->add_option("--report", report_path, "JSON sidecar with gained universal edges");

    auto* separate = app.add_subcommand("separate", "exact s(O) with certificate");
    separate->add_option("path", in_path)->required();
    separate->add_option("-p,--point", point_text, "interior point 'r,r,r,r' (default centroid)");
    separate->add_option("--report", report_path);

    auto* verify = app.add_subcommand("verify", "seeded interior sweep asserting max s <= 16");
    verify->add_option("path", in_path)->required();
    verify->add_option("--array", array_text, "comma-separated vertex order (default natural)");
    verify->add_option("--samples", samples, "random samples beyond the deterministic probes");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--report", report_path);
    verify->add_flag("--force", force, "sweep even if the array is not simply linked");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            if (m < 5) throw Error("need m >= 5");
            Polytope p = Polytope::cyclic(m);
            if (out_path.empty())
                write_polytope(std::cout, p);
            else
                write_polytope_file(out_path, p);
            return kExitOk;
        }

        Polytope p = read_polytope_file(in_path);

        if (analyze->parsed()) {
            ordered_json o;
            o["polytope_hash"] = polytope_hash(p);
            o["n"] = p.size();
            o["facets"] = p.facets().size();
            o["neighbourly"] = p.is_neighbourly();
            o["universal_edges"] = edge_list_json(universal_edges_def(p));
            ordered_json figs = ordered_json::array();
            for (VertexId x = 0; x < p.size(); ++x) {
                Stacked3 f = vertex_figure(p, x);
                ordered_json fo;
                fo["vertex"] = x;
                fo["stacked"] = is_stacked(f);
                CutDecomposition d = cut_decomposition(f);
                fo["cuts"] = d.cuts.size();
                fo["components"] = d.components.size();
                figs.push_back(fo);
            }
            o["figures"] = figs;
            emit(o, report_path);
            return kExitOk;
        }
        if (figure->parsed()) {
            if (vertex < 0 || vertex >= p.size()) throw Error("vertex id out of range");
            Stacked3 f = vertex_figure(p, vertex);
            ordered_json o;
            o["vertex"] = vertex;
            ordered_json ts = ordered_json::array();
            for (const auto& t : f.triangles) ts.push_back({t[0], t[1], t[2]});
            o["triangles"] = ts;
            o["stacked"] = is_stacked(f);
            CutDecomposition d = cut_decomposition(f);
            ordered_json cs = ordered_json::array();
            for (const auto& t : d.cuts) cs.push_back({t[0], t[1], t[2]});
            o["cuts"] = cs;
            ordered_json comps = ordered_json::array();
            for (const auto& c : d.components) comps.push_back({c[0], c[1], c[2], c[3]});
            o["components"] = comps;
            emit(o, report_path);
            return kExitOk;
        }
        if (quotient->parsed()) {
            QuotientPolygon poly = quotient_polygon(p, parse_edge(edge_text));
            ordered_json o;
            o["edge"] = {poly.edge[0], poly.edge[1]};
            o["cyclic_order"] = poly.cyclic_order;
            emit(o, report_path);
            return kExitOk;
        }
        if (uedges->parsed()) {
            ordered_json o;
            o["universal_edges"] = edge_list_json(universal_edges_def(p));
            emit(o, report_path);
            return kExitOk;
        }

        VertexArray arr = array_text.empty() ? VertexArray::natural(p.size())
                                             : parse_array(array_text, p.size());

        if (chains->parsed()) {
            LinkageStructure ls(p, arr);
            ordered_json o;
            ordered_json links;
            for (int t = 7; t <= ls.size(); ++t) {
                ordered_json targets = ordered_json::array();
                for (int r : ls.links_of(t)) targets.push_back(r);
                links[std::to_string(t)] = targets;
            }
            o["links"] = links;
            ordered_json cs = ordered_json::array();
            for (const auto& chain : ls.maximal_chains()) cs.push_back(chain);
            o["maximal_chains"] = cs;
            emit(o, report_path);
            return kExitOk;
        }
        if (linked->parsed()) {
            bool ok = is_linked(p, arr);
            std::cout << (ok ? "linked" : "not linked") << "\n";
            return kExitOk;
        }
        if (simply->parsed()) {
            bool ok = is_simply_linked(p, arr);
            std::cout << (ok ? "simply linked" : "not simply linked") << "\n";
            return kExitOk;
        }
        if (sew_cmd->parsed()) {
            ExtensionResult ext = sew(p, parse_edge(edge_text), rotation);
            write_polytope_file(out_path, ext.result);
            ordered_json o;
            o["new_vertex"] = point_json(ext.new_vertex);
            o["gained_universal"] = edge_list_json(ext.gained_universal);
            if (!report_path.empty()) emit(o, report_path);
            return kExitOk;
        }
        if (separate->parsed()) {
            Point4 o4 = point_text.empty() ? p.centroid() : parse_point(point_text);
            SeparationInstance inst(p, o4);
            CoverReport rep = min_separation(inst);
            ordered_json o;
            o["point"] = point_json(o4);
            o["s"] = rep.s_value;
            o["certificate"] = certificate_json(rep.certificate);
            o["log"] = rep.optimality_log;
            emit(o, report_path);
            return kExitOk;
        }
        if (verify->parsed()) {
            bool in_scope = true;
            try {
                if (!is_simply_linked(p, arr)) {
                    if (!force) throw NotSimplyLinked("array is not simply linked");
                    in_scope = false;
                }
            } catch (const NotLinked&) {
                if (!force) throw;
                in_scope = false;
            } catch (const PrefixNotNeighbourly&) {
                if (!force) throw;
                in_scope = false;
            }
            VerificationReport rep = verify_conjecture(p, &arr, samples, seed, true);
            emit(verification_json(p, rep, in_scope), report_path);
            std::cerr << "max_s=" << rep.max_s << " over " << rep.samples.size()
                      << " samples\n";
            return rep.ok ? kExitOk : kExitBoundViolation;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
