#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "nbly/polytope.hpp"
#include "nbly/separation.hpp"

namespace nbly {

using ordered_json = nlohmann::ordered_json;

// --- polytope text format ----------------------------------------------------
//   dim 4
//   n <count>
//   v <id> <r> <r> <r> <r>     (rationals "p/q" or "p", ids 0..n-1 in order)

inline void write_polytope(std::ostream& os, const Polytope& p) {
    os << "dim 4\n";
    os << "n " << p.size() << "\n";
    for (VertexId v = 0; v < p.size(); ++v) {
        os << "v " << v;
        for (int j = 0; j < 4; ++j) os << " " << to_string(p.point(v)[j]);
        os << "\n";
    }
}

inline void write_polytope_file(const std::string& path, const Polytope& p) {
    std::ofstream os(path);
    if (!os) throw Error("cannot open " + path + " for writing");
    write_polytope(os, p);
}

inline Polytope read_polytope(std::istream& is) {
    std::string line;
    int line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(is, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            return true;
        }
        return false;
    };
    if (!next_line() || line != "dim 4") throw ParseError("expected 'dim 4'", line_no);
    if (!next_line()) throw ParseError("expected 'n <count>'", line_no);
    std::istringstream hs(line);
    std::string tag;
    int n = 0;
    if (!(hs >> tag >> n) || tag != "n" || n < 1)
        throw ParseError("expected 'n <count>'", line_no);
    std::vector<Point4> pts(n);
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        if (!next_line()) throw ParseError("unexpected end of file", line_no);
        std::istringstream vs(line);
        int id = -1;
        std::string r0, r1, r2, r3;
        if (!(vs >> tag >> id >> r0 >> r1 >> r2 >> r3) || tag != "v")
            throw ParseError("expected 'v <id> <r> <r> <r> <r>'", line_no);
        if (id < 0 || id >= n || seen[id]) throw ParseError("bad vertex id", line_no);
        std::string extra;
        if (vs >> extra) throw ParseError("trailing tokens after vertex", line_no);
        try {
            pts[id] = {parse_rational(r0), parse_rational(r1), parse_rational(r2),
                       parse_rational(r3)};
        } catch (const Error& e) {
            throw ParseError(e.what(), line_no);
        }
        seen[id] = true;
    }
    try {
        return Polytope::from_vertices(std::move(pts));
    } catch (const Error& e) {
        throw ParseError(std::string("invalid polytope: ") + e.what(), line_no);
    }
}

inline Polytope read_polytope_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("cannot open " + path);
    return read_polytope(is);
}

// One line per facet, sorted ids, lexicographic order (facets() is built in
// lexicographic order already).
inline void write_facets(std::ostream& os, const Polytope& p) {
    for (const auto& f : p.facets()) {
        os << f.verts[0];
        for (int j = 1; j < 4; ++j) os << " " << f.verts[j];
        os << "\n";
    }
}

// FNV-1a over the canonical text serialization.
inline std::string polytope_hash(const Polytope& p) {
    std::ostringstream os;
    write_polytope(os, p);
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : os.str()) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream hex;
    hex << std::hex << h;
    return hex.str();
}

// --- JSON report -------------------------------------------------------------

inline ordered_json point_json(const Point4& p) {
    ordered_json a = ordered_json::array();
    for (int j = 0; j < 4; ++j) a.push_back(to_string(p[j]));
    return a;
}

inline ordered_json hyperplane_json(const Hyperplane& h) {
    ordered_json o;
    ordered_json n = ordered_json::array();
    for (int j = 0; j < 4; ++j) n.push_back(to_string(h.normal[j]));
    o["normal"] = n;
    o["offset"] = to_string(h.offset);
    return o;
}

inline ordered_json certificate_json(const SeparationCertificate& cert) {
    ordered_json o;
    ordered_json hs = ordered_json::array();
    for (const auto& h : cert.hyperplanes) hs.push_back(hyperplane_json(h));
    o["hyperplanes"] = hs;
    ordered_json as = ordered_json::array();
    for (const auto& [f, i] : cert.assignment) {
        ordered_json e;
        e["facet"] = {f[0], f[1], f[2], f[3]};
        e["hyperplane"] = i;
        as.push_back(e);
    }
    o["assignment"] = as;
    return o;
}

inline ordered_json verification_json(const Polytope& p, const VerificationReport& rep,
                                      bool in_scope = true) {
    ordered_json o;
    o["polytope_hash"] = polytope_hash(p);
    o["seed"] = rep.seed;
    if (!in_scope) o["out_of_theorem_scope"] = true;
    ordered_json ss = ordered_json::array();
    for (const auto& s : rep.samples) {
        ordered_json e;
        e["point"] = point_json(s.point);
        e["s"] = s.s;
        ordered_json hs = ordered_json::array();
        for (const auto& h : s.certificate.hyperplanes) hs.push_back(hyperplane_json(h));
        e["hyperplanes"] = hs;
        ordered_json as = ordered_json::array();
        for (const auto& [f, i] : s.certificate.assignment) {
            ordered_json ae;
            ae["facet"] = {f[0], f[1], f[2], f[3]};
            ae["hyperplane"] = i;
            as.push_back(ae);
        }
        e["assignment"] = as;
        ss.push_back(e);
    }
    o["samples"] = ss;
    o["max_s"] = rep.max_s;
    ordered_json hist;
    for (const auto& [s, k] : rep.histogram) hist[std::to_string(s)] = k;
    o["histogram"] = hist;
    return o;
}

} // namespace nbly
