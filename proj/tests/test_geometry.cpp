#include <catch2/catch_amalgamated.hpp>

#include "nbly/geometry.hpp"
#include "nbly/hull.hpp"

using namespace nbly;

namespace {

// deterministic small-rational generator for property tests
struct Gen {
    uint64_t state;
    explicit Gen(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    Rational rational() {
        long num = static_cast<long>(next() % 41) - 20;
        long den = 1 + static_cast<long>(next() % 7);
        return Rational(num, den);
    }
    Point4 point() { return {rational(), rational(), rational(), rational()}; }
};

// independent oracle: recursive cofactor expansion of the 5x5 determinant
// with rows (p_i, 1), (q, 1)
Rational det_rec(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Rational d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Rational>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Rational term = m[0][j] * det_rec(std::move(minor));
        d += (j % 2 == 0) ? term : -term;
    }
    return d;
}

Sign orient_oracle(const std::array<Point4, 5>& p) {
    std::vector<std::vector<Rational>> m;
    for (const auto& pt : p) m.push_back({pt[0], pt[1], pt[2], pt[3], Rational(1)});
    return sign_of(det_rec(std::move(m)));
}

// brute-force hull membership: q in conv(pts) iff q has a nonnegative
// barycentric representation over some affinely independent 5-subset
bool hull_oracle(const Point4& q, const std::vector<Point4>& pts) {
    const std::size_t n = pts.size();
    if (n < 5) {
        // pad with repeats; conv is unchanged
        std::vector<Point4> padded = pts;
        while (padded.size() < 5) padded.push_back(pts.front());
        return hull_oracle(q, padded);
    }
    std::vector<std::size_t> sel{0, 1, 2, 3, 4};
    for (;;) {
        std::array<Point4, 5> s;
        for (int i = 0; i < 5; ++i) s[i] = pts[sel[i]];
        // solve q = sum l_i s_i, sum l_i = 1 by Cramer on the 5x5 system
        std::vector<std::vector<Rational>> a;
        for (int row = 0; row < 4; ++row) {
            std::vector<Rational> r;
            for (int i = 0; i < 5; ++i) r.push_back(s[i][row]);
            a.push_back(std::move(r));
        }
        a.push_back(std::vector<Rational>(5, Rational(1)));
        std::vector<Rational> b{q[0], q[1], q[2], q[3], Rational(1)};
        Rational det = det_rec(a);
        if (det != 0) {
            bool all_nonneg = true;
            for (int i = 0; i < 5 && all_nonneg; ++i) {
                auto ai = a;
                for (int row = 0; row < 5; ++row) ai[row][i] = b[row];
                if (det_rec(ai) / det < 0) all_nonneg = false;
            }
            if (all_nonneg) return true;
        }
        int i = 4;
        while (i >= 0 && sel[i] == n - 5 + i) --i;
        if (i < 0) break;
        ++sel[i];
        for (int j = i + 1; j < 5; ++j) sel[j] = sel[j - 1] + 1;
    }
    return false;
}

} // namespace

TEST_CASE("orient is alternating under argument swaps") {
    Gen g(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::array<Point4, 5> p{g.point(), g.point(), g.point(), g.point(), g.point()};
        Sign base = orient(p[0], p[1], p[2], p[3], p[4]);
        REQUIRE(orient(p[1], p[0], p[2], p[3], p[4]) == opposite(base));
        REQUIRE(orient(p[0], p[2], p[1], p[3], p[4]) == opposite(base));
        REQUIRE(orient(p[0], p[1], p[3], p[2], p[4]) == opposite(base));
    }
}

TEST_CASE("orient matches the recursive determinant oracle") {
    Gen g(23);
    for (int trial = 0; trial < 60; ++trial) {
        std::array<Point4, 5> p{g.point(), g.point(), g.point(), g.point(), g.point()};
        REQUIRE(orient(p[0], p[1], p[2], p[3], p[4]) == orient_oracle(p));
    }
}

TEST_CASE("spanning points lie on their hyperplane") {
    Gen g(37);
    for (int trial = 0; trial < 30; ++trial) {
        Point4 a = g.point(), b = g.point(), c = g.point(), d = g.point();
        try {
            Hyperplane h = hyperplane_through(a, b, c, d);
            for (const auto& x : {a, b, c, d}) REQUIRE(side_of(h, x) == Sign::zero);
        } catch (const DegenerateSpan&) {
            REQUIRE(orient_oracle({a, b, c, d, a}) == Sign::zero);
        }
    }
}

TEST_CASE("hyperplanes are canonical: coprime integer normal, leading sign positive") {
    Hyperplane h = hyperplane_through({0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0});
    Integer g = 0;
    bool leading_checked = false;
    for (const auto& v : h.normal) {
        REQUIRE(denominator(v) == 1);
        g = boost::multiprecision::gcd(g, numerator(v));
        if (!leading_checked && v != 0) {
            REQUIRE(v > 0);
            leading_checked = true;
        }
    }
    REQUIRE(g == 1);
    // the same flat from different spanning points compares equal
    Hyperplane h2 = hyperplane_through({2, 3, 0, 0}, {1, 0, 0, 0}, {5, 1, 0, 0}, {0, 7, 1, 0});
    REQUIRE(h == h2);
}

TEST_CASE("degenerate span is rejected") {
    REQUIRE_THROWS_AS(
        hyperplane_through({0, 0, 0, 0}, {1, 0, 0, 0}, {2, 0, 0, 0}, {3, 0, 0, 0}),
        DegenerateSpan);
}

TEST_CASE("in_convex_hull agrees with the barycentric oracle") {
    Gen g(53);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Point4> pts;
        int n = 5 + static_cast<int>(g.next() % 4);
        for (int i = 0; i < n; ++i) pts.push_back(g.point());
        for (int probes = 0; probes < 4; ++probes) {
            Point4 q = g.point();
            REQUIRE(in_convex_hull(q, pts) == hull_oracle(q, pts));
        }
        // a convex combination must always be inside
        Point4 mix;
        for (const auto& p : pts) mix = mix + p;
        mix = Rational(1, n) * mix;
        REQUIRE(in_convex_hull(mix, pts));
        REQUIRE(hull_oracle(mix, pts));
    }
}

TEST_CASE("farkas separator output passes strictly_separates") {
    Gen g(71);
    int separated = 0;
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Point4> pts;
        for (int i = 0; i < 6; ++i) pts.push_back(g.point());
        Point4 q = g.point();
        if (in_convex_hull(q, pts)) {
            REQUIRE_THROWS_AS(farkas_separator(q, pts), NotSeparable);
        } else {
            Hyperplane h = farkas_separator(q, pts);
            REQUIRE(strictly_separates(h, {q}, pts));
            ++separated;
        }
    }
    REQUIRE(separated > 0);
}

TEST_CASE("rational text round-trip") {
    REQUIRE(to_string(Rational(3, 7)) == "3/7");
    REQUIRE(to_string(Rational(-4, 2)) == "-2");
    REQUIRE(parse_rational("22/7") == Rational(22, 7));
    REQUIRE(parse_rational("-5") == Rational(-5));
    REQUIRE_THROWS_AS(parse_rational("1/0"), ParseError);
    REQUIRE_THROWS_AS(parse_rational("x"), ParseError);
}
