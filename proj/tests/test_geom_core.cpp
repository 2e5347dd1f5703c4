#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <epsnet/delaunay.hpp>
#include <epsnet/depth.hpp>
#include <epsnet/geometry.hpp>
#include <epsnet/hull.hpp>

#include <algorithm>
#include <set>
#include <vector>

using namespace epsnet;

namespace {

PointSet make2(std::initializer_list<std::pair<long long, long long>> pts) {
    PointSet P;
    P.dim = 2;
    for (auto [x, y] : pts) P.pts.push_back(Point(Rat(x), Rat(y)));
    return P;
}

// Reference halfplane depth: candidate boundary lines through every pair of
// P ∪ {x}, both sides; each candidate scored closed and symbolically shrunk.
// The shrunk variant rotates about x when x lies on the boundary, dropping
// only the lighter boundary ray. Exact for inputs in general position.
int depth_pair_oracle(const PointSet& P, const Point& x) {
    std::vector<Point> all = P.pts;
    all.push_back(x);
    const int n = P.n();
    long long best = n;
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j) {
            Rat a = all[j].x[1] - all[i].x[1];
            Rat b = all[i].x[0] - all[j].x[0];
            if (a == 0 && b == 0) continue;
            Rat c = a * all[i].x[0] + b * all[i].x[1];
            for (int side = 0; side < 2; ++side) {
                Rat aa = side ? -a : a, bb = side ? -b : b, cc = side ? -c : c;
                Rat vx = aa * x.x[0] + bb * x.x[1];
                if (vx > cc) continue;   // must contain x
                long long closed = 0, strict = 0, ray_pos = 0, ray_neg = 0, on_line_x = 0;
                for (const Point& p : P.pts) {
                    Rat v = aa * p.x[0] + bb * p.x[1];
                    if (v < cc) { ++closed; ++strict; }
                    else if (v == cc) {
                        ++closed;
                        if (p == x) { ++on_line_x; continue; }
                        // boundary points split by their position along the line
                        Rat t = bb * (p.x[0] - x.x[0]) - aa * (p.x[1] - x.x[1]);
                        if (t > 0) ++ray_pos;
                        else ++ray_neg;
                    }
                }
                best = std::min(best, closed);
                if (vx < cc) {
                    // translate inward past all boundary points
                    best = std::min(best, strict);
                } else {
                    // x on the boundary: rotate about x, dropping one ray
                    best = std::min(best, strict + on_line_x + std::min(ray_pos, ray_neg));
                }
            }
        }
    return (int)best;
}

} // namespace

TEST_CASE("orient2d examples") {
    Point a(Rat(0), Rat(0));
    CHECK(orient2d(a, Point(Rat(1), Rat(0)), Point(Rat(0), Rat(1))) == 1);
    CHECK(orient2d(a, Point(Rat(1), Rat(1)), Point(Rat(2), Rat(2))) == 0);
    CHECK(orient2d(a, Point(Rat(0), Rat(1)), Point(Rat(1), Rat(0))) == -1);
}

TEST_CASE("orient2d rational fallback agrees with the integer path") {
    SplitMix64 rng(7);
    for (int t = 0; t < 200; ++t) {
        long long c[6];
        for (long long& v : c) v = (long long)rng.below(2000) - 1000;
        Point a{Rat(c[0]), Rat(c[1])}, b{Rat(c[2]), Rat(c[3])}, d{Rat(c[4]), Rat(c[5])};
        // divide everything by 7 to force the rational path
        Point ar{Rat(c[0], 7), Rat(c[1], 7)}, br{Rat(c[2], 7), Rat(c[3], 7)},
            dr{Rat(c[4], 7), Rat(c[5], 7)};
        CHECK(orient2d(a, b, d) == orient2d(ar, br, dr));
    }
}

TEST_CASE("in_circle examples and antisymmetry") {
    Point a(Rat(1), Rat(0)), b(Rat(0), Rat(1)), c(Rat(-1), Rat(0));
    CHECK(in_circle(a, b, c, Point(Rat(0), Rat(0))) == 1);    // center inside
    CHECK(in_circle(a, b, c, Point(Rat(0), Rat(-1))) == 0);   // cocircular
    CHECK(in_circle(a, b, c, Point(Rat(5), Rat(5))) == -1);   // far outside
    CHECK_THROWS_AS(in_circle(a, Point(Rat(2), Rat(0)), Point(Rat(3), Rat(0)), b),
                    input_error);

    SplitMix64 rng(11);
    for (int t = 0; t < 100; ++t) {
        long long c8[8];
        for (long long& v : c8) v = (long long)rng.below(200) - 100;
        Point p0{Rat(c8[0]), Rat(c8[1])}, p1{Rat(c8[2]), Rat(c8[3])};
        Point p2{Rat(c8[4]), Rat(c8[5])}, p3{Rat(c8[6]), Rat(c8[7])};
        if (orient2d(p0, p1, p2) == 0) continue;
        // odd permutation of the first three arguments flips orientation but
        // the orientation-normalized predicate answer is unchanged
        CHECK(in_circle(p0, p1, p2, p3) == in_circle(p1, p0, p2, p3));
        // int256 path consistency
        const long long S = 1LL << 33;
        auto scale = [&](const Point& p) { return Point(p.x[0] * S, p.x[1] * S); };
        CHECK(in_circle(scale(p0), scale(p1), scale(p2), scale(p3)) ==
              in_circle(p0, p1, p2, p3));
    }
}

TEST_CASE("convex hull: square plus center") {
    PointSet P = make2({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 2}});
    auto hull = convex_hull(P);
    CHECK(hull.size() == 4);
    std::set<int> hs(hull.begin(), hull.end());
    CHECK(hs == std::set<int>({0, 1, 2, 3}));
    CHECK(hull_contains_all(P, hull));
    // clockwise orientation
    for (size_t i = 0; i + 2 < hull.size(); ++i)
        CHECK(orient2d(P.pts[hull[i]], P.pts[hull[i + 1]], P.pts[hull[i + 2]]) < 0);
}

TEST_CASE("convex hull: collinear degenerates to extremes") {
    PointSet P = make2({{1, 1}, {3, 3}, {2, 2}});
    auto hull = convex_hull(P);
    REQUIRE(hull.size() == 2);
    std::set<int> hs(hull.begin(), hull.end());
    CHECK(hs == std::set<int>({0, 1}));
    CHECK(convex_hull(make2({{5, 7}})).size() == 1);
}

TEST_CASE("convex hull: random sets stay weakly inside") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        PointSet P = random_point_set(30, 2, seed);
        auto hull = convex_hull(P);
        CHECK(hull_contains_all(P, hull));
        int m = (int)hull.size();
        REQUIRE(m >= 3);
        for (int i = 0; i < m; ++i)
            CHECK(orient2d(P.pts[hull[i]], P.pts[hull[(i + 1) % m]],
                           P.pts[hull[(i + 2) % m]]) < 0);
    }
}

TEST_CASE("delaunay: three points and a contained fourth") {
    PointSet tri = make2({{0, 0}, {10, 0}, {0, 10}});
    auto t1 = delaunay(tri);
    REQUIRE(t1.size() == 1);

    PointSet four = make2({{0, 0}, {10, 0}, {5, 9}, {5, 3}});
    auto t2 = delaunay(four);
    REQUIRE(t2.size() == 3);
    for (const Triangle& t : t2) {
        bool has_inner = t.a == 3 || t.b == 3 || t.c == 3;
        CHECK(has_inner);
    }
    CHECK(delaunay_all_empty(four, t2));
}

TEST_CASE("delaunay: rejects degenerate inputs") {
    CHECK_THROWS_AS(delaunay(make2({{0, 0}, {1, 1}, {2, 2}, {3, 3}})), input_error);
    // four cocircular points
    PointSet coc = make2({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    CHECK_THROWS_AS(delaunay(coc), cocircular_error);
}

TEST_CASE("delaunay: random set satisfies the empty-circle invariant and covers the hull") {
    PointSet P = random_point_set(25, 2, 42);
    auto tris = delaunay(P);
    CHECK(delaunay_all_empty(P, tris));
    // area of hull equals total triangle area, each internal edge shared twice
    auto hull = convex_hull(P);
    auto twice_area = [&](int a, int b, int c) {
        Rat v = (P.pts[b].x[0] - P.pts[a].x[0]) * (P.pts[c].x[1] - P.pts[a].x[1]) -
                (P.pts[b].x[1] - P.pts[a].x[1]) * (P.pts[c].x[0] - P.pts[a].x[0]);
        return v < 0 ? -v : v;
    };
    Rat hull_area = 0;
    for (size_t i = 1; i + 1 < hull.size(); ++i)
        hull_area += twice_area(hull[0], hull[i], hull[i + 1]);
    Rat tri_area = 0;
    std::map<std::pair<int, int>, int> edge_count;
    for (const Triangle& t : tris) {
        tri_area += twice_area(t.a, t.b, t.c);
        for (auto [u, v] : {std::pair(t.a, t.b), std::pair(t.b, t.c), std::pair(t.c, t.a)})
            ++edge_count[{std::min(u, v), std::max(u, v)}];
    }
    CHECK(tri_area == hull_area);
    for (auto& [e, cnt] : edge_count) CHECK((cnt == 1 || cnt == 2));
}

TEST_CASE("halfplane depth examples") {
    PointSet tri = make2({{0, 0}, {10, 0}, {0, 10}});
    CHECK(halfplane_depth(tri, tri.pts[0]) == 1);
    CHECK(halfplane_depth(tri, Point(Rat(50), Rat(50))) == 0);
    CHECK(halfplane_depth(tri, Point(Rat(3), Rat(3))) >= 1);
}

TEST_CASE("halfplane depth agrees with the pair-line oracle") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        PointSet P = random_point_set(20, 2, seed * 977);
        SplitMix64 rng(seed);
        for (int t = 0; t < 4; ++t) {
            Point x(Rat((long long)rng.below(1000000)), Rat((long long)rng.below(1000000)));
            CHECK(halfplane_depth(P, x) == depth_pair_oracle(P, x));
        }
        // x a member of P
        CHECK(halfplane_depth(P, P.pts[3]) == depth_pair_oracle(P, P.pts[3]));
    }
}

TEST_CASE("halfplane depth never exceeds floor(n/2)+1") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        PointSet P = random_point_set(21, 2, seed * 31);
        for (int p = 0; p < P.n(); p += 5)
            CHECK(halfplane_depth(P, P.pts[p]) <= P.n() / 2 + 1);
    }
}

TEST_CASE("centerpoint2d: small cases") {
    PointSet one = make2({{7, 9}});
    Point c1 = centerpoint2d(one);
    CHECK(c1 == one.pts[0]);

    PointSet tri = make2({{0, 0}, {10, 0}, {0, 10}});
    Point c3 = centerpoint2d(tri);
    CHECK(halfplane_depth(tri, c3) >= 1);
}

TEST_CASE("centerpoint2d: random 30-point set has depth >= 10") {
    for (std::uint64_t seed = 2; seed <= 4; ++seed) {
        PointSet P = random_point_set(30, 2, seed * 1234567);
        Point c = centerpoint2d(P);
        CHECK(halfplane_depth(P, c) >= 10);
    }
}

TEST_CASE("rank_normalize: ties broken by index") {
    PointSet P = make2({{0, 0}, {0, 1}});
    PointSet R = rank_normalize(P);
    CHECK(R.pts[0].x[0] == 0);
    CHECK(R.pts[1].x[0] == 1);
    CHECK(R.pts[0].x[1] == 0);
    CHECK(R.pts[1].x[1] == 1);
    CHECK(R.has_distinct_coordinates());
}

TEST_CASE("rank_normalize: idempotent and order preserving") {
    PointSet P = random_point_set(15, 2, 5);
    PointSet R = rank_normalize(P);
    PointSet RR = rank_normalize(R);
    for (int i = 0; i < P.n(); ++i) CHECK(R.pts[i] == RR.pts[i]);
    for (int d = 0; d < 2; ++d)
        for (int i = 0; i < P.n(); ++i)
            for (int j = 0; j < P.n(); ++j)
                if (P.pts[i].x[d] < P.pts[j].x[d]) CHECK(R.pts[i].x[d] < R.pts[j].x[d]);
}

namespace {

// all subsets realizable as (closed box) ∩ P, as sorted index vectors
std::set<std::vector<int>> box_patterns(const PointSet& P) {
    std::set<std::vector<int>> out;
    int n = P.n();
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> S;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) S.push_back(i);
        if (S.empty()) { out.insert(S); continue; }
        // bbox of S must contain exactly S
        std::vector<Rat> lo = P.pts[S[0]].x, hi = P.pts[S[0]].x;
        for (int i : S)
            for (int d = 0; d < P.dim; ++d) {
                lo[d] = std::min(lo[d], P.pts[i].x[d]);
                hi[d] = std::max(hi[d], P.pts[i].x[d]);
            }
        bool exact = true;
        for (int i = 0; i < n && exact; ++i) {
            bool inside = true;
            for (int d = 0; d < P.dim; ++d)
                if (P.pts[i].x[d] < lo[d] || P.pts[i].x[d] > hi[d]) inside = false;
            bool in_S = std::find(S.begin(), S.end(), i) != S.end();
            if (inside != in_S) exact = false;
        }
        if (exact) out.insert(S);
    }
    return out;
}

} // namespace

TEST_CASE("rank_normalize preserves box incidence patterns of a perturbation") {
    // ten points with duplicated x values
    PointSet P = make2({{0, 3}, {0, 9}, {1, 5}, {1, 1}, {2, 7},
                        {2, 2}, {0, 6}, {1, 8}, {2, 0}, {0, 4}});
    PointSet R = rank_normalize(P);
    // the index-tie perturbation: coordinate + index * delta
    PointSet Q = P;
    Rat delta(1, 1000);
    for (int i = 0; i < Q.n(); ++i)
        for (int d = 0; d < 2; ++d) Q.pts[i].x[d] += delta * i;
    CHECK(box_patterns(R) == box_patterns(Q));
}

TEST_CASE("jitter preserves per-axis order") {
    PointSet P = random_point_set(12, 2, 99);
    PointSet J = jitter_points(P, 4);
    for (int d = 0; d < 2; ++d)
        for (int i = 0; i < P.n(); ++i)
            for (int j = 0; j < P.n(); ++j)
                if (P.pts[i].x[d] < P.pts[j].x[d]) CHECK(J.pts[i].x[d] < J.pts[j].x[d]);
}
