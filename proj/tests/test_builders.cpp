#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <epsnet/builders.hpp>
#include <epsnet/generators.hpp>
#include <epsnet/oracles.hpp>

#include <algorithm>
#include <set>

using namespace epsnet;

namespace {

// oracle-measured fraction must stay within claimed eps plus rounding slack
void check_net_bound(const PointSet& P, const Net& net) {
    OracleReport rep = oracle_for(P, net);
    Rat slack(net.size() + 4, P.n());
    CHECK(rep.fraction <= net.claimed_eps + slack);
    CHECK(check_witness(P, net.points(P), rep));
}

} // namespace

TEST_CASE("box strong centerpoint: lower-bound instance is met exactly") {
    auto g = gen_box_lb(2, 5);
    Net net = build_box_strong_centerpoint(g.point_set, 2);
    CHECK(net.size() == 1);
    CHECK(net.claimed_eps == Rat(3, 4));
    OracleReport rep = max_box_avoiding(g.point_set, net, 2);
    // the instance realizes exactly 3n/4 against the best single point
    CHECK(rep.fraction == Rat(3, 4));
}

TEST_CASE("box strong centerpoint: random sets never exceed (2d-1)/2d") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        PointSet P = random_point_set(40, 2, seed * 19);
        Net net = build_box_strong_centerpoint(P, 2);
        OracleReport rep = max_box_avoiding(P, net, 2);
        CHECK(rep.fraction <= Rat(3, 4));
    }
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        PointSet P = random_point_set(18, 3, seed * 7);
        Net net = build_box_strong_centerpoint(P, 3);
        OracleReport rep = max_box_avoiding(P, net, 3);
        CHECK(rep.fraction <= Rat(5, 6));
    }
}

TEST_CASE("box strong centerpoint: small instance returns the central point") {
    // 2d+1 points: one per axis pole, one at the origin
    auto g = gen_box_lb(2, 1);
    PointSet P = g.point_set;
    P.pts.push_back(Point(Rat(1, 100), Rat(1, 100)));
    P = rank_normalize(P);
    Net net = build_box_strong_centerpoint(P, 2);
    CHECK(net.members == std::vector<int>{4});   // the origin point
}

TEST_CASE("box strong centerpoint: errors") {
    PointSet tiny = random_point_set(4, 2, 3);
    CHECK_THROWS_AS(build_box_strong_centerpoint(tiny, 2), input_error);
    PointSet dup;
    dup.dim = 2;
    for (int i = 0; i < 6; ++i) dup.pts.push_back(Point(Rat(0), Rat(i)));
    CHECK_THROWS_AS(build_box_strong_centerpoint(dup, 2), input_error);
}

TEST_CASE("find_dominant_point: two points and the counting checks") {
    PointSet P;
    P.dim = 2;
    P.pts = {Point(Rat(0), Rat(0)), Point(Rat(1), Rat(1))};
    CHECK(find_dominant_point(P) == 0);

    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        PointSet Q = random_point_set(50, 2, seed * 101);
        int p = find_dominant_point(Q);
        long long cx = 0, cy = 0;
        for (const Point& q : Q.pts) {
            if (q.x[0] >= Q.pts[p].x[0]) ++cx;
            if (q.x[1] >= Q.pts[p].x[1]) ++cy;
        }
        CHECK(cx >= 25);
        CHECK(cy >= 25);
    }
}

TEST_CASE("rect2 net: bound holds on random sets, case-1 hit when center occupied") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        PointSet P = random_point_set(64, 2, seed * 13);
        Net net = build_rect_net2(P);
        CHECK(net.size() <= 2);
        CHECK(net.claimed_eps == Rat(5, 8));
        OracleReport rep = max_box_avoiding(P, net, 2);
        CHECK(rep.fraction <= Rat(5, 8) + Rat(net.size() + 4, P.n()));
    }
    // a point sitting in the middle cell makes a singleton net
    PointSet P = rank_normalize(random_point_set(33, 2, 5));
    Net net = build_rect_net2(P);
    CHECK(net.size() >= 1);
}

TEST_CASE("rect2 net: small-n fallback recomputes its claim") {
    PointSet P = random_point_set(5, 2, 77);
    Net net = build_rect_net2(P);
    CHECK(net.fallback);
    CHECK(net.claimed_eps == epsilon_of_net(P, net));
}

TEST_CASE("recursive rectangle nets: certified eps table matches the recursions") {
    // the recursion's own bound, evaluated bottom-up, reproduces the table
    auto onept_eps = [&](int x, int y) {
        int z = (x + y) / 2;
        Rat ex = rect_eps_for_size(x), ey = rect_eps_for_size(y), ez = rect_eps_for_size(z);
        Rat a = Rat(3, 4) * ex, b = ey * ez / (ey + ez);
        return std::max(a, b);
    };
    auto grid_eps = [&](int x, int y, int j, int k) {
        Rat a = Rat(2) * rect_eps_for_size(j) / x, b = rect_eps_for_size(k) / y;
        return std::max(a, b);
    };
    CHECK(onept_eps(1, 0) == Rat(9, 16));
    CHECK(onept_eps(2, 0) == Rat(15, 32));
    CHECK(onept_eps(3, 0) == Rat(3, 7));
    CHECK(onept_eps(4, 0) == Rat(5, 13));
    CHECK(grid_eps(4, 2, 0, 0) == Rat(1, 2));
    CHECK(grid_eps(5, 2, 0, 1) == Rat(2, 5));
    CHECK(grid_eps(4, 2, 1, 1) == Rat(3, 8));
    for (int i = 1; i <= 10; ++i) {
        PointSet P = random_point_set(96, 2, 4242 + i);
        Net net = build_rect_net_for_size(P, i);
        CHECK(net.size() <= i);
        CHECK(net.claimed_eps == rect_eps_for_size(i));
    }
}

TEST_CASE("onept and grid nets: oracle certifies the claim with slack") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        PointSet P = random_point_set(160, 2, seed * 3083);
        Net n3 = build_rect_net_onept(P, 1, 0);
        CHECK(n3.size() <= 3);
        check_net_bound(P, n3);
        Net n5 = build_rect_net_onept(P, 2, 0);
        CHECK(n5.size() <= 5);
        check_net_bound(P, n5);
        Net n4 = build_rect_net_grid(P, 4, 2, 0, 0);
        CHECK(n4.size() <= 4);
        check_net_bound(P, n4);
        Net n8 = build_rect_net_grid(P, 5, 2, 0, 1);
        CHECK(n8.size() <= 8);
        check_net_bound(P, n8);
    }
}

TEST_CASE("halfspace net: triangle with i=2 keeps two vertices") {
    PointSet tri;
    tri.dim = 2;
    tri.pts = {Point(Rat(0), Rat(0)), Point(Rat(10), Rat(1)), Point(Rat(4), Rat(9))};
    Net net = build_halfspace_net(tri, 2);
    CHECK(net.size() <= 2);
    OracleReport rep = max_halfplane_avoiding(tri, net);
    CHECK(rep.max_count <= 1);
}

TEST_CASE("halfspace net: size <= i and oracle <= ceil(2n/(i+1))") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        PointSet P = random_point_set(60, 2, seed * 761);
        for (int i = 1; i <= 6; ++i) {
            Net net = build_halfspace_net(P, i);
            CHECK(net.size() <= i);
            OracleReport rep = max_halfplane_avoiding(P, net);
            CHECK(rep.max_count <= ceil_div(2 * 60, i + 1));
        }
    }
}

TEST_CASE("halfspace net: collinear degenerate falls back to the extremes") {
    PointSet line;
    line.dim = 2;
    for (int i = 0; i < 7; ++i) line.pts.push_back(Point(Rat(i), Rat(2 * i + 1)));
    Net net = build_halfspace_net(line, 2);
    CHECK(net.fallback);
    CHECK(net.size() == 2);
    CHECK(net.claimed_eps == epsilon_of_net(line, net));
}

TEST_CASE("disk net: four points, inner point's edge, tight capture bound") {
    PointSet P;
    P.dim = 2;
    P.pts = {Point(Rat(0), Rat(0)), Point(Rat(10), Rat(0)), Point(Rat(5), Rat(9)),
             Point(Rat(5), Rat(3))};
    Net net = build_disk_net2(P);
    CHECK(net.size() == 2);
    OracleReport rep = max_disk_avoiding(P, net);
    CHECK(rep.max_count <= 2);
}

TEST_CASE("disk net: crossing counts and the 2/3 bound on random sets") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        PointSet P = random_point_set(30, 2, seed * 37, 10000);
        DiskNetDiagnostics diag;
        Net net = build_disk_net2(P, &diag);
        CHECK(net.size() == 2);
        CHECK(diag.crossings[0] + diag.crossings[1] + diag.crossings[2] == P.n() - 3);
        long long best = std::max({diag.crossings[0], diag.crossings[1], diag.crossings[2]});
        CHECK(best >= ceil_div(P.n() - 3, 3));
        OracleReport rep = max_disk_avoiding(P, net);
        CHECK(rep.max_count <= ceil_div(2 * P.n(), 3));
        CHECK(check_witness(P, net.points(P), rep));
    }
}

TEST_CASE("builders emit strong nets with valid members") {
    PointSet P = random_point_set(40, 2, 11);
    for (const Net& net : {build_rect_net2(P), build_halfspace_net(P, 3), build_disk_net2(P)}) {
        net.check_strong(P);
        std::set<int> uniq(net.members.begin(), net.members.end());
        CHECK(uniq.size() == net.members.size());
    }
}
