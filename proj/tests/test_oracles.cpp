#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <epsnet/oracles.hpp>
#include <epsnet/weak_verify.hpp>

#include "reference_oracles.hpp"

#include <algorithm>

using namespace epsnet;

namespace {

Net strong_net(RangeFamily fam, std::vector<int> members) {
    Net net;
    net.family = fam;
    net.strong = true;
    net.members = std::move(members);
    return net;
}

} // namespace

TEST_CASE("box oracle: empty net captures everything") {
    PointSet P = random_point_set(12, 2, 3);
    OracleReport rep = max_box_avoiding(P, strong_net(RangeFamily::boxes(2), {}), 2);
    CHECK(rep.max_count == 12);
    CHECK(rep.fraction == 1);
    CHECK(check_witness(P, {}, rep));
}

TEST_CASE("box oracle matches subset realizability, d=2") {
    SplitMix64 rng(2026);
    for (int t = 0; t < 120; ++t) {
        int n = 4 + (int)rng.below(5);   // 4..8
        PointSet P = random_point_set(n, 2, rng.next());
        int nets = (int)rng.below(3);
        std::vector<int> members;
        while ((int)members.size() < nets) {
            int m = (int)rng.below(n);
            if (std::find(members.begin(), members.end(), m) == members.end())
                members.push_back(m);
        }
        Net net = strong_net(RangeFamily::boxes(2), members);
        OracleReport rep = max_box_avoiding(P, net, 2);
        CHECK(rep.max_count == ref::max_box_subset(P, net.points(P), 2));
        CHECK(check_witness(P, net.points(P), rep));
    }
}

TEST_CASE("box oracle matches subset realizability, d=3 and d=1") {
    SplitMix64 rng(4096);
    for (int t = 0; t < 40; ++t) {
        int n = 4 + (int)rng.below(5);
        PointSet P = random_point_set(n, 3, rng.next());
        std::vector<int> members = {(int)rng.below(n)};
        Net net = strong_net(RangeFamily::boxes(3), members);
        OracleReport rep = max_box_avoiding(P, net, 3);
        CHECK(rep.max_count == ref::max_box_subset(P, net.points(P), 3));
        CHECK(check_witness(P, net.points(P), rep));
    }
    for (int t = 0; t < 20; ++t) {
        int n = 4 + (int)rng.below(5);
        PointSet P = random_point_set(n, 1, rng.next());
        Net net = strong_net(RangeFamily::boxes(1), {(int)rng.below(n)});
        OracleReport rep = max_box_avoiding(P, net, 1);
        CHECK(rep.max_count == ref::max_box_subset(P, net.points(P), 1));
        CHECK(check_witness(P, net.points(P), rep));
    }
}

TEST_CASE("box oracle rejects duplicate coordinates and weak nets") {
    PointSet P;
    P.dim = 2;
    P.pts = {Point(Rat(0), Rat(0)), Point(Rat(0), Rat(1))};
    CHECK_THROWS_AS(max_box_avoiding(P, strong_net(RangeFamily::boxes(2), {}), 2),
                    input_error);
    Net weak;
    weak.family = RangeFamily::boxes(2);
    weak.strong = false;
    PointSet Q = random_point_set(5, 2, 9);
    CHECK_THROWS_AS(max_box_avoiding(Q, weak, 2), input_error);
}

TEST_CASE("halfplane oracle matches subset realizability") {
    SplitMix64 rng(515);
    for (int t = 0; t < 100; ++t) {
        int n = 4 + (int)rng.below(4);   // 4..7
        PointSet P = random_point_set(n, 2, rng.next(), 1000);
        int nets = (int)rng.below(3);
        std::vector<int> members;
        while ((int)members.size() < nets) {
            int m = (int)rng.below(n);
            if (std::find(members.begin(), members.end(), m) == members.end())
                members.push_back(m);
        }
        Net net = strong_net(RangeFamily::halfplanes(), members);
        OracleReport rep = max_halfplane_avoiding(P, net);
        CHECK(rep.max_count == ref::max_halfplane_subset(P, net.points(P)));
        CHECK(check_witness(P, net.points(P), rep));
    }
}

TEST_CASE("disk oracle matches the lifted feasibility oracle") {
    SplitMix64 rng(991);
    for (int t = 0; t < 80; ++t) {
        int n = 4 + (int)rng.below(4);   // 4..7
        PointSet P = random_point_set(n, 2, rng.next(), 200);
        int nets = (int)rng.below(3);
        std::vector<int> members;
        while ((int)members.size() < nets) {
            int m = (int)rng.below(n);
            if (std::find(members.begin(), members.end(), m) == members.end())
                members.push_back(m);
        }
        Net net = strong_net(RangeFamily::disks(), members);
        OracleReport rep = max_disk_avoiding(P, net);
        CHECK(rep.max_count == ref::max_disk_subset(P, net.points(P)));
        CHECK(check_witness(P, net.points(P), rep));
    }
}

TEST_CASE("disk oracle with weak net points") {
    SplitMix64 rng(313);
    for (int t = 0; t < 25; ++t) {
        int n = 4 + (int)rng.below(4);
        PointSet P = random_point_set(n, 2, rng.next(), 200);
        Net net;
        net.family = RangeFamily::disks();
        net.strong = false;
        net.free_points.push_back(Point(Rat((long long)rng.below(200)),
                                        Rat((long long)rng.below(200))));
        OracleReport rep = max_disk_avoiding(P, net);
        CHECK(rep.max_count == ref::max_disk_subset(P, net.free_points));
        CHECK(check_witness(P, net.free_points, rep));
    }
}

TEST_CASE("oracle monotonicity: larger nets never see larger captures") {
    SplitMix64 rng(77);
    for (int t = 0; t < 20; ++t) {
        int n = 6 + (int)rng.below(3);
        PointSet P = random_point_set(n, 2, rng.next(), 5000);
        int a = (int)rng.below(n), b = (int)rng.below(n);
        if (a == b) b = (a + 1) % n;
        for (auto fam : {RangeFamily::boxes(2), RangeFamily::halfplanes(), RangeFamily::disks()}) {
            long long small = oracle_for(P, strong_net(fam, {a})).max_count;
            long long large = oracle_for(P, strong_net(fam, {a, b})).max_count;
            CHECK(large <= small);
        }
    }
}

TEST_CASE("epsilon_of_net: single point fully netted") {
    PointSet P;
    P.dim = 2;
    P.pts = {Point(Rat(3), Rat(4))};
    for (auto fam : {RangeFamily::boxes(2), RangeFamily::halfplanes(), RangeFamily::disks()})
        CHECK(epsilon_of_net(P, strong_net(fam, {0})) == 0);
}

TEST_CASE("verify_lower_bound: trivial ends") {
    PointSet P = random_point_set(8, 2, 1);
    auto full = verify_lower_bound(P, RangeFamily::boxes(2), 8);
    CHECK(full.fraction == 0);
    auto none = verify_lower_bound(P, RangeFamily::boxes(2), 0);
    CHECK(none.fraction == 1);
}

TEST_CASE("verify_lower_bound: threads do not change the result") {
    PointSet P = random_point_set(12, 2, 505);
    auto seq = verify_lower_bound(P, RangeFamily::boxes(2), 2, VerifyMode::Exhaustive,
                                  1000000000LL, 1);
    auto par = verify_lower_bound(P, RangeFamily::boxes(2), 2, VerifyMode::Exhaustive,
                                  1000000000LL, 4);
    CHECK(seq.fraction == par.fraction);
    CHECK(seq.net == par.net);
}

TEST_CASE("verify_lower_bound: clustered mode equals exhaustive on symmetric clusters") {
    // clusters of identical size placed far apart; within-cluster choice is
    // symmetric enough that the canonical representative suffices
    PointSet P;
    P.dim = 2;
    int cluster = 0;
    for (long long cx : {0LL, 1000LL, 2000LL}) {
        for (int t = 0; t < 3; ++t) {
            P.pts.push_back(Point(Rat(cx + t), Rat(cx + t * 7 + 13)));
            P.labels.push_back(cluster);
        }
        ++cluster;
    }
    auto ex = verify_lower_bound(P, RangeFamily::boxes(2), 2, VerifyMode::Exhaustive);
    auto cl = verify_lower_bound(P, RangeFamily::boxes(2), 2, VerifyMode::Clustered);
    CHECK(ex.fraction == cl.fraction);
}

TEST_CASE("verify_lower_bound: budget guard trips") {
    PointSet P = random_point_set(18, 2, 8);
    CHECK_THROWS_AS(verify_lower_bound(P, RangeFamily::boxes(2), 5, VerifyMode::Exhaustive, 100),
                    budget_error);
}

TEST_CASE("weak sampled verification is bounded by the strong minimum") {
    PointSet P = random_point_set(12, 2, 2718, 100);
    auto strong = verify_lower_bound(P, RangeFamily::disks(), 2);
    auto weak = verify_weak_lower_bound_sampled(P, RangeFamily::disks(), 2, 8);
    CHECK(weak.fraction <= strong.fraction);
    CHECK(weak.sample_size == 12 + 8 * 8);
}

TEST_CASE("weak sampled verification: i = 0 returns the full fraction") {
    PointSet P = random_point_set(6, 2, 4);
    auto res = verify_weak_lower_bound_sampled(P, RangeFamily::disks(), 0, 4);
    CHECK(res.fraction == 1);
}
