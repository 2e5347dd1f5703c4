#pragma once

// Lower-bound instance generators. Every generator emits a labeled PointSet
// together with the bound it claims, the slack constant its integer effects
// cost, and (where the construction names them) explicit witness objects.
// Instances self-check their geometric preconditions exactly at build time.
//
// Coordinates are snapped to a power-of-ten grid at least as fine as 1e6 * n
// and carry a per-point uniqueness offset, so every instance has distinct
// per-axis coordinates and serializes to exact decimal strings.

#include <epsnet/geometry.hpp>
#include <epsnet/net.hpp>
#include <epsnet/oracles.hpp>

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace epsnet {

struct GeneratorInstance {
    std::string name;
    std::vector<std::pair<std::string, long long>> params;
    PointSet point_set;
    RangeFamily family;
    int net_size = 1;
    bool weak = false;
    Rat claimed_lower_bound = 0;
    long long lb_slack_count = 0;   // verify passes iff count >= claimed*n - slack
    std::vector<std::pair<std::string, WitnessObject>> witnesses;

    std::string provenance() const {
        std::string s = name;
        for (auto& [k, v] : params) s += " --" + k + " " + std::to_string(v);
        return s;
    }
};

namespace detail {

inline long long pow10_at_least(long long v) {
    long long p = 1;
    while (p < v) p *= 10;
    return p;
}

// snap-to-grid helper; design coordinates are O(10)
struct Grid {
    long long base;   // fine grid denominator
    long long uniq;   // uniqueness sub-grid
    explicit Grid(int n) {
        base = pow10_at_least(1000000LL * std::max(n, 1));
        uniq = pow10_at_least(2LL * std::max(n, 1) + 2);
    }
    Rat denom() const { return Rat(base) * uniq; }
    // value from a double design coordinate, distinct per (value, tag)
    Rat at(double v, long long tag) const {
        long long num = (long long)std::llround(v * (double)base);
        return Rat(BigInt(num) * uniq + tag, BigInt(base) * uniq);
    }
    Rat exact(const Rat& v, long long tag) const {
        return v + Rat(tag, BigInt(base) * uniq);
    }
};

inline void require(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("generator self-check failed: " + what);
}

} // namespace detail

// ---------------------------------------------------------------------------
// boxes: strong centerpoint lower bound, 2d clusters at the axis poles

inline GeneratorInstance gen_box_lb(int d, int k) {
    if (d < 1 || k < 1) throw input_error("gen_box_lb: need d >= 1, k >= 1");
    int n = 2 * d * k;
    detail::Grid grid(n);
    GeneratorInstance g;
    g.name = "box-lb";
    g.params = {{"d", d}, {"k", k}};
    g.family = RangeFamily::boxes(d);
    g.net_size = 1;
    g.claimed_lower_bound = Rat(2 * d - 1, 2 * d);
    g.lb_slack_count = 0;
    g.point_set.dim = d;
    int tag = 1;
    for (int c = 0; c < 2 * d; ++c) {
        int axis = c / 2;
        int sgn = (c % 2 == 0) ? 1 : -1;
        for (int t = 0; t < k; ++t, ++tag) {
            Point p;
            p.x.assign(d, Rat(0));
            for (int dim = 0; dim < d; ++dim)
                p.x[dim] = grid.at(dim == axis ? (double)sgn : 0.0, tag);
            g.point_set.pts.push_back(p);
            g.point_set.labels.push_back(c);
        }
    }
    detail::require(g.point_set.has_distinct_coordinates(), "box-lb distinct coordinates");
    return g;
}

// ---------------------------------------------------------------------------
// rectangles, i = 2: three equal subsets on segments; every 2-net leaves a
// 5/9-heavy rectangle

inline GeneratorInstance gen_rect2_lb(int k) {
    if (k < 1) throw input_error("gen_rect2_lb: need k >= 1");
    int per = 3 * k;
    int n = 3 * per;
    detail::Grid grid(n);
    GeneratorInstance g;
    g.name = "rect2-lb";
    g.params = {{"k", k}};
    g.family = RangeFamily::boxes(2);
    g.net_size = 2;
    g.claimed_lower_bound = Rat(5, 9);
    g.lb_slack_count = 0;
    g.point_set.dim = 2;
    // two descending unit-slope segments along a NW-SE diagonal plus one
    // ascending segment in the pocket between them; exhaustive verification
    // of this layout meets 5n/9 exactly at every multiplicity tried
    const double seg[3][4] = {
        {0.0, 3.0, 3.0, 0.0},         // descending, upper right
        {-5.0, 0.25, -1.75, -3.0},    // descending, lower left
        {-0.25, -3.25, 3.0, 0.0},     // ascending, lower pocket
    };
    int tag = 1;
    for (int s = 0; s < 3; ++s)
        for (int t = 0; t < per; ++t, ++tag) {
            double u = (t + 0.5) / per;
            double x = seg[s][0] + (seg[s][2] - seg[s][0]) * u;
            double y = seg[s][1] + (seg[s][3] - seg[s][1]) * u;
            g.point_set.pts.push_back(Point(grid.at(x, tag), grid.at(y, tag)));
            g.point_set.labels.push_back(s);
        }
    detail::require(g.point_set.has_distinct_coordinates(), "rect2-lb distinct coordinates");
    return g;
}

// ---------------------------------------------------------------------------
// rectangles, i = 3: twenty equal subsets on a circle, five per quadrant;
// any eight consecutive subsets fit in one rectangle avoiding the rest

inline GeneratorInstance gen_rect3_lb(int k) {
    if (k < 1) throw input_error("gen_rect3_lb: need k >= 1");
    const int clusters = 20;
    int n = clusters * k;
    detail::Grid grid(n);
    GeneratorInstance g;
    g.name = "rect3-lb";
    g.params = {{"k", k}};
    g.family = RangeFamily::boxes(2);
    g.net_size = 3;
    g.claimed_lower_bound = Rat(2, 5);
    g.lb_slack_count = 0;
    g.point_set.dim = 2;
    const double pi = 3.14159265358979323846;
    int tag = 1;
    for (int c = 0; c < clusters; ++c)
        for (int t = 0; t < k; ++t, ++tag) {
            double theta = 2 * pi * (c + 0.5) / clusters +
                           (t - (k - 1) / 2.0) * (2 * pi / (clusters * 8.0 * k));
            g.point_set.pts.push_back(
                Point(grid.at(4 * std::cos(theta), tag), grid.at(4 * std::sin(theta), tag)));
            g.point_set.labels.push_back(c);
        }
    detail::require(g.point_set.has_distinct_coordinates(), "rect3-lb distinct coordinates");
    // any 8 consecutive clusters are exactly captured by their bounding box
    for (int w = 0; w < clusters; ++w) {
        Rat xlo, xhi, ylo, yhi;
        bool first = true;
        auto in_window = [&](int label) {
            int rel = (label - w + clusters) % clusters;
            return rel < 8;
        };
        for (int p = 0; p < n; ++p) {
            if (!in_window(g.point_set.labels[p])) continue;
            const Point& pt = g.point_set.pts[p];
            if (first) { xlo = xhi = pt.x[0]; ylo = yhi = pt.x[1]; first = false; continue; }
            xlo = std::min(xlo, pt.x[0]); xhi = std::max(xhi, pt.x[0]);
            ylo = std::min(ylo, pt.x[1]); yhi = std::max(yhi, pt.x[1]);
        }
        for (int p = 0; p < n; ++p) {
            const Point& pt = g.point_set.pts[p];
            bool inside = pt.x[0] >= xlo && pt.x[0] <= xhi && pt.x[1] >= ylo && pt.x[1] <= yhi;
            detail::require(inside == in_window(g.point_set.labels[p]),
                            "rect3-lb 8-window bounding box exactness");
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// rectangles, i = 4: topmost and bottommost subsets plus two quadrilaterals

inline GeneratorInstance gen_rect4_lb(int k) {
    if (k < 1) throw input_error("gen_rect4_lb: need k >= 1");
    const int clusters = 10;
    int n = clusters * k;
    detail::Grid grid(n);
    GeneratorInstance g;
    g.name = "rect4-lb";
    g.params = {{"k", k}};
    g.family = RangeFamily::boxes(2);
    g.net_size = 4;
    g.claimed_lower_bound = Rat(3, 10);
    g.lb_slack_count = 0;
    g.point_set.dim = 2;
    // cluster centers: top, bottom, upper diamond, lower diamond
    const double ctr[clusters][2] = {
        {0.0, 9.0},                                            // topmost
        {0.0, -9.0},                                           // bottommost
        {0.0, 5.0}, {3.0, 3.0}, {0.0, 1.0}, {-3.0, 3.0},       // upper quadrilateral
        {0.0, -1.0}, {3.0, -3.0}, {0.0, -5.0}, {-3.0, -3.0},   // lower quadrilateral
    };
    int tag = 1;
    for (int c = 0; c < clusters; ++c)
        for (int t = 0; t < k; ++t, ++tag) {
            double spread = 0.02 * (t - (k - 1) / 2.0);
            g.point_set.pts.push_back(Point(grid.at(ctr[c][0] + spread, tag),
                                            grid.at(ctr[c][1] + spread, tag)));
            g.point_set.labels.push_back(c);
        }
    detail::require(g.point_set.has_distinct_coordinates(), "rect4-lb distinct coordinates");
    return g;
}

// ---------------------------------------------------------------------------
// rectangles, i = 5: eight equal subsets in two concentric layers

inline GeneratorInstance gen_rect5_lb(int k) {
    if (k < 1) throw input_error("gen_rect5_lb: need k >= 1");
    const int clusters = 8;
    int n = clusters * k;
    detail::Grid grid(n);
    GeneratorInstance g;
    g.name = "rect5-lb";
    g.params = {{"k", k}};
    g.family = RangeFamily::boxes(2);
    g.net_size = 5;
    g.claimed_lower_bound = Rat(1, 4);
    g.lb_slack_count = 0;
    g.point_set.dim = 2;
    // outer layer: square corners; inner layer: axis diamond
    const double ctr[clusters][2] = {
        {6.0, 6.0}, {6.0, -6.0}, {-6.0, -6.0}, {-6.0, 6.0},    // outer
        {0.0, 1.5}, {1.5, 0.0}, {0.0, -1.5}, {-1.5, 0.0},      // inner
    };
    int tag = 1;
    for (int c = 0; c < clusters; ++c)
        for (int t = 0; t < k; ++t, ++tag) {
            double spread = 0.02 * (t - (k - 1) / 2.0);
            g.point_set.pts.push_back(Point(grid.at(ctr[c][0] + spread, tag),
                                            grid.at(ctr[c][1] + spread, tag)));
            g.point_set.labels.push_back(c);
        }
    detail::require(g.point_set.has_distinct_coordinates(), "rect5-lb distinct coordinates");
    return g;
}

// ---------------------------------------------------------------------------
// halfspaces, general i: clusters on inward-facing convex arcs at the
// vertices of a regular polygon. Every point's tangent halfplane captures
// the rest of its own cluster and nothing else.

inline GeneratorInstance gen_halfspace_lb(int i, int k) {
    if (i < 1 || k < 1) throw input_error("gen_halfspace_lb: need i >= 1, k >= 1");
    int m = (i % 2 == 1) ? (i + 1) / 2 : (i + 2) / 2;
    int n = m * k;
    detail::Grid grid(n);
    GeneratorInstance g;
    g.name = "halfspace-lb";
    g.params = {{"i", i}, {"k", k}};
    g.family = RangeFamily::halfplanes();
    g.net_size = i;
    g.claimed_lower_bound = Rat(2, (i % 2 == 1) ? i + 1 : i + 2);
    g.lb_slack_count = 1;
    g.point_set.dim = 2;

    const double pi = 3.14159265358979323846;
    const double G = 10.0, R = 8.0;
    std::vector<Point> local_centers(m);
    int tag = 1;
    for (int c = 0; c < m; ++c) {
        double phi = 2 * pi * c / m + 0.19;
        double ox = (G + R) * std::cos(phi), oy = (G + R) * std::sin(phi);
        local_centers[c] = Point(grid.at(ox, 0), grid.at(oy, 0));
        for (int t = 0; t < k; ++t, ++tag) {
            double beta = (k == 1) ? 0.0 : 0.5 * (2.0 * t / (k - 1) - 1.0);
            double psi = phi + pi + beta;
            g.point_set.pts.push_back(Point(grid.at(ox + R * std::cos(psi), tag),
                                            grid.at(oy + R * std::sin(psi), tag)));
            g.point_set.labels.push_back(c);
        }
    }
    detail::require(g.point_set.has_distinct_coordinates(), "halfspace-lb distinct coordinates");
    // tangent separation: for p in cluster c with outward normal p - O_c,
    // the rest of the cluster sits strictly behind the tangent at p and all
    // other clusters strictly beyond it
    for (int p = 0; p < n; ++p) {
        int c = g.point_set.labels[p];
        const Point& pp = g.point_set.pts[p];
        Rat ux = pp.x[0] - local_centers[c].x[0];
        Rat uy = pp.x[1] - local_centers[c].x[1];
        for (int q = 0; q < n; ++q) {
            if (q == p) continue;
            Rat dot = (g.point_set.pts[q].x[0] - pp.x[0]) * ux +
                      (g.point_set.pts[q].x[1] - pp.x[1]) * uy;
            if (g.point_set.labels[q] == c)
                detail::require(dot < 0, "halfspace-lb tangent keeps own cluster");
            else
                detail::require(dot > 0, "halfspace-lb tangent excludes other clusters");
        }
    }
    return g;
}

// halfspaces, i = 2: 3n/5 points on a circular arc, 2n/5 far beyond all of
// the arc's tangents

inline GeneratorInstance gen_halfspace2_lb(int k) {
    if (k < 1) throw input_error("gen_halfspace2_lb: need k >= 1");
    int n = 5 * k;
    detail::Grid grid(n);
    GeneratorInstance g;
    g.name = "halfspace2-lb";
    g.params = {{"k", k}};
    g.family = RangeFamily::halfplanes();
    g.net_size = 2;
    g.claimed_lower_bound = Rat(3, 5);
    g.lb_slack_count = 1;
    g.point_set.dim = 2;

    const double pi = 3.14159265358979323846;
    int tag = 1;
    int sA = 3 * k, sT = 2 * k;
    for (int t = 0; t < sA; ++t, ++tag) {
        double theta = pi / 3 + (pi / 3) * (t + 0.5) / sA;   // 60..120 degrees
        g.point_set.pts.push_back(
            Point(grid.at(4 * std::cos(theta), tag), grid.at(4 * std::sin(theta), tag)));
        g.point_set.labels.push_back(0);
    }
    for (int t = 0; t < sT; ++t, ++tag) {
        double spread = 0.01 * (t - (sT - 1) / 2.0);
        g.point_set.pts.push_back(Point(grid.at(spread, tag), grid.at(12.0 + spread, tag)));
        g.point_set.labels.push_back(1);
    }
    detail::require(g.point_set.has_distinct_coordinates(), "halfspace2-lb distinct coordinates");
    // tangent at any arc point separates the rest of the arc from T
    for (int p = 0; p < sA; ++p) {
        const Point& pp = g.point_set.pts[p];
        for (int q = 0; q < n; ++q) {
            if (q == p) continue;
            Rat dot = (g.point_set.pts[q].x[0] - pp.x[0]) * pp.x[0] +
                      (g.point_set.pts[q].x[1] - pp.x[1]) * pp.x[1];
            if (g.point_set.labels[q] == 0)
                detail::require(dot < 0, "halfspace2-lb arc behind tangent");
            else
                detail::require(dot > 0, "halfspace2-lb far cluster beyond tangent");
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// circle sectors: n = i*kk + 1 points on a circle plus the i pairwise
// disjoint sector rectangles

inline GeneratorInstance gen_circle_sectors(int i, int kk) {
    if (i < 4 || kk < 1) throw input_error("gen_circle_sectors: need i >= 4, kk >= 1");
    int n = i * kk + 1;
    detail::Grid grid(n);
    GeneratorInstance g;
    g.name = "circle-sectors";
    g.params = {{"i", i}, {"kk", kk}};
    g.family = RangeFamily::boxes(2);
    g.net_size = i;
    g.claimed_lower_bound = Rat(1, i);
    g.lb_slack_count = 1;   // 1/i - kk/n = 1/(i n); one point of count slack covers it
    g.point_set.dim = 2;

    const double pi = 3.14159265358979323846;
    const double alpha = 0.37;   // sector boundary offset, keeps points off the lines
    std::vector<int> sector_of(n);
    int tag = 1;
    for (int t = 0; t < n; ++t, ++tag) {
        double theta = 2 * pi * t / n + alpha + 0.003;
        g.point_set.pts.push_back(
            Point(grid.at(4 * std::cos(theta), tag), grid.at(4 * std::sin(theta), tag)));
        double rel = std::fmod(theta - alpha, 2 * pi);
        if (rel < 0) rel += 2 * pi;
        sector_of[t] = std::min(i - 1, (int)(rel / (2 * pi / i)));
        g.point_set.labels.push_back(sector_of[t]);
    }
    detail::require(g.point_set.has_distinct_coordinates(), "circle-sectors distinct coordinates");
    // sector rectangle = exact bounding box of the sector's points
    for (int s = 0; s < i; ++s) {
        BoxObj box;
        bool first = true;
        Rat xlo, xhi, ylo, yhi;
        long long count = 0;
        for (int p = 0; p < n; ++p) {
            if (sector_of[p] != s) continue;
            ++count;
            const Point& pt = g.point_set.pts[p];
            if (first) { xlo = xhi = pt.x[0]; ylo = yhi = pt.x[1]; first = false; continue; }
            xlo = std::min(xlo, pt.x[0]); xhi = std::max(xhi, pt.x[0]);
            ylo = std::min(ylo, pt.x[1]); yhi = std::max(yhi, pt.x[1]);
        }
        detail::require(count >= kk, "circle-sectors sector has its kk points");
        box.lo = {xlo, ylo};
        box.hi = {xhi, yhi};
        g.witnesses.emplace_back("R" + std::to_string(s), box);
    }
    // exact-capture and pairwise disjointness
    for (int s = 0; s < i; ++s) {
        const BoxObj& box = std::get<BoxObj>(g.witnesses[s].second);
        for (int p = 0; p < n; ++p)
            detail::require(box.contains(g.point_set.pts[p]) == (sector_of[p] == s),
                            "circle-sectors rectangle captures exactly its sector");
    }
    for (int s = 0; s < i; ++s)
        for (int t = s + 1; t < i; ++t) {
            const BoxObj& a = std::get<BoxObj>(g.witnesses[s].second);
            const BoxObj& b = std::get<BoxObj>(g.witnesses[t].second);
            bool disjoint = a.hi[0] < b.lo[0] || b.hi[0] < a.lo[0] ||
                            a.hi[1] < b.lo[1] || b.hi[1] < a.lo[1];
            detail::require(disjoint, "circle-sectors rectangles pairwise disjoint");
        }
    return g;
}

// ---------------------------------------------------------------------------
// disks, weak nets, i = 3: six subsets on two concentric circles with the
// named witness objects of the case analysis

inline GeneratorInstance gen_disk_weak3_lb(int k) {
    if (k < 1) throw input_error("gen_disk_weak3_lb: need k >= 1");
    int n = 6 * k;
    detail::Grid grid(n);
    GeneratorInstance g;
    g.name = "disk-weak3-lb";
    g.params = {{"k", k}};
    g.family = RangeFamily::disks();
    g.net_size = 3;
    g.weak = true;
    g.claimed_lower_bound = Rat(1, 3);
    g.lb_slack_count = 0;
    g.point_set.dim = 2;

    const double pi = 3.14159265358979323846;
    const double r = 2.0, R = 5.0;
    const double ang[3] = {pi / 2, pi / 2 + 2 * pi / 3, pi / 2 + 4 * pi / 3};
    int tag = 1;
    // labels: inner clusters 0..2, outer clusters 3..5 (cluster j faces ang[j%3])
    for (int ring = 0; ring < 2; ++ring)
        for (int c = 0; c < 3; ++c)
            for (int t = 0; t < k; ++t, ++tag) {
                double rad = ring == 0 ? r : R;
                double theta = ang[c] + 0.02 * (t - (k - 1) / 2.0);
                g.point_set.pts.push_back(Point(grid.at(rad * std::cos(theta), tag),
                                                grid.at(rad * std::sin(theta), tag)));
                g.point_set.labels.push_back(ring * 3 + c);
            }
    detail::require(g.point_set.has_distinct_coordinates(), "disk-weak3-lb distinct coordinates");

    auto radial_disk = [&](int c, double rad_center, double rho) {
        return DiskObj{Point(grid.at(rad_center * std::cos(ang[c]), 0),
                             grid.at(rad_center * std::sin(ang[c]), 0)),
                       Rat((long long)std::llround(rho * rho * 100), 100)};
    };
    // D_j: disk around the radial pair (inner_j, outer_j)
    for (int c = 0; c < 3; ++c)
        g.witnesses.emplace_back("D" + std::to_string(c + 1),
                                 radial_disk(c, (r + R) / 2, (R - r) / 2 + 0.4));
    // D'_1: a second disk holding the same top pair, shifted outward
    g.witnesses.emplace_back("D'1", radial_disk(0, (r + R) / 2 + 0.8, (R - r) / 2 + 1.3));
    // H_12 / H_23: halfplanes holding exactly two outer clusters
    auto outer_pair_halfplane = [&](int c_excl) {
        // direction toward the excluded cluster; keep everything with small dot
        double ux = std::cos(ang[c_excl]), uy = std::sin(ang[c_excl]);
        Rat a = grid.at(ux, 0), b = grid.at(uy, 0);
        // threshold between -R/2 (the two kept outer clusters) and -r/2 (inner)
        Rat c = grid.at(-(R + r) / 4, 0);
        return HalfplaneObj{a, b, c};
    };
    g.witnesses.emplace_back("H12", outer_pair_halfplane(2));   // keeps outer 0,1
    g.witnesses.emplace_back("H23", outer_pair_halfplane(0));   // keeps outer 1,2
    // every named witness holds exactly n/3 points
    for (auto& [name, w] : g.witnesses) {
        long long cnt = 0;
        for (const Point& p : g.point_set.pts)
            if (witness_contains(w, p)) ++cnt;
        detail::require(cnt == n / 3, "disk-weak3-lb witness " + name + " holds n/3 points");
    }
    return g;
}

// ---------------------------------------------------------------------------
// composition: two compact-family instances placed far apart

inline GeneratorInstance generate_by_name(const std::string& name,
                                          const std::map<std::string, long long>& params);

inline GeneratorInstance compose_far_apart(const GeneratorInstance& g1,
                                           const GeneratorInstance& g2) {
    if (!(g1.family == g2.family))
        throw input_error("compose_far_apart: family mismatch");
    if (g1.family.tag == RangeFamily::Halfplanes)
        throw input_error("compose_far_apart: halfplanes are not compact");
    if (g1.weak != g2.weak)
        throw input_error("compose_far_apart: weak/strong mismatch");

    // rescale multiplicities so that eps1*n1 == eps2*n2 with the smallest
    // integer k's; a generator's point count is linear in its k parameter
    auto unit_of = [](const GeneratorInstance& g) {
        long long k = 0;
        for (auto& [key, v] : g.params)
            if (key == "k" || key == "kk") k = v;
        if (k <= 0) throw input_error("compose_far_apart: instance lacks a multiplicity parameter");
        if (g.point_set.n() % k != 0)
            throw input_error("compose_far_apart: point count not linear in k");
        return std::make_pair(g.point_set.n() / k, k);
    };
    auto [unit1, k1_old] = unit_of(g1);
    auto [unit2, k2_old] = unit_of(g2);
    const Rat eps1 = g1.claimed_lower_bound, eps2 = g2.claimed_lower_bound;
    // k1/k2 = unit2*eps2 / (unit1*eps1)
    BigInt num = BigInt(unit2) * numerator(eps2) * denominator(eps1);
    BigInt den = BigInt(unit1) * numerator(eps1) * denominator(eps2);
    BigInt g = gcd(num, den);
    long long k1 = to_ll(num / g), k2 = to_ll(den / g);

    auto regen = [&](const GeneratorInstance& base, long long k) {
        std::map<std::string, long long> p;
        for (auto& [key, v] : base.params) p[key] = v;
        if (p.count("kk")) p["kk"] = k; else p["k"] = k;
        return generate_by_name(base.name, p);
    };
    GeneratorInstance a = regen(g1, k1), b = regen(g2, k2);

    auto bbox = [](const PointSet& ps) {
        Rat xlo = ps.pts[0].x[0], xhi = xlo, ylo = ps.pts[0].x[1], yhi = ylo;
        for (const Point& p : ps.pts) {
            xlo = std::min(xlo, p.x[0]); xhi = std::max(xhi, p.x[0]);
            ylo = std::min(ylo, p.x[1]); yhi = std::max(yhi, p.x[1]);
        }
        return std::array<Rat, 4>{xlo, xhi, ylo, yhi};
    };
    auto ba = bbox(a.point_set), bb = bbox(b.point_set);
    Rat diam1 = std::max(ba[1] - ba[0], ba[3] - ba[2]);
    Rat diam2 = std::max(bb[1] - bb[0], bb[3] - bb[2]);
    // sub-grid nudge on both axes so the groups' coordinate values cannot
    // collide (both instances live on the same snapping grid)
    Rat min_gap = 0;
    {
        std::vector<Rat> vals;
        for (int d = 0; d < 2; ++d) {
            vals.clear();
            for (const Point& p : a.point_set.pts) vals.push_back(p.x[d]);
            for (const Point& p : b.point_set.pts) vals.push_back(p.x[d]);
            std::sort(vals.begin(), vals.end());
            for (size_t i = 1; i < vals.size(); ++i) {
                Rat g = vals[i] - vals[i - 1];
                if (g > 0 && (min_gap == 0 || g < min_gap)) min_gap = g;
            }
        }
        if (min_gap == 0) min_gap = 1;
    }
    Rat nudge = min_gap / 7;
    Rat shift = ba[1] - bb[0] + 10 * (diam1 + diam2) + nudge;

    GeneratorInstance out;
    out.name = "compose(" + a.provenance() + ", " + b.provenance() + ")";
    out.family = g1.family;
    out.weak = g1.weak;
    out.net_size = g1.net_size + g2.net_size;
    out.claimed_lower_bound = eps1 * eps2 / (eps1 + eps2);
    out.lb_slack_count = std::max({a.lb_slack_count, b.lb_slack_count, 1LL});
    out.point_set.dim = 2;
    int cluster_base = 0;
    for (int l : a.point_set.labels) cluster_base = std::max(cluster_base, l + 1);
    out.point_set.pts = a.point_set.pts;
    out.point_set.labels = a.point_set.labels;
    for (int p = 0; p < b.point_set.n(); ++p) {
        Point q = b.point_set.pts[p];
        q.x[0] += shift;
        q.x[1] += nudge;
        out.point_set.pts.push_back(q);
        out.point_set.labels.push_back(cluster_base + b.point_set.labels[p]);
    }
    // sanity: the two groups are far apart and the first group's named
    // witnesses exclude every translated point
    detail::require(bb[0] + shift - ba[1] >= 9 * (diam1 + diam2),
                    "compose_far_apart separation");
    for (auto& [name, w] : a.witnesses)
        for (int p = a.point_set.n(); p < out.point_set.n(); ++p)
            detail::require(!witness_contains(w, out.point_set.pts[p]),
                            "compose_far_apart witness isolation");
    detail::require(Rat(a.point_set.n()) * eps1 == Rat(b.point_set.n()) * eps2,
                    "compose_far_apart exact mass balance");
    if (!out.point_set.has_distinct_coordinates())
        throw std::logic_error("compose_far_apart: coordinate collision after shift");
    return out;
}

// ---------------------------------------------------------------------------
// registry

inline GeneratorInstance generate_by_name(const std::string& name,
                                          const std::map<std::string, long long>& params) {
    auto get = [&](const std::string& key, long long dflt) {
        auto it = params.find(key);
        return it == params.end() ? dflt : it->second;
    };
    if (name == "box-lb") return gen_box_lb((int)get("d", 2), (int)get("k", 1));
    if (name == "rect2-lb") return gen_rect2_lb((int)get("k", 1));
    if (name == "rect3-lb") return gen_rect3_lb((int)get("k", 1));
    if (name == "rect4-lb") return gen_rect4_lb((int)get("k", 1));
    if (name == "rect5-lb") return gen_rect5_lb((int)get("k", 1));
    if (name == "halfspace-lb") return gen_halfspace_lb((int)get("i", 3), (int)get("k", 2));
    if (name == "halfspace2-lb") return gen_halfspace2_lb((int)get("k", 1));
    if (name == "circle-sectors") return gen_circle_sectors((int)get("i", 4), (int)get("kk", 1));
    if (name == "disk-weak3-lb") return gen_disk_weak3_lb((int)get("k", 1));
    // composed rectangle families, paper pairings for i = 6..10
    auto composed = [&](const std::string& n1, long long kk1,
                        const std::string& n2, long long kk2) {
        long long scale = get("k", 1);
        GeneratorInstance a = generate_by_name(n1, {{"k", kk1 * scale}});
        GeneratorInstance b = generate_by_name(n2, {{"k", kk2 * scale}});
        return compose_far_apart(a, b);
    };
    if (name == "rect6-lb") return composed("rect3-lb", 1, "rect3-lb", 1);
    if (name == "rect7-lb") return composed("rect2-lb", 1, "rect5-lb", 1);
    if (name == "rect8-lb") return composed("rect3-lb", 1, "rect5-lb", 1);
    if (name == "rect9-lb") return composed("rect4-lb", 1, "rect5-lb", 1);
    if (name == "rect10-lb") return composed("rect5-lb", 1, "rect5-lb", 1);
    throw input_error("unknown generator '" + name + "'");
}

inline std::vector<std::string> generator_names() {
    return {"box-lb", "rect2-lb", "rect3-lb", "rect4-lb", "rect5-lb",
            "halfspace-lb", "halfspace2-lb", "circle-sectors", "disk-weak3-lb",
            "rect6-lb", "rect7-lb", "rect8-lb", "rect9-lb", "rect10-lb"};
}

} // namespace epsnet
