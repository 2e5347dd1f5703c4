#pragma once

// Planar convex hull, monotone chain over exact predicates.

#include <epsnet/geometry.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

namespace epsnet {

// Hull vertex indices in clockwise order. Points interior to hull edges are
// excluded. All-collinear input degenerates to the two extreme points;
// n = 1 gives the single point.
inline std::vector<int> convex_hull(const PointSet& P) {
    if (P.dim != 2) throw input_error("convex_hull expects dim 2");
    int n = P.n();
    if (n == 0) throw input_error("convex_hull: empty point set");
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (P.pts[i].x[0] != P.pts[j].x[0]) return P.pts[i].x[0] < P.pts[j].x[0];
        return P.pts[i].x[1] < P.pts[j].x[1];
    });
    // drop exact duplicates
    std::vector<int> uniq;
    for (int i : order)
        if (uniq.empty() || !(P.pts[i] == P.pts[uniq.back()])) uniq.push_back(i);
    n = (int)uniq.size();
    if (n == 1) return {uniq[0]};
    if (n == 2) return {uniq[0], uniq[1]};

    auto build = [&](int dir) {   // dir=+1: upper chain in ccw sense
        std::vector<int> chain;
        for (int i : uniq) {
            while (chain.size() >= 2) {
                int o = orient2d(P.pts[chain[chain.size() - 2]], P.pts[chain.back()], P.pts[i]);
                if (o * dir > 0) break;
                chain.pop_back();
            }
            chain.push_back(i);
        }
        return chain;
    };
    std::vector<int> lower = build(+1);
    std::vector<int> upper = build(-1);

    // clockwise output: left-to-right along the upper chain, then right-to-left
    // along the lower chain. For all-collinear input both chains reduce to the
    // two extremes and the composition is exactly that pair.
    std::vector<int> hull(upper.begin(), upper.end() - 1);
    for (size_t i = lower.size() - 1; i >= 1; --i) hull.push_back(lower[i]);
    return hull;
}

// true iff every point of P is inside or on the boundary of the hull given
// as clockwise vertex indices
inline bool hull_contains_all(const PointSet& P, const std::vector<int>& hull) {
    if (hull.size() <= 2) {
        // degenerate: everything must be collinear with the two extremes
        if (hull.size() < 2) return true;
        for (const Point& p : P.pts)
            if (orient2d(P.pts[hull[0]], P.pts[hull[1]], p) != 0) return false;
        return true;
    }
    for (const Point& p : P.pts)
        for (size_t i = 0; i < hull.size(); ++i) {
            const Point& a = P.pts[hull[i]];
            const Point& b = P.pts[hull[(i + 1) % hull.size()]];
            if (orient2d(a, b, p) > 0) return false;   // left of a cw edge
        }
    return true;
}

} // namespace epsnet
