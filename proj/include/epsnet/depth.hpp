#pragma once

// Halfplane depth and planar centerpoints.

#include <epsnet/geometry.hpp>

#include <functional>
#include <optional>
#include <vector>

namespace epsnet {

// Minimum over all closed halfplanes containing x of |P ∩ halfplane|.
//
// Any minimizing halfplane can be translated until its boundary passes
// through x, so it suffices to sweep boundary directions around x. The
// count changes only at directions perpendicular to some p - x; each such
// critical direction is evaluated exactly, together with both of its
// one-sided limits (the "just rotated past" positions), via the sign of
// cross(u, p - x) on boundary points.
inline int halfplane_depth(const PointSet& P, const Point& x) {
    if (P.dim != 2 || x.dim() != 2) throw input_error("halfplane_depth expects dim 2");
    int n = P.n();
    std::vector<Rat> vx(n), vy(n);
    int at_x = 0;
    std::vector<int> live;
    for (int i = 0; i < n; ++i) {
        vx[i] = P.pts[i].x[0] - x.x[0];
        vy[i] = P.pts[i].x[1] - x.x[1];
        if (vx[i] == 0 && vy[i] == 0) ++at_x;
        else live.push_back(i);
    }
    if (live.empty()) return n;

    int best = n;
    auto consider = [&](const Rat& ux, const Rat& uy) {
        int closed = at_x, after_ccw = at_x, after_cw = at_x;
        for (int i : live) {
            Rat d = vx[i] * ux + vy[i] * uy;
            int sd = sign_of(d);
            if (sd > 0) { ++closed; ++after_ccw; ++after_cw; }
            else if (sd == 0) {
                ++closed;
                Rat cr = ux * vy[i] - uy * vx[i];
                if (sign_of(cr) > 0) ++after_ccw; else ++after_cw;
            }
        }
        best = std::min(best, std::min(closed, std::min(after_ccw, after_cw)));
    };
    for (int i : live) {
        consider(-vy[i], vx[i]);
        consider(vy[i], -vx[i]);
    }
    return best;
}

namespace detail {

inline std::optional<Point> line_intersection(const Point& a, const Point& b,
                                              const Point& c, const Point& d) {
    Rat r1x = b.x[0] - a.x[0], r1y = b.x[1] - a.x[1];
    Rat r2x = d.x[0] - c.x[0], r2y = d.x[1] - c.x[1];
    Rat den = r1x * r2y - r1y * r2x;
    if (den == 0) return std::nullopt;
    Rat t = ((c.x[0] - a.x[0]) * r2y - (c.x[1] - a.x[1]) * r2x) / den;
    return Point(a.x[0] + t * r1x, a.x[1] + t * r1y);
}

} // namespace detail

// First centerpoint candidate, in fixed construction order, with
// halfplane_depth >= ceil(n/3) and satisfying `accept`. Candidates are the
// points of P followed by all pairwise line intersections; the center
// region's vertices lie on such lines, so the scan cannot come up empty
// unless `accept` rejects everything.
inline std::optional<Point> centerpoint2d_where(
    const PointSet& P, const std::function<bool(const Point&)>& accept) {
    if (P.dim != 2) throw input_error("centerpoint2d expects dim 2");
    int n = P.n();
    if (n == 0) throw input_error("centerpoint2d: empty point set");
    long long need = ceil_div(n, 3);
    for (const Point& p : P.pts)
        if (halfplane_depth(P, p) >= need && accept(p)) return p;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = i; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    if (k == i && l <= j) continue;
                    auto pt = detail::line_intersection(P.pts[i], P.pts[j], P.pts[k], P.pts[l]);
                    if (!pt) continue;
                    if (halfplane_depth(P, *pt) >= need && accept(*pt)) return pt;
                }
    return std::nullopt;
}

// Point with halfplane depth >= ceil(n/3); Rado's theorem guarantees one.
inline Point centerpoint2d(const PointSet& P) {
    auto r = centerpoint2d_where(P, [](const Point&) { return true; });
    if (!r) throw std::logic_error("centerpoint2d: no candidate qualified (defect)");
    return *r;
}

} // namespace epsnet
