#pragma once

// Brute-force Delaunay triangulation: accept a ccw triple iff its open
// circumdisk is empty. O(n^4), exact, rejects cocircular quadruples.

#include <epsnet/geometry.hpp>
#include <epsnet/hull.hpp>

#include <stdexcept>
#include <vector>

namespace epsnet {

struct Triangle {
    int a, b, c;   // indices, counter-clockwise

    bool operator==(const Triangle& o) const { return a == o.a && b == o.b && c == o.c; }
};

struct cocircular_error : std::runtime_error {
    int p0, p1, p2, p3;
    cocircular_error(int a, int b, int c, int d)
        : std::runtime_error("cocircular quadruple; perturb the input"),
          p0(a), p1(b), p2(c), p3(d) {}
};

// canonical ccw triangle with smallest index first
inline Triangle make_triangle(const PointSet& P, int i, int j, int k) {
    if (orient2d(P.pts[i], P.pts[j], P.pts[k]) < 0) std::swap(j, k);
    while (!(i < j && i < k)) { int t = i; i = j; j = k; k = t; }
    return Triangle{i, j, k};
}

inline std::vector<Triangle> delaunay(const PointSet& P) {
    if (P.dim != 2) throw input_error("delaunay expects dim 2");
    int n = P.n();
    if (n < 3) throw input_error("delaunay needs at least 3 points");
    bool any_triangle = false;
    std::vector<Triangle> tris;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                if (orient2d(P.pts[i], P.pts[j], P.pts[k]) == 0) continue;
                any_triangle = true;
                Triangle t = make_triangle(P, i, j, k);
                bool empty = true;
                int on_circle = -1;
                for (int q = 0; q < n && empty; ++q) {
                    if (q == i || q == j || q == k) continue;
                    int s = in_circle(P.pts[t.a], P.pts[t.b], P.pts[t.c], P.pts[q]);
                    if (s > 0) empty = false;
                    else if (s == 0) on_circle = q;
                }
                if (!empty) continue;
                // an empty circumdisk with a fourth point on its boundary makes
                // the triangulation ambiguous
                if (on_circle >= 0) throw cocircular_error(t.a, t.b, t.c, on_circle);
                tris.push_back(t);
            }
    if (!any_triangle) throw input_error("delaunay: all points collinear");
    return tris;
}

// Exhaustive empty-circumcircle recheck, used by tests and the acceptance
// suite as the triangulation's defining invariant.
inline bool delaunay_all_empty(const PointSet& P, const std::vector<Triangle>& tris) {
    for (const Triangle& t : tris)
        for (int q = 0; q < P.n(); ++q) {
            if (q == t.a || q == t.b || q == t.c) continue;
            if (in_circle(P.pts[t.a], P.pts[t.b], P.pts[t.c], P.pts[q]) > 0) return false;
        }
    return true;
}

} // namespace epsnet
