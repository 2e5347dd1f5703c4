#pragma once

// Independent brute-force adversaries used only by tests. Each works by
// subset realizability rather than candidate enumeration, so they share no
// code path with the production oracles they check.

#include <epsnet/geometry.hpp>

#include <algorithm>
#include <optional>
#include <vector>

namespace epsnet::ref {

// ---------------------------------------------------------------------------
// boxes: S is realizable as box ∩ P avoiding the net iff the bounding box of
// S contains exactly S and no net point

inline long long max_box_subset(const PointSet& P, const std::vector<Point>& net, int d) {
    const int n = P.n();
    long long best = 0;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> S;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) S.push_back(i);
        std::vector<Rat> lo = P.pts[S[0]].x, hi = P.pts[S[0]].x;
        for (int i : S)
            for (int dd = 0; dd < d; ++dd) {
                lo[dd] = std::min(lo[dd], P.pts[i].x[dd]);
                hi[dd] = std::max(hi[dd], P.pts[i].x[dd]);
            }
        auto inside = [&](const Point& p) {
            for (int dd = 0; dd < d; ++dd)
                if (p.x[dd] < lo[dd] || p.x[dd] > hi[dd]) return false;
            return true;
        };
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (inside(P.pts[i]) != (std::find(S.begin(), S.end(), i) != S.end())) ok = false;
        for (const Point& q : net)
            if (!ok) break;
            else if (inside(q)) ok = false;
        if (ok) best = std::max(best, (long long)S.size());
    }
    return best;
}

// ---------------------------------------------------------------------------
// halfplanes: S (as point list A) is separable from B by a closed halfplane
// containing A and excluding B iff conv(A) and conv(B) are disjoint

inline bool point_in_hull(const Point& v, const std::vector<Point>& R) {
    for (const Point& r : R)
        if (r == v) return true;
    for (size_t i = 0; i < R.size(); ++i)
        for (size_t j = i + 1; j < R.size(); ++j) {
            // on segment
            if (orient2d(R[i], R[j], v) == 0 &&
                std::min(R[i].x[0], R[j].x[0]) <= v.x[0] &&
                v.x[0] <= std::max(R[i].x[0], R[j].x[0]) &&
                std::min(R[i].x[1], R[j].x[1]) <= v.x[1] &&
                v.x[1] <= std::max(R[i].x[1], R[j].x[1]))
                return true;
            for (size_t k = j + 1; k < R.size(); ++k) {
                int o1 = orient2d(R[i], R[j], v);
                int o2 = orient2d(R[j], R[k], v);
                int o3 = orient2d(R[k], R[i], v);
                if ((o1 >= 0 && o2 >= 0 && o3 >= 0) || (o1 <= 0 && o2 <= 0 && o3 <= 0))
                    return true;
            }
        }
    return false;
}

inline bool segments_meet(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = orient2d(a, b, c), o2 = orient2d(a, b, d);
    int o3 = orient2d(c, d, a), o4 = orient2d(c, d, b);
    if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) &&
        ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0)))
        return true;
    auto on = [&](const Point& p, const Point& q, const Point& r) {
        return orient2d(p, q, r) == 0 &&
               std::min(p.x[0], q.x[0]) <= r.x[0] && r.x[0] <= std::max(p.x[0], q.x[0]) &&
               std::min(p.x[1], q.x[1]) <= r.x[1] && r.x[1] <= std::max(p.x[1], q.x[1]);
    };
    return (o1 == 0 && on(a, b, c)) || (o2 == 0 && on(a, b, d)) ||
           (o3 == 0 && on(c, d, a)) || (o4 == 0 && on(c, d, b));
}

inline bool hulls_disjoint(const std::vector<Point>& A, const std::vector<Point>& B) {
    if (A.empty() || B.empty()) return true;
    for (const Point& a : A)
        if (point_in_hull(a, B)) return false;
    for (const Point& b : B)
        if (point_in_hull(b, A)) return false;
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = i + 1; j < A.size(); ++j)
            for (size_t k = 0; k < B.size(); ++k)
                for (size_t l = k + 1; l < B.size(); ++l)
                    if (segments_meet(A[i], A[j], B[k], B[l])) return false;
    return true;
}

inline long long max_halfplane_subset(const PointSet& P, const std::vector<Point>& net) {
    const int n = P.n();
    long long best = 0;
    for (long long size = n; size >= 1 && best == 0; --size)
        for (int mask = 1; mask < (1 << n); ++mask) {
            if (__builtin_popcount((unsigned)mask) != size) continue;
            std::vector<Point> A, B = net;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) A.push_back(P.pts[i]);
                else B.push_back(P.pts[i]);
            if (hulls_disjoint(A, B)) { best = size; break; }
        }
    return best;
}

// ---------------------------------------------------------------------------
// disks: paraboloid lift + exact Fourier-Motzkin feasibility. S is
// realizable iff some plane z = alpha x + beta y + gamma has the lifted S
// weakly below and the lifted complement (plus net) strictly above.

struct LinIneq {   // a*alpha + b*beta + c*gamma (<= | <) d
    Rat a, b, c, d;
    bool strict;
};

inline bool fm_feasible(std::vector<LinIneq> cons) {
    for (int var = 0; var < 3; ++var) {
        std::vector<LinIneq> pos, neg, rest;
        for (LinIneq& li : cons) {
            Rat coef = var == 0 ? li.a : var == 1 ? li.b : li.c;
            if (coef > 0) pos.push_back(li);
            else if (coef < 0) neg.push_back(li);
            else rest.push_back(li);
        }
        std::vector<LinIneq> next = rest;
        for (const LinIneq& hi : pos)
            for (const LinIneq& lo : neg) {
                Rat ph = var == 0 ? hi.a : var == 1 ? hi.b : hi.c;
                Rat pl = var == 0 ? lo.a : var == 1 ? lo.b : lo.c;
                // weighted sum cancels the eliminated variable exactly
                Rat w_hi = -pl, w_lo = ph;
                LinIneq out{w_hi * hi.a + w_lo * lo.a, w_hi * hi.b + w_lo * lo.b,
                            w_hi * hi.c + w_lo * lo.c, w_hi * hi.d + w_lo * lo.d,
                            hi.strict || lo.strict};
                next.push_back(std::move(out));
            }
        cons = std::move(next);
    }
    for (const LinIneq& li : cons) {
        if (li.strict ? !(li.d > 0) : !(li.d >= 0)) return false;
    }
    return true;
}

inline bool disk_subset_realizable(const PointSet& P, const std::vector<Point>& net,
                                   int mask) {
    std::vector<LinIneq> cons;
    auto lift_below = [&](const Point& p, bool below) {
        Rat z = p.x[0] * p.x[0] + p.x[1] * p.x[1];
        LinIneq li;
        if (below) {   // alpha x + beta y + gamma >= z
            li = {-p.x[0], -p.x[1], Rat(-1), -z, false};
        } else {       // alpha x + beta y + gamma < z
            li = {p.x[0], p.x[1], Rat(1), z, true};
        }
        cons.push_back(li);
    };
    for (int i = 0; i < P.n(); ++i) lift_below(P.pts[i], (mask >> i) & 1);
    for (const Point& q : net) lift_below(q, false);
    return fm_feasible(std::move(cons));
}

inline long long max_disk_subset(const PointSet& P, const std::vector<Point>& net) {
    const int n = P.n();
    long long best = 0;
    for (long long size = n; size >= 1 && best == 0; --size)
        for (int mask = 1; mask < (1 << n); ++mask) {
            if (__builtin_popcount((unsigned)mask) != size) continue;
            if (disk_subset_realizable(P, net, mask)) { best = size; break; }
        }
    return best;
}

} // namespace epsnet::ref
