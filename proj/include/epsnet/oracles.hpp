#pragma once

// Exact brute-force adversaries: the range of the given family that avoids
// every net point and contains the most points of P. Ground truth for every
// claimed bound in this library.
//
// Conventions: ranges are closed; "avoids the net" means the closed range
// contains no net point. When a candidate's boundary passes through net
// points, a symbolically shrunk variant (boundary excluded) is scored as
// well, and the reported witness is an explicitly shrunk concrete object.

#include <epsnet/geometry.hpp>
#include <epsnet/net.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <thread>
#include <variant>
#include <vector>

namespace epsnet {

struct BoxObj {
    std::vector<Rat> lo, hi;
    bool contains(const Point& p) const {
        for (size_t d = 0; d < lo.size(); ++d)
            if (p.x[d] < lo[d] || p.x[d] > hi[d]) return false;
        return true;
    }
};

struct HalfplaneObj {
    Rat a, b, c;   // closed halfplane a*x + b*y <= c
    bool contains(const Point& p) const { return a * p.x[0] + b * p.x[1] <= c; }
};

struct DiskObj {
    Point center;
    Rat radius_sq;
    bool contains(const Point& p) const { return dist_sq(center, p) <= radius_sq; }
};

using WitnessObject = std::variant<BoxObj, HalfplaneObj, DiskObj>;

inline bool witness_contains(const WitnessObject& w, const Point& p) {
    return std::visit([&](const auto& o) { return o.contains(p); }, w);
}

struct OracleReport {
    long long max_count = 0;
    long long n = 0;
    Rat fraction = 0;
    WitnessObject witness;
    long long candidates_examined = 0;
};

// Witness soundness: exact recount of the reported object.
inline bool check_witness(const PointSet& P, const std::vector<Point>& net_pts,
                          const OracleReport& rep) {
    long long cnt = 0;
    for (const Point& p : P.pts)
        if (witness_contains(rep.witness, p)) ++cnt;
    if (cnt != rep.max_count) return false;
    for (const Point& q : net_pts)
        if (witness_contains(rep.witness, q)) return false;
    return true;
}

namespace detail {

constexpr long long kNoPrune = std::numeric_limits<long long>::max();

// ---------------------------------------------------------------------------
// axis-parallel boxes
//
// Works in rank space: with distinct coordinates the per-axis rank map is an
// order isomorphism, so closed-box incidence patterns are identical and the
// whole search runs on small integers. The witness is mapped back to the
// original coordinates at the end.

struct BoxOracleCtx {
    int d = 2;
    int n = 0;
    std::vector<std::vector<int>> rank;         // [dim][point] -> 0..n-1
    std::vector<std::vector<int>> by_rank;      // [dim][rank] -> point
    const PointSet* P = nullptr;
};

inline BoxOracleCtx box_ctx(const PointSet& P, int d) {
    if (P.dim != d) throw input_error("box oracle: dimension mismatch");
    if (d < 1 || d > 3) throw input_error("box oracle supports d in {1,2,3}");
    BoxOracleCtx ctx;
    ctx.d = d;
    ctx.n = P.n();
    ctx.P = &P;
    ctx.rank.assign(d, std::vector<int>(P.n()));
    ctx.by_rank.assign(d, std::vector<int>(P.n()));
    std::vector<int> order(P.n());
    for (int dim = 0; dim < d; ++dim) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int i, int j) {
            return P.pts[i].x[dim] < P.pts[j].x[dim];
        });
        for (int r = 0; r < P.n(); ++r) {
            int p = order[r];
            if (r > 0 && P.pts[p].x[dim] == P.pts[order[r - 1]].x[dim])
                throw input_error("box oracle requires distinct coordinates (rank_normalize first)");
            ctx.rank[dim][p] = r;
            ctx.by_rank[dim][r] = p;
        }
    }
    return ctx;
}

// Box witness spanning exactly the given rank windows.
inline BoxObj box_from_ranks(const BoxOracleCtx& ctx, const std::vector<std::pair<int, int>>& w) {
    BoxObj box;
    for (int dim = 0; dim < ctx.d; ++dim) {
        box.lo.push_back(ctx.P->pts[ctx.by_rank[dim][w[dim].first]].x[dim]);
        box.hi.push_back(ctx.P->pts[ctx.by_rank[dim][w[dim].second]].x[dim]);
    }
    return box;
}

// empty sentinel box strictly beyond all points
inline BoxObj empty_box(const PointSet& P, int d) {
    BoxObj box;
    for (int dim = 0; dim < d; ++dim) {
        Rat m = P.pts[0].x[dim];
        for (const Point& p : P.pts) m = std::max(m, p.x[dim]);
        box.lo.push_back(m + 1);
        box.hi.push_back(m + 2);
    }
    return box;
}

// Maximum count over closed boxes avoiding the net, d = 2.
//
// For every x-rank window [a,b] (widest first, which lets callers with a
// prune threshold exit early), net points inside the window cut the y-order
// into gaps; the best window/gap pair wins. Candidate completeness: a
// maximizing box can shrink each facet onto a contained point of P, and its
// y-range must lie strictly between the y-values of net points whose x lies
// inside its x-range.
inline OracleReport max_box_avoiding_2d(const BoxOracleCtx& ctx,
                                        const std::vector<int>& net_idx,
                                        long long prune_above,
                                        std::atomic<long long>* op_counter) {
    const int n = ctx.n;
    OracleReport rep;
    rep.n = n;
    bool net_flag_any = !net_idx.empty();
    std::vector<char> is_net(n, 0);
    for (int q : net_idx) is_net[q] = 1;

    if (!net_flag_any) {
        rep.max_count = n;
        rep.fraction = 1;
        rep.witness = box_from_ranks(ctx, {{0, n - 1}, {0, n - 1}});
        rep.candidates_examined = 1;
        return rep;
    }

    long long best = -1;
    int best_a = -1, best_b = -1, best_ylo = -1, best_yhi = -1;
    long long examined = 0;
    // y-rank -> x-rank lookup for the sweep
    std::vector<int> xr_of_yr(n);
    for (int yr = 0; yr < n; ++yr) xr_of_yr[yr] = ctx.rank[0][ctx.by_rank[1][yr]];
    std::vector<char> net_of_yr(n);
    for (int yr = 0; yr < n; ++yr) net_of_yr[yr] = is_net[ctx.by_rank[1][yr]];

    for (int width = n; width >= 1 && best <= prune_above; --width) {
        for (int a = 0; a + width <= n; ++a) {
            int b = a + width - 1;
            ++examined;
            // walk points in y-order, counting runs between net cuts
            long long run = 0;
            int run_lo = -1, run_hi = -1;
            for (int yr = 0; yr < n; ++yr) {
                int xr = xr_of_yr[yr];
                if (xr < a || xr > b) continue;
                if (net_of_yr[yr]) {
                    if (run > best) {
                        best = run; best_a = a; best_b = b;
                        best_ylo = run_lo; best_yhi = run_hi;
                    }
                    run = 0; run_lo = -1;
                } else {
                    if (run == 0) run_lo = yr;
                    run_hi = yr;
                    ++run;
                }
            }
            if (run > best) {
                best = run; best_a = a; best_b = b;
                best_ylo = run_lo; best_yhi = run_hi;
            }
            if (best > prune_above) break;
        }
    }
    if (op_counter) op_counter->fetch_add(examined * n, std::memory_order_relaxed);
    rep.candidates_examined = examined;
    rep.max_count = std::max(best, 0LL);
    rep.fraction = Rat(rep.max_count, n);
    if (best <= 0) {
        rep.max_count = std::max(best, 0LL);
        rep.witness = empty_box(*ctx.P, 2);
        rep.fraction = Rat(rep.max_count, n);
        return rep;
    }
    // shrink x-window onto contained points
    int xlo = n, xhi = -1;
    for (int yr = best_ylo; yr <= best_yhi; ++yr) {
        int xr = xr_of_yr[yr];
        if (xr < best_a || xr > best_b || net_of_yr[yr]) continue;
        xlo = std::min(xlo, xr);
        xhi = std::max(xhi, xr);
    }
    rep.witness = box_from_ranks(ctx, {{xlo, xhi}, {best_ylo, best_yhi}});
    return rep;
}

// d = 1: net cuts the line into gaps.
inline OracleReport max_box_avoiding_1d(const BoxOracleCtx& ctx,
                                        const std::vector<int>& net_idx,
                                        std::atomic<long long>* op_counter) {
    const int n = ctx.n;
    OracleReport rep;
    rep.n = n;
    std::vector<char> is_net(n, 0);
    for (int q : net_idx) is_net[q] = 1;
    long long best = -1;
    int best_lo = -1, best_hi = -1;
    long long run = 0;
    int run_lo = -1;
    for (int r = 0; r < n; ++r) {
        if (is_net[ctx.by_rank[0][r]]) { run = 0; run_lo = -1; continue; }
        if (run == 0) run_lo = r;
        ++run;
        if (run > best) { best = run; best_lo = run_lo; best_hi = r; }
    }
    if (op_counter) op_counter->fetch_add(n, std::memory_order_relaxed);
    rep.candidates_examined = n;
    rep.max_count = std::max(best, 0LL);
    rep.fraction = Rat(rep.max_count, n);
    rep.witness = best > 0 ? box_from_ranks(ctx, {{best_lo, best_hi}})
                           : empty_box(*ctx.P, 1);
    return rep;
}

// d = 3: outer loop over z-rank windows, then the 2-d routine on the slab.
inline OracleReport max_box_avoiding_3d(const BoxOracleCtx& ctx,
                                        const std::vector<int>& net_idx,
                                        long long prune_above,
                                        std::atomic<long long>* op_counter) {
    const int n = ctx.n;
    OracleReport rep;
    rep.n = n;
    std::vector<char> is_net(n, 0);
    for (int q : net_idx) is_net[q] = 1;
    if (net_idx.empty()) {
        rep.max_count = n;
        rep.fraction = 1;
        rep.witness = box_from_ranks(ctx, {{0, n - 1}, {0, n - 1}, {0, n - 1}});
        rep.candidates_examined = 1;
        return rep;
    }

    long long best = -1;
    int bza = -1, bzb = -1, bxa = -1, bxb = -1, bylo = -1, byhi = -1;
    long long examined = 0;
    std::vector<int> xr_of_yr(n), zr_of_yr(n);
    std::vector<char> net_of_yr(n);
    for (int yr = 0; yr < n; ++yr) {
        int p = ctx.by_rank[1][yr];
        xr_of_yr[yr] = ctx.rank[0][p];
        zr_of_yr[yr] = ctx.rank[2][p];
        net_of_yr[yr] = is_net[p];
    }
    for (int zw = n; zw >= 1 && best <= prune_above; --zw)
        for (int za = 0; za + zw <= n && best <= prune_above; ++za) {
            int zb = za + zw - 1;
            for (int xw = n; xw >= 1 && best <= prune_above; --xw)
                for (int xa = 0; xa + xw <= n; ++xa) {
                    int xb = xa + xw - 1;
                    ++examined;
                    long long run = 0;
                    int run_lo = -1, run_hi = -1;
                    for (int yr = 0; yr < n; ++yr) {
                        int xr = xr_of_yr[yr], zr = zr_of_yr[yr];
                        if (xr < xa || xr > xb || zr < za || zr > zb) continue;
                        if (net_of_yr[yr]) {
                            if (run > best) {
                                best = run; bza = za; bzb = zb; bxa = xa; bxb = xb;
                                bylo = run_lo; byhi = run_hi;
                            }
                            run = 0; run_lo = -1;
                        } else {
                            if (run == 0) run_lo = yr;
                            run_hi = yr;
                            ++run;
                        }
                    }
                    if (run > best) {
                        best = run; bza = za; bzb = zb; bxa = xa; bxb = xb;
                        bylo = run_lo; byhi = run_hi;
                    }
                    if (best > prune_above) break;
                }
        }
    if (op_counter) op_counter->fetch_add(examined * n, std::memory_order_relaxed);
    rep.candidates_examined = examined;
    rep.max_count = std::max(best, 0LL);
    rep.fraction = Rat(rep.max_count, n);
    if (best <= 0) {
        rep.witness = empty_box(*ctx.P, 3);
        return rep;
    }
    int xlo = n, xhi = -1, zlo = n, zhi = -1;
    for (int yr = bylo; yr <= byhi; ++yr) {
        int xr = xr_of_yr[yr], zr = zr_of_yr[yr];
        if (xr < bxa || xr > bxb || zr < bza || zr > bzb || net_of_yr[yr]) continue;
        xlo = std::min(xlo, xr); xhi = std::max(xhi, xr);
        zlo = std::min(zlo, zr); zhi = std::max(zhi, zr);
    }
    rep.witness = box_from_ranks(ctx, {{xlo, xhi}, {bylo, byhi}, {zlo, zhi}});
    return rep;
}

} // namespace detail

// ---------------------------------------------------------------------------
// public box oracle

inline OracleReport max_box_avoiding(const PointSet& P, const Net& N, int d,
                                     std::atomic<long long>* op_counter = nullptr) {
    if (N.family.tag != RangeFamily::Boxes || N.family.dim != d)
        throw input_error("max_box_avoiding: net family mismatch");
    if (!N.strong)
        throw input_error("max_box_avoiding supports strong nets only");
    N.check_strong(P);
    detail::BoxOracleCtx ctx = detail::box_ctx(P, d);
    switch (d) {
        case 1: return detail::max_box_avoiding_1d(ctx, N.members, op_counter);
        case 2: return detail::max_box_avoiding_2d(ctx, N.members, detail::kNoPrune, op_counter);
        default: return detail::max_box_avoiding_3d(ctx, N.members, detail::kNoPrune, op_counter);
    }
}

// ---------------------------------------------------------------------------
// halfplanes
//
// Candidate boundary lines pass through every ordered pair of P ∪ N plus one
// axis-aligned pair per point; each candidate is scored closed and, when the
// boundary holds net points, symbolically shrunk (boundary excluded).

inline OracleReport max_halfplane_avoiding(const PointSet& P, const Net& N,
                                           std::atomic<long long>* op_counter = nullptr) {
    if (P.dim != 2) throw input_error("max_halfplane_avoiding expects dim 2");
    if (N.family.tag != RangeFamily::Halfplanes)
        throw input_error("max_halfplane_avoiding: net family mismatch");
    std::vector<Point> net_pts = N.points(P);
    const int n = P.n();
    OracleReport rep;
    rep.n = n;
    if (net_pts.empty()) {
        rep.max_count = n;
        rep.fraction = 1;
        Rat hi = P.pts[0].x[0];
        for (const Point& p : P.pts) hi = std::max(hi, p.x[0]);
        rep.witness = HalfplaneObj{1, 0, hi + 1};
        rep.candidates_examined = 1;
        return rep;
    }

    std::vector<Point> all = P.pts;
    all.insert(all.end(), net_pts.begin(), net_pts.end());
    const int m = (int)all.size();

    long long best = -1;
    HalfplaneObj best_obj;
    long long examined = 0;
    long long ops = 0;

    // candidate: closed halfplane {q : a x + b y <= c}; shrunk variant uses
    // strict containment and produces an explicitly shifted witness
    auto score = [&](const Rat& a, const Rat& b, const Rat& c) {
        ++examined;
        ops += n + (long long)net_pts.size();
        long long closed = 0, strict = 0;
        Rat min_slack;       // smallest positive c - value over P, for shrinking
        bool have_slack = false;
        for (const Point& p : P.pts) {
            Rat v = a * p.x[0] + b * p.x[1];
            if (v < c) {
                ++closed; ++strict;
                Rat s = c - v;
                if (!have_slack || s < min_slack) { min_slack = s; have_slack = true; }
            } else if (v == c) {
                ++closed;
            }
        }
        bool net_in_closed = false, net_in_strict = false;
        for (const Point& q : net_pts) {
            Rat v = a * q.x[0] + b * q.x[1];
            if (v <= c) net_in_closed = true;
            if (v < c) net_in_strict = true;
            if (net_in_strict) break;
        }
        if (!net_in_closed && closed > best) {
            best = closed;
            best_obj = HalfplaneObj{a, b, c};
        }
        if (!net_in_strict && net_in_closed && strict > best) {
            // shrink: shift the boundary inward past all boundary points
            Rat delta = have_slack ? min_slack / 2 : Rat(1);
            best = strict;
            best_obj = HalfplaneObj{a, b, c - delta};
        }
    };

    for (int i = 0; i < m; ++i) {
        // axis-aligned fallbacks through point i
        const Rat& px = all[i].x[0];
        const Rat& py = all[i].x[1];
        score(1, 0, px); score(-1, 0, -px);
        score(0, 1, py); score(0, -1, -py);
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            // directed line i -> j, closed left side: a x + b y <= c with
            // (a,b) = right normal
            Rat dx = all[j].x[0] - all[i].x[0];
            Rat dy = all[j].x[1] - all[i].x[1];
            if (dx == 0 && dy == 0) continue;
            Rat a = dy, b = -dx;
            Rat c = a * all[i].x[0] + b * all[i].x[1];
            score(a, b, c);
        }
    }
    if (op_counter) op_counter->fetch_add(ops, std::memory_order_relaxed);
    rep.candidates_examined = examined;
    rep.max_count = std::max(best, 0LL);
    rep.fraction = Rat(rep.max_count, n);
    if (best <= 0) {
        // a halfplane far beyond everything
        Rat hi = all[0].x[0];
        for (const Point& p : all) hi = std::max(hi, p.x[0]);
        rep.witness = HalfplaneObj{-1, 0, -(hi + 1)};
        rep.max_count = std::max(best, 0LL);
        rep.fraction = Rat(rep.max_count, n);
        if (best < 0) { rep.max_count = 0; rep.fraction = 0; }
        return rep;
    }
    rep.witness = best_obj;
    return rep;
}

// ---------------------------------------------------------------------------
// disks
//
// Candidates: circumdisks of all triples of P ∪ N, diametral disks of all
// pairs, and every halfplane candidate (disks of infinite radius). Each is
// scored closed and symbolically shrunk.

namespace detail {

// circumcenter of a non-degenerate triangle, exact
inline std::optional<std::pair<Point, Rat>> circumcircle(const Point& a, const Point& b,
                                                         const Point& c) {
    Rat d = 2 * (a.x[0] * (b.x[1] - c.x[1]) + b.x[0] * (c.x[1] - a.x[1]) +
                 c.x[0] * (a.x[1] - b.x[1]));
    if (d == 0) return std::nullopt;
    Rat a2 = a.x[0] * a.x[0] + a.x[1] * a.x[1];
    Rat b2 = b.x[0] * b.x[0] + b.x[1] * b.x[1];
    Rat c2 = c.x[0] * c.x[0] + c.x[1] * c.x[1];
    Rat ux = (a2 * (b.x[1] - c.x[1]) + b2 * (c.x[1] - a.x[1]) + c2 * (a.x[1] - b.x[1])) / d;
    Rat uy = (a2 * (c.x[0] - b.x[0]) + b2 * (a.x[0] - c.x[0]) + c2 * (b.x[0] - a.x[0])) / d;
    Point center(ux, uy);
    return std::make_pair(center, dist_sq(center, a));
}

} // namespace detail

namespace detail {

// Candidate disks are perturbed along three exact deformations, all of which
// keep every strictly interior point:
//   - concentric shrink: expels every boundary point;
//   - shrink toward one boundary point: keeps it, expels the rest of the
//     boundary;
//   - pencil shift through two boundary points: keeps both, expels boundary
//     points on the chosen side.
// Together with the closed object itself these realize every way of keeping
// the point-set supports of a candidate while expelling the net supports.

// membership sign for q in the diametral disk over (a, b): the angle test
// (q-a).(q-b) <= 0, fast-pathed through int128
inline int diametral_side(const Point& a, const Point& b, const Point& q) {
    long long ax, ay, bx, by, qx, qy;
    const long long B = 1LL << 45;
    if (as_i64(a.x[0], ax, B) && as_i64(a.x[1], ay, B) && as_i64(b.x[0], bx, B) &&
        as_i64(b.x[1], by, B) && as_i64(q.x[0], qx, B) && as_i64(q.x[1], qy, B)) {
        __int128 d = (__int128)(qx - ax) * (qx - bx) + (__int128)(qy - ay) * (qy - by);
        return d < 0 ? 1 : d == 0 ? 0 : -1;
    }
    Rat d = (q.x[0] - a.x[0]) * (q.x[0] - b.x[0]) + (q.x[1] - a.x[1]) * (q.x[1] - b.x[1]);
    int s = sign_of(d);
    return s < 0 ? 1 : s == 0 ? 0 : -1;
}

struct DiskShape {
    enum Kind { Circum, Diametral, Halfplane } kind = Circum;
    const Point* pa = nullptr;   // circumdisk triple or diametral pair
    const Point* pb = nullptr;
    const Point* pc = nullptr;
    Rat a, b, c;                 // halfplane a x + b y <= c

    bool halfplane_kind() const { return kind == Halfplane; }
    int side(const Point& q) const {
        switch (kind) {
            case Circum: return in_circle(*pa, *pb, *pc, q);
            case Diametral: return diametral_side(*pa, *pb, q);
            default: return sign_of(c - (a * q.x[0] + b * q.x[1]));
        }
    }
    // concrete center and squared radius, computed only for witnesses
    std::pair<Point, Rat> circle() const {
        if (kind == Diametral) {
            Point center((pa->x[0] + pb->x[0]) / 2, (pa->x[1] + pb->x[1]) / 2);
            Rat r2 = dist_sq(center, *pa);
            return {center, r2};
        }
        auto cc = circumcircle(*pa, *pb, *pc);
        return {cc->first, cc->second};
    }
};

// largest admissible deformation parameter keeping all strictly-inside
// points of P inside: min over positive bounds, halved
inline Rat half_min_bound(const std::vector<Rat>& bounds) {
    bool have = false;
    Rat m;
    for (const Rat& b : bounds)
        if (!have || b < m) { m = b; have = true; }
    return have ? m / 2 : Rat(1);
}

inline WitnessObject shrink_concentric(const DiskShape& sh, const PointSet& P) {
    if (sh.halfplane_kind()) {
        std::vector<Rat> bounds;
        for (const Point& p : P.pts) {
            Rat v = sh.c - (sh.a * p.x[0] + sh.b * p.x[1]);
            if (v > 0) bounds.push_back(v);
        }
        return HalfplaneObj{sh.a, sh.b, sh.c - half_min_bound(bounds)};
    }
    auto [center, radius_sq] = sh.circle();
    std::vector<Rat> bounds;
    for (const Point& p : P.pts) {
        Rat v = radius_sq - dist_sq(center, p);
        if (v > 0) bounds.push_back(v);
    }
    Rat delta = half_min_bound(bounds);
    if (delta > radius_sq) delta = radius_sq / 2;
    return DiskObj{center, radius_sq - delta};
}

// disk through k0 with every other boundary point expelled: center moves
// toward k0, radius shrinks keeping k0 on the boundary
inline WitnessObject shrink_toward(const DiskShape& sh, const PointSet& P, const Point& k0) {
    auto [c0, radius_sq] = sh.circle();
    Rat vx = c0.x[0] - k0.x[0], vy = c0.x[1] - k0.x[1];
    std::vector<Rat> bounds;
    for (const Point& p : P.pts) {
        Rat f0 = dist_sq(c0, p) - radius_sq;
        if (!(f0 < 0)) continue;   // only strictly-inside points constrain
        Rat uv = (p.x[0] - k0.x[0]) * vx + (p.x[1] - k0.x[1]) * vy;
        if (uv > 0) bounds.push_back(-f0 / (2 * uv));
    }
    Rat t = half_min_bound(bounds);
    if (t >= 1) t = Rat(1, 2);
    Point center(k0.x[0] + (1 - t) * vx, k0.x[1] + (1 - t) * vy);
    Rat scale = (1 - t) * (1 - t);
    return DiskObj{center, scale * radius_sq};
}

// disk through k0 and k1 with the boundary points on w's opposite side kept
// and those on w's side expelled; w must point away from every expelled net.
// The shift is capped so strictly-inside points of P stay in and strictly
// outside net points stay out.
inline WitnessObject pencil_shift(const DiskShape& sh, const PointSet& P,
                                  const std::vector<Point>& net_pts, const Point& k0,
                                  const Point& k1, const Rat& wx, const Rat& wy) {
    (void)k1;
    auto [c0, radius_sq] = sh.circle();
    std::vector<Rat> bounds;
    for (const Point& p : P.pts) {
        Rat g0 = dist_sq(c0, p) - radius_sq;
        if (!(g0 < 0)) continue;
        Rat wdot = wx * (p.x[0] - k0.x[0]) + wy * (p.x[1] - k0.x[1]);
        if (wdot < 0) bounds.push_back(g0 / (2 * wdot));
    }
    for (const Point& q : net_pts) {
        Rat g0 = dist_sq(c0, q) - radius_sq;
        if (!(g0 > 0)) continue;   // strictly outside nets must stay out
        Rat wdot = wx * (q.x[0] - k0.x[0]) + wy * (q.x[1] - k0.x[1]);
        if (wdot > 0) bounds.push_back(g0 / (2 * wdot));
    }
    Rat t = half_min_bound(bounds);
    Point center(c0.x[0] + t * wx, c0.x[1] + t * wy);
    return DiskObj{center, dist_sq(center, k0)};
}

// halfplane through k0 rotated so that boundary points on the expelled ray
// leave; d is the along-line direction pointing at the expelled side
inline WitnessObject rotate_about(const DiskShape& sh, const PointSet& P,
                                  const std::vector<Point>& net_pts, const Point& k0,
                                  const Rat& dx, const Rat& dy) {
    std::vector<Rat> bounds;
    for (const Point& p : P.pts) {
        Rat v = sh.c - (sh.a * p.x[0] + sh.b * p.x[1]);
        if (!(v > 0)) continue;   // strictly inside: a x + b y < c
        Rat ddot = dx * (p.x[0] - k0.x[0]) + dy * (p.x[1] - k0.x[1]);
        if (ddot > 0) bounds.push_back(v / ddot);
    }
    for (const Point& q : net_pts) {
        Rat v = sh.c - (sh.a * q.x[0] + sh.b * q.x[1]);
        if (!(v < 0)) continue;   // strictly outside nets must stay out
        Rat ddot = dx * (q.x[0] - k0.x[0]) + dy * (q.x[1] - k0.x[1]);
        if (ddot < 0) bounds.push_back(v / ddot);
    }
    Rat t = half_min_bound(bounds);
    Rat na = sh.a + t * dx, nb = sh.b + t * dy;
    return HalfplaneObj{na, nb, na * k0.x[0] + nb * k0.x[1]};
}

} // namespace detail

inline OracleReport max_disk_avoiding(const PointSet& P, const Net& N,
                                      std::atomic<long long>* op_counter = nullptr) {
    if (P.dim != 2) throw input_error("max_disk_avoiding expects dim 2");
    if (N.family.tag != RangeFamily::Disks)
        throw input_error("max_disk_avoiding: net family mismatch");
    std::vector<Point> net_pts = N.points(P);
    const int n = P.n();
    OracleReport rep;
    rep.n = n;
    if (net_pts.empty()) {
        rep.max_count = n;
        rep.fraction = 1;
        Rat r2 = 0;
        for (const Point& p : P.pts) r2 = std::max(r2, dist_sq(P.pts[0], p));
        rep.witness = DiskObj{P.pts[0], r2 + 1};
        rep.candidates_examined = 1;
        return rep;
    }

    std::vector<Point> all = P.pts;
    all.insert(all.end(), net_pts.begin(), net_pts.end());
    const int m = (int)all.size();
    auto is_net_coord = [&](const Point& p) {
        for (const Point& q : net_pts)
            if (p == q) return true;
        return false;
    };

    long long best = -1;
    // best candidate descriptor, reconstructed into a witness at the end
    detail::DiskShape best_shape;
    int best_variant = 0;            // 0 closed, 1 concentric, 2 keep-one, 3 keep-two
    Point best_k0, best_k1;
    Rat best_wx, best_wy;            // pencil direction / rotation direction
    long long examined = 0;
    long long ops = 0;

    // score one candidate shape given its support points
    auto score = [&](const detail::DiskShape& sh, const std::vector<const Point*>& supports) {
        ++examined;
        ops += n + (long long)net_pts.size();
        bool net_strict = false, net_closed = false;
        for (const Point& q : net_pts) {
            int s = sh.side(q);
            if (s > 0) { net_strict = true; break; }
            if (s == 0) net_closed = true;
        }
        if (net_strict) return;
        long long closed = 0, strict = 0;
        for (const Point& p : P.pts) {
            int s = sh.side(p);
            if (s >= 0) ++closed;
            if (s > 0) ++strict;
        }
        if (!net_closed) {
            if (closed > best) {
                best = closed;
                best_shape = sh;
                best_variant = 0;
            }
            return;
        }
        // net points sit on the boundary; enumerate the keepable supports
        std::vector<const Point*> kept;
        for (const Point* s : supports)
            if (!is_net_coord(*s)) kept.push_back(s);
        // deduplicate kept support coordinates
        for (size_t i = 0; i < kept.size(); ++i)
            for (size_t j = i + 1; j < kept.size(); ++j)
                if (*kept[i] == *kept[j]) { kept.erase(kept.begin() + j); --j; }
        long long keep_count = (long long)kept.size();

        if (strict > best) {   // expel the whole boundary
            best = strict;
            best_shape = sh;
            best_variant = 1;
        }
        if (keep_count >= 1 && strict + 1 > best) {   // keep one support
            const Point& k0 = *kept[0];
            bool ok = true;
            Rat dir_x = 0, dir_y = 0;
            if (sh.halfplane_kind()) {
                // rotation about k0 expels only one boundary ray: all boundary
                // nets must sit on a single side of k0 along the line
                Rat d0x = sh.b, d0y = -sh.a;
                int s = 0;
                for (const Point& q : net_pts) {
                    if (sh.side(q) != 0) continue;
                    int sg = sign_of(d0x * (q.x[0] - k0.x[0]) + d0y * (q.x[1] - k0.x[1]));
                    if (sg == 0) { ok = false; break; }
                    if (s == 0) s = sg;
                    else if (s != sg) { ok = false; break; }
                }
                if (s == 0) s = 1;
                dir_x = s > 0 ? d0x : -d0x;
                dir_y = s > 0 ? d0y : -d0y;
            }
            if (ok) {
                best = strict + 1;
                best_shape = sh;
                best_variant = 2;
                best_k0 = k0;
                best_wx = dir_x;
                best_wy = dir_y;
            }
        }
        if (keep_count >= 2 && strict + 2 > best && !sh.halfplane_kind()) {
            // keep two supports; needs every boundary net on one side of the
            // support line so a pencil shift can expel them all. (For a
            // halfplane the boundary nets are collinear with the supports and
            // this never applies; the adjacent circumdisk pencils cover it.)
            const Point& k0 = *kept[0];
            const Point& k1 = *kept[1];
            int need = 0;
            bool ok = true;
            for (const Point& q : net_pts) {
                if (sh.side(q) != 0) continue;
                int o = orient2d(k0, k1, q);
                if (o == 0) { ok = false; break; }
                if (need == 0) need = o;
                else if (need != o) { ok = false; break; }
            }
            if (ok && need != 0) {
                best = strict + 2;
                best_shape = sh;
                best_variant = 3;
                best_k0 = k0;
                best_k1 = k1;
                // pencil direction perpendicular to (k0,k1): (px,py) points to
                // the o>0 side, flip it away from the boundary nets
                Rat px = -(k1.x[1] - k0.x[1]);
                Rat py = k1.x[0] - k0.x[0];
                if (need > 0) { px = -px; py = -py; }
                best_wx = px;
                best_wy = py;
            }
        }
    };

    // circumdisks of non-collinear triples
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                if (orient2d(all[i], all[j], all[k]) == 0) continue;
                detail::DiskShape sh;
                sh.kind = detail::DiskShape::Circum;
                sh.pa = &all[i]; sh.pb = &all[j]; sh.pc = &all[k];
                score(sh, {&all[i], &all[j], &all[k]});
            }
    // diametral disks of pairs
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (all[i] == all[j]) continue;
            detail::DiskShape sh;
            sh.kind = detail::DiskShape::Diametral;
            sh.pa = &all[i]; sh.pb = &all[j];
            score(sh, {&all[i], &all[j]});
        }
    // halfplanes as infinite-radius disks
    auto hp = [&](const Rat& a, const Rat& b, const Rat& c,
                  const std::vector<const Point*>& supports) {
        detail::DiskShape sh;
        sh.kind = detail::DiskShape::Halfplane;
        sh.a = a; sh.b = b; sh.c = c;
        score(sh, supports);
    };
    for (int i = 0; i < m; ++i) {
        const Rat& px = all[i].x[0];
        const Rat& py = all[i].x[1];
        hp(1, 0, px, {&all[i]});
        hp(-1, 0, -px, {&all[i]});
        hp(0, 1, py, {&all[i]});
        hp(0, -1, -py, {&all[i]});
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            Rat dx = all[j].x[0] - all[i].x[0];
            Rat dy = all[j].x[1] - all[i].x[1];
            if (dx == 0 && dy == 0) continue;
            Rat a = dy, b = -dx;
            hp(a, b, a * all[i].x[0] + b * all[i].x[1], {&all[i], &all[j]});
        }
    }

    if (op_counter) op_counter->fetch_add(ops, std::memory_order_relaxed);
    rep.candidates_examined = examined;
    rep.max_count = std::max(best, 0LL);
    rep.fraction = Rat(rep.max_count, n);
    if (best <= 0) {
        rep.max_count = 0;
        rep.fraction = 0;
        Rat hi = all[0].x[0];
        for (const Point& p : all) hi = std::max(hi, p.x[0]);
        rep.witness = DiskObj{Point(hi + 2, Rat(0)), Rat(0)};
        return rep;
    }
    switch (best_variant) {
        case 0:
            if (best_shape.halfplane_kind()) {
                rep.witness = HalfplaneObj{best_shape.a, best_shape.b, best_shape.c};
            } else {
                auto [c0, r2] = best_shape.circle();
                rep.witness = DiskObj{c0, r2};
            }
            break;
        case 1:
            rep.witness = detail::shrink_concentric(best_shape, P);
            break;
        case 2:
            if (best_shape.halfplane_kind())
                rep.witness = detail::rotate_about(best_shape, P, net_pts, best_k0,
                                                   best_wx, best_wy);
            else
                rep.witness = detail::shrink_toward(best_shape, P, best_k0);
            break;
        default:
            rep.witness = detail::pencil_shift(best_shape, P, net_pts, best_k0, best_k1,
                                               best_wx, best_wy);
            break;
    }
    if (!check_witness(P, net_pts, rep))
        throw std::logic_error("max_disk_avoiding witness reconstruction failed");
    return rep;
}

// ---------------------------------------------------------------------------
// dispatch + exhaustive net verification

inline OracleReport oracle_for(const PointSet& P, const Net& N,
                               std::atomic<long long>* op_counter = nullptr) {
    switch (N.family.tag) {
        case RangeFamily::Boxes: return max_box_avoiding(P, N, N.family.dim, op_counter);
        case RangeFamily::Halfplanes: return max_halfplane_avoiding(P, N, op_counter);
        default: return max_disk_avoiding(P, N, op_counter);
    }
}

inline Rat epsilon_of_net(const PointSet& P, const Net& N) {
    return oracle_for(P, N).fraction;
}

struct LowerBoundResult {
    Rat fraction = 1;            // min over nets of the oracle fraction
    std::vector<int> net;        // lexicographically first minimizing net
    OracleReport report;         // oracle report for that net
    long long nets_examined = 0;
};

enum class VerifyMode { Exhaustive, Clustered };

namespace detail {

// internal pruned oracle: returns max count only, aborts once > prune_above
inline long long oracle_count_pruned(const PointSet& P, const BoxOracleCtx* bctx,
                                     const RangeFamily& fam, const std::vector<int>& members,
                                     long long prune_above, std::atomic<long long>* ops) {
    if (fam.tag == RangeFamily::Boxes) {
        if (fam.dim == 2) return max_box_avoiding_2d(*bctx, members, prune_above, ops).max_count;
        if (fam.dim == 1) return max_box_avoiding_1d(*bctx, members, ops).max_count;
        return max_box_avoiding_3d(*bctx, members, prune_above, ops).max_count;
    }
    Net net;
    net.family = fam;
    net.strong = true;
    net.members = members;
    if (fam.tag == RangeFamily::Halfplanes) return max_halfplane_avoiding(P, net, ops).max_count;
    return max_disk_avoiding(P, net, ops).max_count;
}

inline void enumerate_combinations(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k == 0) { fn(idx); return; }
    if (k > n) return;
    while (true) {
        if (!fn(idx)) return;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace detail

// Minimum over all strong size-i nets of the family-oracle fraction: the
// empirical epsilon_i of the instance. Exhaustive mode enumerates all C(n,i)
// subsets; clustered mode (requires labels) enumerates one canonical net per
// per-cluster count vector, points taken in index order within each cluster.
//
// budget caps exact containment tests actually performed; exceeding it
// raises budget_error. threads > 1 parallelizes deterministically: the
// reported minimum and minimizing net are those of the sequential scan.
inline LowerBoundResult verify_lower_bound(const PointSet& P, RangeFamily fam, int i,
                                           VerifyMode mode = VerifyMode::Exhaustive,
                                           long long budget = 1000000000LL,
                                           int threads = 1) {
    const int n = P.n();
    if (i < 0 || i > n) throw input_error("verify_lower_bound: bad net size");
    std::optional<detail::BoxOracleCtx> bctx;
    if (fam.tag == RangeFamily::Boxes) bctx.emplace(detail::box_ctx(P, fam.dim));

    // Nets are streamed in lexicographic order rather than materialized.
    // Clustered mode enumerates one canonical net per per-cluster count
    // vector (points taken in index order within each cluster).
    std::vector<std::vector<int>> clustered_nets;
    if (mode == VerifyMode::Clustered) {
        if (P.labels.empty()) throw input_error("clustered mode requires labels");
        int cmax = 0;
        for (int l : P.labels) cmax = std::max(cmax, l + 1);
        std::vector<std::vector<int>> cluster(cmax);
        for (int p = 0; p < n; ++p) cluster[P.labels[p]].push_back(p);
        std::vector<int> take(cmax, 0);
        std::function<void(int, int)> rec = [&](int c, int left) {
            if (c == cmax) {
                if (left != 0) return;
                std::vector<int> net;
                for (int j = 0; j < cmax; ++j)
                    for (int t = 0; t < take[j]; ++t) net.push_back(cluster[j][t]);
                std::sort(net.begin(), net.end());
                clustered_nets.push_back(net);
                return;
            }
            int hi = std::min<int>(left, (int)cluster[c].size());
            for (int t = 0; t <= hi; ++t) { take[c] = t; rec(c + 1, left - t); }
            take[c] = 0;
        };
        rec(0, i);
        std::sort(clustered_nets.begin(), clustered_nets.end());
    }
    auto for_each_net = [&](const std::function<bool(const std::vector<int>&)>& fn) {
        if (mode == VerifyMode::Exhaustive) {
            detail::enumerate_combinations(n, i, fn);
        } else {
            for (const auto& net : clustered_nets)
                if (!fn(net)) return;
        }
    };

    std::atomic<long long> ops{0};
    std::atomic<long long> best{std::numeric_limits<long long>::max()};
    std::atomic<bool> over_budget{false};
    std::atomic<long long> nets_total{0};

    // pass 1: global minimum. Each worker streams the full enumeration and
    // takes every nthreads-th net. A net whose true value equals the final
    // minimum is never pruned (the shared threshold can only sit above it),
    // so the minimum is exact and schedule independent.
    auto worker = [&](int tid, int nthreads) {
        long long w = 0;
        long long seen = 0;
        for_each_net([&](const std::vector<int>& net) {
            if (w++ % nthreads != tid) return true;
            ++seen;
            if (over_budget.load(std::memory_order_relaxed)) return false;
            long long cur_best = best.load(std::memory_order_relaxed);
            long long v = detail::oracle_count_pruned(P, bctx ? &*bctx : nullptr, fam,
                                                      net, cur_best, &ops);
            if (v < cur_best) {
                long long prev = best.load(std::memory_order_relaxed);
                while (v < prev && !best.compare_exchange_weak(prev, v)) {}
            }
            if (ops.load(std::memory_order_relaxed) > budget) {
                over_budget.store(true, std::memory_order_relaxed);
                return false;
            }
            return true;
        });
        nets_total.fetch_add(seen);
    };
    if (threads <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
        for (auto& th : pool) th.join();
    }
    if (over_budget.load())
        throw budget_error("verify_lower_bound: predicate budget exceeded; use a smaller instance");

    LowerBoundResult out;
    out.nets_examined = nets_total.load();
    if (out.nets_examined == 0) {
        out.fraction = 1;
        return out;
    }
    long long final_best = best.load();

    // pass 2: lexicographically first net achieving the minimum
    std::vector<int> argmin;
    for_each_net([&](const std::vector<int>& net) {
        long long v = detail::oracle_count_pruned(P, bctx ? &*bctx : nullptr, fam,
                                                  net, final_best, &ops);
        if (v == final_best) { argmin = net; return false; }
        return true;
    });

    Net net;
    net.family = fam;
    net.strong = true;
    net.members = argmin;
    out.net = argmin;
    out.report = oracle_for(P, net);
    out.fraction = out.report.fraction;
    return out;
}

} // namespace epsnet
