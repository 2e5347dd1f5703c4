#pragma once

// Exact geometric primitives: points, orientation and in-circle predicates,
// rank normalization. Predicates take an int128 fast path whenever the
// inputs are small integers and fall back to rational arithmetic otherwise.

#include <epsnet/rational.hpp>
#include <epsnet/random.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

namespace epsnet {

struct Point {
    std::vector<Rat> x;

    Point() = default;
    Point(Rat a, Rat b) : x{std::move(a), std::move(b)} {}
    Point(Rat a, Rat b, Rat c) : x{std::move(a), std::move(b), std::move(c)} {}
    explicit Point(std::vector<Rat> coords) : x(std::move(coords)) {}

    int dim() const { return (int)x.size(); }
    bool operator==(const Point& o) const { return x == o.x; }
};

struct PointSet {
    int dim = 2;
    std::vector<Point> pts;
    std::vector<int> labels;   // optional per-point cluster id; empty if unused

    int n() const { return (int)pts.size(); }

    void check_dims() const {
        for (const Point& p : pts)
            if (p.dim() != dim) throw input_error("point dimension mismatch");
        if (!labels.empty() && (int)labels.size() != n())
            throw input_error("labels length mismatch");
    }

    bool has_distinct_coordinates() const {
        for (int d = 0; d < dim; ++d) {
            std::vector<const Rat*> vals;
            vals.reserve(pts.size());
            for (const Point& p : pts) vals.push_back(&p.x[d]);
            std::sort(vals.begin(), vals.end(),
                      [](const Rat* a, const Rat* b) { return *a < *b; });
            for (size_t i = 1; i < vals.size(); ++i)
                if (*vals[i] == *vals[i - 1]) return false;
        }
        return true;
    }

    PointSet subset(const std::vector<int>& idx) const {
        PointSet out;
        out.dim = dim;
        out.pts.reserve(idx.size());
        for (int i : idx) {
            out.pts.push_back(pts[i]);
            if (!labels.empty()) out.labels.push_back(labels[i]);
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// small-integer fast path

namespace detail {

inline bool as_i64(const Rat& q, long long& out, long long bound) {
    if (denominator(q) != 1) return false;
    const BigInt& n = numerator(q);
    if (n > bound || n < -bound) return false;
    out = n.convert_to<long long>();
    return true;
}

constexpr long long kOrientBound = 1LL << 60;   // |det2| < 2^127 guaranteed
constexpr long long kCircleBound = 1LL << 29;   // |det4 terms| < 2^127
constexpr long long kCircle256Bound = 1LL << 59; // int256 path

using Int256 = boost::multiprecision::int256_t;

} // namespace detail

// sign of (b - a) x (c - a); +1 = counter-clockwise
inline int orient2d(const Point& a, const Point& b, const Point& c) {
    if (a.dim() != 2 || b.dim() != 2 || c.dim() != 2)
        throw input_error("orient2d expects 2-d points");
    long long ax, ay, bx, by, cx, cy;
    using detail::as_i64;
    const long long B = detail::kOrientBound;
    if (as_i64(a.x[0], ax, B) && as_i64(a.x[1], ay, B) &&
        as_i64(b.x[0], bx, B) && as_i64(b.x[1], by, B) &&
        as_i64(c.x[0], cx, B) && as_i64(c.x[1], cy, B)) {
        __int128 det = (__int128)(bx - ax) * (cy - ay) - (__int128)(by - ay) * (cx - ax);
        return det > 0 ? 1 : det < 0 ? -1 : 0;
    }
    Rat det = (b.x[0] - a.x[0]) * (c.x[1] - a.x[1]) - (b.x[1] - a.x[1]) * (c.x[0] - a.x[0]);
    return sign_of(det);
}

// +1 iff d is strictly inside the circumcircle of (a,b,c); exact 4x4
// determinant sign, orientation-normalized. Throws on collinear (a,b,c).
inline int in_circle(const Point& a, const Point& b, const Point& c, const Point& d) {
    int orient = orient2d(a, b, c);
    if (orient == 0) throw input_error("in_circle: collinear defining points");
    long long ax, ay, bx, by, cx, cy, dx, dy;
    using detail::as_i64;
    const long long B = detail::kCircleBound;
    if (as_i64(a.x[0], ax, B) && as_i64(a.x[1], ay, B) &&
        as_i64(b.x[0], bx, B) && as_i64(b.x[1], by, B) &&
        as_i64(c.x[0], cx, B) && as_i64(c.x[1], cy, B) &&
        as_i64(d.x[0], dx, B) && as_i64(d.x[1], dy, B)) {
        __int128 adx = ax - dx, ady = ay - dy;
        __int128 bdx = bx - dx, bdy = by - dy;
        __int128 cdx = cx - dx, cdy = cy - dy;
        __int128 ad2 = adx * adx + ady * ady;
        __int128 bd2 = bdx * bdx + bdy * bdy;
        __int128 cd2 = cdx * cdx + cdy * cdy;
        __int128 det = adx * (bdy * cd2 - cdy * bd2)
                     - ady * (bdx * cd2 - cdx * bd2)
                     + ad2 * (bdx * cdy - cdx * bdy);
        int s = det > 0 ? 1 : det < 0 ? -1 : 0;
        return orient > 0 ? s : -s;
    }
    if (as_i64(a.x[0], ax, detail::kCircle256Bound) && as_i64(a.x[1], ay, detail::kCircle256Bound) &&
        as_i64(b.x[0], bx, detail::kCircle256Bound) && as_i64(b.x[1], by, detail::kCircle256Bound) &&
        as_i64(c.x[0], cx, detail::kCircle256Bound) && as_i64(c.x[1], cy, detail::kCircle256Bound) &&
        as_i64(d.x[0], dx, detail::kCircle256Bound) && as_i64(d.x[1], dy, detail::kCircle256Bound)) {
        using detail::Int256;
        Int256 adx = ax - dx, ady = ay - dy;
        Int256 bdx = bx - dx, bdy = by - dy;
        Int256 cdx = cx - dx, cdy = cy - dy;
        Int256 ad2 = adx * adx + ady * ady;
        Int256 bd2 = bdx * bdx + bdy * bdy;
        Int256 cd2 = cdx * cdx + cdy * cdy;
        Int256 det = adx * (bdy * cd2 - cdy * bd2)
                   - ady * (bdx * cd2 - cdx * bd2)
                   + ad2 * (bdx * cdy - cdx * bdy);
        int s = det.sign();
        return orient > 0 ? s : -s;
    }
    Rat adxr = a.x[0] - d.x[0], adyr = a.x[1] - d.x[1];
    Rat bdxr = b.x[0] - d.x[0], bdyr = b.x[1] - d.x[1];
    Rat cdxr = c.x[0] - d.x[0], cdyr = c.x[1] - d.x[1];
    Rat ad2 = adxr * adxr + adyr * adyr;
    Rat bd2 = bdxr * bdxr + bdyr * bdyr;
    Rat cd2 = cdxr * cdxr + cdyr * cdyr;
    Rat det = adxr * (bdyr * cd2 - cdyr * bd2)
            - adyr * (bdxr * cd2 - cdxr * bd2)
            + ad2 * (bdxr * cdyr - cdxr * bdyr);
    int s = sign_of(det);
    return orient > 0 ? s : -s;
}

// dot((p - o), (q - o)) sign, exact
inline int dot_sign(const Point& o, const Point& p, const Point& q) {
    Rat d = (p.x[0] - o.x[0]) * (q.x[0] - o.x[0]) + (p.x[1] - o.x[1]) * (q.x[1] - o.x[1]);
    return sign_of(d);
}

inline Rat dist_sq(const Point& a, const Point& b) {
    Rat s = 0;
    for (int d = 0; d < a.dim(); ++d) {
        Rat t = a.x[d] - b.x[d];
        s += t * t;
    }
    return s;
}

// ---------------------------------------------------------------------------
// rank normalization

// Replaces every coordinate by its rank in that dimension, ties broken by
// point index. Output has distinct integer coordinates and is per-dimension
// order-isomorphic to an infinitesimal perturbation of the input, so every
// axis-parallel box incidence pattern is preserved.
inline PointSet rank_normalize(const PointSet& P) {
    PointSet out;
    out.dim = P.dim;
    out.labels = P.labels;
    out.pts.assign(P.n(), Point{});
    for (Point& p : out.pts) p.x.assign(P.dim, Rat(0));
    std::vector<int> order(P.n());
    for (int d = 0; d < P.dim; ++d) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
            return P.pts[i].x[d] < P.pts[j].x[d];
        });
        for (int r = 0; r < P.n(); ++r) out.pts[order[r]].x[d] = r;
    }
    return out;
}

// Random point set with distinct integer coordinates per axis: a random
// pairing of distinct x-, y- (and z-) values. Deterministic in the seed.
inline PointSet random_point_set(int n, int dim, std::uint64_t seed,
                                 long long coord_range = 1000000) {
    SplitMix64 rng(seed);
    PointSet P;
    P.dim = dim;
    std::vector<std::vector<long long>> axes(dim);
    for (int d = 0; d < dim; ++d) {
        axes[d] = distinct_ints(rng, n, coord_range);
        rng.shuffle(axes[d]);
    }
    for (int i = 0; i < n; ++i) {
        Point p;
        for (int d = 0; d < dim; ++d) p.x.push_back(Rat(axes[d][i]));
        P.pts.push_back(std::move(p));
    }
    return P;
}

// Seeded jitter of magnitude below (minimum pairwise coordinate gap) / n^2.
// Preserves every strict per-axis order while breaking degenerate incidences
// such as cocircular quadruples. Deterministic in the seed.
inline PointSet jitter_points(const PointSet& P, std::uint64_t seed) {
    Rat gap;
    bool have_gap = false;
    for (int d = 0; d < P.dim; ++d) {
        std::vector<Rat> vals;
        vals.reserve(P.n());
        for (const Point& p : P.pts) vals.push_back(p.x[d]);
        std::sort(vals.begin(), vals.end());
        for (size_t i = 1; i < vals.size(); ++i) {
            Rat g = vals[i] - vals[i - 1];
            if (g > 0 && (!have_gap || g < gap)) { gap = g; have_gap = true; }
        }
    }
    if (!have_gap) gap = 1;
    long long n = std::max(P.n(), 2);
    Rat delta = gap / (Rat(n) * n * 16);
    SplitMix64 rng(seed);
    PointSet out = P;
    for (Point& p : out.pts)
        for (Rat& c : p.x)
            c += delta * Rat((long long)rng.below(1 << 16), 1 << 16);
    return out;
}

} // namespace epsnet
