#pragma once

// Sampled weak lower-bound verification for disks: minimum over all size-i
// subsets of (P ∪ regular grid) of the disk-oracle fraction. One-sided by
// construction (sampling a superset of candidate positions can only lower
// the reported minimum toward the true weak optimum).
//
// Exactness with pruning: point-supported disks with large counts act as
// certificates. A candidate net that leaves some disk of count >= B (the
// running minimum) untouched has oracle value >= B and cannot improve B, so
// it is skipped; everything else is evaluated exactly. Three layers provide
// certificates: a static catalogue whose membership masks group the sample
// into classes (whole class combinations certify at once), a dynamic cache
// of witnesses from previous oracle calls, and finally the oracle itself.
// The instance is rescaled to integer coordinates first so the exact
// predicates stay on their fast paths.

#include <epsnet/oracles.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace epsnet {

struct WeakLowerBoundResult {
    Rat fraction = 1;
    std::vector<Point> net;      // a minimizing sampled net
    long long nets_examined = 0; // oracle evaluations actually performed
    long long sample_size = 0;
};

namespace detail {

struct CertDisk {
    WitnessObject obj;
    long long count = 0;
};

inline std::vector<CertDisk> disk_catalogue(const PointSet& P, size_t cap,
                                            const std::vector<Point>& sample) {
    std::vector<CertDisk> cands;
    const int n = P.n();
    auto add = [&](WitnessObject w) {
        long long c = 0;
        for (const Point& p : P.pts)
            if (witness_contains(w, p)) ++c;
        if (c > 0) cands.push_back({std::move(w), c});
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                if (orient2d(P.pts[i], P.pts[j], P.pts[k]) == 0) continue;
                auto cc = circumcircle(P.pts[i], P.pts[j], P.pts[k]);
                if (cc) add(DiskObj{cc->first, cc->second});
            }
            Point mid((P.pts[i].x[0] + P.pts[j].x[0]) / 2, (P.pts[i].x[1] + P.pts[j].x[1]) / 2);
            add(DiskObj{mid, dist_sq(mid, P.pts[i])});
            Rat a = P.pts[j].x[1] - P.pts[i].x[1];
            Rat b = P.pts[i].x[0] - P.pts[j].x[0];
            Rat c = a * P.pts[i].x[0] + b * P.pts[i].x[1];
            add(HalfplaneObj{a, b, c});
            add(HalfplaneObj{-a, -b, -c});
        }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const CertDisk& x, const CertDisk& y) { return x.count > y.count; });
    // keep only entries with distinct sample coverage
    std::vector<CertDisk> out;
    std::vector<std::vector<char>> coverages;
    for (auto& cd : cands) {
        if (out.size() >= cap) break;
        std::vector<char> cov(sample.size());
        for (size_t s = 0; s < sample.size(); ++s)
            cov[s] = witness_contains(cd.obj, sample[s]) ? 1 : 0;
        bool dup = false;
        for (auto& prev : coverages)
            if (prev == cov) { dup = true; break; }
        if (dup) continue;
        coverages.push_back(std::move(cov));
        out.push_back(cd);
    }
    return out;
}

} // namespace detail

inline WeakLowerBoundResult verify_weak_lower_bound_sampled(const PointSet& P_in, RangeFamily fam,
                                                            int i, int grid_resolution,
                                                            long long budget = 4000000000LL) {
    if (fam.tag != RangeFamily::Disks)
        throw input_error("verify_weak_lower_bound_sampled supports the disk family");
    if (P_in.dim != 2) throw input_error("verify_weak_lower_bound_sampled expects dim 2");
    const int n = P_in.n();
    WeakLowerBoundResult out;
    if (i == 0) {
        out.fraction = 1;
        return out;
    }

    // rescale to integer coordinates (disk incidences are scale invariant)
    BigInt scale = 1;
    for (const Point& p : P_in.pts)
        for (const Rat& c : p.x) scale = lcm(scale, denominator(c));
    PointSet P = P_in;
    for (Point& p : P.pts)
        for (Rat& c : p.x) c *= Rat(scale);

    // sample = P plus a regular integer grid over the inflated bounding box
    std::vector<Point> sample = P.pts;
    {
        BigInt xlo = numerator(P.pts[0].x[0]), xhi = xlo;
        BigInt ylo = numerator(P.pts[0].x[1]), yhi = ylo;
        for (const Point& p : P.pts) {
            xlo = std::min(xlo, numerator(p.x[0]));
            xhi = std::max(xhi, numerator(p.x[0]));
            ylo = std::min(ylo, numerator(p.x[1]));
            yhi = std::max(yhi, numerator(p.x[1]));
        }
        BigInt padx = (xhi - xlo) / 10 + 1, pady = (yhi - ylo) / 10 + 1;
        xlo -= padx; xhi += padx; ylo -= pady; yhi += pady;
        int res = std::max(grid_resolution, 2);
        for (int gy = 0; gy < res; ++gy)
            for (int gx = 0; gx < res; ++gx)
                sample.emplace_back(Rat(xlo + (xhi - xlo) * gx / (res - 1)),
                                    Rat(ylo + (yhi - ylo) * gy / (res - 1)));
    }
    out.sample_size = (long long)sample.size();

    auto catalogue = detail::disk_catalogue(P, 40, sample);
    // group sample points by catalogue membership mask
    std::map<std::uint64_t, std::vector<int>> classes;
    for (size_t s = 0; s < sample.size(); ++s) {
        std::uint64_t mask = 0;
        for (size_t j = 0; j < catalogue.size(); ++j)
            if (witness_contains(catalogue[j].obj, sample[s])) mask |= 1ULL << j;
        classes[mask].push_back((int)s);
    }
    std::vector<std::uint64_t> class_mask;
    std::vector<const std::vector<int>*> class_pts;
    for (auto& [mask, pts] : classes) {
        class_mask.push_back(mask);
        class_pts.push_back(&pts);
    }
    const int C = (int)class_mask.size();

    long long best = std::numeric_limits<long long>::max();
    std::vector<Point> best_net;
    std::atomic<long long> ops{0};
    long long evaluated = 0;
    // dynamic certificates: witnesses of recent oracle calls
    std::vector<detail::CertDisk> cache;

    auto eval_net = [&](const std::vector<int>& sample_idx) {
        // dynamic-cache certificate: an avoiding witness with count >= best
        for (const auto& cd : cache) {
            if (cd.count < best) continue;
            bool avoided = true;
            for (int s : sample_idx)
                if (witness_contains(cd.obj, sample[s])) { avoided = false; break; }
            if (avoided) return;
        }
        Net net;
        net.family = RangeFamily::disks();
        net.strong = false;
        for (int s : sample_idx) net.free_points.push_back(sample[s]);
        ++evaluated;
        OracleReport rep = max_disk_avoiding(P, net, &ops);
        if (rep.max_count < best) {
            best = rep.max_count;
            best_net = net.free_points;
        }
        cache.push_back({rep.witness, rep.max_count});
        if (cache.size() > 512) cache.erase(cache.begin(), cache.begin() + 256);
        if (ops.load(std::memory_order_relaxed) > budget)
            throw budget_error("verify_weak_lower_bound_sampled: budget exceeded");
    };

    // seed the running minimum with heuristic nets (sample points nearest to
    // the heaviest catalogue disks, plus point-set members) so certificates
    // engage from the start
    {
        std::vector<int> seeds;
        for (size_t j = 0; j < catalogue.size() && seeds.size() < 8; ++j) {
            if (!std::holds_alternative<DiskObj>(catalogue[j].obj)) continue;
            const DiskObj& d = std::get<DiskObj>(catalogue[j].obj);
            int bi = 0;
            Rat bd = dist_sq(sample[0], d.center);
            for (size_t s = 1; s < sample.size(); ++s) {
                Rat ds = dist_sq(sample[s], d.center);
                if (ds < bd) { bd = ds; bi = (int)s; }
            }
            if (std::find(seeds.begin(), seeds.end(), bi) == seeds.end()) seeds.push_back(bi);
        }
        for (int s = 0; s < n && (int)seeds.size() < std::max(i, 4); ++s)
            if (std::find(seeds.begin(), seeds.end(), s) == seeds.end()) seeds.push_back(s);
        std::vector<int> idx;
        std::function<void(int)> go = [&](int start) {
            if ((int)idx.size() == i) { eval_net(idx); return; }
            for (int t = start; t < (int)seeds.size(); ++t) {
                idx.push_back(seeds[t]);
                go(t + 1);
                idx.pop_back();
            }
        };
        go(0);
    }

    // a net misses catalogue disk j (bit j unset in its union mask) =>
    // its oracle value >= catalogue[j].count; skip when that's >= best
    auto certified = [&](std::uint64_t union_mask) {
        for (size_t j = 0; j < catalogue.size(); ++j)
            if (!(union_mask & (1ULL << j)) && catalogue[j].count >= best) return true;
        return false;
    };

    // enumerate multisets of classes of size i, then concrete nets inside
    std::vector<int> chosen;
    std::function<void(int, int, std::uint64_t)> rec_classes = [&](int from, int left,
                                                                   std::uint64_t umask) {
        if (left == 0) {
            if (certified(umask)) return;
            std::vector<std::pair<int, int>> take;   // (class, count)
            for (size_t t = 0; t < chosen.size(); ++t) {
                if (!take.empty() && take.back().first == chosen[t]) ++take.back().second;
                else take.emplace_back(chosen[t], 1);
            }
            std::vector<int> net_idx;
            std::function<void(size_t)> rec_pick = [&](size_t level) {
                if (level == take.size()) {
                    eval_net(net_idx);
                    return;
                }
                auto [cls, cnt] = take[level];
                const std::vector<int>& pts = *class_pts[cls];
                std::function<void(int, int)> pick = [&](int start, int need) {
                    if (need == 0) { rec_pick(level + 1); return; }
                    for (int p = start; p <= (int)pts.size() - need; ++p) {
                        net_idx.push_back(pts[p]);
                        pick(p + 1, need - 1);
                        net_idx.pop_back();
                    }
                };
                pick(0, cnt);
            };
            rec_pick(0);
            return;
        }
        for (int c = from; c < C; ++c) {
            int already = 0;
            for (int t : chosen)
                if (t == c) ++already;
            if (already >= (int)class_pts[c]->size()) continue;
            chosen.push_back(c);
            rec_classes(c, left - 1, umask | class_mask[c]);
            chosen.pop_back();
        }
    };
    rec_classes(0, i, 0);

    out.nets_examined = evaluated;
    out.fraction = Rat(best, n);
    for (Point p : best_net) {
        p.x[0] /= Rat(scale);
        p.x[1] /= Rat(scale);
        out.net.push_back(p);
    }
    return out;
}

} // namespace epsnet
