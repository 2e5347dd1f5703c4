#pragma once

#include <epsnet/geometry.hpp>

#include <string>
#include <vector>

namespace epsnet {

struct RangeFamily {
    enum Tag { Boxes, Halfplanes, Disks };
    Tag tag = Boxes;
    int dim = 2;   // ambient dimension; meaningful for Boxes only

    static RangeFamily boxes(int d) { return {Boxes, d}; }
    static RangeFamily halfplanes() { return {Halfplanes, 2}; }
    static RangeFamily disks() { return {Disks, 2}; }

    bool operator==(const RangeFamily& o) const { return tag == o.tag && dim == o.dim; }

    std::string name() const {
        switch (tag) {
            case Boxes: return "boxes";
            case Halfplanes: return "halfplanes";
            default: return "disks";
        }
    }
};

struct Net {
    RangeFamily family;
    bool strong = true;
    std::vector<int> members;        // indices into the source point set (strong)
    std::vector<Point> free_points;  // explicit points (weak)
    Rat claimed_eps = 1;
    bool fallback = false;           // builder degraded and re-certified by oracle

    int size() const { return strong ? (int)members.size() : (int)free_points.size(); }

    // net points as concrete coordinates
    std::vector<Point> points(const PointSet& P) const {
        if (!strong) return free_points;
        std::vector<Point> out;
        out.reserve(members.size());
        for (int i : members) {
            if (i < 0 || i >= P.n()) throw input_error("net member index out of range");
            out.push_back(P.pts[i]);
        }
        return out;
    }

    void check_strong(const PointSet& P) const {
        if (!strong) return;
        std::vector<int> m = members;
        std::sort(m.begin(), m.end());
        for (size_t i = 0; i + 1 < m.size(); ++i)
            if (m[i] == m[i + 1]) throw input_error("duplicate net member");
        if (!m.empty() && (m.front() < 0 || m.back() >= P.n()))
            throw input_error("net member index out of range");
    }
};

} // namespace epsnet
