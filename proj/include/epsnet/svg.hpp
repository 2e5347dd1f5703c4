#pragma once

// Static SVG rendering of point sets, nets and witness objects. Coordinates
// are converted to double for presentation only; nothing here feeds back
// into any computation.

#include <epsnet/net.hpp>
#include <epsnet/oracles.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace epsnet {

namespace detail {

inline double to_d(const Rat& q) {
    return numerator(q).convert_to<double>() / denominator(q).convert_to<double>();
}

inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

} // namespace detail

inline std::string render_svg(const PointSet& P, const Net* net = nullptr,
                              const std::vector<WitnessObject>* witnesses = nullptr) {
    using detail::fmt;
    using detail::to_d;
    if (P.dim != 2) throw input_error("render_svg expects dim 2");
    double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
    for (const Point& p : P.pts) {
        xlo = std::min(xlo, to_d(p.x[0])); xhi = std::max(xhi, to_d(p.x[0]));
        ylo = std::min(ylo, to_d(p.x[1])); yhi = std::max(yhi, to_d(p.x[1]));
    }
    double span = std::max(xhi - xlo, yhi - ylo);
    if (span <= 0) span = 1;
    double pad = span * 0.08;
    xlo -= pad; xhi += pad; ylo -= pad; yhi += pad;
    const double W = 640;
    double scale = W / (xhi - xlo);
    double H = (yhi - ylo) * scale;
    auto X = [&](double x) { return (x - xlo) * scale; };
    auto Y = [&](double y) { return H - (y - ylo) * scale; };   // y up

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(W) + "\" height=\"" +
         fmt(H) + "\" viewBox=\"0 0 " + fmt(W) + " " + fmt(H) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (witnesses) {
        for (const WitnessObject& w : *witnesses) {
            if (std::holds_alternative<BoxObj>(w)) {
                const BoxObj& b = std::get<BoxObj>(w);
                double x0 = X(to_d(b.lo[0])), x1 = X(to_d(b.hi[0]));
                double y0 = Y(to_d(b.hi[1])), y1 = Y(to_d(b.lo[1]));
                s += "<rect x=\"" + fmt(x0) + "\" y=\"" + fmt(y0) + "\" width=\"" +
                     fmt(x1 - x0) + "\" height=\"" + fmt(y1 - y0) +
                     "\" fill=\"#4a90d9\" fill-opacity=\"0.15\" stroke=\"#4a90d9\"/>\n";
            } else if (std::holds_alternative<DiskObj>(w)) {
                const DiskObj& d = std::get<DiskObj>(w);
                double r = std::sqrt(std::max(0.0, to_d(d.radius_sq))) * scale;
                s += "<circle cx=\"" + fmt(X(to_d(d.center.x[0]))) + "\" cy=\"" +
                     fmt(Y(to_d(d.center.x[1]))) + "\" r=\"" + fmt(r) +
                     "\" fill=\"#4a90d9\" fill-opacity=\"0.15\" stroke=\"#4a90d9\"/>\n";
            } else {
                const HalfplaneObj& h = std::get<HalfplaneObj>(w);
                // clip the boundary line a x + b y = c to the view box
                double a = to_d(h.a), b = to_d(h.b), c = to_d(h.c);
                std::vector<std::pair<double, double>> pts;
                auto try_add = [&](double x, double y) {
                    if (x >= xlo - 1e-9 && x <= xhi + 1e-9 && y >= ylo - 1e-9 && y <= yhi + 1e-9)
                        pts.emplace_back(x, y);
                };
                if (b != 0) { try_add(xlo, (c - a * xlo) / b); try_add(xhi, (c - a * xhi) / b); }
                if (a != 0) { try_add((c - b * ylo) / a, ylo); try_add((c - b * yhi) / a, yhi); }
                if (pts.size() >= 2) {
                    s += "<line x1=\"" + fmt(X(pts[0].first)) + "\" y1=\"" + fmt(Y(pts[0].second)) +
                         "\" x2=\"" + fmt(X(pts[1].first)) + "\" y2=\"" + fmt(Y(pts[1].second)) +
                         "\" stroke=\"#4a90d9\" stroke-width=\"1.5\"/>\n";
                }
            }
        }
    }

    std::vector<char> in_net(P.n(), 0);
    if (net && net->strong)
        for (int m : net->members) in_net[m] = 1;
    for (int p = 0; p < P.n(); ++p) {
        s += "<circle cx=\"" + fmt(X(to_d(P.pts[p].x[0]))) + "\" cy=\"" +
             fmt(Y(to_d(P.pts[p].x[1]))) + "\" r=\"" + (in_net[p] ? "5" : "2.5") +
             "\" fill=\"" + (in_net[p] ? "#d94a4a" : "#333333") + "\"/>\n";
    }
    if (net && !net->strong)
        for (const Point& p : net->free_points)
            s += "<circle cx=\"" + fmt(X(to_d(p.x[0]))) + "\" cy=\"" + fmt(Y(to_d(p.x[1]))) +
                 "\" r=\"5\" fill=\"none\" stroke=\"#d94a4a\" stroke-width=\"2\"/>\n";
    s += "</svg>\n";
    return s;
}

} // namespace epsnet
