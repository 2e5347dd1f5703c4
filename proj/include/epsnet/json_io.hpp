#pragma once

// JSON (de)serialization for point sets, nets, oracle reports and generator
// instances. Numbers are written as exact integers or decimal strings;
// fractions always as reduced "p/q" strings.

#include <epsnet/generators.hpp>
#include <epsnet/net.hpp>
#include <epsnet/oracles.hpp>

#include <json.hpp>

#include <fstream>
#include <string>

namespace epsnet {

using json = nlohmann::json;

inline json rat_to_json(const Rat& q) {
    if (denominator(q) == 1) {
        BigInt n = numerator(q);
        if (n >= std::numeric_limits<long long>::min() &&
            n <= std::numeric_limits<long long>::max())
            return json(to_ll(n));
    }
    return json(to_exact_string(q));
}

inline Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat((long long)j.get<long long>());
    if (j.is_string()) return parse_exact(j.get<std::string>());
    if (j.is_number_float())
        throw input_error("floating point numbers are not accepted; use decimal strings");
    throw input_error("expected an exact number");
}

// PointSet: {"dim": int, "points": [[num,...],...], "labels": [int,...]?}
inline json pointset_to_json(const PointSet& P) {
    json pts = json::array();
    for (const Point& p : P.pts) {
        json row = json::array();
        for (const Rat& c : p.x) row.push_back(rat_to_json(c));
        pts.push_back(row);
    }
    json out = {{"dim", P.dim}, {"points", pts}};
    if (!P.labels.empty()) out["labels"] = P.labels;
    return out;
}

inline PointSet pointset_from_json(const json& j) {
    PointSet P;
    P.dim = j.at("dim").get<int>();
    for (const json& row : j.at("points")) {
        Point p;
        for (const json& c : row) p.x.push_back(rat_from_json(c));
        P.pts.push_back(std::move(p));
    }
    if (j.contains("labels")) P.labels = j.at("labels").get<std::vector<int>>();
    P.check_dims();
    return P;
}

// Net: {"family": ..., "dim": int, "strong": bool, "members": ..., "claimed_eps": "p/q"}
inline json net_to_json(const Net& N) {
    json members;
    if (N.strong) {
        members = N.members;
    } else {
        members = json::array();
        for (const Point& p : N.free_points) {
            json row = json::array();
            for (const Rat& c : p.x) row.push_back(rat_to_json(c));
            members.push_back(row);
        }
    }
    return {{"family", N.family.name()},
            {"dim", N.family.dim},
            {"strong", N.strong},
            {"members", members},
            {"claimed_eps", to_pq(N.claimed_eps)}};
}

inline RangeFamily family_from_string(const std::string& s, int dim) {
    if (s == "boxes") return RangeFamily::boxes(dim);
    if (s == "halfplanes") return RangeFamily::halfplanes();
    if (s == "disks") return RangeFamily::disks();
    throw input_error("unknown family '" + s + "'");
}

inline Net net_from_json(const json& j) {
    Net N;
    N.family = family_from_string(j.at("family").get<std::string>(),
                                  j.value("dim", 2));
    N.strong = j.at("strong").get<bool>();
    if (N.strong) {
        N.members = j.at("members").get<std::vector<int>>();
    } else {
        for (const json& row : j.at("members")) {
            Point p;
            for (const json& c : row) p.x.push_back(rat_from_json(c));
            N.free_points.push_back(std::move(p));
        }
    }
    N.claimed_eps = parse_exact(j.at("claimed_eps").get<std::string>());
    return N;
}

inline json witness_to_json(const WitnessObject& w) {
    if (std::holds_alternative<BoxObj>(w)) {
        const BoxObj& b = std::get<BoxObj>(w);
        json lo = json::array(), hi = json::array();
        for (const Rat& c : b.lo) lo.push_back(rat_to_json(c));
        for (const Rat& c : b.hi) hi.push_back(rat_to_json(c));
        return {{"type", "box"}, {"lo", lo}, {"hi", hi}};
    }
    if (std::holds_alternative<HalfplaneObj>(w)) {
        const HalfplaneObj& h = std::get<HalfplaneObj>(w);
        return {{"type", "halfplane"}, {"a", rat_to_json(h.a)}, {"b", rat_to_json(h.b)},
                {"c", rat_to_json(h.c)}};
    }
    const DiskObj& d = std::get<DiskObj>(w);
    return {{"type", "disk"},
            {"center", {rat_to_json(d.center.x[0]), rat_to_json(d.center.x[1])}},
            {"radius_sq", rat_to_json(d.radius_sq)}};
}

inline WitnessObject witness_from_json(const json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "box") {
        BoxObj b;
        for (const json& c : j.at("lo")) b.lo.push_back(rat_from_json(c));
        for (const json& c : j.at("hi")) b.hi.push_back(rat_from_json(c));
        return b;
    }
    if (type == "halfplane")
        return HalfplaneObj{rat_from_json(j.at("a")), rat_from_json(j.at("b")),
                            rat_from_json(j.at("c"))};
    if (type == "disk") {
        const json& c = j.at("center");
        return DiskObj{Point(rat_from_json(c.at(0)), rat_from_json(c.at(1))),
                       rat_from_json(j.at("radius_sq"))};
    }
    throw input_error("unknown witness type '" + type + "'");
}

// OracleReport: {"max_count", "n", "fraction", "witness", "candidates"}
inline json report_to_json(const OracleReport& r) {
    return {{"max_count", r.max_count},
            {"n", r.n},
            {"fraction", to_pq(r.fraction)},
            {"witness", witness_to_json(r.witness)},
            {"candidates", r.candidates_examined}};
}

inline json generator_to_json(const GeneratorInstance& g) {
    json params = json::object();
    for (auto& [k, v] : g.params) params[k] = v;
    json wit = json::array();
    for (auto& [name, w] : g.witnesses)
        wit.push_back({{"name", name}, {"object", witness_to_json(w)}});
    return {{"generator", g.name},
            {"params", params},
            {"family", g.family.name()},
            {"dim", g.family.dim},
            {"net_size", g.net_size},
            {"weak", g.weak},
            {"claimed_lower_bound", to_pq(g.claimed_lower_bound)},
            {"lb_slack_count", g.lb_slack_count},
            {"point_set", pointset_to_json(g.point_set)},
            {"witnesses", wit}};
}

inline GeneratorInstance generator_from_json(const json& j) {
    GeneratorInstance g;
    g.name = j.at("generator").get<std::string>();
    for (auto& [k, v] : j.at("params").items())
        g.params.emplace_back(k, v.get<long long>());
    g.family = family_from_string(j.at("family").get<std::string>(), j.value("dim", 2));
    g.net_size = j.at("net_size").get<int>();
    g.weak = j.value("weak", false);
    g.claimed_lower_bound = parse_exact(j.at("claimed_lower_bound").get<std::string>());
    g.lb_slack_count = j.value("lb_slack_count", 0LL);
    g.point_set = pointset_from_json(j.at("point_set"));
    if (j.contains("witnesses"))
        for (const json& w : j.at("witnesses"))
            g.witnesses.emplace_back(w.at("name").get<std::string>(),
                                     witness_from_json(w.at("object")));
    return g;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

} // namespace epsnet
