// epsnet command line: generate lower-bound instances, build nets, run the
// adversary oracles, reproduce the bound tables and render SVG figures.
//
// Exit codes: 0 ok / bound holds, 1 bound violated, 2 input error,
// 3 budget exceeded.

#include <epsnet/builders.hpp>
#include <epsnet/generators.hpp>
#include <epsnet/json_io.hpp>
#include <epsnet/oracles.hpp>
#include <epsnet/svg.hpp>
#include <epsnet/table.hpp>
#include <epsnet/weak_verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

using namespace epsnet;

namespace {

PointSet load_points(const std::string& path) {
    json j = load_json_file(path);
    if (j.contains("point_set")) return pointset_from_json(j.at("point_set"));
    return pointset_from_json(j);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"small strong epsilon-net construction and verification"};
    app.require_subcommand(1);

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "emit a lower-bound instance as JSON");
    std::string gen_name, gen_out = "instance.json";
    long long gen_k = 1, gen_i = -1, gen_d = -1, gen_kk = -1;
    gen_cmd->add_option("name", gen_name, "generator name")->required();
    gen_cmd->add_option("--k", gen_k, "multiplicity");
    gen_cmd->add_option("--i", gen_i, "net size parameter (halfspace-lb, circle-sectors)");
    gen_cmd->add_option("--d", gen_d, "dimension (box-lb)");
    gen_cmd->add_option("--kk", gen_kk, "points per sector (circle-sectors)");
    gen_cmd->add_option("--out", gen_out, "output file");

    // build
    auto* build_cmd = app.add_subcommand("build", "construct a net for a point set");
    std::string build_points, build_method, build_out = "net.json";
    int build_i = 2, build_x = 1, build_y = 0, build_gx = 4, build_gy = 2, build_gj = 0,
        build_gk = 0, build_dim = 2;
    build_cmd->add_option("points", build_points, "point set JSON")->required();
    build_cmd->add_option("--method", build_method,
                          "box-centerpoint | rect2 | rect-size | onept | grid | hull-walk | disk2")
        ->required();
    build_cmd->add_option("--i", build_i, "target net size (rect-size, hull-walk)");
    build_cmd->add_option("--d", build_dim, "dimension (box-centerpoint)");
    build_cmd->add_option("--x", build_x, "onept x parameter");
    build_cmd->add_option("--y", build_y, "onept y parameter");
    build_cmd->add_option("--gx", build_gx, "grid horizontal bands");
    build_cmd->add_option("--gy", build_gy, "grid vertical slabs");
    build_cmd->add_option("--gj", build_gj, "grid per-band net size");
    build_cmd->add_option("--gk", build_gk, "grid per-slab net size");
    build_cmd->add_option("--out", build_out, "output file");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the adversary oracle for a net");
    std::string verify_points, verify_net, verify_out;
    verify_cmd->add_option("points", verify_points, "point set JSON")->required();
    verify_cmd->add_option("net", verify_net, "net JSON")->required();
    verify_cmd->add_option("--out", verify_out, "write the oracle report JSON here");

    // lower-bound
    auto* lb_cmd = app.add_subcommand("lower-bound", "minimum oracle fraction over all nets");
    std::string lb_points, lb_family = "boxes", lb_mode = "exhaustive", lb_out;
    int lb_i = 1, lb_dim = 2, lb_threads = 1, lb_resolution = 0;
    long long lb_budget = 1000000000LL;
    lb_cmd->add_option("points", lb_points, "point set or instance JSON")->required();
    lb_cmd->add_option("--family", lb_family, "boxes | halfplanes | disks");
    lb_cmd->add_option("--i", lb_i, "net size")->required();
    lb_cmd->add_option("--dim", lb_dim, "box dimension");
    lb_cmd->add_option("--mode", lb_mode, "exhaustive | clustered");
    lb_cmd->add_option("--budget", lb_budget, "containment test budget");
    lb_cmd->add_option("--threads", lb_threads, "worker threads");
    lb_cmd->add_option("--weak-resolution", lb_resolution,
                       "sampled weak verification on an RxR grid (disks only)");
    lb_cmd->add_option("--out", lb_out, "write result JSON here");

    // table
    auto* table_cmd = app.add_subcommand("table", "reproduce the bound summary tables");
    std::string table_which = "rect", table_csv_path, table_md_path;
    TableOptions topt;
    table_cmd->add_option("which", table_which, "rect | summary")->required();
    table_cmd->add_option("--seed", topt.seed, "random seed");
    table_cmd->add_option("--budget", topt.budget, "per-row verification budget");
    table_cmd->add_option("--threads", topt.threads, "worker threads");
    table_cmd->add_option("--trials", topt.ub_trials, "random sets per upper-bound row");
    table_cmd->add_option("--csv", table_csv_path, "CSV output file");
    table_cmd->add_option("--md", table_md_path, "Markdown output file");

    // render
    auto* render_cmd = app.add_subcommand("render", "emit an SVG drawing");
    std::string render_points, render_net, render_witness, render_out = "out.svg";
    render_cmd->add_option("points", render_points, "point set or instance JSON")->required();
    render_cmd->add_option("--net", render_net, "net JSON to highlight");
    render_cmd->add_option("--witness", render_witness, "oracle report JSON whose witness to draw");
    render_cmd->add_option("--out", render_out, "output SVG");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*gen_cmd) {
            std::map<std::string, long long> params;
            params["k"] = gen_k;
            if (gen_i >= 0) params["i"] = gen_i;
            if (gen_d >= 0) params["d"] = gen_d;
            if (gen_kk >= 0) params["kk"] = gen_kk;
            GeneratorInstance g = generate_by_name(gen_name, params);
            save_json_file(gen_out, generator_to_json(g));
            std::cout << g.provenance() << ": n=" << g.point_set.n() << ", claimed lower bound "
                      << to_pq(g.claimed_lower_bound) << " for " << g.family.name()
                      << " nets of size " << g.net_size << " -> " << gen_out << "\n";
            return 0;
        }
        if (*build_cmd) {
            PointSet P = load_points(build_points);
            Net net;
            if (build_method == "box-centerpoint")
                net = build_box_strong_centerpoint(P, build_dim);
            else if (build_method == "rect2")
                net = build_rect_net2(P);
            else if (build_method == "rect-size")
                net = build_rect_net_for_size(P, build_i);
            else if (build_method == "onept")
                net = build_rect_net_onept(P, build_x, build_y);
            else if (build_method == "grid")
                net = build_rect_net_grid(P, build_gx, build_gy, build_gj, build_gk);
            else if (build_method == "hull-walk")
                net = build_halfspace_net(P, build_i);
            else if (build_method == "disk2")
                net = build_disk_net2(P);
            else
                throw input_error("unknown method '" + build_method + "'");
            save_json_file(build_out, net_to_json(net));
            std::cout << build_method << ": size " << net.size() << ", claimed eps "
                      << to_pq(net.claimed_eps) << " -> " << build_out << "\n";
            return 0;
        }
        if (*verify_cmd) {
            PointSet P = load_points(verify_points);
            Net net = net_from_json(load_json_file(verify_net));
            OracleReport rep = oracle_for(P, net);
            if (!check_witness(P, net.points(P), rep))
                throw std::logic_error("oracle witness failed its recheck");
            if (!verify_out.empty()) save_json_file(verify_out, report_to_json(rep));
            Rat slack = Rat(net.size() + 4, rep.n);
            bool ok = rep.fraction <= net.claimed_eps + slack;
            std::cout << "max avoided count " << rep.max_count << " of " << rep.n
                      << " (fraction " << to_pq(rep.fraction) << "), claimed "
                      << to_pq(net.claimed_eps) << " + slack " << to_pq(slack) << ": "
                      << (ok ? "BOUND HOLDS" : "BOUND VIOLATED") << "\n";
            return ok ? 0 : 1;
        }
        if (*lb_cmd) {
            PointSet P = load_points(lb_points);
            RangeFamily fam = family_from_string(lb_family, lb_dim);
            json out;
            Rat fraction;
            if (lb_resolution > 0) {
                WeakLowerBoundResult res =
                    verify_weak_lower_bound_sampled(P, fam, lb_i, lb_resolution, lb_budget);
                fraction = res.fraction;
                out = {{"fraction", to_pq(res.fraction)},
                       {"sample_size", res.sample_size},
                       {"nets_evaluated", res.nets_examined},
                       {"weak", true}};
            } else {
                VerifyMode mode =
                    lb_mode == "clustered" ? VerifyMode::Clustered : VerifyMode::Exhaustive;
                LowerBoundResult res =
                    verify_lower_bound(P, fam, lb_i, mode, lb_budget, lb_threads);
                fraction = res.fraction;
                out = {{"fraction", to_pq(res.fraction)},
                       {"minimizing_net", res.net},
                       {"nets_examined", res.nets_examined},
                       {"report", report_to_json(res.report)}};
            }
            if (!lb_out.empty()) save_json_file(lb_out, out);
            std::cout << "minimum oracle fraction over size-" << lb_i << " nets: "
                      << to_pq(fraction) << "\n";
            return 0;
        }
        if (*table_cmd) {
            std::vector<TableRow> rows;
            if (table_which == "rect")
                rows = table_rect(topt);
            else if (table_which == "summary")
                rows = table_summary(topt);
            else
                throw input_error("unknown table '" + table_which + "'");
            std::string csv = table_csv(rows, topt);
            std::string md = table_markdown(rows, topt);
            if (!table_csv_path.empty()) write_text(table_csv_path, csv);
            if (!table_md_path.empty()) write_text(table_md_path, md);
            std::cout << md;
            bool violated = false;
            for (const TableRow& r : rows)
                if (r.status == "fail") violated = true;
            return violated ? 1 : 0;
        }
        if (*render_cmd) {
            json j = load_json_file(render_points);
            PointSet P = j.contains("point_set") ? pointset_from_json(j.at("point_set"))
                                                 : pointset_from_json(j);
            std::vector<WitnessObject> wits;
            if (j.contains("witnesses"))
                for (const json& w : j.at("witnesses"))
                    wits.push_back(witness_from_json(w.at("object")));
            Net net;
            Net* net_ptr = nullptr;
            if (!render_net.empty()) {
                net = net_from_json(load_json_file(render_net));
                net_ptr = &net;
            }
            if (!render_witness.empty()) {
                json r = load_json_file(render_witness);
                wits.push_back(witness_from_json(r.at("witness")));
            }
            write_text(render_out, render_svg(P, net_ptr, wits.empty() ? nullptr : &wits));
            std::cout << "wrote " << render_out << "\n";
            return 0;
        }
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
