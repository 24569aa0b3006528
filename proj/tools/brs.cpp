#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "brs/bench.hpp"
#include "brs/instance_io.hpp"
#include "brs/oracle.hpp"
#include "brs/solver.hpp"
#include "brs/svg.hpp"
#include "brs/validate.hpp"

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitError = 1;       // parse/usage/IO problems
constexpr int kExitInfeasible = 2;  // the model has no solution

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << bytes;
}

void emit(const std::optional<std::string>& out_path, const std::string& bytes) {
    if (out_path)
        spill(*out_path, bytes);
    else
        std::cout << bytes;
}

struct SolveArgs {
    std::string instance_path;
    std::string algorithm = "auto";
    std::optional<int> max_drones;
    std::optional<std::string> out_path;
    std::optional<std::string> svg_path;
};

int cmd_solve(const SolveArgs& args) {
    brs::Instance inst = brs::parse_instance(slurp(args.instance_path));
    if (args.max_drones) inst.max_drones = args.max_drones;

    if (args.algorithm == "a2" && !inst.max_drones) {
        std::cerr << "solve: --algorithm a2 needs --max-drones or a max_drones field\n";
        return kExitError;
    }

    const auto report = brs::feasibility_check(inst);
    brs::SolveResult result = brs::Infeasible{report.gap, report.n_min, "barrier not coverable"};
    if (report.coverable) {
        if (args.algorithm == "auto") {
            result = brs::solve(inst);
        } else {
            const auto tables = brs::build_tables(inst);
            result = args.algorithm == "a1" ? brs::solve_a1(inst, tables)
                                            : brs::solve_a2(inst, tables, *inst.max_drones);
            if (auto* sol = std::get_if<brs::Solution>(&result)) sol->n_min = report.n_min;
            if (auto* bad = std::get_if<brs::Infeasible>(&result)) bad->n_min = report.n_min;
        }
    }

    emit(args.out_path, brs::write_solution(result));
    const auto* sol = std::get_if<brs::Solution>(&result);
    if (!sol) return kExitInfeasible;
    if (args.svg_path) spill(*args.svg_path, brs::render_solution_svg(inst, *sol));
    return kExitSolved;
}

int cmd_tables(const std::string& instance_path, std::optional<int> depot,
               const std::optional<std::string>& out_path) {
    const brs::Instance inst = brs::parse_instance(slurp(instance_path));
    if (depot && (*depot < 1 || *depot > int(inst.depots.size()))) {
        std::cerr << "tables: depot " << *depot << " does not exist\n";
        return kExitError;
    }
    const auto tables = brs::build_tables(inst);
    emit(out_path, brs::dump_tables_csv(tables, depot));
    return kExitSolved;
}

int cmd_oracle(const std::string& instance_path, std::optional<int> max_drones, double step,
               bool compare) {
    brs::Instance inst = brs::parse_instance(slurp(instance_path));
    if (max_drones) inst.max_drones = max_drones;
    if (inst.barrier_length > 24) {
        std::cerr << "oracle: refusing barriers longer than 24 (exhaustive search)\n";
        return kExitError;
    }

    const auto truth = brs::oracle_optimum(inst, inst.max_drones, step);
    if (!truth) {
        std::cout << "oracle: no cover exists\n";
        return kExitInfeasible;
    }
    std::printf("oracle objective %.9f over %lld states\n", truth->objective,
                truth->states_visited);
    std::printf("partition:");
    for (const int z : truth->partition) std::printf(" %d", z);
    std::printf("\ndepots:");
    for (std::size_t i = 0; i < truth->part_depots.size(); ++i)
        std::printf(" %d(x%d)", truth->part_depots[i], truth->part_drones[i]);
    std::printf("\n");

    if (compare) {
        const auto result = brs::solve(inst);
        const auto* sol = std::get_if<brs::Solution>(&result);
        if (!sol) {
            std::cerr << "oracle: solver found no solution where the oracle did\n";
            return kExitError;
        }
        const double drift = std::abs(sol->objective - truth->objective);
        std::printf("solver objective %.9f (drift %.3g)\n", sol->objective, drift);
        if (drift > 1e-6) {
            std::cerr << "oracle: solver disagrees beyond tolerance\n";
            return kExitError;
        }
    }
    return kExitSolved;
}

int cmd_bench(const std::vector<int>& sizes, int depots, int cap, std::uint64_t seed,
              const std::optional<std::string>& out_path) {
    const auto records = brs::run_bench(sizes, depots, cap, seed);
    emit(out_path, brs::bench_csv(records));
    return kExitSolved;
}

int cmd_render(const std::string& instance_path, const std::string& solution_path,
               const std::optional<std::string>& out_path) {
    const brs::Instance inst = brs::parse_instance(slurp(instance_path));
    const auto doc = brs::parse_solution(slurp(solution_path));
    const auto* sol = std::get_if<brs::Solution>(&doc);
    if (!sol) {
        std::cerr << "render: the solution document is infeasible, nothing to draw\n";
        return kExitError;
    }
    emit(out_path, brs::render_solution_svg(inst, *sol));
    return kExitSolved;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact MinSum coverage of a line barrier by budget-limited depot tours"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "solve an instance and print the solution");
    solve->add_option("--instance", solve_args.instance_path, "instance JSON")->required();
    solve->add_option("--algorithm", solve_args.algorithm, "auto, a1 or a2")
        ->check(CLI::IsMember({"auto", "a1", "a2"}));
    solve->add_option("--max-drones", solve_args.max_drones, "override the drone cap");
    solve->add_option("--out", solve_args.out_path, "write the solution here");
    solve->add_option("--svg", solve_args.svg_path, "also render the tours");

    std::string tbl_instance;
    std::optional<int> tbl_depot;
    std::optional<std::string> tbl_out;
    auto* tables = app.add_subcommand("tables", "dump per-depot drone counts and costs as CSV");
    tables->add_option("--instance", tbl_instance, "instance JSON")->required();
    tables->add_option("--depot", tbl_depot, "restrict to one depot (1-based)");
    tables->add_option("--out", tbl_out, "write the CSV here");

    std::string orc_instance;
    std::optional<int> orc_cap;
    double orc_step = 1.0;
    bool orc_compare = false;
    auto* oracle = app.add_subcommand("oracle", "exhaustive reference optimum (small barriers)");
    oracle->add_option("--instance", orc_instance, "instance JSON")->required();
    oracle->add_option("--max-drones", orc_cap, "drone cap for the reference search");
    oracle->add_option("--step", orc_step, "split-point grid step inside segments");
    oracle->add_flag("--compare", orc_compare, "also solve and fail on disagreement");

    std::vector<int> bench_sizes;
    int bench_depots = 8;
    int bench_cap = 64;
    std::uint64_t bench_seed = 1;
    std::optional<std::string> bench_out;
    auto* bench = app.add_subcommand("bench", "compare table-building strategies");
    bench->add_option("--sizes", bench_sizes, "barrier lengths")->required()->delimiter(',');
    bench->add_option("--depots", bench_depots, "depot count");
    bench->add_option("--cap", bench_cap, "drone cap");
    bench->add_option("--seed", bench_seed, "generator seed");
    bench->add_option("--out", bench_out, "write the CSV here");

    std::string rnd_instance, rnd_solution;
    std::optional<std::string> rnd_out;
    auto* render = app.add_subcommand("render", "draw a solved instance as SVG");
    render->add_option("--instance", rnd_instance, "instance JSON")->required();
    render->add_option("--solution", rnd_solution, "solution JSON")->required();
    render->add_option("--out", rnd_out, "write the SVG here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(solve_args);
        if (tables->parsed()) return cmd_tables(tbl_instance, tbl_depot, tbl_out);
        if (oracle->parsed()) return cmd_oracle(orc_instance, orc_cap, orc_step, orc_compare);
        if (bench->parsed()) return cmd_bench(bench_sizes, bench_depots, bench_cap, bench_seed,
                                              bench_out);
        if (render->parsed()) return cmd_render(rnd_instance, rnd_solution, rnd_out);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
