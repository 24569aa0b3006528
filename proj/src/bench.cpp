#include "brs/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "brs/strings.hpp"

namespace brs {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Best-of-N timing with an adaptive repeat count so that millisecond-scale
// builds still produce stable ratios.
template <typename Fn>
double timed_min(Fn&& fn) {
    double best = 1e300;
    double total = 0.0;
    int reps = 0;
    do {
        const auto start = Clock::now();
        fn();
        const double elapsed = seconds_since(start);
        best = std::min(best, elapsed);
        total += elapsed;
        ++reps;
    } while (total < 0.2 && reps < 200);
    return best;
}

double solved_objective(const SolveResult& result) {
    if (const auto* sol = std::get_if<Solution>(&result)) return sol->objective;
    throw std::runtime_error("bench: generated instance failed to solve");
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
}

// Tall depots relative to their budget keep the reach chains deep, so the
// table builds carry measurable work at every size. All dimensions scale
// with L, which is what makes the doubling ratios meaningful.
Instance bench_instance(std::uint64_t seed, int length, int depots, int cap) {
    std::mt19937_64 rng(seed ^ 0x6a09e667f3bcc909ULL);
    // Altitude backs off for sparse depot rows so the reach spans still tile
    // the barrier; with eight or more depots it sits near the deep-chain limit.
    const double half_pitch_frac = 0.58 / depots;
    const double altitude_frac = std::min(
        0.345, std::sqrt(std::max(0.36 * 0.36 - half_pitch_frac * half_pitch_frac, 0.0004)));
    for (int attempt = 0; attempt < 32; ++attempt) {
        Instance inst;
        inst.barrier_length = length;
        inst.max_drones = cap;
        const double pitch = double(length) / depots;
        for (int i = 0; i < depots; ++i) {
            const double x = (i + 0.5 + uniform(rng, -0.08, 0.08)) * pitch;
            const double y = altitude_frac * length * uniform(rng, 0.99, 1.01);
            inst.depots.push_back({i + 1, x, y});
            inst.input_order.push_back(i);
        }
        inst.budget = 0.72 * length * uniform(rng, 1.0, 1.02) + 0.237;
        if (feasibility_check(inst).coverable) return inst;
    }
    throw std::runtime_error("bench: no coverable instance after bounded retries");
}

}  // namespace

std::vector<BenchRecord> run_bench(std::span<const int> sizes, int depots, int cap,
                                   std::uint64_t seed) {
    std::vector<BenchRecord> records;
    for (const int length : sizes) {
        const Instance inst = bench_instance(seed ^ (std::uint64_t(length) << 20), length,
                                             depots, cap);

        // Compact strategy: chains only, segment costs answered lazily.
        // Both builds run single-threaded so the strategies compare like
        // for like.
        BenchRecord compact{length, depots, cap, "compact", 0, 0, 0, 0};
        std::vector<DepotChains> tables;
        compact.build_time_s = timed_min([&] {
            tables.clear();
            for (const auto& depot : inst.depots)
                tables.push_back(
                    build_chains(depot, inst.budget, inst.barrier_length, inst.chain_cap()));
        });
        {
            SolveStats stats;
            const auto start = Clock::now();
            const auto result = solve_a1(inst, tables, &stats);
            compact.solve_time_s = seconds_since(start);
            compact.objective = solved_objective(result);
            compact.query_count = stats.table_queries;
        }
        records.push_back(compact);

        // Dense-naive strategy: every pair evaluated from scratch up front.
        BenchRecord dense{length, depots, cap, "dense-naive", 0, 0, 0, 0};
        std::optional<DenseAggregate> table;
        dense.build_time_s = timed_min([&] {
            table.emplace(build_dense_naive(inst.depots, inst.budget, inst.barrier_length,
                                            inst.chain_cap()));
        });
        {
            table->queries = 0;
            const auto start = Clock::now();
            const auto result = solve_a1_over(inst, *table);
            dense.solve_time_s = seconds_since(start);
            dense.objective = solved_objective(result);
            dense.query_count = table->queries;
        }
        records.push_back(dense);
    }
    return records;
}

std::string bench_csv(std::span<const BenchRecord> records) {
    std::ostringstream out;
    out << "L,m,n,strategy,build_time_s,query_count,solve_time_s,objective\n";
    for (const auto& r : records) {
        out << r.barrier_length << ',' << r.depots << ',' << r.cap << ',' << r.strategy << ','
            << strprintf("%.6f", r.build_time_s) << ',' << r.query_count << ','
            << strprintf("%.6f", r.solve_time_s) << ',' << strprintf("%.9f", r.objective)
            << '\n';
    }
    return out.str();
}

}  // namespace brs
