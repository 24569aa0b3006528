#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "brs/solver.hpp"

namespace brs {

struct BenchRecord {
    int barrier_length = 0;
    int depots = 0;
    int cap = 0;
    std::string strategy;  // "compact" or "dense-naive"
    double build_time_s = 0.0;
    long long query_count = 0;
    double solve_time_s = 0.0;
    double objective = 0.0;
};

// For each barrier length: generate a seeded solvable instance, build the
// segment-cost tables under both strategies, time the builds and a full
// optimal-partition solve against each. Objectives must agree; the records
// leave that to the caller to assert.
std::vector<BenchRecord> run_bench(std::span<const int> sizes, int depots, int cap,
                                   std::uint64_t seed);

std::string bench_csv(std::span<const BenchRecord> records);

}  // namespace brs
