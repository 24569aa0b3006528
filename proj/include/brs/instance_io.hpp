#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "brs/coverage_tables.hpp"
#include "brs/solver.hpp"

namespace brs {

// Parse failure with the offending field spelled out, e.g. "depots[1].y".
class ParseError : public std::runtime_error {
  public:
    ParseError(std::string path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

  private:
    std::string path_;
};

// Instance document: {"barrier_length", "path_budget", "max_drones"?, "depots": [{x, y}...]}.
// Depots are sorted by abscissa; duplicate abscissas are rejected.
Instance parse_instance(const std::string& text);
std::string write_instance(const Instance& inst);

// Solution document with canonical key order and fixed 9-decimal lengths,
// byte-stable across runs.
std::string write_solution(const SolveResult& result);
SolveResult parse_solution(const std::string& text);

// Table dump rows: depot,a,b,n_i,f_i with `inf` for unreachable pairs.
std::string dump_tables_csv(std::span<const DepotChains> tables,
                            std::optional<int> only_depot = std::nullopt);

}  // namespace brs
