#include "brs/instance_io.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <numeric>
#include <sstream>

#include "brs/strings.hpp"

namespace brs {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& path) {
    if (!j.is_number()) throw ParseError(path, "expected a number");
    return j.get<double>();
}

int require_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
    return j.get<int>();
}

const json& require_field(const json& j, const char* key, const std::string& path) {
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(path + "." + key, "missing field");
    return *it;
}

std::string trimmed_number(double v) {
    std::string s = strprintf("%.17g", v);
    return s;
}

std::string fixed9(double v) { return strprintf("%.9f", v); }

}  // namespace

Instance parse_instance(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError("$", err.what());
    }
    if (!doc.is_object()) throw ParseError("$", "expected a JSON object");

    Instance inst;
    inst.barrier_length = require_int(require_field(doc, "barrier_length", "$"), "$.barrier_length");
    if (inst.barrier_length < 1) throw ParseError("$.barrier_length", "must be at least 1");
    inst.budget = require_number(require_field(doc, "path_budget", "$"), "$.path_budget");
    if (!(inst.budget > 0)) throw ParseError("$.path_budget", "must be positive");
    if (doc.contains("max_drones") && !doc["max_drones"].is_null()) {
        inst.max_drones = require_int(doc["max_drones"], "$.max_drones");
        if (*inst.max_drones < 1) throw ParseError("$.max_drones", "must be at least 1");
    }

    const json& depots = require_field(doc, "depots", "$");
    if (!depots.is_array()) throw ParseError("$.depots", "expected an array");
    if (depots.empty()) throw ParseError("$.depots", "at least one depot is required");

    struct Raw {
        double x, y;
        int input_pos;
    };
    std::vector<Raw> raw;
    raw.reserve(depots.size());
    for (std::size_t i = 0; i < depots.size(); ++i) {
        const std::string path = strprintf("$.depots[%zu]", i);
        const json& d = depots[i];
        if (!d.is_object()) throw ParseError(path, "expected an object");
        const double x = require_number(require_field(d, "x", path), path + ".x");
        const double y = require_number(require_field(d, "y", path), path + ".y");
        if (y < 0) throw ParseError(path + ".y", "depot must not lie below the barrier");
        raw.push_back({x, y, int(i)});
    }
    std::stable_sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) { return a.x < b.x; });
    for (std::size_t i = 1; i < raw.size(); ++i) {
        if (std::abs(raw[i].x - raw[i - 1].x) <= kLengthTol)
            throw ParseError(strprintf("$.depots[%d].x", raw[i].input_pos),
                             strprintf("duplicate abscissa %.9f: depot abscissas must be "
                                       "pairwise distinct",
                                       raw[i].x));
    }
    for (std::size_t i = 0; i < raw.size(); ++i) {
        inst.depots.push_back({int(i) + 1, raw[i].x, raw[i].y});
        inst.input_order.push_back(raw[i].input_pos);
    }
    return inst;
}

std::string write_instance(const Instance& inst) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"barrier_length\": " << inst.barrier_length << ",\n";
    out << "  \"path_budget\": " << trimmed_number(inst.budget) << ",\n";
    if (inst.max_drones) out << "  \"max_drones\": " << *inst.max_drones << ",\n";
    out << "  \"depots\": [\n";
    for (std::size_t i = 0; i < inst.depots.size(); ++i) {
        out << "    {\"x\": " << trimmed_number(inst.depots[i].x)
            << ", \"y\": " << trimmed_number(inst.depots[i].y) << "}";
        out << (i + 1 < inst.depots.size() ? ",\n" : "\n");
    }
    out << "  ]\n}\n";
    return out.str();
}

std::string write_solution(const SolveResult& result) {
    std::ostringstream out;
    if (const auto* infeasible = std::get_if<Infeasible>(&result)) {
        out << "{\n  \"feasible\": false,\n  \"diagnostics\": {";
        bool first = true;
        const auto sep = [&] {
            if (!first) out << ", ";
            first = false;
        };
        if (infeasible->n_min) {
            sep();
            out << "\"n_min\": " << *infeasible->n_min;
        }
        if (infeasible->gap) {
            sep();
            out << "\"gap\": [" << fixed9(infeasible->gap->from) << ", "
                << fixed9(infeasible->gap->to) << "]";
        }
        if (!infeasible->reason.empty()) {
            sep();
            out << "\"reason\": " << json(infeasible->reason).dump();
        }
        out << "}\n}\n";
        return out.str();
    }

    const Solution& sol = std::get<Solution>(result);
    out << "{\n";
    out << "  \"algorithm\": \"" << (sol.algorithm == Algorithm::A1 ? "a1" : "a2") << "\",\n";
    out << "  \"feasible\": true,\n";
    out << "  \"objective\": " << fixed9(sol.objective) << ",\n";
    out << "  \"drones_used\": " << sol.drones_used << ",\n";
    out << "  \"parts\": " << sol.parts << ",\n";
    out << "  \"segments\": [\n";
    for (std::size_t i = 0; i < sol.segments.size(); ++i) {
        const auto& seg = sol.segments[i];
        out << "    {\"depot_index\": " << seg.depot_index << ", \"a\": " << seg.a
            << ", \"b\": " << seg.b << ", \"drones\": [";
        for (std::size_t t = 0; t < seg.tours.size(); ++t) {
            const auto& piece = seg.tours[t];
            if (t) out << ", ";
            out << "{\"start\": " << fixed9(piece.start) << ", \"end\": " << fixed9(piece.end)
                << ", \"tour_length\": " << fixed9(piece.length) << "}";
        }
        out << "]}" << (i + 1 < sol.segments.size() ? ",\n" : "\n");
    }
    out << "  ],\n";
    out << "  \"diagnostics\": {";
    bool first = true;
    const auto sep = [&] {
        if (!first) out << ", ";
        first = false;
    };
    if (sol.n_min) {
        sep();
        out << "\"n_min\": " << *sol.n_min;
    }
    if (sol.n_star) {
        sep();
        out << "\"n_star\": " << *sol.n_star;
    }
    out << "}\n}\n";
    return out.str();
}

SolveResult parse_solution(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError("$", err.what());
    }
    if (!doc.is_object()) throw ParseError("$", "expected a JSON object");
    const bool feasible = require_field(doc, "feasible", "$").get<bool>();
    if (!feasible) {
        Infeasible info;
        if (doc.contains("diagnostics")) {
            const json& diag = doc["diagnostics"];
            if (diag.contains("n_min")) info.n_min = diag["n_min"].get<int>();
            if (diag.contains("gap"))
                info.gap = CoverageGap{diag["gap"][0].get<double>(), diag["gap"][1].get<double>()};
            if (diag.contains("reason")) info.reason = diag["reason"].get<std::string>();
        }
        return info;
    }

    Solution sol;
    const std::string algo = require_field(doc, "algorithm", "$").get<std::string>();
    sol.algorithm = algo == "a1" ? Algorithm::A1 : Algorithm::A2;
    sol.objective = require_number(require_field(doc, "objective", "$"), "$.objective");
    sol.drones_used = require_int(require_field(doc, "drones_used", "$"), "$.drones_used");
    sol.parts = require_int(require_field(doc, "parts", "$"), "$.parts");
    const json& segments = require_field(doc, "segments", "$");
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const json& s = segments[i];
        const std::string path = strprintf("$.segments[%zu]", i);
        SegmentAssignment seg;
        seg.depot_index = require_int(require_field(s, "depot_index", path), path + ".depot_index");
        seg.a = require_int(require_field(s, "a", path), path + ".a");
        seg.b = require_int(require_field(s, "b", path), path + ".b");
        for (const json& d : require_field(s, "drones", path)) {
            seg.tours.push_back({d["start"].get<double>(), d["end"].get<double>(),
                                 d["tour_length"].get<double>()});
        }
        seg.drones = int(seg.tours.size());
        sol.segments.push_back(std::move(seg));
    }
    if (doc.contains("diagnostics")) {
        const json& diag = doc["diagnostics"];
        if (diag.contains("n_min")) sol.n_min = diag["n_min"].get<int>();
        if (diag.contains("n_star")) sol.n_star = diag["n_star"].get<int>();
    }
    return sol;
}

std::string dump_tables_csv(std::span<const DepotChains> tables, std::optional<int> only_depot) {
    std::ostringstream out;
    out << "depot,a,b,n_i,f_i\n";
    for (const auto& chains : tables) {
        if (only_depot && chains.depot.index != *only_depot) continue;
        for (int a = 0; a <= chains.barrier_length; ++a) {
            for (int b = a; b <= chains.barrier_length; ++b) {
                const auto count = min_drones(chains, a, b);
                const auto cost = count ? segment_cost(chains, a, b) : std::nullopt;
                out << chains.depot.index << ',' << a << ',' << b << ',';
                if (count && cost)
                    out << *count << ',' << fixed9(*cost) << '\n';
                else
                    out << "inf,inf\n";
            }
        }
    }
    return out.str();
}

}  // namespace brs
