#include "brs/svg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "brs/strings.hpp"

namespace brs {

namespace {

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                          "#9467bd", "#8c564b", "#e377c2", "#17becf"};

const char* depot_color(int index) {
    return kPalette[(index - 1) % (sizeof(kPalette) / sizeof(kPalette[0]))];
}

std::string num(double v) { return strprintf("%.3f", v); }

}  // namespace

std::string render_solution_svg(const Instance& inst, const Solution& sol) {
    const double length = inst.barrier_length;
    for (const auto& seg : sol.segments) {
        if (seg.depot_index < 1 || seg.depot_index > int(inst.depots.size()))
            throw std::invalid_argument("solution names a depot the instance lacks");
        if (seg.a < 0 || seg.b > inst.barrier_length || seg.a > seg.b)
            throw std::invalid_argument("solution segment leaves the barrier");
    }

    double top = 1.0;
    for (const auto& depot : inst.depots) top = std::max(top, depot.y);

    const double margin = std::max(4.0, 0.05 * length);
    const double min_x = -margin;
    const double width = length + 2 * margin;
    const double min_y = -(top + margin);
    const double height = top + 2 * margin;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(min_x) << " "
        << num(min_y) << " " << num(width) << " " << num(height) << "\">\n";
    const double stroke = std::max(0.15, length / 600.0);

    // barrier
    out << "  <line x1=\"0\" y1=\"0\" x2=\"" << num(length)
        << "\" y2=\"0\" stroke=\"#222222\" stroke-width=\"" << num(stroke * 2) << "\"/>\n";

    // covered spans, one band per depot
    for (const auto& seg : sol.segments) {
        if (seg.b == seg.a) continue;
        out << "  <line x1=\"" << num(seg.a) << "\" y1=\"0\" x2=\"" << num(seg.b)
            << "\" y2=\"0\" stroke=\"" << depot_color(seg.depot_index) << "\" stroke-width=\""
            << num(stroke * 5) << "\" stroke-linecap=\"butt\"/>\n";
    }

    // tours as triangles with the apex at the depot
    for (const auto& seg : sol.segments) {
        const Depot& depot = inst.depots[seg.depot_index - 1];
        for (const auto& tour : seg.tours) {
            out << "  <polygon points=\"" << num(depot.x) << "," << num(-depot.y) << " "
                << num(tour.start) << ",0 " << num(tour.end) << ",0\" fill=\""
                << depot_color(seg.depot_index) << "\" fill-opacity=\"0.12\" stroke=\""
                << depot_color(seg.depot_index) << "\" stroke-width=\"" << num(stroke)
                << "\"/>\n";
        }
    }

    // depots
    for (const auto& depot : inst.depots) {
        out << "  <circle cx=\"" << num(depot.x) << "\" cy=\"" << num(-depot.y) << "\" r=\""
            << num(stroke * 4) << "\" fill=\"" << depot_color(depot.index) << "\"/>\n";
        out << "  <text x=\"" << num(depot.x + stroke * 6) << "\" y=\"" << num(-depot.y)
            << "\" font-size=\"" << num(std::max(2.0, length / 40.0))
            << "\" fill=\"#222222\">d" << depot.index << "</text>\n";
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace brs
