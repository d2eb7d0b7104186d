#ifndef HYPCLI_SVG_HPP
#define HYPCLI_SVG_HPP

#include <string>
#include <vector>

#include "hyp/hyperbolicity.hpp"
#include "hyp/planecurve.hpp"

namespace hypcli {

struct SvgBundle {
    std::vector<hyp::CurvePoint> curve_points;
    std::vector<int> oval_label; // parallel to curve_points; empty = uncolored
    const hyp::ComponentReport* components = nullptr;
    const std::vector<hyp::OrientationSample>* arrows = nullptr;
    hyp::PointQ chart_hint; // chart picked from the largest coordinate; may be empty
    std::string title;
};

// Affine-chart plot of a plane curve: curve points colored by oval, cone
// sample directions colored by component, optional orientation arrows.
// Requires nvars = 3.
std::string render_svg(const hyp::MultiPoly& C, const SvgBundle& bundle);

void write_file(const std::string& path, const std::string& content);

} // namespace hypcli

#endif
