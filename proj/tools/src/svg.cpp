#include "hypcli/svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "hyp/error.hpp"

namespace hypcli {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#e377c2"};
constexpr int kPaletteSize = 8;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct Projector {
    int chart = 2;
    bool project(const std::vector<double>& hom, double& x, double& y) const {
        double den = hom[chart];
        if (std::fabs(den) < 1e-9) return false;
        int ia = chart == 0 ? 1 : 0;
        int ib = chart == 2 ? 1 : 2;
        x = hom[ia] / den;
        y = hom[ib] / den;
        return true;
    }
};

std::vector<double> decimal_point(const hyp::PointQ& p) {
    std::vector<double> v(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) v[i] = hyp::to_double(p[i]);
    return v;
}

std::vector<double> curve_point_decimals(const hyp::CurvePoint& p) {
    double t = hyp::to_double(p.root_lo + (p.root_hi - p.root_lo) / 2);
    std::vector<double> hom(3);
    for (int i = 0; i < 3; ++i)
        hom[i] = hyp::to_double(p.center[i]) * t + hyp::to_double(p.dir[i]);
    return hom;
}

} // namespace

std::string render_svg(const hyp::MultiPoly& C, const SvgBundle& bundle) {
    if (C.nvars() != 3)
        throw hyp::DimensionMismatch("SVG rendering is only defined for plane curves (nvars = 3)");

    Projector proj;
    if (bundle.chart_hint.size() == 3) {
        int best = 0;
        for (int i = 1; i < 3; ++i)
            if (hyp::rational_abs(bundle.chart_hint[i]) > hyp::rational_abs(bundle.chart_hint[best]))
                best = i;
        proj.chart = best;
    }

    struct Dot {
        double x, y;
        std::string color;
        double radius;
        std::string kind;
    };
    std::vector<Dot> dots;
    struct Arrow {
        double x, y, dx, dy;
    };
    std::vector<Arrow> arrows;

    for (std::size_t i = 0; i < bundle.curve_points.size(); ++i) {
        auto hom = curve_point_decimals(bundle.curve_points[i]);
        double x, y;
        if (!proj.project(hom, x, y)) continue;
        int label = i < bundle.oval_label.size() ? bundle.oval_label[i] : 0;
        dots.push_back({x, y, kPalette[label % kPaletteSize], 1.6, "curve"});
    }
    if (bundle.components) {
        for (std::size_t ci = 0; ci < bundle.components->components.size(); ++ci) {
            const auto& comp = bundle.components->components[ci];
            for (int m : comp.members) {
                auto hom = decimal_point(bundle.components->hyperbolic_samples[m]);
                double x, y;
                if (!proj.project(hom, x, y)) continue;
                dots.push_back({x, y, kPalette[(4 + ci) % kPaletteSize], 2.4, "cone"});
            }
        }
    }
    if (bundle.arrows) {
        auto grads = hyp::gradient(C);
        for (const auto& s : *bundle.arrows) {
            auto hom = curve_point_decimals(s.point);
            double x, y;
            if (!proj.project(hom, x, y)) continue;
            // affine tangent direction: 90-degree rotation of the gradient,
            // oriented by the sign induced by the first projection center
            hyp::PointQ mid(3);
            hyp::Rational t = s.point.root_lo + (s.point.root_hi - s.point.root_lo) / 2;
            for (int i = 0; i < 3; ++i) mid[i] = s.point.center[i] * t + s.point.dir[i];
            int ia = proj.chart == 0 ? 1 : 0;
            int ib = proj.chart == 2 ? 1 : 2;
            double ga = hyp::to_double(hyp::evaluate(grads[ia], mid));
            double gb = hyp::to_double(hyp::evaluate(grads[ib], mid));
            double norm = std::hypot(ga, gb);
            if (norm < 1e-12) continue;
            double sgn = s.sign1 >= 0 ? 1.0 : -1.0;
            arrows.push_back({x, y, sgn * (-gb) / norm, sgn * ga / norm});
        }
    }

    // view box from the data
    double lo = -2, hi = 2;
    for (const auto& d : dots) {
        lo = std::min(lo, std::min(d.x, d.y));
        hi = std::max(hi, std::max(d.x, d.y));
    }
    lo = std::max(lo, -12.0);
    hi = std::min(hi, 12.0);
    double span = hi - lo;
    lo -= 0.08 * span;
    hi += 0.08 * span;
    span = hi - lo;
    const double size = 640;
    auto sx = [&](double v) { return (v - lo) / span * size; };
    auto sy = [&](double v) { return size - (v - lo) / span * size; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(size) + "\" height=\"" +
           fmt(size + 40) + "\" viewBox=\"0 0 " + fmt(size) + " " + fmt(size + 40) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes through the origin of the chart
    svg += "<line x1=\"" + fmt(sx(lo)) + "\" y1=\"" + fmt(sy(0)) + "\" x2=\"" + fmt(sx(hi)) +
           "\" y2=\"" + fmt(sy(0)) + "\" stroke=\"#dddddd\"/>\n";
    svg += "<line x1=\"" + fmt(sx(0)) + "\" y1=\"" + fmt(sy(lo)) + "\" x2=\"" + fmt(sx(0)) +
           "\" y2=\"" + fmt(sy(hi)) + "\" stroke=\"#dddddd\"/>\n";

    for (const auto& d : dots) {
        if (d.x < lo || d.x > hi || d.y < lo || d.y > hi) continue;
        svg += "<circle cx=\"" + fmt(sx(d.x)) + "\" cy=\"" + fmt(sy(d.y)) + "\" r=\"" +
               fmt(d.radius) + "\" fill=\"" + d.color + "\" fill-opacity=\"" +
               (d.kind == "cone" ? "0.5" : "0.9") + "\"/>\n";
    }
    for (const auto& a : arrows) {
        if (a.x < lo || a.x > hi || a.y < lo || a.y > hi) continue;
        double len = 0.03 * span;
        double x2 = a.x + a.dx * len, y2 = a.y + a.dy * len;
        svg += "<line x1=\"" + fmt(sx(a.x)) + "\" y1=\"" + fmt(sy(a.y)) + "\" x2=\"" +
               fmt(sx(x2)) + "\" y2=\"" + fmt(sy(y2)) +
               "\" stroke=\"#222222\" stroke-width=\"1.2\"/>\n";
        // arrowhead
        double hx = x2 - a.dx * 0.12 * len + a.dy * 0.1 * len;
        double hy = y2 - a.dy * 0.12 * len - a.dx * 0.1 * len;
        svg += "<line x1=\"" + fmt(sx(x2)) + "\" y1=\"" + fmt(sy(y2)) + "\" x2=\"" + fmt(sx(hx)) +
               "\" y2=\"" + fmt(sy(hy)) + "\" stroke=\"#222222\" stroke-width=\"1.2\"/>\n";
    }

    std::string legend = bundle.title;
    if (bundle.curve_points.empty()) legend += " [no real curve points in this chart]";
    svg += "<text x=\"10\" y=\"" + fmt(size + 24) +
           "\" font-family=\"monospace\" font-size=\"13\">" + legend + "</text>\n";
    svg += "</svg>\n";
    return svg;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw hyp::Error("io_error", "cannot write file '" + path + "'");
    out << content;
}

} // namespace hypcli
