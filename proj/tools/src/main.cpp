#include <chrono>
#include <unistd.h>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hyp/error.hpp"
#include "hyp/planecurve.hpp"
#include "hyp/sections.hpp"
#include "hypcli/corpus.hpp"
#include "hypcli/report.hpp"
#include "hypcli/svg.hpp"

using namespace hypcli;

namespace {

struct CommonOpts {
    std::string poly;
    std::string corpus_path;
    std::string e_text, x_text;
    std::string svg_path;
    int samples = 256;
    int trials = 64;
    int points = 100;
    std::uint64_t seed = 1;
};

hyp::MultiPoly load_poly(const CommonOpts& opts, std::string& id,
                         hyp::Irreducibility& flag, std::optional<int>& known_pairs) {
    // --poly names either a corpus id or a JSON file with one entry object
    if (std::filesystem::exists(opts.poly)) {
        std::ifstream in(opts.poly);
        nlohmann::json j;
        in >> j;
        nlohmann::json wrapper;
        wrapper["entries"] = nlohmann::json::array({j});
        std::string tmp = (std::filesystem::temp_directory_path() /
                           ("hyp_single_" + std::to_string(::getpid()) + ".json"))
                              .string();
        std::ofstream out(tmp);
        out << wrapper;
        out.close();
        auto entries = corpus_load(tmp);
        std::filesystem::remove(tmp);
        id = entries[0].id;
        flag = entries[0].irreducible;
        known_pairs = entries[0].known_pairs;
        return entries[0].poly;
    }
    auto entries = corpus_load(opts.corpus_path.empty() ? default_corpus_path()
                                                        : opts.corpus_path);
    const CorpusEntry& e = corpus_find(entries, opts.poly);
    id = e.id;
    flag = e.irreducible;
    known_pairs = e.known_pairs;
    return e.poly;
}

OrderedJson base_params(const CommonOpts& opts, const std::string& id) {
    OrderedJson p;
    p["poly"] = id;
    if (!opts.e_text.empty()) p["e"] = opts.e_text;
    if (!opts.x_text.empty()) p["x"] = opts.x_text;
    return p;
}

int emit(const std::string& command, const CommonOpts& opts, const std::string& id,
         OrderedJson extra_params, OrderedJson result, double elapsed, int exit_code) {
    OrderedJson params = base_params(opts, id);
    for (auto& [k, v] : extra_params.items()) params[k] = v;
    std::cout << make_report(command, std::move(params), opts.seed, std::move(result), elapsed)
                     .dump(2)
              << "\n";
    return exit_code;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_check(const CommonOpts& opts) {
    std::string id;
    hyp::Irreducibility flag;
    std::optional<int> pairs;
    hyp::MultiPoly h = load_poly(opts, id, flag, pairs);
    hyp::PointQ e = hyp::parse_point(opts.e_text);
    auto t0 = std::chrono::steady_clock::now();
    hyp::HypVerdict v = hyp::check_hyperbolic(h, e, opts.trials, opts.seed);
    OrderedJson params;
    params["trials"] = opts.trials;
    return emit("check", opts, id, std::move(params), to_json(v), seconds_since(t0), 0);
}

int cmd_cone(const CommonOpts& opts) {
    std::string id;
    hyp::Irreducibility flag;
    std::optional<int> pairs;
    hyp::MultiPoly h = load_poly(opts, id, flag, pairs);
    hyp::PointQ e = hyp::parse_point(opts.e_text);
    hyp::PointQ x = hyp::parse_point(opts.x_text);
    auto t0 = std::chrono::steady_clock::now();
    bool inside = hyp::in_cone(h, e, x);
    OrderedJson result;
    result["in_cone"] = inside;
    return emit("cone", opts, id, OrderedJson::object(), std::move(result), seconds_since(t0), 0);
}

int cmd_components(const CommonOpts& opts) {
    std::string id;
    hyp::Irreducibility flag;
    std::optional<int> pairs;
    hyp::MultiPoly h = load_poly(opts, id, flag, pairs);
    auto t0 = std::chrono::steady_clock::now();
    hyp::ComponentReport r = hyp::count_components(h, opts.samples, opts.seed, opts.trials);
    double elapsed = seconds_since(t0);

    if (!opts.svg_path.empty() && h.nvars() == 3 && r.found()) {
        SvgBundle bundle;
        bundle.components = &r;
        bundle.title = id + ": components=" + std::to_string(r.components.size()) +
                       " pairs=" + std::to_string(r.pairs);
        bundle.chart_hint = r.components[0].representative;
        try {
            bundle.curve_points =
                hyp::sample_real_points(h, r.components[0].representative, 360);
            bundle.oval_label = hyp::oval_labels(h, bundle.curve_points, 360);
        } catch (const hyp::Error&) {
            // curve sampling is best-effort for the figure
        }
        write_file(opts.svg_path, render_svg(h, bundle));
    } else if (!opts.svg_path.empty() && h.nvars() == 3) {
        SvgBundle bundle;
        bundle.title = id + ": no hyperbolic directions found at this resolution";
        write_file(opts.svg_path, render_svg(h, bundle));
    }

    OrderedJson params;
    params["samples"] = opts.samples;
    params["trials"] = opts.trials;
    return emit("components", opts, id, std::move(params), to_json(r), elapsed, 0);
}

int cmd_orient(const CommonOpts& opts) {
    std::string id;
    hyp::Irreducibility flag;
    std::optional<int> pairs;
    hyp::MultiPoly h = load_poly(opts, id, flag, pairs);
    hyp::PointQ e1 = hyp::parse_point(opts.e_text);
    hyp::PointQ e2 = hyp::parse_point(opts.x_text);
    auto t0 = std::chrono::steady_clock::now();
    hyp::ConsistencyReport r = hyp::orientation_consistency(h, e1, e2, opts.points, opts.seed);
    double elapsed = seconds_since(t0);

    if (!opts.svg_path.empty()) {
        SvgBundle bundle;
        bundle.title = id + ": orientation " + r.verdict;
        bundle.chart_hint = e1;
        std::vector<hyp::CurvePoint> pts;
        for (const auto& s : r.samples) pts.push_back(s.point);
        bundle.curve_points = pts;
        bundle.arrows = &r.samples;
        write_file(opts.svg_path, render_svg(h, bundle));
    }

    OrderedJson params;
    params["points"] = opts.points;
    return emit("orient", opts, id, std::move(params), to_json(r), elapsed, 0);
}

int cmd_section(const CommonOpts& opts) {
    std::string id;
    hyp::Irreducibility flag;
    std::optional<int> pairs;
    hyp::MultiPoly h = load_poly(opts, id, flag, pairs);
    hyp::PointQ e1 = hyp::parse_point(opts.e_text);
    hyp::PointQ e2 = hyp::parse_point(opts.x_text);
    auto t0 = std::chrono::steady_clock::now();
    hyp::PlaneBasis basis = hyp::random_plane_through(h, e1, e2, opts.seed);
    hyp::SectionReport r = hyp::section_component_count(h, basis, opts.samples, opts.seed);
    double elapsed = seconds_since(t0);
    OrderedJson result;
    result["plane"] = OrderedJson{{"a", point_json(basis.a)},
                                  {"b", point_json(basis.b)},
                                  {"c", point_json(basis.c)}};
    result["section"] = to_json(r);
    OrderedJson params;
    params["samples"] = opts.samples;
    return emit("section", opts, id, std::move(params), std::move(result), elapsed, 0);
}

int cmd_verify(const CommonOpts& opts) {
    std::string id;
    hyp::Irreducibility flag;
    std::optional<int> pairs;
    hyp::MultiPoly h = load_poly(opts, id, flag, pairs);
    auto t0 = std::chrono::steady_clock::now();
    hyp::TheoremVerdict v = hyp::verify_unique_pair(h, flag, opts.samples, opts.seed);
    v.poly_id = id;
    double elapsed = seconds_since(t0);
    OrderedJson result = to_json(v);
    if (pairs) result["known_pairs"] = *pairs;
    int exit_code = v.verdict == "violation_candidate" ? 2 : 0;
    OrderedJson params;
    params["samples"] = opts.samples;
    return emit("verify", opts, id, std::move(params), std::move(result), elapsed, exit_code);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyp: verification toolkit for hyperbolic polynomials and their cones"};
    app.require_subcommand(1);

    CommonOpts opts;
    auto add_common = [&](CLI::App* sub, bool needs_e, bool needs_x) {
        sub->add_option("--poly", opts.poly, "corpus id or JSON entry file")->required();
        sub->add_option("--corpus", opts.corpus_path, "corpus file (default: bundled, or HYP_CORPUS)");
        sub->add_option("--seed", opts.seed, "deterministic seed (echoed in the report)");
        auto* e = sub->add_option("--e", opts.e_text, "direction, comma-separated rationals");
        auto* x = sub->add_option("--x", opts.x_text, "second point/direction");
        if (needs_e) e->required();
        if (needs_x) x->required();
        return sub;
    };

    auto* check = add_common(app.add_subcommand("check", "hyperbolicity test along sampled lines"),
                             true, false);
    check->add_option("--trials", opts.trials, "sampled lines before accepting");

    add_common(app.add_subcommand("cone", "open-cone membership test"), true, true);

    auto* components = add_common(
        app.add_subcommand("components", "sample and cluster hyperbolicity components"), false,
        false);
    components->add_option("--samples", opts.samples, "direction samples (both signs counted)");
    components->add_option("--trials", opts.trials, "line trials per sample");
    components->add_option("--svg", opts.svg_path, "write an SVG figure (plane curves only)");

    auto* orient = add_common(
        app.add_subcommand("orient", "projection-induced orientation comparison"), true, true);
    orient->add_option("--samples", opts.points, "smooth curve points to compare at");
    orient->add_option("--svg", opts.svg_path, "write an SVG figure with orientation arrows");

    auto* section = add_common(
        app.add_subcommand("section", "component count of a random plane section"), true, true);
    section->add_option("--samples", opts.samples, "direction samples in the section");

    auto* verify = add_common(
        app.add_subcommand("verify", "empirical check of the one-pair statement"), false, false);
    verify->add_option("--samples", opts.samples, "direction samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1; // usage errors land on the documented exit code
    }

    try {
        if (app.got_subcommand("check")) return cmd_check(opts);
        if (app.got_subcommand("cone")) return cmd_cone(opts);
        if (app.got_subcommand("components")) return cmd_components(opts);
        if (app.got_subcommand("orient")) return cmd_orient(opts);
        if (app.got_subcommand("section")) return cmd_section(opts);
        if (app.got_subcommand("verify")) return cmd_verify(opts);
    } catch (const hyp::Error& e) {
        OrderedJson err;
        err["error"] = OrderedJson{{"code", e.code()}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        OrderedJson err;
        err["error"] = OrderedJson{{"code", "internal"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 1;
    }
    return 1;
}
