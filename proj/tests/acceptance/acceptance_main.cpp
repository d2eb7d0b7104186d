// Acceptance suite: runs every toolkit-level criterion at its stated
// tolerance and prints one PASS/FAIL line per criterion. Exit code is the
// number of failed criteria. Criterion 10 reruns 1-9 and demands
// byte-identical result JSON (timings excluded).

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyp/error.hpp"
#include "hyp/hyperbolicity.hpp"
#include "hyp/planecurve.hpp"
#include "hyp/realroots.hpp"
#include "hyp/rng.hpp"
#include "hyp/sections.hpp"
#include "hypcli/corpus.hpp"
#include "hypcli/report.hpp"
#include "oracle_roots.hpp"

using namespace hyp;
using hypcli::CorpusEntry;
using OJson = hypcli::OrderedJson;

namespace {

struct CriterionResult {
    bool passed = true;
    std::string detail;
    OJson canon; // determinism payload compared across reruns
    double seconds = 0;
};

struct Ctx {
    std::vector<CorpusEntry> corpus;
    std::string cli;
};

PointQ pt(std::initializer_list<long> coords) {
    PointQ p;
    for (long c : coords) p.push_back(Rational(c));
    return p;
}

void expect(CriterionResult& r, bool cond, const std::string& what) {
    if (!cond) {
        r.passed = false;
        if (!r.detail.empty()) r.detail += "; ";
        r.detail += what;
    }
}

std::string run_process(const std::string& cmd, int& exit_code) {
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    exit_code = WEXITSTATUS(pclose(pipe));
    return out;
}

const MultiPoly& poly_of(const Ctx& ctx, const std::string& id) {
    return hypcli::corpus_find(ctx.corpus, id).poly;
}

// Known interior directions of the bundled corpus, one per cone pair.
const std::map<std::string, PointQ>& known_directions() {
    static const std::map<std::string, PointQ> dirs = {
        {"lorentz3", pt({1, 0, 0})},       {"paper_quartic", pt({1, 0, 1})},
        {"linear_forms_3", pt({1, 1, 1})}, {"esym2_3", pt({1, 1, 1})},
        {"det_pencil_quartic", pt({1, 0, 0})}, {"nested_circles", pt({0, 0, 1})},
        {"lorentz4", pt({1, 0, 0, 0})},    {"esym2_4", pt({1, 1, 1, 1})},
    };
    return dirs;
}

// ---------------------------------------------------------------------

CriterionResult criterion1(const Ctx& ctx) {
    CriterionResult r;
    const std::string cmd = ctx.cli +
        " components --poly paper_quartic --samples 512 --seed 7";
    int code = -1;
    std::string out = run_process(cmd, code);
    expect(r, code == 0, "CLI exited with " + std::to_string(code));
    OJson report = OJson::parse(out, nullptr, false);
    if (report.is_discarded()) {
        expect(r, false, "CLI emitted invalid JSON");
        return r;
    }
    OJson result = report["result"];
    expect(r, result["component_count"] == 4, "expected 4 components");
    expect(r, result["pairs"] == 2, "expected 2 pairs");

    const MultiPoly& p = poly_of(ctx, "paper_quartic");
    std::vector<PointQ> targets = {pt({1, 0, 1}), pt({-1, 0, -1}), pt({1, 0, -1}),
                                   pt({-1, 0, 1})};
    for (const auto& target : targets) {
        int hits = 0;
        for (const auto& comp : result["components"]) {
            PointQ rep;
            for (const auto& q : comp["representative"]["q"])
                rep.push_back(parse_rational(q.get<std::string>()));
            if (same_component(p, rep, target)) ++hits;
        }
        expect(r, hits == 1, "representative for " + point_to_string(target) +
                                 " matched " + std::to_string(hits) + " components");
    }
    report.erase("timings");
    r.canon = report;
    r.detail = r.passed ? "4 components, 2 pairs, representatives match +-(1,0,1), +-(1,0,-1)"
                        : r.detail;
    return r;
}

CriterionResult criterion2(const Ctx& ctx) {
    CriterionResult r;
    OJson canon = OJson::array();
    for (const char* id : {"lorentz3", "esym2_3", "det_pencil_quartic"}) {
        const CorpusEntry& e = hypcli::corpus_find(ctx.corpus, id);
        for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
            TheoremVerdict v = verify_unique_pair(e.poly, e.irreducible, 512, seed);
            expect(r, static_cast<int>(v.ambient.components.size()) == 2,
                   std::string(id) + " seed " + std::to_string(seed) + ": component count " +
                       std::to_string(v.ambient.components.size()) + " != 2");
            expect(r, v.ambient_pairs == 1,
                   std::string(id) + " seed " + std::to_string(seed) + ": pairs != 1");
            expect(r, v.verdict == "consistent_with_theorem",
                   std::string(id) + " seed " + std::to_string(seed) + ": verdict " + v.verdict);
            canon.push_back(hypcli::to_json(v));
        }
    }
    r.canon = canon;
    if (r.passed) r.detail = "lorentz3, esym2_3, det_pencil_quartic: 2 components, 1 pair, "
                             "consistent_with_theorem at seeds 1,2,3";
    return r;
}

CriterionResult criterion3(const Ctx& ctx) {
    CriterionResult r;
    const MultiPoly& h = poly_of(ctx, "linear_forms_3");
    ComponentReport rep = count_components(h, 256, 11, 16);
    expect(r, static_cast<int>(rep.components.size()) == 8,
           "expected 8 octant components, got " + std::to_string(rep.components.size()));

    int checked = 0;
    int nonzero_all = 0;
    CounterRng rng(77, 0);
    while (checked < 200) {
        PointQ x(3);
        for (int i = 0; i < 3; ++i) x[i] = Rational(rng.uniform_int(-9, 9));
        ++checked;
        bool all_nonzero = x[0] != 0 && x[1] != 0 && x[2] != 0;
        if (!all_nonzero) continue;
        ++nonzero_all;
        HypVerdict v = check_hyperbolic(h, x, 16, 1000 + checked);
        expect(r, v.accepted_hyperbolic(),
               "point " + point_to_string(x) + " with nonzero coordinates rejected");
    }
    r.canon = hypcli::to_json(rep);
    r.canon["nonzero_points_checked"] = nonzero_all;
    if (r.passed)
        r.detail = "8 components; " + std::to_string(nonzero_all) +
                   " all-nonzero sampled points all hyperbolic";
    return r;
}

CriterionResult criterion4(const Ctx& ctx) {
    CriterionResult r;
    const MultiPoly& h = poly_of(ctx, "sphere3");
    HypVerdict v = check_hyperbolic(h, pt({1, 0, 0}), 64, 1);
    expect(r, v.kind == VerdictKind::CertifiedNot, "sphere3 not certified non-hyperbolic");
    if (v.witness) {
        UniPoly u = restrict_line(h, pt({1, 0, 0}), *v.witness);
        UniPoly sf = squarefree_part(u);
        int roots = count_real_roots(sf);
        expect(r, roots < sf.degree(),
               "witness restriction has a full set of real roots");
        r.canon = hypcli::to_json(v);
        r.canon["witness_distinct_real_roots"] = roots;
        r.canon["witness_sf_degree"] = sf.degree();
        if (r.passed)
            r.detail = "certified_not with witness " + point_to_string(*v.witness) +
                       "; square-free restriction has " + std::to_string(roots) + "/" +
                       std::to_string(sf.degree()) + " real roots";
    } else {
        expect(r, false, "no witness attached");
    }
    return r;
}

CriterionResult criterion5(const Ctx&) {
    CriterionResult r;
    CounterRng rng(42, 0);
    int agreements = 0;
    OJson counts = OJson::array();
    for (int trial = 0; trial < 200; ++trial) {
        int deg = static_cast<int>(rng.uniform_int(1, 8));
        std::vector<Rational> c(deg + 1);
        for (int k = 0; k <= deg; ++k) c[k] = Rational(rng.uniform_int(-20, 20));
        if (c[deg] == 0) c[deg] = 1;
        UniPoly u(std::move(c));
        int sturm = count_real_roots(u);
        int oracle = hyp::testing::oracle_count_distinct_roots(u);
        if (sturm == oracle) ++agreements;
        counts.push_back(sturm);
    }
    expect(r, agreements == 200,
           "Sturm/oracle agreement " + std::to_string(agreements) + "/200");
    r.canon = counts;
    if (r.passed) r.detail = "200/200 seeded random polynomials agree with the bisection oracle";
    return r;
}

CriterionResult criterion6(const Ctx& ctx) {
    CriterionResult r;
    OJson canon = OJson::array();
    for (const auto& [id, e] : known_directions()) {
        const MultiPoly& h = poly_of(ctx, id);
        const int n = h.nvars();
        for (int side = 0; side < 2; ++side) {
            PointQ center = side == 0 ? e : negate(e);
            CounterRng rng(1234 + side, std::hash<std::string>{}(id) & 0xffff);
            std::vector<PointQ> members;
            int draws = 0;
            while (static_cast<int>(members.size()) < 15 && draws < 40000) {
                ++draws;
                PointQ x(n);
                for (int i = 0; i < n; ++i) x[i] = Rational(rng.uniform_int(-8, 8));
                if (is_zero(x) || evaluate(h, x) == 0) continue;
                if (in_cone(h, center, x)) members.push_back(x);
            }
            expect(r, static_cast<int>(members.size()) == 15,
                   id + ": could not sample cone members");
            int pairs_checked = 0;
            for (std::size_t i = 0; i < members.size() && pairs_checked < 100; ++i) {
                for (std::size_t j = i + 1; j < members.size() && pairs_checked < 100; ++j) {
                    ++pairs_checked;
                    PointQ mid = scale(make_rational(1, 2), add(members[i], members[j]));
                    if (!in_cone(h, center, mid)) {
                        expect(r, false, id + ": midpoint escaped the cone");
                    }
                    bool fwd = in_cone(h, members[i], members[j]);
                    bool bwd = in_cone(h, members[j], members[i]);
                    if (fwd != bwd) expect(r, false, id + ": cone relation asymmetric");
                }
            }
            canon.push_back(OJson{{"id", id}, {"side", side}, {"pairs", pairs_checked}});
        }
    }
    r.canon = canon;
    if (r.passed)
        r.detail = "100 member midpoints per cone inside, cone relation symmetric, "
                   "0 violations over " + std::to_string(known_directions().size()) + " entries";
    return r;
}

CriterionResult criterion7(const Ctx& ctx) {
    CriterionResult r;
    OJson canon = OJson::array();
    for (const char* id : {"det_pencil_quartic", "lorentz3"}) {
        const MultiPoly& h = poly_of(ctx, id);
        ComponentReport pool = count_components(h, 128, 5, 64);
        expect(r, pool.found(), std::string(id) + ": no hyperbolic directions found");
        if (!pool.found()) continue;
        const auto& samples = pool.hyperbolic_samples;
        CounterRng rng(99, 0);
        int done = 0;
        while (done < 10) {
            PointQ e1 = samples[rng.uniform_int(0, static_cast<long>(samples.size()) - 1)];
            PointQ e2 = samples[rng.uniform_int(0, static_cast<long>(samples.size()) - 1)];
            if (collinear(e1, e2)) continue;
            ConsistencyReport c = orientation_consistency(h, e1, e2, 125, 7 + done);
            int total = c.certified_smooth + c.skipped;
            expect(r, c.constant(), std::string(id) + " pair " + std::to_string(done) +
                                        ": verdict " + c.verdict);
            expect(r, c.certified_smooth >= 100,
                   std::string(id) + ": only " + std::to_string(c.certified_smooth) +
                       " certified-smooth points");
            expect(r, 5 * c.certified_smooth >= 4 * total,
                   std::string(id) + ": smooth fraction below 80%");
            canon.push_back(OJson{{"id", id},
                                 {"pair", done},
                                 {"verdict", c.verdict},
                                 {"smooth", c.certified_smooth},
                                 {"skipped", c.skipped}});
            ++done;
        }
    }
    r.canon = canon;
    if (r.passed)
        r.detail = "orientation products constant on 10 hyperbolic pairs for "
                   "det_pencil_quartic and lorentz3, >=100 certified-smooth points each";
    return r;
}

CriterionResult criterion8(const Ctx& ctx) {
    CriterionResult r;
    OJson canon = OJson::array();
    for (const auto& [id, e] : known_directions()) {
        const MultiPoly& h = poly_of(ctx, id);
        if (h.nvars() != 3) continue;
        TangentAvoidanceReport rep = tangent_avoidance_check(h, e, 64, 2024);
        expect(r, rep.pass, id + ": a multiple root was attributed to a smooth point");
        expect(r, rep.inconclusive == 0, id + ": inconclusive attributions present");
        canon.push_back(OJson{{"id", id},
                             {"pass", rep.pass},
                             {"findings", rep.findings.size()},
                             {"inconclusive", rep.inconclusive}});
    }
    // directed check through a node of the reducible quartic
    TangentAvoidanceReport directed;
    tangent_check_line(poly_of(ctx, "paper_quartic"), pt({1, 0, 1}), pt({1, 1, 1}), 0, directed);
    int singular_multi = 0;
    for (const auto& f : directed.findings)
        if (f.multiplicity >= 2 && f.attribution == "certified_singular") ++singular_multi;
    expect(r, singular_multi >= 1,
           "paper_quartic: no multiple root certified singular on the node line");
    expect(r, directed.pass, "paper_quartic: directed line attributed a smooth multiple root");
    canon.push_back(OJson{{"id", "paper_quartic_directed"},
                         {"singular_multiple_roots", singular_multi}});
    r.canon = canon;
    if (r.passed)
        r.detail = "64 lines per plane curve, no smooth multiple roots; quartic node line "
                   "yields " + std::to_string(singular_multi) + " certified-singular double roots";
    return r;
}

CriterionResult criterion9(const Ctx& ctx) {
    CriterionResult r;
    const MultiPoly& h = poly_of(ctx, "paper_quartic");
    OJson canon = OJson::array();
    for (std::uint64_t seed : {101ULL, 202ULL, 303ULL}) {
        PlaneBasis basis = random_plane_through(h, pt({1, 0, 1}), pt({1, 0, -1}), seed);
        SectionReport rep = section_component_count(h, basis, 192, seed);
        expect(r, rep.image_a_hyperbolic && rep.image_b_hyperbolic,
               "seed " + std::to_string(seed) + ": section images not hyperbolic");
        expect(r, rep.component_of_a >= 0 && rep.component_of_b >= 0,
               "seed " + std::to_string(seed) + ": image not located in a section component");
        expect(r, rep.component_of_a != rep.component_of_b,
               "seed " + std::to_string(seed) + ": images landed in the same section component");
        canon.push_back(hypcli::to_json(rep));
    }
    r.canon = canon;
    if (r.passed)
        r.detail = "3 random planes through (1,0,1) and (1,0,-1): images in distinct "
                   "section components every time";
    return r;
}

using CriterionFn = CriterionResult (*)(const Ctx&);

} // namespace

int main() {
    Ctx ctx;
    const char* corpus_env = std::getenv("HYP_CORPUS");
    ctx.corpus = hypcli::corpus_load(corpus_env ? corpus_env : hypcli::default_corpus_path());
    const char* cli_env = std::getenv("HYP_CLI");
    if (!cli_env) {
        std::cerr << "HYP_CLI must point at the hyp executable\n";
        return 64;
    }
    ctx.cli = cli_env;

    const std::vector<std::pair<std::string, CriterionFn>> criteria = {
        {"paper quartic component count via CLI", criterion1},
        {"irreducible one-pair checks at three seeds", criterion2},
        {"product of linear forms: octants", criterion3},
        {"non-hyperbolic certificate for sphere3", criterion4},
        {"Sturm count vs bisection oracle, 200 polynomials", criterion5},
        {"cone convexity and symmetry property suite", criterion6},
        {"orientation consistency suite", criterion7},
        {"tangent avoidance suite", criterion8},
        {"section consistency for the paper quartic", criterion9},
    };

    int failures = 0;
    std::vector<OJson> canon_first;
    std::vector<CriterionResult> results;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        CriterionResult res;
        try {
            res = criteria[i].second(ctx);
        } catch (const std::exception& e) {
            res.passed = false;
            res.detail = std::string("exception: ") + e.what();
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        results.push_back(res);
        canon_first.push_back(res.canon);
    }

    // runtime bounds stated with the criteria
    if (results[0].passed && results[0].seconds >= 60.0) {
        results[0].passed = false;
        results[0].detail += "; exceeded the 60 s budget";
    }
    if (results[1].passed && results[1].seconds >= 120.0) {
        results[1].passed = false;
        results[1].detail += "; exceeded the 120 s budget";
    }
    if (results[4].passed && results[4].seconds >= 30.0) {
        results[4].passed = false;
        results[4].detail += "; exceeded the 30 s budget";
    }

    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& res = results[i];
        if (!res.passed) ++failures;
        std::printf("C%02zu %s %s (%.2fs)%s%s\n", i + 1, res.passed ? "PASS" : "FAIL",
                    criteria[i].first.c_str(), res.seconds,
                    res.detail.empty() ? "" : " -- ", res.detail.c_str());
        std::fflush(stdout);
    }

    // criterion 10: identical seeds reproduce identical result JSON
    {
        auto t0 = std::chrono::steady_clock::now();
        bool deterministic = true;
        std::string which;
        for (std::size_t i = 0; i < criteria.size(); ++i) {
            CriterionResult again;
            try {
                again = criteria[i].second(ctx);
            } catch (const std::exception&) {
                deterministic = false;
                which = "C" + std::to_string(i + 1) + " threw on rerun";
                break;
            }
            if (again.canon.dump() != canon_first[i].dump()) {
                deterministic = false;
                which = "C" + std::to_string(i + 1) + " result JSON differs";
                break;
            }
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!deterministic) ++failures;
        std::printf("C10 %s determinism across reruns (%.2fs)%s%s\n",
                    deterministic ? "PASS" : "FAIL", secs, which.empty() ? "" : " -- ",
                    which.c_str());
    }

    if (failures == 0) std::printf("ACCEPTANCE: all criteria passed\n");
    else std::printf("ACCEPTANCE: %d criteria FAILED\n", failures);
    return failures;
}
