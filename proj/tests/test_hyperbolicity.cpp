#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyp/error.hpp"
#include "hyp/hyperbolicity.hpp"
#include "hyp/realroots.hpp"
#include "hyp/rng.hpp"

using namespace hyp;

namespace {

PointQ pt(std::initializer_list<long> coords) {
    PointQ p;
    for (long c : coords) p.push_back(Rational(c));
    return p;
}

const MultiPoly kLorentz = parse_poly("x1^2-x2^2-x3^2", 3);
const MultiPoly kSphere = parse_poly("x1^2+x2^2+x3^2", 3);
const MultiPoly kQuartic = parse_poly("(x1^2+x2^2-2*x3^2)*(2*x1^2-x2^2-x3^2)", 3);
const MultiPoly kOctants = parse_poly("x1*x2*x3", 3);

} // namespace

TEST_CASE("check_hyperbolic: Lorentz quadratic is certified") {
    HypVerdict v = check_hyperbolic(kLorentz, pt({1, 0, 0}), 16, 1);
    CHECK(v.kind == VerdictKind::CertifiedHyperbolic);
    CHECK(v.method == "quadratic_signature");
}

TEST_CASE("check_hyperbolic: sphere is certified not, witness re-verifies") {
    HypVerdict v = check_hyperbolic(kSphere, pt({1, 0, 0}), 16, 1);
    CHECK(v.kind == VerdictKind::CertifiedNot);
    REQUIRE(v.witness.has_value());
    CHECK_FALSE(is_real_rooted(restrict_line(kSphere, pt({1, 0, 0}), *v.witness)));
}

TEST_CASE("check_hyperbolic: the quartic from an interior direction") {
    HypVerdict v = check_hyperbolic(kQuartic, pt({1, 0, 1}), 1000, 7);
    CHECK(v.kind == VerdictKind::ProbablyHyperbolic);
    CHECK(v.trials == 1000);
}

TEST_CASE("check_hyperbolic: h(e) = 0 is rejected") {
    CHECK_THROWS_AS(check_hyperbolic(kLorentz, pt({1, 1, 0}), 4, 1), NotApplicable);
    CHECK_THROWS_AS(check_hyperbolic(parse_poly("x1^2+x2", 3), pt({1, 0, 0}), 4, 1),
                    NotHomogeneous);
}

TEST_CASE("exact bivariate dispatch") {
    MultiPoly diff = parse_poly("x1^2-x2^2", 2);
    CHECK(check_hyperbolic(diff, pt({1, 0}), 4, 1).kind == VerdictKind::CertifiedHyperbolic);
    CHECK(check_hyperbolic(diff, pt({1, 0}), 4, 1).method == "bivariate_reduction");

    MultiPoly sum = parse_poly("x1^2+x2^2", 2);
    HypVerdict v = check_hyperbolic_exact_bivariate(sum, pt({1, 0}));
    CHECK(v.kind == VerdictKind::CertifiedNot);
    REQUIRE(v.witness.has_value());

    // x1^3 - 3 x1 x2^2 restricted along (0,1): t^3 - 3t, three real roots
    MultiPoly trig = parse_poly("x1^3-3*x1*x2^2", 2);
    CHECK(count_real_roots(restrict_line(trig, pt({1, 0}), pt({0, 1}))) == 3);
    CHECK(check_hyperbolic_exact_bivariate(trig, pt({1, 0})).kind ==
          VerdictKind::CertifiedHyperbolic);
}

TEST_CASE("exact quadratic dispatch") {
    CHECK(check_hyperbolic_quadratic(kLorentz, pt({1, 0, 0})).kind ==
          VerdictKind::CertifiedHyperbolic);
    CHECK(check_hyperbolic_quadratic(kSphere, pt({1, 0, 0})).kind == VerdictKind::CertifiedNot);

    // x1*x2 with e = (1,1): hyperbolic of signature (1,1)
    MultiPoly xy = parse_poly("x1*x2", 2);
    CHECK(check_hyperbolic_quadratic(xy, pt({1, 1})).kind == VerdictKind::CertifiedHyperbolic);

    // rank-deficient but hyperbolic: x1^2 in three variables
    MultiPoly sq = parse_poly("x1^2", 3);
    CHECK(check_hyperbolic_quadratic(sq, pt({1, 0, 0})).kind == VerdictKind::CertifiedHyperbolic);

    CHECK_THROWS_AS(check_hyperbolic_quadratic(kQuartic, pt({1, 0, 1})), NotApplicable);
}

TEST_CASE("in_cone: identity, Lorentz membership, boundary") {
    CHECK(in_cone(kLorentz, pt({1, 0, 0}), pt({1, 0, 0})));
    CHECK(in_cone(kLorentz, pt({1, 0, 0}), pt({2, 1, 0})));  // roots {1,3}
    CHECK_FALSE(in_cone(kLorentz, pt({1, 0, 0}), pt({1, 2, 0}))); // roots {-1,3}
    // boundary: light-cone point has a zero eigenvalue
    CHECK_FALSE(in_cone(kLorentz, pt({1, 0, 0}), pt({1, 1, 0})));
    // the origin is never a member
    CHECK_FALSE(in_cone(kLorentz, pt({1, 0, 0}), pt({0, 0, 0})));
}

TEST_CASE("in_cone: InvalidDirection carries the witness line") {
    CHECK_THROWS_AS(in_cone(kSphere, pt({1, 0, 0}), pt({0, 1, 0})), InvalidDirection);
}

TEST_CASE("same_component on the quartic") {
    CHECK(same_component(kQuartic, pt({1, 0, 1}), pt({1, 0, 1})));
    CHECK_FALSE(same_component(kQuartic, pt({1, 0, 1}), pt({1, 0, -1})));
    CHECK_FALSE(same_component(kQuartic, pt({1, 0, 1}), pt({-1, 0, -1})));
    // the negated direction spans the paired cone
    CHECK(same_component(kQuartic, negate(pt({1, 0, 1})), pt({-1, 0, -1})));
}

TEST_CASE("count_components: Lorentz cone pair") {
    ComponentReport r = count_components(kLorentz, 128, 3, 16);
    CHECK(r.status == "ok");
    CHECK(r.components.size() == 2);
    CHECK(r.pairs == 1);
    CHECK(r.pair_map[0] == 1);
    CHECK(r.pair_map[1] == 0);
}

TEST_CASE("count_components: quartic has four components in two pairs") {
    ComponentReport r = count_components(kQuartic, 256, 7, 32);
    CHECK(r.components.size() == 4);
    CHECK(r.pairs == 2);
    // representatives match the expected regions exactly
    std::vector<PointQ> targets = {pt({1, 0, 1}), pt({-1, 0, -1}), pt({1, 0, -1}), pt({-1, 0, 1})};
    for (const auto& t : targets) {
        int hits = 0;
        for (const auto& c : r.components)
            if (same_component(kQuartic, c.representative, t)) ++hits;
        CHECK(hits == 1);
    }
    // members counted once each
    std::size_t total = 0;
    for (const auto& c : r.components) total += c.members.size();
    CHECK(total == r.hyperbolic_samples.size());
}

TEST_CASE("count_components: octants of x1*x2*x3") {
    ComponentReport r = count_components(kOctants, 256, 11, 16);
    CHECK(r.components.size() == 8);
    CHECK(r.pairs == 4);
    // brute-force oracle: each sign vector is its own cone
    for (long s1 : {-1L, 1L})
        for (long s2 : {-1L, 1L})
            for (long s3 : {-1L, 1L}) {
                PointQ x = pt({s1, s2, s3});
                int hits = 0;
                for (const auto& c : r.components)
                    if (same_component(kOctants, c.representative, x)) ++hits;
                CHECK(hits == 1);
            }
}

TEST_CASE("count_components: sphere reports not-found rather than a certificate") {
    ComponentReport r = count_components(kSphere, 64, 1, 8);
    CHECK(r.status == "not_found_at_this_resolution");
    CHECK(r.components.empty());
}

TEST_CASE("invariant: verdict kind symmetric in direction and polynomial scaling") {
    CounterRng rng(23, 0);
    std::vector<MultiPoly> polys = {kLorentz, kSphere, kQuartic, kOctants};
    for (const auto& h : polys) {
        for (int trial = 0; trial < 5; ++trial) {
            PointQ e(3);
            do {
                for (int i = 0; i < 3; ++i) e[i] = Rational(rng.uniform_int(-6, 6));
            } while (is_zero(e) || evaluate(h, e) == 0);
            auto base = check_hyperbolic(h, e, 32, 99).kind;
            CHECK(check_hyperbolic(h, negate(e), 32, 99).kind == base);
            CHECK(check_hyperbolic(h, scale(Rational(3), e), 32, 99).kind == base);
            CHECK(check_hyperbolic(h * Rational(-7), e, 32, 99).kind == base);
        }
    }
}

TEST_CASE("invariant: Garding convexity via midpoints, and cone symmetry") {
    struct Entry { const MultiPoly* h; PointQ e; };
    std::vector<Entry> entries = {
        {&kLorentz, pt({1, 0, 0})}, {&kQuartic, pt({1, 0, 1})}, {&kOctants, pt({1, 1, 1})}};
    CounterRng rng(31, 0);
    for (const auto& entry : entries) {
        const MultiPoly& h = *entry.h;
        std::vector<PointQ> members;
        while (members.size() < 20) {
            PointQ x(3);
            for (int i = 0; i < 3; ++i) x[i] = Rational(rng.uniform_int(-8, 8));
            if (is_zero(x) || evaluate(h, x) == 0) continue;
            if (in_cone(h, entry.e, x)) members.push_back(x);
        }
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                PointQ mid = scale(make_rational(1, 2), add(members[i], members[j]));
                CHECK(in_cone(h, entry.e, mid));
                CHECK(in_cone(h, members[i], members[j]) == in_cone(h, members[j], members[i]));
            }
        }
    }
}

TEST_CASE("invariant: pairing under negation on the quartic report") {
    ComponentReport r = count_components(kQuartic, 192, 13, 32);
    REQUIRE(r.components.size() % 2 == 0);
    for (std::size_t i = 0; i < r.components.size(); ++i) {
        int j = r.pair_map[i];
        REQUIRE(j >= 0);
        CHECK(r.pair_map[j] == static_cast<int>(i));
        CHECK(j != static_cast<int>(i));
        // the negated member set lands exactly in the paired component
        for (int m : r.components[i].members) {
            PointQ neg = negate(r.hyperbolic_samples[m]);
            CHECK(same_component(kQuartic, r.components[j].representative, neg));
        }
    }
}

TEST_CASE("invariant: degree-2 exact verdict agrees with the randomized check") {
    CounterRng rng(47, 0);
    int checked = 0;
    while (checked < 50) {
        // random symmetric matrix -> quadratic form
        MultiPoly h(3);
        PointQ e(3);
        std::vector<std::vector<long>> m(3, std::vector<long>(3));
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) m[i][j] = m[j][i] = rng.uniform_int(-6, 6);
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) {
                Exponents exp(3, 0);
                exp[i] += 1;
                exp[j] += 1;
                h.add_term(exp, Rational(i == j ? m[i][j] : 2 * m[i][j]));
            }
        if (h.is_zero()) continue;
        try {
            if (homogeneous_degree(h) != 2) continue;
        } catch (const Error&) { continue; }
        do {
            for (int i = 0; i < 3; ++i) e[i] = Rational(rng.uniform_int(-5, 5));
        } while (is_zero(e) || evaluate(h, e) == 0);

        HypVerdict exact = check_hyperbolic_quadratic(h, e);
        // randomized check, forced off the exact dispatch path
        bool witness_found = false;
        for (int k = 0; k < 256 && !witness_found; ++k) {
            CounterRng vr(1000 + checked, k);
            PointQ v(3);
            do {
                for (int i = 0; i < 3; ++i) v[i] = Rational(vr.uniform_int(-10, 10));
            } while (is_zero(v) || collinear(v, e));
            witness_found = !is_real_rooted(restrict_line(h, e, v));
        }
        if (exact.kind == VerdictKind::CertifiedHyperbolic) CHECK_FALSE(witness_found);
        if (exact.kind == VerdictKind::CertifiedNot) CHECK(witness_found);
        ++checked;
    }
}
