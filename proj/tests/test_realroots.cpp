#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyp/error.hpp"
#include "hyp/realroots.hpp"
#include "hyp/rng.hpp"
#include "oracle_roots.hpp"

using namespace hyp;

namespace {

UniPoly from_ints(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.push_back(Rational(c));
    return UniPoly(std::move(v));
}

// (t - 1)^2 (t + 2) = t^3 - 3t + 2
const UniPoly kDoubleRoot = from_ints({2, -3, 0, 1});

UniPoly random_int_poly(CounterRng& rng, int max_deg, long box) {
    int deg = static_cast<int>(rng.uniform_int(1, max_deg));
    std::vector<Rational> c(deg + 1);
    for (int k = 0; k <= deg; ++k) c[k] = Rational(rng.uniform_int(-box, box));
    if (c[deg] == 0) c[deg] = 1;
    return UniPoly(std::move(c));
}

} // namespace

TEST_CASE("squarefree_part") {
    UniPoly s = squarefree_part(kDoubleRoot);
    // (t-1)(t+2) = t^2 + t - 2 up to positive scalar
    CHECK(s == from_ints({-2, 1, 1}));

    UniPoly irr = from_ints({1, 0, 1}); // t^2 + 1
    CHECK(squarefree_part(irr) == irr);

    UniPoly q = from_ints({2, 0, -5, 0, 2}); // 2t^4 - 5t^2 + 2, distinct roots
    CHECK(squarefree_part(q) == q);

    CHECK_THROWS_AS(squarefree_part(UniPoly::zero()), ZeroPolynomial);
}

TEST_CASE("count_real_roots: examples") {
    CHECK(count_real_roots(from_ints({-1, 0, 1})) == 2); // t^2 - 1
    CHECK(count_real_roots(from_ints({1, 0, 1})) == 0);  // t^2 + 1
    CHECK(count_real_roots(from_ints({2, 0, -5, 0, 2}), Interval::right_of(Rational(0))) == 2);
    CHECK_THROWS_AS(count_real_roots(UniPoly::zero()), ZeroPolynomial);
}

TEST_CASE("count_real_roots: endpoint roots and openness") {
    UniPoly u = from_ints({-1, 0, 1}); // roots -1, 1
    CHECK(count_real_roots(u, Interval::open(Rational(-1), Rational(1))) == 0);
    CHECK(count_real_roots(u, Interval::closed(Rational(-1), Rational(1))) == 2);
    CHECK(count_real_roots(u, Interval::open(Rational(-2), Rational(1))) == 1);
    CHECK(count_real_roots(u, Interval::left_of(Rational(1), /*open=*/true)) == 1);
    CHECK(count_real_roots(u, Interval::left_of(Rational(1), /*open=*/false)) == 2);
    CHECK(count_real_roots(u, Interval::right_of(Rational(-1), /*open=*/true)) == 1);
    CHECK(count_real_roots(u, Interval::right_of(Rational(-1), /*open=*/false)) == 2);
    // distinct roots only
    CHECK(count_real_roots(kDoubleRoot) == 2);
}

TEST_CASE("is_real_rooted") {
    CHECK(is_real_rooted(from_ints({-1, 0, 1})));
    CHECK_FALSE(is_real_rooted(from_ints({1, 0, 1})));
    // (t^2+1)(t-3)
    CHECK_FALSE(is_real_rooted(from_ints({1, 0, 1}) * from_ints({-3, 1})));
    // multiple roots are fine
    CHECK(is_real_rooted(kDoubleRoot));
}

TEST_CASE("is_real_rooted is multiplicative") {
    CounterRng rng(5, 0);
    for (int trial = 0; trial < 40; ++trial) {
        UniPoly a = random_int_poly(rng, 4, 8);
        UniPoly b = random_int_poly(rng, 4, 8);
        CHECK(is_real_rooted(a * b) == (is_real_rooted(a) && is_real_rooted(b)));
    }
}

TEST_CASE("root sets are invariant under nonzero scaling") {
    CounterRng rng(6, 0);
    for (int trial = 0; trial < 20; ++trial) {
        UniPoly a = random_int_poly(rng, 6, 12);
        Rational s = make_rational(rng.uniform_int(1, 9), rng.uniform_int(1, 9));
        if (rng.uniform_int(0, 1)) s = -s;
        CHECK(count_real_roots(a) == count_real_roots(a * s));
        CHECK(is_real_rooted(a) == is_real_rooted(a * s));
    }
}

TEST_CASE("all_roots_positive") {
    CHECK(all_roots_positive(from_ints({3, -4, 1})));        // (t-1)(t-3)
    CHECK_FALSE(all_roots_positive(from_ints({-3, -2, 1}))); // (t+1)(t-3)
    // h(e)(t-1)^d pattern
    UniPoly shifted = from_ints({-1, 1}) * from_ints({-1, 1}) * Rational(5);
    CHECK(all_roots_positive(shifted));
    // roots at zero are excluded (open cone semantics downstream)
    CHECK_FALSE(all_roots_positive(from_ints({0, 1})));
    CHECK_THROWS_AS(all_roots_positive(from_ints({1, 0, 1})), Error);
    CHECK_THROWS_AS(all_roots_positive(UniPoly::zero()), ZeroPolynomial);
}

TEST_CASE("isolate_roots: examples") {
    // t^2 - 2
    auto roots = isolate_roots(from_ints({-2, 0, 1}), make_rational(1, 100));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].hi - roots[0].lo <= make_rational(1, 100));
    CHECK(roots[0].hi < 0);
    CHECK(roots[1].lo > 0);
    CHECK(roots[0].multiplicity == 1);
    // each interval brackets a sign change of the square-free part
    CHECK(roots[0].sign_left * roots[0].sign_right == -1);
    CHECK(roots[1].sign_left * roots[1].sign_right == -1);

    // (t-1)^2: one root, multiplicity 2
    auto dbl = isolate_roots(from_ints({1, -2, 1}), make_rational(1, 4));
    REQUIRE(dbl.size() == 1);
    CHECK(dbl[0].multiplicity == 2);
    CHECK(dbl[0].lo < 1);
    CHECK(dbl[0].hi > 1);

    // no real roots
    CHECK(isolate_roots(from_ints({1, 0, 1}), make_rational(1, 4)).empty());
}

TEST_CASE("isolate_roots: multiplicity sum accounting") {
    CounterRng rng(8, 0);
    for (int trial = 0; trial < 30; ++trial) {
        UniPoly u = random_int_poly(rng, 3, 6);
        // force interesting multiplicities
        UniPoly v = u * u * random_int_poly(rng, 2, 6);
        auto roots = isolate_roots(v, make_rational(1, 16));
        int mult_sum = 0;
        for (const auto& r : roots) mult_sum += r.multiplicity;
        int deg = v.degree();
        CHECK(mult_sum <= deg);
        CHECK((deg - mult_sum) % 2 == 0); // complex roots pair up
        CHECK(is_real_rooted(v) == (mult_sum == deg));
        // intervals disjoint and sorted
        for (std::size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi <= roots[i + 1].lo);
    }
}

TEST_CASE("Sturm count equals the Rolle-bisection oracle on 200 random polys") {
    CounterRng rng(42, 0);
    for (int trial = 0; trial < 200; ++trial) {
        UniPoly u = random_int_poly(rng, 8, 20);
        int sturm = count_real_roots(u);
        int oracle = hyp::testing::oracle_count_distinct_roots(u);
        CHECK(sturm == oracle);
    }
}

TEST_CASE("sign_at: exact signs at algebraic numbers") {
    // alpha = sqrt(2)
    UniPoly s = from_ints({-2, 0, 1});
    auto roots = isolate_roots(s, make_rational(1, 4));
    REQUIRE(roots.size() == 2);
    AlgebraicReal a = AlgebraicReal::from_isolated(s, roots[1]); // +sqrt(2)

    CHECK(sign_at(from_ints({-1, 1}), a) == 1);  // t - 1 > 0
    CHECK(sign_at(from_ints({-2, 1}), a) == -1); // t - 2 < 0
    CHECK(sign_at(from_ints({-2, 0, 1}), a) == 0); // its own polynomial
    CHECK(sign_at(from_ints({2, 0, -1}), a) == 0); // negated
    CHECK(sign_at(from_ints({-4, 0, 0, 0, 1}), a) == 0); // t^4 - 4 vanishes at sqrt 2
    CHECK(sign_at(from_ints({-6, 1, 2}), a) == -1);      // 2t^2 + t - 6 = sqrt2 - 2 < 0
    AlgebraicReal b = AlgebraicReal::from_rational(make_rational(3, 2));
    CHECK(sign_at(from_ints({-1, 1}), b) == 1);
    CHECK(sign_at(from_ints({3, -2}), b) == 0);
}
