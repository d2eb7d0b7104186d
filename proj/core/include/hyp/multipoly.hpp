#ifndef HYP_MULTIPOLY_HPP
#define HYP_MULTIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "hyp/point.hpp"
#include "hyp/rational.hpp"
#include "hyp/unipoly.hpp"

namespace hyp {

using Exponents = std::vector<int>;

// Graded lexicographic: lower total degree first, ties broken
// lexicographically. Keeps term iteration and printing deterministic.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over Q with a fixed variable count.
// No zero coefficients are ever stored.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    explicit MultiPoly(int nvars);

    static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
    static MultiPoly constant(int nvars, const Rational& c);
    static MultiPoly monomial(int nvars, const Exponents& exps, const Rational& c);
    // The linear form sum_i coeffs[i] * x_i.
    static MultiPoly linear_form(const PointQ& coeffs);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Max total degree over terms; throws ZeroPolynomial on zero input.
    int total_degree() const;

    void add_term(const Exponents& exps, const Rational& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& s) const;
    bool operator==(const MultiPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    MultiPoly pow(int k) const;
    MultiPoly derivative(int var) const;

    std::string to_string() const;

private:
    int nvars_;
    TermMap terms_;
};

// Text grammar: terms joined by '+'/'-'; a term is an optional rational
// coefficient ('p/q' or integer) and '*'-separated powers 'x<k>^<m>' with
// '^1' optional; parenthesized factors may be joined by '*' and raised with
// '^'. Whitespace is insignificant. Variables are x1..x<nvars>.
MultiPoly parse_poly(const std::string& text, int nvars);

Rational evaluate(const MultiPoly& p, const PointQ& x);

// Common total degree of all terms; throws NotHomogeneous (with two
// offending exponent vectors) or ZeroPolynomial.
int homogeneous_degree(const MultiPoly& p);

// Coefficients of t -> h(t*e + v). For homogeneous h of degree d the
// coefficient of t^d equals h(e).
UniPoly restrict_line(const MultiPoly& h, const PointQ& e, const PointQ& v);

// g(s,t,u) = h(s*a + t*b + u*c), a ternary form of the same degree.
// Throws DegenerateSectionFamily when the spanning vectors are dependent or
// the restriction vanishes identically.
MultiPoly restrict_plane(const MultiPoly& h, const PointQ& a, const PointQ& b, const PointQ& c);

std::vector<MultiPoly> gradient(const MultiPoly& h);

} // namespace hyp

#endif
