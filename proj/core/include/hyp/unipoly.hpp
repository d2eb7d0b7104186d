#ifndef HYP_UNIPOLY_HPP
#define HYP_UNIPOLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "hyp/rational.hpp"

namespace hyp {

// Dense univariate polynomial over Q, coefficient of t^k at index k.
// The coefficient list is always trimmed: the highest index is nonzero,
// and the zero polynomial is the empty list.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(std::initializer_list<Rational> coeffs);

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rational& c);
    // c * t^k
    static UniPoly monomial(const Rational& c, int k);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is undefined; callers must check is_zero().
    int degree() const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(int k) const; // 0 for k > degree

    Rational operator()(const Rational& t) const;

    UniPoly derivative() const;
    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& s) const;
    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

    // Euclidean division over Q; returns {quotient, remainder}.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
    // Division known to be exact; throws InternalInconsistency on nonzero remainder.
    UniPoly divide_exact(const UniPoly& divisor) const;

    // p(t + s)
    UniPoly shift_arg(const Rational& s) const;
    // p(s * t)
    UniPoly scale_arg(const Rational& s) const;

    // Largest positive rational c with p = c * q, q having coprime integer
    // coefficients. Sign of the polynomial is untouched.
    Rational content() const;
    // p / content(): integer coefficients, gcd 1, original signs.
    UniPoly primitive_signed() const;
    // primitive_signed with leading coefficient forced positive.
    UniPoly primitive_positive() const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b); // primitive, positive leading

} // namespace hyp

#endif
