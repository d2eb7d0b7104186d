#ifndef HYP_POINT_HPP
#define HYP_POINT_HPP

#include <string>
#include <vector>

#include "hyp/rational.hpp"

namespace hyp {

// A point or direction in Q^n. Projective uses identify nonzero scalings.
using PointQ = std::vector<Rational>;

PointQ add(const PointQ& a, const PointQ& b);
PointQ sub(const PointQ& a, const PointQ& b);
PointQ negate(const PointQ& a);
PointQ scale(const Rational& s, const PointQ& a);
Rational dot(const PointQ& a, const PointQ& b);
bool is_zero(const PointQ& a);

// Exact collinearity: all 2x2 minors of (a; b) vanish.
bool collinear(const PointQ& a, const PointQ& b);

// Rank of the row span, by fraction-free Gaussian elimination.
int rank(const std::vector<PointQ>& rows);

// Divides an integer vector by the gcd of its entries and fixes the first
// nonzero entry positive. Input must have integer coordinates.
PointQ canonical_direction(const PointQ& a);

// "a,b,c" with rational entries.
PointQ parse_point(const std::string& text);
std::string point_to_string(const PointQ& a);

} // namespace hyp

#endif
