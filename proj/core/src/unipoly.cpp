#include "hyp/unipoly.hpp"

#include <algorithm>

#include "hyp/error.hpp"

namespace hyp {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rational& c) {
    return c == 0 ? UniPoly() : UniPoly(std::vector<Rational>{c});
}

UniPoly UniPoly::monomial(const Rational& c, int k) {
    if (c == 0) return UniPoly();
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int UniPoly::degree() const {
    if (is_zero()) throw ZeroPolynomial("degree of the zero polynomial");
    return static_cast<int>(coeffs_.size()) - 1;
}

const Rational& UniPoly::leading() const {
    if (is_zero()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

const Rational& UniPoly::coeff(int k) const {
    static const Rational zero(0);
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[k];
}

Rational UniPoly::operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rational& s) const {
    if (s == 0) return UniPoly();
    std::vector<Rational> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * s;
    return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
    std::vector<Rational> rem = coeffs_;
    const int dd = divisor.degree();
    if (static_cast<int>(rem.size()) - 1 < dd) return {UniPoly(), *this};
    std::vector<Rational> quot(rem.size() - dd, Rational(0));
    for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
        if (rem[k] == 0) continue;
        Rational q = rem[k] / divisor.leading();
        quot[k - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= q * divisor.coeffs_[j];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::divide_exact(const UniPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw InternalInconsistency("expected exact polynomial division");
    return q;
}

UniPoly UniPoly::shift_arg(const Rational& s) const {
    // Horner on p(t+s): acc <- acc*(t+s) + c_k
    UniPoly acc;
    UniPoly lin({s, Rational(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * lin + UniPoly::constant(*it);
    return acc;
}

UniPoly UniPoly::scale_arg(const Rational& s) const {
    std::vector<Rational> v(coeffs_.size());
    Rational p = 1;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        v[k] = coeffs_[k] * p;
        p *= s;
    }
    return UniPoly(std::move(v));
}

Rational UniPoly::content() const {
    if (is_zero()) return Rational(0);
    BigInt num_gcd = 0;
    BigInt den_lcm = 1;
    for (const auto& c : coeffs_) {
        num_gcd = gcd(num_gcd, c.get_num());
        den_lcm = lcm(den_lcm, c.get_den());
    }
    return make_rational(num_gcd, den_lcm);
}

UniPoly UniPoly::primitive_signed() const {
    if (is_zero()) return UniPoly();
    return *this * (Rational(1) / content());
}

UniPoly UniPoly::primitive_positive() const {
    UniPoly p = primitive_signed();
    if (!p.is_zero() && sign_of(p.leading()) < 0) return -p;
    return p;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        if (!s.empty()) s += sign_of(c) > 0 ? " + " : " - ";
        else if (sign_of(c) < 0) s += "-";
        Rational a = rational_abs(c);
        if (k == 0) {
            s += hyp::to_string(a);
        } else {
            if (a != 1) s += hyp::to_string(a) + "*";
            s += var;
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly f = a.primitive_positive();
    UniPoly g = b.primitive_positive();
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        UniPoly r = f.divmod(g).second;
        f = g;
        g = r.is_zero() ? UniPoly() : r.primitive_positive();
    }
    return f.primitive_positive();
}

} // namespace hyp
