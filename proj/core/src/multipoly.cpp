#include "hyp/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "hyp/error.hpp"

namespace hyp {

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw Error("bad_nvars", "variable count must be positive");
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(int nvars, const Exponents& exps, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(exps, c);
    return p;
}

MultiPoly MultiPoly::linear_form(const PointQ& coeffs) {
    MultiPoly p(static_cast<int>(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Exponents e(coeffs.size(), 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

int MultiPoly::total_degree() const {
    if (is_zero()) throw ZeroPolynomial("total degree of the zero polynomial");
    // graded order: the last term has maximal total degree
    const Exponents& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

void MultiPoly::add_term(const Exponents& exps, const Rational& c) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw DimensionMismatch("exponent vector length " + std::to_string(exps.size()) +
                                " vs nvars " + std::to_string(nvars_));
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw DimensionMismatch("adding polynomials of different nvars");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw DimensionMismatch("multiplying polynomials of different nvars");
    MultiPoly r(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& s) const {
    MultiPoly r(nvars_);
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

MultiPoly MultiPoly::pow(int k) const {
    if (k < 0) throw Error("bad_exponent", "negative power of a polynomial");
    MultiPoly acc = MultiPoly::constant(nvars_, 1);
    for (int i = 0; i < k; ++i) acc = acc * (*this);
    return acc;
}

MultiPoly MultiPoly::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw DimensionMismatch("derivative variable out of range");
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, c * Rational(e[var]));
    }
    return r;
}

std::string MultiPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!s.empty()) s += sign_of(c) > 0 ? " + " : " - ";
        else if (sign_of(c) < 0) s += "-";
        Rational a = rational_abs(c);
        bool any_var = std::any_of(e.begin(), e.end(), [](int k) { return k > 0; });
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (!any_var) {
            s += hyp::to_string(a);
        } else {
            if (a != 1) s += hyp::to_string(a) + "*";
            s += mono;
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Parser: recursive descent over the grammar in the header.

namespace {

class Parser {
public:
    Parser(const std::string& text, int nvars) : text_(text), nvars_(nvars) {}

    MultiPoly parse() {
        MultiPoly p = expression();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
        return p;
    }

private:
    MultiPoly expression() {
        skip_ws();
        int sign = 1;
        if (accept('+')) {
        } else if (accept('-')) {
            sign = -1;
        }
        MultiPoly acc = product() * Rational(sign);
        for (;;) {
            skip_ws();
            if (accept('+')) {
                acc = acc + product();
            } else if (accept('-')) {
                acc = acc - product();
            } else {
                return acc;
            }
        }
    }

    MultiPoly product() {
        MultiPoly acc = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                acc = acc * factor();
            } else if (peek() == '(') {
                // adjacency of parenthesized factors: "(..)(..)"
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    MultiPoly factor() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
        char c = text_[pos_];
        MultiPoly base(nvars_);
        if (c == '(') {
            ++pos_;
            base = expression();
            skip_ws();
            if (!accept(')')) throw ParseError(pos_, "expected ')'");
        } else if (c == 'x') {
            base = variable();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            base = MultiPoly::constant(nvars_, number());
        } else {
            throw ParseError(pos_, std::string("unexpected character '") + c + "'");
        }
        skip_ws();
        if (accept('^')) {
            int k = exponent();
            base = base.pow(k);
        }
        return base;
    }

    MultiPoly variable() {
        ++pos_; // consume 'x'
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError(pos_, "expected variable index after 'x'");
        int idx = std::stoi(text_.substr(start, pos_ - start));
        if (idx < 1 || idx > nvars_)
            throw ParseError(start, "variable index x" + std::to_string(idx) +
                                        " out of range 1.." + std::to_string(nvars_));
        Exponents e(nvars_, 0);
        e[idx - 1] = 1;
        return MultiPoly::monomial(nvars_, e, 1);
    }

    Rational number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string num = text_.substr(start, pos_ - start);
        skip_ws();
        if (accept('/')) {
            skip_ws();
            std::size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == dstart) throw ParseError(pos_, "expected denominator digits");
            std::string den = text_.substr(dstart, pos_ - dstart);
            if (parse_rational(den) == 0) throw ParseError(dstart, "zero denominator");
            return parse_rational(num + "/" + den);
        }
        return parse_rational(num);
    }

    int exponent() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError(pos_, "expected exponent digits");
        return std::stoi(text_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    const std::string& text_;
    int nvars_;
    std::size_t pos_ = 0;
};

} // namespace

MultiPoly parse_poly(const std::string& text, int nvars) {
    if (nvars < 1) throw Error("bad_nvars", "variable count must be positive");
    return Parser(text, nvars).parse();
}

Rational evaluate(const MultiPoly& p, const PointQ& x) {
    if (static_cast<int>(x.size()) != p.nvars())
        throw DimensionMismatch("evaluate: point has " + std::to_string(x.size()) +
                                " coordinates, polynomial has " + std::to_string(p.nvars()));
    Rational acc = 0;
    for (const auto& [e, c] : p.terms()) {
        Rational term = c;
        for (int i = 0; i < p.nvars(); ++i) {
            for (int k = 0; k < e[i]; ++k) term *= x[i];
        }
        acc += term;
    }
    return acc;
}

namespace {
std::string exps_to_string(const Exponents& e) {
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + ")";
}
} // namespace

int homogeneous_degree(const MultiPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("homogeneous degree of the zero polynomial");
    const Exponents& first = p.terms().begin()->first;
    int d = std::accumulate(first.begin(), first.end(), 0);
    for (const auto& [e, c] : p.terms()) {
        int de = std::accumulate(e.begin(), e.end(), 0);
        if (de != d)
            throw NotHomogeneous("polynomial is not homogeneous", exps_to_string(first),
                                 exps_to_string(e));
    }
    return d;
}

UniPoly restrict_line(const MultiPoly& h, const PointQ& e, const PointQ& v) {
    if (static_cast<int>(e.size()) != h.nvars() || static_cast<int>(v.size()) != h.nvars())
        throw DimensionMismatch("restrict_line: point dimension does not match nvars");
    homogeneous_degree(h); // validates homogeneity, throws otherwise
    UniPoly acc;
    for (const auto& [exps, c] : h.terms()) {
        // expand prod_i (e_i t + v_i)^(a_i) by repeated convolution
        UniPoly term = UniPoly::constant(c);
        for (int i = 0; i < h.nvars(); ++i) {
            if (exps[i] == 0) continue;
            UniPoly lin({v[i], e[i]});
            for (int k = 0; k < exps[i]; ++k) term = term * lin;
            if (term.is_zero()) break;
        }
        acc = acc + term;
    }
    return acc;
}

MultiPoly restrict_plane(const MultiPoly& h, const PointQ& a, const PointQ& b, const PointQ& c) {
    const int n = h.nvars();
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n ||
        static_cast<int>(c.size()) != n)
        throw DimensionMismatch("restrict_plane: spanning vector dimension does not match nvars");
    if (n < 3) throw DimensionMismatch("restrict_plane needs at least 3 ambient variables");
    int d = homogeneous_degree(h);
    if (rank({a, b, c}) < 3)
        throw DegenerateSectionFamily("restrict_plane: spanning vectors are linearly dependent");
    MultiPoly g(3);
    for (const auto& [exps, coeff] : h.terms()) {
        MultiPoly term = MultiPoly::constant(3, coeff);
        for (int i = 0; i < n; ++i) {
            if (exps[i] == 0) continue;
            MultiPoly lin = MultiPoly::linear_form({a[i], b[i], c[i]});
            for (int k = 0; k < exps[i]; ++k) term = term * lin;
            if (term.is_zero()) break;
        }
        g = g + term;
    }
    if (g.is_zero())
        throw DegenerateSectionFamily("restrict_plane: polynomial vanishes on the plane");
    (void)d;
    return g;
}

std::vector<MultiPoly> gradient(const MultiPoly& h) {
    std::vector<MultiPoly> g;
    g.reserve(h.nvars());
    for (int i = 0; i < h.nvars(); ++i) g.push_back(h.derivative(i));
    return g;
}

} // namespace hyp
