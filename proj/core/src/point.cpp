#include "hyp/point.hpp"

#include <sstream>

#include "hyp/error.hpp"

namespace hyp {

namespace {
void require_same_size(const PointQ& a, const PointQ& b, const char* op) {
    if (a.size() != b.size())
        throw DimensionMismatch(std::string(op) + ": dimensions " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
}
} // namespace

PointQ add(const PointQ& a, const PointQ& b) {
    require_same_size(a, b, "add");
    PointQ r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

PointQ sub(const PointQ& a, const PointQ& b) {
    require_same_size(a, b, "sub");
    PointQ r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

PointQ negate(const PointQ& a) {
    PointQ r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

PointQ scale(const Rational& s, const PointQ& a) {
    PointQ r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Rational dot(const PointQ& a, const PointQ& b) {
    require_same_size(a, b, "dot");
    Rational r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

bool is_zero(const PointQ& a) {
    for (const auto& c : a)
        if (c != 0) return false;
    return true;
}

bool collinear(const PointQ& a, const PointQ& b) {
    require_same_size(a, b, "collinear");
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

int rank(const std::vector<PointQ>& rows) {
    if (rows.empty()) return 0;
    std::vector<PointQ> m = rows;
    const std::size_t ncols = m[0].size();
    int r = 0;
    std::size_t col = 0;
    while (r < static_cast<int>(m.size()) && col < ncols) {
        std::size_t pivot = m.size();
        for (std::size_t i = r; i < m.size(); ++i) {
            if (m[i][col] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == m.size()) {
            ++col;
            continue;
        }
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][col] == 0) continue;
            Rational f = m[i][col] / m[r][col];
            for (std::size_t j = col; j < ncols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
        ++col;
    }
    return r;
}

PointQ canonical_direction(const PointQ& a) {
    BigInt g = 0;
    for (const auto& c : a) {
        if (!is_integer(c))
            throw Error("not_integer", "canonical_direction expects integer coordinates");
        g = gcd(g, c.get_num());
    }
    if (g == 0) return a; // zero vector stays zero
    int first_sign = 0;
    for (const auto& c : a) {
        if (c != 0) {
            first_sign = sign_of(c);
            break;
        }
    }
    PointQ r(a.size());
    BigInt div = first_sign < 0 ? BigInt(-g) : g;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = make_rational(a[i].get_num(), div);
    return r;
}

PointQ parse_point(const std::string& text) {
    PointQ r;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        // trim blanks
        std::size_t b = item.find_first_not_of(" \t");
        std::size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw ParseError(0, "empty coordinate in '" + text + "'");
        r.push_back(parse_rational(item.substr(b, e - b + 1)));
    }
    if (r.empty()) throw ParseError(0, "empty point literal");
    return r;
}

std::string point_to_string(const PointQ& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += to_string(a[i]);
    }
    return s;
}

} // namespace hyp
