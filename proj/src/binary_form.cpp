#include "dplct/binary_form.hpp"

namespace dplct {

BinaryForm gcd_binary(const BinaryForm& f, const BinaryForm& g) {
    if (f.is_zero() && g.is_zero()) throw math_error("undefined gcd");
    if (f.is_zero()) return g.normalized_monic();
    if (g.is_zero()) return f.normalized_monic();
    int t_common = std::min(f.t_order(), g.t_order());
    UPoly<Rational> u = gcd_poly(f.dehomogenized(), g.dehomogenized());
    BinaryForm h = BinaryForm::homogenized(u, u.degree() + t_common);
    return h.normalized_monic();
}

Rational det_rational(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rational inv = m[col][col].inv();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            Rational factor = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

Rational resultant_binary(const BinaryForm& f, const BinaryForm& g) {
    if (f.is_zero() || g.is_zero()) throw math_error("resultant of zero form");
    const int m = f.degree(), n = g.degree();
    if (m == 0) {
        Rational acc(1);
        for (int i = 0; i < n; ++i) acc *= f.coeff(0);
        return acc;
    }
    if (n == 0) {
        Rational acc(1);
        for (int i = 0; i < m; ++i) acc *= g.coeff(0);
        return acc;
    }
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Rational>> mat(size, std::vector<Rational>(size, Rational(0)));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) mat[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] = f.coeff(j);
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j)
            mat[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + j)] = g.coeff(j);
    return det_rational(std::move(mat));
}

std::multiset<int> multiplicity_structure(const BinaryForm& f) {
    if (f.is_zero()) throw math_error("multiplicity structure of zero form");
    std::multiset<int> out;
    int t_ord = f.t_order();
    if (t_ord >= 1) out.insert(t_ord);
    UPoly<Rational> u = f.dehomogenized();
    if (u.degree() >= 1) {
        for (const auto& [part, mult] : squarefree_decomposition(u)) {
            for (int i = 0; i < part.degree(); ++i) out.insert(mult);
        }
    }
    return out;
}

std::optional<BinaryForm> divide_exact(const BinaryForm& f, const BinaryForm& p) {
    if (p.is_zero()) throw math_error("division by zero form");
    if (f.is_zero()) return BinaryForm::zero_of_degree(0);
    if (f.degree() < p.degree()) return std::nullopt;
    if (f.t_order() < p.t_order()) return std::nullopt;
    auto [q, r] = divmod(f.dehomogenized(), p.dehomogenized());
    if (!r.is_zero()) return std::nullopt;
    return BinaryForm::homogenized(q, f.degree() - p.degree());
}

int order_of_factor(const BinaryForm& f, const BinaryForm& p) {
    if (f.is_zero() || p.is_zero() || p.degree() < 1) throw math_error("order_of_factor: bad input");
    int ord = 0;
    BinaryForm cur = f;
    while (true) {
        auto q = divide_exact(cur, p);
        if (!q) return ord;
        cur = *q;
        ++ord;
    }
}

std::string BinaryForm::str(const std::string& s, const std::string& t) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= deg_; ++i) {
        const Rational& x = c_[static_cast<std::size_t>(i)];
        if (x.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += x.str();
        int se = deg_ - i, te = i;
        if (se >= 1) out += "*" + s + (se >= 2 ? "^" + std::to_string(se) : "");
        if (te >= 1) out += "*" + t + (te >= 2 ? "^" + std::to_string(te) : "");
    }
    return out;
}

}  // namespace dplct
