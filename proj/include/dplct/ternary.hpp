#ifndef DPLCT_TERNARY_HPP
#define DPLCT_TERNARY_HPP

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "dplct/errors.hpp"
#include "dplct/upoly.hpp"

namespace dplct {

/// Homogeneous form in (x,y,z) over Q; exponent triples sum to the degree.
class TernaryForm {
  public:
    using Key = std::array<int, 3>;

    explicit TernaryForm(int degree = 0) : deg_(degree) {}

    int degree() const { return deg_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<Key, Rational>& terms() const { return c_; }

    void add_term(int i, int j, int k, const Rational& c) {
        if (c.is_zero()) return;
        if (i + j + k != deg_) throw math_error("ternary term degree mismatch");
        if (i < 0 || j < 0 || k < 0) throw math_error("negative exponent");
        Key key{i, j, k};
        auto it = c_.find(key);
        if (it == c_.end()) {
            c_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    Rational coeff(int i, int j, int k) const {
        auto it = c_.find(Key{i, j, k});
        return it == c_.end() ? Rational(0) : it->second;
    }

    friend TernaryForm operator+(const TernaryForm& a, const TernaryForm& b) {
        if (a.deg_ != b.deg_) throw math_error("adding ternary forms of different degree");
        TernaryForm r = a;
        for (const auto& [k, v] : b.c_) r.add_term(k[0], k[1], k[2], v);
        return r;
    }
    friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
        TernaryForm r(a.deg_ + b.deg_);
        for (const auto& [ka, va] : a.c_)
            for (const auto& [kb, vb] : b.c_)
                r.add_term(ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], va * vb);
        return r;
    }
    TernaryForm scaled(const Rational& s) const {
        TernaryForm r(deg_);
        for (const auto& [k, v] : c_) r.add_term(k[0], k[1], k[2], v * s);
        return r;
    }

    /// Partial derivative, var = 0,1,2 for x,y,z.
    TernaryForm partial(int var) const {
        TernaryForm r(deg_ > 0 ? deg_ - 1 : 0);
        for (const auto& [k, v] : c_) {
            int e = k[static_cast<std::size_t>(var)];
            if (e == 0) continue;
            Key nk = k;
            nk[static_cast<std::size_t>(var)] = e - 1;
            r.add_term(nk[0], nk[1], nk[2], v * Rational(e));
        }
        return r;
    }

    /// Determinant of the matrix of second partials.
    TernaryForm hessian() const {
        std::array<std::array<TernaryForm, 3>, 3> h;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = partial(i).partial(j);
        auto& m = h;
        TernaryForm det =
            m[0][0] * (m[1][1] * m[2][2] + m[1][2] * m[2][1].scaled(Rational(-1))) +
            m[0][1] * (m[1][2] * m[2][0] + m[1][0] * m[2][2].scaled(Rational(-1))) +
            m[0][2] * (m[1][0] * m[2][1] + m[1][1] * m[2][0].scaled(Rational(-1)));
        return det;
    }

    template <class K>
    K eval(const K& x, const K& y, const K& z) const {
        K acc = field_traits<K>::zero(x);
        for (const auto& [k, v] : c_) {
            K t = field_traits<K>::from_rational(x, v);
            for (int i = 0; i < k[0]; ++i) t = t * x;
            for (int j = 0; j < k[1]; ++j) t = t * y;
            for (int l = 0; l < k[2]; ++l) t = t * z;
            acc = acc + t;
        }
        return acc;
    }

    /// f(x0, y0, z) as a univariate polynomial in z, coefficients in K.
    template <class K>
    UPoly<K> specialize_xy(const K& x0, const K& y0) const {
        std::vector<K> coeffs(static_cast<std::size_t>(deg_) + 1, field_traits<K>::zero(x0));
        for (const auto& [k, v] : c_) {
            K t = field_traits<K>::from_rational(x0, v);
            for (int i = 0; i < k[0]; ++i) t = t * x0;
            for (int j = 0; j < k[1]; ++j) t = t * y0;
            coeffs[static_cast<std::size_t>(k[2])] = coeffs[static_cast<std::size_t>(k[2])] + t;
        }
        return UPoly<K>(std::move(coeffs));
    }

    /// f(M00 x + M01 y + M02 z, M10 x + ..., M20 x + ...).
    TernaryForm linear_change(const std::array<std::array<Rational, 3>, 3>& m) const {
        TernaryForm X(1), Y(1), Z(1);
        X.add_term(1, 0, 0, m[0][0]);
        X.add_term(0, 1, 0, m[0][1]);
        X.add_term(0, 0, 1, m[0][2]);
        Y.add_term(1, 0, 0, m[1][0]);
        Y.add_term(0, 1, 0, m[1][1]);
        Y.add_term(0, 0, 1, m[1][2]);
        Z.add_term(1, 0, 0, m[2][0]);
        Z.add_term(0, 1, 0, m[2][1]);
        Z.add_term(0, 0, 1, m[2][2]);
        TernaryForm r(deg_);
        for (const auto& [k, v] : c_) {
            TernaryForm t(0);
            t.add_term(0, 0, 0, v);
            for (int i = 0; i < k[0]; ++i) t = t * X;
            for (int j = 0; j < k[1]; ++j) t = t * Y;
            for (int l = 0; l < k[2]; ++l) t = t * Z;
            r = r + t;
        }
        return r;
    }

    std::string str() const;

  private:
    int deg_;
    std::map<Key, Rational> c_;
};

}  // namespace dplct

#endif
