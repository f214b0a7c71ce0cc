#ifndef DPLCT_BIVAR_HPP
#define DPLCT_BIVAR_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dplct/errors.hpp"
#include "dplct/upoly.hpp"

namespace dplct {

/// Sparse polynomial in two variables over K, keyed by (deg_x, deg_y).
/// Structurally zero coefficients are never stored.
template <class K>
class Bivar {
  public:
    using Key = std::pair<int, int>;

    Bivar() = default;

    void add_term(int i, int j, const K& c) {
        if (field_traits<K>::is_exact_zero(c)) return;
        auto it = c_.find({i, j});
        if (it == c_.end()) {
            c_.emplace(Key{i, j}, c);
        } else {
            it->second = it->second + c;
            if (field_traits<K>::is_exact_zero(it->second)) c_.erase(it);
        }
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<Key, K>& terms() const { return c_; }

    int total_degree() const {
        int d = -1;
        for (const auto& [k, v] : c_) d = std::max(d, k.first + k.second);
        return d;
    }

    friend Bivar operator+(const Bivar& a, const Bivar& b) {
        Bivar r = a;
        for (const auto& [k, v] : b.c_) r.add_term(k.first, k.second, v);
        return r;
    }
    friend Bivar operator-(const Bivar& a, const Bivar& b) {
        Bivar r = a;
        for (const auto& [k, v] : b.c_) r.add_term(k.first, k.second, -v);
        return r;
    }
    friend Bivar operator*(const Bivar& a, const Bivar& b) {
        Bivar r;
        for (const auto& [ka, va] : a.c_)
            for (const auto& [kb, vb] : b.c_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
        return r;
    }
    Bivar scaled(const K& s) const {
        Bivar r;
        for (const auto& [k, v] : c_) r.add_term(k.first, k.second, v * s);
        return r;
    }

    K eval(const K& x, const K& y) const {
        if (c_.empty()) throw math_error("eval of empty bivariate needs context");
        K acc = field_traits<K>::zero(c_.begin()->second);
        for (const auto& [k, v] : c_) {
            K t = v;
            for (int i = 0; i < k.first; ++i) t = t * x;
            for (int j = 0; j < k.second; ++j) t = t * y;
            acc = acc + t;
        }
        return acc;
    }

    K eval_or(const K& x, const K& y, const K& if_zero) const {
        if (c_.empty()) return if_zero;
        return eval(x, y);
    }

    Bivar partial_x() const {
        Bivar r;
        for (const auto& [k, v] : c_) {
            if (k.first == 0) continue;
            r.add_term(k.first - 1, k.second, v * field_traits<K>::from_int(v, k.first));
        }
        return r;
    }
    Bivar partial_y() const {
        Bivar r;
        for (const auto& [k, v] : c_) {
            if (k.second == 0) continue;
            r.add_term(k.first, k.second - 1, v * field_traits<K>::from_int(v, k.second));
        }
        return r;
    }

    /// Order of vanishing at the origin: smallest total degree carrying a
    /// semantically nonzero coefficient (guarded zero tests).
    int multiplicity_at_origin() const {
        int best = -1;
        std::map<int, std::vector<const K*>> by_level;
        for (const auto& [k, v] : c_) by_level[k.first + k.second].push_back(&v);
        for (const auto& [level, coeffs] : by_level) {
            for (const K* v : coeffs)
                if (!field_traits<K>::is_zero(*v)) return level;
        }
        return best;  // -1: vanishes identically (semantically)
    }

    /// Coefficients of the degree-mu homogeneous part, as a polynomial in the
    /// ratio y/x direction variable: entry j = coefficient of x^(mu-j) y^j.
    UPoly<K> leading_form_in_direction(int mu, const K& ctx) const {
        std::vector<K> v(static_cast<std::size_t>(mu) + 1, field_traits<K>::zero(ctx));
        for (const auto& [k, c] : c_)
            if (k.first + k.second == mu) v[static_cast<std::size_t>(k.second)] = c;
        return UPoly<K>(std::move(v));
    }

    /// Strict transform in chart x = x, y = x*ybar: h(x, x*ybar) / x^mu.
    /// Pure exponent bookkeeping; every term has i + j >= mu.
    Bivar blowup_chart1(int mu) const {
        Bivar r;
        for (const auto& [k, v] : c_) {
            int ni = k.first + k.second - mu;
            if (ni < 0) throw math_error("blowup chart1: term below multiplicity");
            r.add_term(ni, k.second, v);
        }
        return r;
    }

    /// Strict transform in chart x = xbar*y, y = y: h(xbar*y, y) / y^mu.
    Bivar blowup_chart2(int mu) const {
        Bivar r;
        for (const auto& [k, v] : c_) {
            int nj = k.first + k.second - mu;
            if (nj < 0) throw math_error("blowup chart2: term below multiplicity");
            r.add_term(k.first, nj, v);
        }
        return r;
    }

    /// h(x, y + c).
    Bivar shift_y(const K& c) const {
        Bivar r;
        for (const auto& [k, v] : c_) {
            std::vector<K> pows;  // c^e
            pows.push_back(field_traits<K>::one(c));
            for (int e = 1; e <= k.second; ++e) pows.push_back(pows.back() * c);
            Int binom(1);  // C(j, t), updated incrementally
            for (int t = 0; t <= k.second; ++t) {
                if (t > 0) binom = binom * (k.second - t + 1) / t;
                K coef = v * field_traits<K>::from_int(v, binom.get_si()) *
                         pows[static_cast<std::size_t>(k.second - t)];
                r.add_term(k.first, t, coef);
            }
        }
        return r;
    }

    template <class K2, class Fn>
    Bivar<K2> map_coeffs(Fn&& fn) const {
        Bivar<K2> r;
        for (const auto& [k, v] : c_) r.add_term(k.first, k.second, fn(v));
        return r;
    }

    /// f(a*x + b*y, c*x + d*y); used by the coordinate-invariance tests.
    Bivar linear_substitution(const K& a, const K& b, const K& c, const K& d) const {
        Bivar r;
        Bivar X, Y;
        X.add_term(1, 0, a);
        X.add_term(0, 1, b);
        Y.add_term(1, 0, c);
        Y.add_term(0, 1, d);
        for (const auto& [k, v] : c_) {
            Bivar t;
            t.add_term(0, 0, v);
            for (int i = 0; i < k.first; ++i) t = t * X;
            for (int j = 0; j < k.second; ++j) t = t * Y;
            r = r + t;
        }
        return r;
    }

    std::string str(const std::string& x = "x", const std::string& y = "y") const {
        if (c_.empty()) return "0";
        std::string out;
        for (const auto& [k, v] : c_) {
            if (!out.empty()) out += " + ";
            out += coeff_str(v);
            if (k.first >= 1) out += "*" + x + (k.first >= 2 ? "^" + std::to_string(k.first) : "");
            if (k.second >= 1) out += "*" + y + (k.second >= 2 ? "^" + std::to_string(k.second) : "");
        }
        return out;
    }

  private:
    std::map<Key, K> c_;
};

}  // namespace dplct

#endif
