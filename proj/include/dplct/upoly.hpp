#ifndef DPLCT_UPOLY_HPP
#define DPLCT_UPOLY_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "dplct/errors.hpp"
#include "dplct/rational.hpp"

namespace dplct {

// Coefficient-field customization points. The second argument of from_int /
// zero / one is a context element: Rational ignores it, ExtScalar takes the
// modulus from it.
template <class K>
struct field_traits;

template <>
struct field_traits<Rational> {
    static Rational zero(const Rational&) { return Rational(0); }
    static Rational one(const Rational&) { return Rational(1); }
    static Rational from_int(const Rational&, long n) { return Rational(n); }
    static Rational from_rational(const Rational&, const Rational& r) { return r; }
    // Exact structural zero (used for coefficient trimming).
    static bool is_exact_zero(const Rational& x) { return x.is_zero(); }
    // Semantic zero test; for composite extension moduli this may throw
    // ZeroDivisorSplit. For Rational it never throws.
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static Rational inv(const Rational& x) { return x.inv(); }
};

/// Dense univariate polynomial over K, coefficients ascending.
template <class K>
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit UPoly(const K& c0) : c_{c0} { trim(); }

    static UPoly zero() { return UPoly(); }
    static UPoly monomial(const K& coeff, int power) {
        std::vector<K> v;
        if (!field_traits<K>::is_exact_zero(coeff)) {
            v.resize(power, field_traits<K>::zero(coeff));
            v.push_back(coeff);
        }
        return UPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }

    const K& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    const K& lead() const { return c_.back(); }

    /// Any coefficient, as arithmetic context (nonzero polynomial required).
    const K& ctx() const {
        if (c_.empty()) throw math_error("context of zero polynomial");
        return c_.front();
    }

    UPoly operator-() const {
        std::vector<K> v;
        v.reserve(c_.size());
        for (const auto& x : c_) v.push_back(-x);
        return UPoly(std::move(v));
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<K> v(std::max(a.c_.size(), b.c_.size()),
                         field_traits<K>::zero(a.c_.empty() ? (b.c_.empty() ? K{} : b.c_[0]) : a.c_[0]));
        if (v.empty()) return UPoly();
        for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = v[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
        return UPoly(std::move(v));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<K> v(a.c_.size() + b.c_.size() - 1, field_traits<K>::zero(a.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        return UPoly(std::move(v));
    }

    UPoly scaled(const K& s) const {
        std::vector<K> v;
        v.reserve(c_.size());
        for (const auto& x : c_) v.push_back(x * s);
        return UPoly(std::move(v));
    }

    /// Multiply by x^k.
    UPoly shifted_up(int k) const {
        if (is_zero()) return UPoly();
        std::vector<K> v(c_.size() + static_cast<std::size_t>(k), field_traits<K>::zero(c_[0]));
        for (std::size_t i = 0; i < c_.size(); ++i) v[i + static_cast<std::size_t>(k)] = c_[i];
        return UPoly(std::move(v));
    }

    K eval(const K& x) const {
        if (is_zero()) return field_traits<K>::zero(x);
        K acc = field_traits<K>::zero(x);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<K> v;
        v.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            v.push_back(c_[i] * field_traits<K>::from_int(c_[i], static_cast<long>(i)));
        return UPoly(std::move(v));
    }

    /// f(x + a).
    UPoly translated(const K& a) const {
        if (is_zero()) return UPoly();
        // Horner on (x + a).
        UPoly xa(std::vector<K>{a, field_traits<K>::one(a)});
        UPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * xa + UPoly(*it);
        return acc;
    }

    /// f(g(x)).
    UPoly composed(const UPoly& g) const {
        UPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + UPoly(*it);
        return acc;
    }

    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    std::string str(const std::string& var = "x") const;

  private:
    void trim() {
        while (!c_.empty() && field_traits<K>::is_exact_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

/// Quotient and remainder; divisor's leading coefficient must be invertible.
template <class K>
std::pair<UPoly<K>, UPoly<K>> divmod(const UPoly<K>& a, const UPoly<K>& b) {
    if (b.is_zero()) throw math_error("polynomial division by zero");
    K lb_inv = field_traits<K>::inv(b.lead());
    UPoly<K> r = a, q;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        K coef = r.lead() * lb_inv;
        int k = r.degree() - b.degree();
        UPoly<K> t = UPoly<K>::monomial(coef, k);
        q = q + t;
        r = r - t * b;
        // lead must cancel; numeric trim handles it
    }
    return {q, r};
}

template <class K>
UPoly<K> monic(const UPoly<K>& f) {
    if (f.is_zero()) throw math_error("monic of zero polynomial");
    return f.scaled(field_traits<K>::inv(f.lead()));
}

/// Monic gcd by the Euclidean algorithm. gcd(f, 0) = monic f.
template <class K>
UPoly<K> gcd_poly(UPoly<K> a, UPoly<K> b) {
    if (a.is_zero() && b.is_zero()) throw math_error("undefined gcd");
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// g = gcd(a,b) monic together with u,v such that u*a + v*b = g.
template <class K>
struct XgcdResult {
    UPoly<K> g, u, v;
};

template <class K>
XgcdResult<K> xgcd_poly(const UPoly<K>& a, const UPoly<K>& b) {
    if (a.is_zero() && b.is_zero()) throw math_error("undefined gcd");
    UPoly<K> r0 = a, r1 = b;
    const K& c = a.is_zero() ? b.ctx() : a.ctx();
    UPoly<K> one(field_traits<K>::one(c));
    UPoly<K> s0 = one, s1, t0, t1 = one;
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UPoly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    K li = field_traits<K>::inv(r0.lead());
    return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

/// Yun squarefree decomposition: f = lc * prod_i part_i ^ mult_i with the
/// parts monic, squarefree and pairwise coprime.
template <class K>
std::vector<std::pair<UPoly<K>, int>> squarefree_decomposition(const UPoly<K>& f) {
    if (f.is_zero()) throw math_error("squarefree decomposition of zero");
    std::vector<std::pair<UPoly<K>, int>> out;
    if (f.degree() == 0) return out;
    UPoly<K> g = monic(f);
    UPoly<K> d = g.derivative();
    UPoly<K> a0 = gcd_poly(g, d);
    UPoly<K> c = divmod(g, a0).first;
    UPoly<K> w = divmod(d, a0).first - c.derivative();
    int i = 1;
    while (c.degree() > 0) {
        UPoly<K> a = gcd_poly(c, w);
        if (a.degree() > 0) out.emplace_back(a, i);
        c = divmod(c, a).first;
        w = divmod(w, a).first - c.derivative();
        ++i;
    }
    return out;
}

template <class K>
UPoly<K> squarefree_part(const UPoly<K>& f) {
    auto dec = squarefree_decomposition(f);
    if (dec.empty()) return UPoly<K>(field_traits<K>::one(f.ctx()));
    UPoly<K> out(field_traits<K>::one(f.ctx()));
    for (auto& [p, m] : dec) out = out * p;
    return out;
}

template <class K>
std::string UPoly<K>::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const K& x = c_[static_cast<std::size_t>(i)];
        if (field_traits<K>::is_exact_zero(x)) continue;
        if (!s.empty()) s += " + ";
        s += coeff_str(x);
        if (i >= 1) s += "*" + var;
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

inline std::string coeff_str(const Rational& x) { return x.str(); }

using QPoly = UPoly<Rational>;

}  // namespace dplct

#endif
