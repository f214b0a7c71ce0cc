#ifndef DPLCT_BINARY_FORM_HPP
#define DPLCT_BINARY_FORM_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dplct/errors.hpp"
#include "dplct/upoly.hpp"

namespace dplct {

/// Homogeneous form in (s,t) over Q. coeff(i) multiplies s^(d-i) t^i.
/// The zero form of any degree is permitted and flagged by is_zero().
class BinaryForm {
  public:
    BinaryForm() : deg_(0), c_{Rational(0)} {}
    BinaryForm(int degree, std::vector<Rational> coeffs) : deg_(degree), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != deg_ + 1)
            throw math_error("binary form coefficient count does not match degree");
    }
    static BinaryForm zero_of_degree(int d) {
        return BinaryForm(d, std::vector<Rational>(static_cast<std::size_t>(d) + 1, Rational(0)));
    }
    static BinaryForm constant(const Rational& r) { return BinaryForm(0, {r}); }

    int degree() const { return deg_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    /// Multiplicity of the root (1:0), i.e. the power of t dividing the form.
    int t_order() const {
        for (int i = 0; i <= deg_; ++i)
            if (!c_[static_cast<std::size_t>(i)].is_zero()) return i;
        return deg_ + 1;  // zero form
    }

    /// f(s,1) as a univariate polynomial in s.
    UPoly<Rational> dehomogenized() const {
        std::vector<Rational> u(static_cast<std::size_t>(deg_) + 1, Rational(0));
        for (int i = 0; i <= deg_; ++i) u[static_cast<std::size_t>(deg_ - i)] = c_[static_cast<std::size_t>(i)];
        return UPoly<Rational>(std::move(u));
    }

    static BinaryForm homogenized(const UPoly<Rational>& u, int d) {
        if (u.degree() > d) throw math_error("cannot homogenize: degree too large");
        std::vector<Rational> c(static_cast<std::size_t>(d) + 1, Rational(0));
        for (int j = 0; j <= u.degree(); ++j) c[static_cast<std::size_t>(d - j)] = u[j];
        return BinaryForm(d, std::move(c));
    }

    Rational eval(const Rational& s, const Rational& t) const {
        Rational acc(0);
        for (int i = 0; i <= deg_; ++i)
            acc += c_[static_cast<std::size_t>(i)] * pow_r(s, deg_ - i) * pow_r(t, i);
        return acc;
    }

    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
        if (a.deg_ != b.deg_) throw math_error("adding forms of different degree");
        std::vector<Rational> c(a.c_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
        return BinaryForm(a.deg_, std::move(c));
    }
    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
        return a + b.scaled(Rational(-1));
    }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        std::vector<Rational> c(static_cast<std::size_t>(a.deg_ + b.deg_) + 1, Rational(0));
        for (int i = 0; i <= a.deg_; ++i)
            for (int j = 0; j <= b.deg_; ++j)
                c[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        return BinaryForm(a.deg_ + b.deg_, std::move(c));
    }
    BinaryForm scaled(const Rational& r) const {
        std::vector<Rational> c(c_);
        for (auto& x : c) x *= r;
        return BinaryForm(deg_, std::move(c));
    }
    BinaryForm pow(int e) const {
        BinaryForm acc = constant(Rational(1));
        for (int i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }

    /// Leading nonzero coefficient scaled to 1.
    BinaryForm normalized_monic() const {
        if (is_zero()) throw math_error("cannot normalize zero form");
        return scaled(c_[static_cast<std::size_t>(t_order())].inv());
    }

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.deg_ == b.deg_ && a.c_ == b.c_;
    }
    friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }
    friend bool operator<(const BinaryForm& a, const BinaryForm& b) {
        if (a.deg_ != b.deg_) return a.deg_ < b.deg_;
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        }
        return false;
    }

    std::string str(const std::string& s = "s", const std::string& t = "t") const;

  private:
    static Rational pow_r(const Rational& x, int e) {
        Rational acc(1);
        for (int i = 0; i < e; ++i) acc *= x;
        return acc;
    }
    int deg_;
    std::vector<Rational> c_;
};

/// Monic gcd; result degree >= 1 iff f and g share a projective root.
BinaryForm gcd_binary(const BinaryForm& f, const BinaryForm& g);

/// Sylvester determinant on the formal-degree coefficient lists; vanishes iff
/// a common projective root exists, including roots at (1:0).
Rational resultant_binary(const BinaryForm& f, const BinaryForm& g);

/// Multiset of root multiplicities over the algebraic closure.
std::multiset<int> multiplicity_structure(const BinaryForm& f);

/// f / p when the division is exact, nullopt otherwise.
std::optional<BinaryForm> divide_exact(const BinaryForm& f, const BinaryForm& p);

/// Largest k with p^k | f (f nonzero, deg p >= 1).
int order_of_factor(const BinaryForm& f, const BinaryForm& p);

/// Determinant by Gaussian elimination over Q.
Rational det_rational(std::vector<std::vector<Rational>> m);

}  // namespace dplct

#endif
