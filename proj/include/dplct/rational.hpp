#ifndef DPLCT_RATIONAL_HPP
#define DPLCT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <iosfwd>
#include <string>

#include "dplct/errors.hpp"

namespace dplct {

using Int = mpz_class;

/// Exact rational number, always reduced, denominator > 0, zero is 0/1.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(const Int& n) : q_(n) {}
    Rational(const Int& num, const Int& den) : q_(num, den) {
        if (den == 0) throw math_error("rational with zero denominator");
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw math_error("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational inv() const {
        if (is_zero()) throw math_error("inverse of zero");
        return Rational(mpq_class(1 / q_));
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// "p/q", or just "p" for integers.
    std::string str() const {
        if (den() == 1) return num().get_str();
        return num().get_str() + "/" + den().get_str();
    }

    /// Accepts "p", "-p", "p/q".
    static Rational parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw parse_error("bad rational literal: '" + s + "'");
        if (q.get_den() == 0) throw parse_error("zero denominator in '" + s + "'");
        q.canonicalize();
        Rational r;
        r.q_ = q;
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.q_;
    }

  private:
    explicit Rational(const mpq_class& q) : q_(q) {}
    mpq_class q_;
};

inline Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace dplct

#endif
