#ifndef DPLCT_EXT_SCALAR_HPP
#define DPLCT_EXT_SCALAR_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dplct/errors.hpp"
#include "dplct/upoly.hpp"

namespace dplct {

// Raised when a zero test or an inversion meets a zero divisor of a composite
// squarefree modulus. The carried factor is a proper monic divisor of the
// modulus; callers split the modulus and retry per factor.
struct ZeroDivisorSplit {
    QPoly factor;
};

/// Element of Q[a]/(q) with q monic squarefree. q of degree 1 is plain Q.
class ExtScalar {
  public:
    ExtScalar() = default;
    ExtScalar(std::shared_ptr<const QPoly> modulus, QPoly value)
        : mod_(std::move(modulus)), val_(std::move(value)) {
        if (!mod_ || mod_->degree() < 1) throw math_error("extension modulus must have degree >= 1");
        reduce();
    }

    static std::shared_ptr<const QPoly> make_modulus(QPoly q) {
        if (q.is_zero() || q.degree() < 1) throw math_error("extension modulus must have degree >= 1");
        q = monic(q);
        return std::make_shared<const QPoly>(std::move(q));
    }

    /// The rational field presented as Q[a]/(a).
    static std::shared_ptr<const QPoly> trivial_modulus() {
        return make_modulus(QPoly(std::vector<Rational>{Rational(0), Rational(1)}));
    }

    static ExtScalar from_rational(const std::shared_ptr<const QPoly>& m, const Rational& r) {
        return ExtScalar(m, QPoly(r));
    }

    /// The class of the generator a.
    static ExtScalar generator(const std::shared_ptr<const QPoly>& m) {
        return ExtScalar(m, QPoly(std::vector<Rational>{Rational(0), Rational(1)}));
    }

    const std::shared_ptr<const QPoly>& modulus_ptr() const { return mod_; }
    const QPoly& modulus() const { return *mod_; }
    const QPoly& value() const { return val_; }

    bool has_modulus() const { return static_cast<bool>(mod_); }
    bool is_exact_zero() const { return val_.is_zero(); }

    /// True iff zero; throws ZeroDivisorSplit on a nonzero zero divisor.
    bool is_zero_guarded() const {
        if (val_.is_zero()) return true;
        QPoly g = gcd_poly(val_, *mod_);
        if (g.degree() == 0) return false;
        throw ZeroDivisorSplit{g};
    }

    ExtScalar inv() const {
        if (val_.is_zero()) throw math_error("inverse of zero extension element");
        auto r = xgcd_poly(val_, *mod_);
        if (r.g.degree() > 0) throw ZeroDivisorSplit{r.g};
        // u*val + v*mod = 1
        return ExtScalar(mod_, r.u);
    }

    ExtScalar operator-() const { return raw(mod_, -val_); }
    friend ExtScalar operator+(const ExtScalar& a, const ExtScalar& b) {
        a.check_same(b);
        return ExtScalar(a.mod_, a.val_ + b.val_);
    }
    friend ExtScalar operator-(const ExtScalar& a, const ExtScalar& b) {
        a.check_same(b);
        return ExtScalar(a.mod_, a.val_ - b.val_);
    }
    friend ExtScalar operator*(const ExtScalar& a, const ExtScalar& b) {
        a.check_same(b);
        return ExtScalar(a.mod_, a.val_ * b.val_);
    }
    friend bool operator==(const ExtScalar& a, const ExtScalar& b) {
        a.check_same(b);
        return a.val_ == b.val_;
    }
    friend bool operator!=(const ExtScalar& a, const ExtScalar& b) { return !(a == b); }

    std::string str() const { return val_.str("a"); }

  private:
    static ExtScalar raw(std::shared_ptr<const QPoly> m, QPoly v) {
        ExtScalar x;
        x.mod_ = std::move(m);
        x.val_ = std::move(v);
        return x;
    }
    void reduce() {
        if (!val_.is_zero() && val_.degree() >= mod_->degree()) val_ = divmod(val_, *mod_).second;
    }
    void check_same(const ExtScalar& o) const {
        if (!mod_ || !o.mod_) throw math_error("extension element without modulus");
        if (mod_ != o.mod_ && !(*mod_ == *o.mod_)) throw math_error("mixed extension moduli");
    }

    std::shared_ptr<const QPoly> mod_;
    QPoly val_;
};

template <>
struct field_traits<ExtScalar> {
    static ExtScalar zero(const ExtScalar& ctx) {
        if (!ctx.has_modulus()) return ExtScalar();
        return ExtScalar::from_rational(ctx.modulus_ptr(), Rational(0));
    }
    static ExtScalar one(const ExtScalar& ctx) {
        return ExtScalar::from_rational(ctx.modulus_ptr(), Rational(1));
    }
    static ExtScalar from_int(const ExtScalar& ctx, long n) {
        return ExtScalar::from_rational(ctx.modulus_ptr(), Rational(n));
    }
    static ExtScalar from_rational(const ExtScalar& ctx, const Rational& r) {
        return ExtScalar::from_rational(ctx.modulus_ptr(), r);
    }
    static bool is_exact_zero(const ExtScalar& x) { return x.is_exact_zero(); }
    static bool is_zero(const ExtScalar& x) { return x.is_zero_guarded(); }
    static ExtScalar inv(const ExtScalar& x) { return x.inv(); }
};

inline std::string coeff_str(const ExtScalar& x) { return "(" + x.str() + ")"; }

/// Spec operation: modular inverse via extended Euclid; a shared factor with
/// the modulus surfaces as ZeroDivisorSplit.
inline ExtScalar ext_invert(const ExtScalar& x) { return x.inv(); }

// ---------------------------------------------------------------------------
// Split-and-retry driver: runs `process(modulus)` for every irreducible-enough
// sub-modulus reached by zero-divisor discovery. Deterministic order (factor
// first, cofactor second).

template <class F>
void for_each_split(const QPoly& modulus, F&& process) {
    QPoly m = monic(modulus);
    if (m.degree() < 1) throw math_error("split driver needs modulus of degree >= 1");
    try {
        process(ExtScalar::make_modulus(m));
    } catch (const ZeroDivisorSplit& s) {
        QPoly f = s.factor;
        QPoly g = divmod(m, f).first;
        for_each_split(f, process);
        for_each_split(g, process);
    }
}

// ---------------------------------------------------------------------------
// Evaluation of a Q-coefficient polynomial at an extension element.

inline ExtScalar eval_at(const QPoly& f, const ExtScalar& x) {
    ExtScalar acc = field_traits<ExtScalar>::zero(x);
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * x + ExtScalar::from_rational(x.modulus_ptr(), f[i]);
    }
    return acc;
}

/// Lift a Q[x] polynomial to one over Q[a]/(q).
inline UPoly<ExtScalar> lift_poly(const QPoly& f, const std::shared_ptr<const QPoly>& m) {
    std::vector<ExtScalar> v;
    v.reserve(static_cast<std::size_t>(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i) v.push_back(ExtScalar::from_rational(m, f[i]));
    return UPoly<ExtScalar>(std::move(v));
}

}  // namespace dplct

#endif
