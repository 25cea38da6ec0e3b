#ifndef MSW_RATFUNC_HPP
#define MSW_RATFUNC_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include "msw/mpoly.hpp"
#include "msw/qt_arith.hpp"
#include "msw/rat.hpp"

namespace msw {

// Element of Q(q,t), kept canonical at all times:
//   * num and den are polynomials in q,t with no negative exponents,
//   * gcd(num, den) = 1 over Q[q,t] (Laurent shifts cleared first),
//   * den is monic for the graded-lex order with q > t,
//   * zero is 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(MPoly::constant(1)) {}
    RatFunc(long c) : num_(MPoly::constant(c)), den_(MPoly::constant(1)) {}
    explicit RatFunc(const Rat& c) : num_(MPoly(c)), den_(MPoly::constant(1)) {}
    explicit RatFunc(const MPoly& p) : num_(p), den_(MPoly::constant(1)) {
        reduce();
    }
    RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("division by zero");
        reduce();
    }

    static RatFunc q() { return RatFunc(MPoly::variable(var_q())); }
    static RatFunc t() { return RatFunc(MPoly::variable(var_t())); }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const {
        return den_.is_constant() && den_.constant_value().is_one() &&
               num_.is_constant() && !num_.is_zero() &&
               num_.constant_value().is_one();
    }
    bool is_polynomial() const {
        return den_.is_constant() && den_.constant_value().is_one();
    }

    // Requires is_polynomial(); the numerator as an honest MPoly.
    const MPoly& poly() const {
        if (!is_polynomial())
            throw std::logic_error("rational function is not a polynomial");
        return num_;
    }

    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        if (a.is_zero()) return RatFunc();
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

    // Canonical representatives make equality structural.
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) {
        return !(a == b);
    }

    // q -> q^k and t -> t^k simultaneously on a variable-by-variable basis.
    RatFunc raised(int k) const {
        RatFunc r;
        r.num_ = num_.raise_exponents(VarKind::Q, k).raise_exponents(VarKind::T, k);
        r.den_ = den_.raise_exponents(VarKind::Q, k).raise_exponents(VarKind::T, k);
        r.reduce();
        return r;
    }

    // t -> 1/t via Laurent exponents, then recanonicalized.
    RatFunc invert_t() const {
        RatFunc r;
        r.num_ = num_.raise_exponents(VarKind::T, -1);
        r.den_ = den_.raise_exponents(VarKind::T, -1);
        r.reduce();
        return r;
    }

    RatFunc swap_qt() const {
        RatFunc r;
        r.num_ = num_.swap_kinds(VarKind::Q, VarKind::T);
        r.den_ = den_.swap_kinds(VarKind::Q, VarKind::T);
        r.reduce();
        return r;
    }

    RatFunc substitute_zero_q() const {
        MPoly d = den_.substitute_zero(VarKind::Q);
        if (d.is_zero()) throw std::domain_error("pole at q=0");
        return RatFunc(num_.substitute_zero(VarKind::Q), d);
    }

    Rat eval_one_one() const {
        MPoly d = den_.substitute_one(VarKind::Q).substitute_one(VarKind::T);
        MPoly n = num_.substitute_one(VarKind::Q).substitute_one(VarKind::T);
        if (d.is_zero()) throw std::domain_error("pole at q=t=1");
        return n.constant_value() / d.constant_value();
    }

    std::string str() const {
        if (is_polynomial()) return poly_str(num_);
        return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = MPoly::constant(1);
            return;
        }
        // clear Laurent shifts jointly so both parts become polynomials with
        // min exponent 0 in q and t
        for (VarKind k : {VarKind::Q, VarKind::T}) {
            Var v = (k == VarKind::Q) ? var_q() : var_t();
            int m = std::min(num_.min_exponent(v), den_.min_exponent(v));
            if (m != 0) {
                Monomial shift({{v, -m}});
                num_ = num_.times_monomial(shift);
                den_ = den_.times_monomial(shift);
            }
        }
        Rat cn = num_.content(), cd = den_.content();
        MPoly np = num_.scaled(Rat(1) / cn);
        MPoly dp = den_.scaled(Rat(1) / cd);
        MPoly g = qt::gcd_qt(np, dp);
        if (!g.is_constant()) {
            np = np.divided_exact(g);
            dp = dp.divided_exact(g);
        }
        Rat scale = cn / cd;
        Rat lc = dp.leading_coeff();
        num_ = np.scaled(scale / lc);
        den_ = dp.scaled(Rat(1) / lc);
    }

    MPoly num_, den_;
};

// Spec-level constructor: canonical reduced quotient.
inline RatFunc ratfunc_reduce(const MPoly& num, const MPoly& den) {
    return RatFunc(num, den);
}

}  // namespace msw

#endif
