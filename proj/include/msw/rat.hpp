#ifndef MSW_RAT_HPP
#define MSW_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace msw {

// Arbitrary-precision rational, always canonical: gcd(|num|, den) = 1 and
// den > 0.  Thin wrapper over GMP's mpq_class; arithmetic through the
// operators below preserves canonicity.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(const mpz_class& n) : v_(n) {}
    Rat(long n, long d) {
        if (d == 0) throw std::domain_error("division by zero");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    Rat(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw std::domain_error("division by zero");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    const mpq_class& value() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_), tag{}); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat abs() const { return Rat(mpq_class(::abs(v_)), tag{}); }

    // "3/2", "-1", "0"
    std::string str() const {
        std::string s = v_.get_num().get_str();
        if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
        return s;
    }

private:
    struct tag {};
    Rat(const mpq_class& q, tag) : v_(q) {}  // already canonical
    mpq_class v_;
};

inline mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline mpz_class factorial_z(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline mpz_class binomial_z(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return b;
}

}  // namespace msw

#endif
