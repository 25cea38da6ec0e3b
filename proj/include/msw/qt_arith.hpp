#ifndef MSW_QT_ARITH_HPP
#define MSW_QT_ARITH_HPP

#include <stdexcept>
#include <vector>

#include "msw/mpoly.hpp"
#include "msw/rat.hpp"

// Dense gcd arithmetic for integer polynomials in q and t, used to keep
// RatFunc values reduced.  Bivariate gcd goes through ZZ[t][q] with a
// primitive pseudo-remainder sequence.

namespace msw::qt {

// --- univariate over ZZ (variable t), coefficients ascending ---
using UPoly = std::vector<mpz_class>;

inline void utrim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline bool uis_zero(const UPoly& p) { return p.empty(); }
inline int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    utrim(r);
    return r;
}

inline UPoly uscale(const UPoly& a, const mpz_class& c) {
    if (c == 0) return {};
    UPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

inline UPoly usub(const UPoly& a, const UPoly& b) {
    UPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), mpz_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    utrim(r);
    return r;
}

inline mpz_class ucontent(const UPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) g = gcd_z(g, c);
    return g;
}

inline UPoly uprimitive(const UPoly& p) {
    if (p.empty()) return p;
    mpz_class g = ucontent(p);
    if (p.back() < 0) g = -g;
    UPoly r = p;
    for (auto& c : r) c /= g;
    return r;
}

inline UPoly udiv_exact_const(const UPoly& p, const mpz_class& c) {
    UPoly r = p;
    for (auto& x : r) {
        mpz_class q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        if (rem != 0) throw std::logic_error("inexact constant division");
        x = q;
    }
    return r;
}

// primitive PRS gcd over ZZ[t]; result is primitive with positive lead
inline UPoly ugcd(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    if (uis_zero(a)) return uprimitive(b);
    if (uis_zero(b)) return uprimitive(a);
    mpz_class ca = ucontent(a), cb = ucontent(b);
    mpz_class cg = gcd_z(ca, cb);
    a = uprimitive(a);
    b = uprimitive(b);
    if (udeg(a) < udeg(b)) std::swap(a, b);
    while (!uis_zero(b)) {
        // pseudo-remainder of a by b
        UPoly r = a;
        while (!uis_zero(r) && udeg(r) >= udeg(b)) {
            int shift = udeg(r) - udeg(b);
            mpz_class lr = r.back(), lb = b.back();
            mpz_class g = gcd_z(lr, lb);
            mpz_class mr = lb / g, mb = lr / g;
            r = uscale(r, mr);
            UPoly sub(shift, mpz_class(0));
            sub.insert(sub.end(), b.begin(), b.end());
            r = usub(r, uscale(sub, mb));
        }
        a = b;
        b = uprimitive(r);
    }
    UPoly g = uscale(a, cg);
    return g;
}

// --- bivariate: ZZ[t][q], outer index = power of q ---
using BPoly = std::vector<UPoly>;

inline void btrim(BPoly& p) {
    while (!p.empty() && uis_zero(p.back())) p.pop_back();
}
inline bool bis_zero(const BPoly& p) { return p.empty(); }
inline int bdeg(const BPoly& p) { return static_cast<int>(p.size()) - 1; }

inline BPoly bmul(const BPoly& a, const BPoly& b) {
    if (a.empty() || b.empty()) return {};
    BPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!uis_zero(a[i]) && !uis_zero(b[j])) {
                UPoly prod = umul(a[i], b[j]);
                UPoly& dst = r[i + j];
                if (prod.size() > dst.size()) dst.resize(prod.size(), mpz_class(0));
                for (std::size_t k = 0; k < prod.size(); ++k) dst[k] += prod[k];
                utrim(dst);
            }
    btrim(r);
    return r;
}

inline BPoly bscale_u(const BPoly& a, const UPoly& c) {
    BPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = umul(a[i], c);
    btrim(r);
    return r;
}

inline BPoly bsub(const BPoly& a, const BPoly& b) {
    BPoly r = a;
    if (b.size() > r.size()) r.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = usub(r[i], b[i]);
    btrim(r);
    return r;
}

inline UPoly bcontent(const BPoly& p) {
    UPoly g;
    for (const auto& c : p) g = ugcd(g, c);
    return g;
}

inline BPoly bdivide_u_exact(const BPoly& p, const UPoly& d) {
    BPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (uis_zero(p[i])) continue;
        // exact univariate division p[i] / d
        UPoly rem = p[i], q;
        q.assign(rem.size(), mpz_class(0));
        while (!uis_zero(rem)) {
            if (udeg(rem) < udeg(d)) throw std::logic_error("inexact division");
            mpz_class qc = rem.back() / d.back();
            if (qc * d.back() != rem.back())
                throw std::logic_error("inexact division");
            int shift = udeg(rem) - udeg(d);
            q[shift] = qc;
            UPoly sub(shift, mpz_class(0));
            sub.insert(sub.end(), d.begin(), d.end());
            rem = usub(rem, uscale(sub, qc));
        }
        utrim(q);
        r[i] = q;
    }
    btrim(r);
    return r;
}

// primitive PRS gcd over (ZZ[t])[q]
inline BPoly bgcd(BPoly a, BPoly b) {
    btrim(a);
    btrim(b);
    if (bis_zero(a)) return b;
    if (bis_zero(b)) return a;
    UPoly ca = bcontent(a), cb = bcontent(b);
    UPoly cg = ugcd(ca, cb);
    a = bdivide_u_exact(a, ca);
    b = bdivide_u_exact(b, cb);
    if (bdeg(a) < bdeg(b)) std::swap(a, b);
    while (!bis_zero(b)) {
        BPoly r = a;
        while (!bis_zero(r) && bdeg(r) >= bdeg(b)) {
            int shift = bdeg(r) - bdeg(b);
            UPoly lr = r.back(), lb = b.back();
            UPoly g = ugcd(lr, lb);
            UPoly mr = bdivide_u_exact(BPoly{lb}, g)[0];
            UPoly mb = bdivide_u_exact(BPoly{lr}, g)[0];
            r = bscale_u(r, mr);
            BPoly sub(shift);
            sub.insert(sub.end(), b.begin(), b.end());
            r = bsub(r, bscale_u(sub, mb));
        }
        a = b;
        UPoly cr = bcontent(r);
        b = bis_zero(r) ? BPoly{} : bdivide_u_exact(r, cr);
    }
    // restore content gcd; normalize sign of the overall lead
    BPoly g = bscale_u(a, cg);
    if (!g.empty() && !g.back().empty() && g.back().back() < 0)
        for (auto& u : g)
            for (auto& c : u) c = -c;
    return g;
}

// --- conversions with MPoly restricted to q,t (nonnegative exponents,
//     integer coefficients) ---

inline BPoly to_bpoly(const MPoly& p) {
    BPoly r;
    for (const auto& [m, c] : p.terms()) {
        int eq = 0, et = 0;
        for (const auto& [v, k] : m.e) {
            if (v.kind == VarKind::Q) eq = k;
            else if (v.kind == VarKind::T) et = k;
            else throw std::invalid_argument("polynomial not in q,t only");
        }
        if (eq < 0 || et < 0)
            throw std::invalid_argument("Laurent exponent in gcd conversion");
        if (!c.is_integer()) throw std::invalid_argument("non-integer coefficient");
        if (static_cast<int>(r.size()) <= eq) r.resize(eq + 1);
        UPoly& u = r[eq];
        if (static_cast<int>(u.size()) <= et) u.resize(et + 1, mpz_class(0));
        u[et] += c.num();
        utrim(u);
    }
    btrim(r);
    return r;
}

inline MPoly from_bpoly(const BPoly& p) {
    MPoly r;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p[i].size(); ++j)
            if (p[i][j] != 0) {
                Monomial m({{var_q(), static_cast<int>(i)},
                            {var_t(), static_cast<int>(j)}});
                r.add_term(m, Rat(p[i][j]));
            }
    return r;
}

// gcd of two integer-coefficient polynomials in q,t
inline MPoly gcd_qt(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return from_bpoly(bgcd(to_bpoly(a), to_bpoly(b)));
}

}  // namespace msw::qt

#endif
