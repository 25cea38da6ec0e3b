#ifndef MSW_MPOLY_HPP
#define MSW_MPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "msw/rat.hpp"

namespace msw {

// Tagged variables.  Kind order doubles as the lex precedence: q > t > x1 >
// x2 > ... > y1 > ... > a1 > ... > b1 > ...
enum class VarKind : std::uint8_t { Q = 0, T = 1, X = 2, Y = 3, A = 4, B = 5 };

struct Var {
    VarKind kind;
    std::uint32_t index;  // 1-based for x/y/a/b; 0 for q,t

    friend bool operator==(const Var&, const Var&) = default;
    friend bool operator<(const Var& u, const Var& v) {
        if (u.kind != v.kind) return u.kind < v.kind;
        return u.index < v.index;
    }
};

inline Var var_q() { return {VarKind::Q, 0}; }
inline Var var_t() { return {VarKind::T, 0}; }
inline Var var_x(std::uint32_t i) { return {VarKind::X, i}; }
inline Var var_y(std::uint32_t i) { return {VarKind::Y, i}; }
inline Var var_a(std::uint32_t i) { return {VarKind::A, i}; }
inline Var var_b(std::uint32_t i) { return {VarKind::B, i}; }

inline bool is_x_kind(VarKind k) { return k == VarKind::X || k == VarKind::A; }
inline bool is_y_kind(VarKind k) { return k == VarKind::Y || k == VarKind::B; }

inline std::string var_name(const Var& v) {
    switch (v.kind) {
        case VarKind::Q: return "q";
        case VarKind::T: return "t";
        case VarKind::X: return "x" + std::to_string(v.index);
        case VarKind::Y: return "y" + std::to_string(v.index);
        case VarKind::A: return "a" + std::to_string(v.index);
        case VarKind::B: return "b" + std::to_string(v.index);
    }
    return "?";
}

// Exponent vector: sorted by variable, nonzero exponents only.  Negative
// exponents are admitted for q and t (Laurent support).
struct Monomial {
    std::vector<std::pair<Var, int>> e;

    Monomial() = default;
    explicit Monomial(std::vector<std::pair<Var, int>> exps) : e(std::move(exps)) {
        normalize();
    }

    void normalize() {
        std::sort(e.begin(), e.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<Var, int>> out;
        for (const auto& [v, k] : e) {
            if (k == 0) continue;
            if (k < 0 && v.kind != VarKind::Q && v.kind != VarKind::T)
                throw std::invalid_argument("negative exponent outside q,t");
            if (!out.empty() && out.back().first == v)
                out.back().second += k;
            else
                out.emplace_back(v, k);
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const auto& p) { return p.second == 0; }),
                  out.end());
        e = std::move(out);
    }

    bool is_one() const { return e.empty(); }

    int total_degree() const {
        int d = 0;
        for (const auto& [v, k] : e) d += k;
        return d;
    }

    int exponent(const Var& v) const {
        for (const auto& [u, k] : e)
            if (u == v) return k;
        return 0;
    }

    // (total degree in x/a-kind variables, total degree in y/b-kind variables)
    std::pair<int, int> bidegree() const {
        int dx = 0, dy = 0;
        for (const auto& [v, k] : e) {
            if (is_x_kind(v.kind)) dx += k;
            else if (is_y_kind(v.kind)) dy += k;
        }
        return {dx, dy};
    }

    Monomial times(const Monomial& o) const {
        Monomial r;
        r.e.reserve(e.size() + o.e.size());
        std::size_t i = 0, j = 0;
        while (i < e.size() && j < o.e.size()) {
            if (e[i].first < o.e[j].first) r.e.push_back(e[i++]);
            else if (o.e[j].first < e[i].first) r.e.push_back(o.e[j++]);
            else {
                int k = e[i].second + o.e[j].second;
                if (k != 0) r.e.emplace_back(e[i].first, k);
                ++i, ++j;
            }
        }
        while (i < e.size()) r.e.push_back(e[i++]);
        while (j < o.e.size()) r.e.push_back(o.e[j++]);
        return r;
    }

    // this / o when o divides this (no negative exponents are created)
    bool try_divide(const Monomial& o, Monomial& out) const {
        Monomial r;
        std::size_t i = 0, j = 0;
        while (j < o.e.size()) {
            while (i < e.size() && e[i].first < o.e[j].first) r.e.push_back(e[i++]);
            if (i == e.size() || !(e[i].first == o.e[j].first)) return false;
            int k = e[i].second - o.e[j].second;
            if (k < 0) return false;
            if (k != 0) r.e.emplace_back(e[i].first, k);
            ++i, ++j;
        }
        while (i < e.size()) r.e.push_back(e[i++]);
        out = std::move(r);
        return true;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded-lex term order; ties broken by exponent on the highest-precedence
// variable where the monomials differ.
inline int mono_cmp(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    std::size_t i = 0, j = 0;
    while (i < a.e.size() && j < b.e.size()) {
        if (a.e[i].first < b.e[j].first) {
            // a has positive/negative power on an earlier variable
            return a.e[i].second > 0 ? 1 : -1;
        }
        if (b.e[j].first < a.e[i].first) {
            return b.e[j].second > 0 ? -1 : 1;
        }
        if (a.e[i].second != b.e[j].second)
            return a.e[i].second > b.e[j].second ? 1 : -1;
        ++i, ++j;
    }
    if (i < a.e.size()) return a.e[i].second > 0 ? 1 : -1;
    if (j < b.e.size()) return b.e[j].second > 0 ? -1 : 1;
    return 0;
}

struct MonoGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return mono_cmp(a, b) > 0;
    }
};

// Sparse multivariate polynomial with Rat coefficients.  No zero
// coefficients are stored; the term map is kept in descending graded-lex
// order so begin() is the leading term.
class MPoly {
public:
    using TermMap = std::map<Monomial, Rat, MonoGreater>;

    MPoly() = default;
    explicit MPoly(const Rat& c) {
        if (!c.is_zero()) terms_[Monomial{}] = c;
    }
    MPoly(const Rat& c, const Monomial& m) {
        if (!c.is_zero()) terms_[m] = c;
    }

    static MPoly variable(const Var& v, int exp = 1) {
        return MPoly(Rat(1), Monomial({{v, exp}}));
    }
    static MPoly constant(long c) { return MPoly(Rat(c)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        if (!is_constant()) throw std::logic_error("not a constant polynomial");
        return terms_.begin()->second;
    }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero");
        return terms_.begin()->first;
    }
    const Rat& leading_coeff() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero");
        return terms_.begin()->second;
    }

    Rat coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    int total_degree() const {
        if (terms_.empty()) return -1;
        return terms_.begin()->first.total_degree();
    }

    int degree_in(const Var& v) const {
        int d = 0;
        bool any = false;
        for (const auto& [m, c] : terms_) {
            int e = m.exponent(v);
            if (!any || e > d) d = e;
            any = true;
        }
        return d;
    }

    int min_exponent(const Var& v) const {
        bool any = false;
        int d = 0;
        for (const auto& [m, c] : terms_) {
            int e = m.exponent(v);
            if (!any || e < d) d = e;
            any = true;
        }
        return d;
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MPoly& operator+=(const MPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
    friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }

    MPoly operator-() const {
        MPoly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(ma.times(mb), ca * cb);
        return r;
    }
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }

    MPoly scaled(const Rat& c) const {
        MPoly r;
        if (c.is_zero()) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
        return r;
    }

    MPoly times_monomial(const Monomial& m, const Rat& c = Rat(1)) const {
        MPoly r;
        if (c.is_zero()) return r;
        for (const auto& [mm, k] : terms_) r.terms_.emplace(mm.times(m), k * c);
        return r;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    // Exact division; throws if the division is not exact.
    MPoly divided_exact(const MPoly& d) const {
        if (d.is_zero()) throw std::domain_error("division by zero");
        MPoly q, r = *this;
        while (!r.is_zero()) {
            Monomial qm;
            if (!r.leading_monomial().try_divide(d.leading_monomial(), qm))
                throw std::logic_error("inexact polynomial division");
            Rat qc = r.leading_coeff() / d.leading_coeff();
            q.add_term(qm, qc);
            r -= d.times_monomial(qm, qc);
        }
        return q;
    }

    // gcd of all coefficients (as positive rational) times the sign of the
    // leading coefficient; zero polynomial has content 0.
    Rat content() const {
        if (terms_.empty()) return Rat(0);
        mpz_class g = 0, l = 1;
        for (const auto& [m, c] : terms_) {
            g = gcd_z(g, c.num());
            l = lcm_z(l, c.den());
        }
        Rat r(g, l);
        return leading_coeff().sign() < 0 ? -r : r;
    }

    MPoly primitive_part() const {
        if (terms_.empty()) return MPoly();
        return scaled(Rat(1) / content());
    }

    // Applies var -> var^k (exponent scaling); used for plethystic raising.
    MPoly raise_exponents(VarKind kind, int k) const {
        MPoly r;
        for (const auto& [m, c] : terms_) {
            Monomial m2 = m;
            for (auto& [v, e] : m2.e)
                if (v.kind == kind) e *= k;
            r.add_term(m2, c);
        }
        return r;
    }

    // Substitute 0 for every variable of the given kind.
    MPoly substitute_zero(VarKind kind) const {
        MPoly r;
        for (const auto& [m, c] : terms_) {
            bool has = false;
            for (const auto& [v, e] : m.e)
                if (v.kind == kind) {
                    if (e < 0)
                        throw std::domain_error(
                            "substituting 0 into a negative power");
                    has = true;
                }
            if (!has) r.add_term(m, c);
        }
        return r;
    }

    // Substitute 1 for every variable of the given kind.
    MPoly substitute_one(VarKind kind) const {
        MPoly r;
        for (const auto& [m, c] : terms_) {
            Monomial m2;
            for (const auto& [v, e] : m.e)
                if (v.kind != kind) m2.e.emplace_back(v, e);
            r.add_term(m2, c);
        }
        return r;
    }

    // substitute every variable of kind `from` by the same-index variable of
    // kind `to` (exponents merge)
    MPoly rename_kind(VarKind from, VarKind to) const {
        MPoly r;
        for (const auto& [m, c] : terms_) {
            Monomial m2 = m;
            for (auto& [v, e] : m2.e)
                if (v.kind == from) v.kind = to;
            m2.normalize();
            r.add_term(m2, c);
        }
        return r;
    }

    MPoly swap_kinds(VarKind k1, VarKind k2) const {
        MPoly r;
        for (const auto& [m, c] : terms_) {
            Monomial m2 = m;
            for (auto& [v, e] : m2.e) {
                if (v.kind == k1) v.kind = k2;
                else if (v.kind == k2) v.kind = k1;
            }
            m2.normalize();
            r.add_term(m2, c);
        }
        return r;
    }

    // Rename indices within x and y kinds: i -> perm[i-1] (1-based values).
    MPoly permute_xy(const std::vector<int>& perm) const {
        MPoly r;
        for (const auto& [m, c] : terms_) {
            Monomial m2 = m;
            for (auto& [v, e] : m2.e)
                if (v.kind == VarKind::X || v.kind == VarKind::Y)
                    v.index = static_cast<std::uint32_t>(perm[v.index - 1]);
            m2.normalize();
            r.add_term(m2, c);
        }
        return r;
    }

    bool depends_on_kind(VarKind kind) const {
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.e)
                if (v.kind == kind) return true;
        return false;
    }

private:
    TermMap terms_;
};

inline MPoly operator*(const Rat& c, const MPoly& p) { return p.scaled(c); }

// Canonical text: terms in descending graded-lex, "q^2*t-3/2*q" style.
inline std::string mono_str(const Monomial& m) {
    std::string s;
    for (const auto& [v, k] : m.e) {
        if (!s.empty()) s += "*";
        s += var_name(v);
        if (k != 1) s += "^" + std::to_string(k);
    }
    return s;
}

inline std::string poly_str(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : p.terms()) {
        Rat a = c.abs();
        bool neg = c.sign() < 0;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? "-" : "+";
        }
        if (m.is_one()) {
            s += a.str();
        } else {
            if (!a.is_one()) s += a.str() + "*";
            s += mono_str(m);
        }
    }
    return s;
}

}  // namespace msw

#endif
