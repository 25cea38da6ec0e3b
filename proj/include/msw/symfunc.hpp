#ifndef MSW_SYMFUNC_HPP
#define MSW_SYMFUNC_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "msw/characters.hpp"
#include "msw/linalg.hpp"
#include "msw/partition.hpp"
#include "msw/ratfunc.hpp"

namespace msw {

enum class SfBasis { M, E, H, P, S };

inline char basis_letter(SfBasis b) {
    switch (b) {
        case SfBasis::M: return 'm';
        case SfBasis::E: return 'e';
        case SfBasis::H: return 'h';
        case SfBasis::P: return 'p';
        case SfBasis::S: return 's';
    }
    return '?';
}

// Homogeneous symmetric function of degree n over Q(q,t), expressed in a
// tagged basis.  No zero coefficients are stored.
struct SymFunc {
    int n = 0;
    SfBasis basis = SfBasis::S;
    std::map<Partition, RatFunc> coeffs;

    static SymFunc single(int n, SfBasis basis, const Partition& lambda,
                          const RatFunc& c = RatFunc(1)) {
        if (lambda.size() != n) throw std::invalid_argument("degree mismatch");
        SymFunc f;
        f.n = n;
        f.basis = basis;
        if (!c.is_zero()) f.coeffs[lambda] = c;
        return f;
    }

    RatFunc coeff(const Partition& lambda) const {
        auto it = coeffs.find(lambda);
        return it == coeffs.end() ? RatFunc() : it->second;
    }

    void add(const Partition& lambda, const RatFunc& c) {
        if (c.is_zero()) return;
        auto it = coeffs.find(lambda);
        if (it == coeffs.end()) {
            coeffs.emplace(lambda, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }

    SymFunc scaled(const RatFunc& c) const {
        SymFunc r;
        r.n = n;
        r.basis = basis;
        if (c.is_zero()) return r;
        for (const auto& [l, v] : coeffs) r.coeffs.emplace(l, v * c);
        return r;
    }

    friend SymFunc operator+(const SymFunc& a, const SymFunc& b) {
        if (a.n != b.n || a.basis != b.basis)
            throw std::invalid_argument("symfunc mismatch");
        SymFunc r = a;
        for (const auto& [l, v] : b.coeffs) r.add(l, v);
        return r;
    }
    friend SymFunc operator-(const SymFunc& a, const SymFunc& b) {
        return a + b.scaled(RatFunc(-1));
    }
    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        return a.n == b.n && a.basis == b.basis && a.coeffs == b.coeffs;
    }
};

namespace sf_detail {

// z-coefficient expansions in the power-sum basis, with plain rational
// coefficients (basis-change matrices live over Q).
using PExp = std::map<Partition, Rat>;

inline Partition concat_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts;
    parts.insert(parts.end(), b.parts.begin(), b.parts.end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    Partition p;
    p.parts = std::move(parts);
    return p;
}

inline PExp pexp_mul(const PExp& a, const PExp& b) {
    PExp r;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b) {
            Partition p = concat_parts(pa, pb);
            Rat c = ca * cb;
            auto it = r.find(p);
            if (it == r.end()) r.emplace(std::move(p), c);
            else it->second += c;
        }
    return r;
}

// e_k and h_k in the power-sum basis
inline PExp ek_in_p(int k) {
    PExp r;
    for (const auto& tau : enumerate_partitions(k)) {
        Rat c(1);
        c /= Rat(z_tau(tau));
        if ((k - tau.length()) % 2 != 0) c = -c;
        r.emplace(tau, c);
    }
    return r;
}

inline PExp hk_in_p(int k) {
    PExp r;
    for (const auto& tau : enumerate_partitions(k))
        r.emplace(tau, Rat(1) / Rat(z_tau(tau)));
    return r;
}

// expansion of p_tau in the monomial basis, via iterated multiplication by
// p_k: coeff of m_nu in m_lambda p_k is the multiplicity in nu of the part
// that grew
inline PExp mul_by_pk_in_m(const PExp& cur, int k) {
    PExp r;
    for (const auto& [lambda, c] : cur) {
        // grow an existing part value a (each distinct value once) or append k
        std::vector<int> values = lambda.parts;
        values.erase(std::unique(values.begin(), values.end()), values.end());
        values.push_back(0);
        for (int a : values) {
            std::vector<int> parts = lambda.parts;
            if (a > 0) {
                auto it = std::find(parts.begin(), parts.end(), a);
                *it = a + k;
            } else {
                parts.push_back(k);
            }
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            Partition nu;
            nu.parts = std::move(parts);
            int mult = static_cast<int>(
                std::count(nu.parts.begin(), nu.parts.end(), a + k));
            Rat add = c * Rat(mult);
            auto it = r.find(nu);
            if (it == r.end()) r.emplace(std::move(nu), add);
            else it->second += add;
        }
    }
    return r;
}

inline PExp ptau_in_m(const Partition& tau) {
    PExp cur;
    cur.emplace(Partition{}, Rat(1));
    for (int k : tau.parts) cur = mul_by_pk_in_m(cur, k);
    return cur;
}

// Per-degree transition tables.  Everything is computed on demand; the
// object is local to a call, so the module stays free of shared state.
struct Tables {
    int n;
    std::vector<Partition> parts;   // reverse-lex order
    std::map<Partition, int> index;
    CharacterTable ct;

    explicit Tables(int n_) : n(n_), parts(enumerate_partitions(n_)) {
        for (std::size_t i = 0; i < parts.size(); ++i) index[parts[i]] = (int)i;
        ct = character_table(n);
    }

    std::size_t dim() const { return parts.size(); }

    // rows: lambda, cols: tau -> coefficient of p_tau in basis_lambda
    std::vector<std::vector<Rat>> basis_in_p(SfBasis b) const {
        std::vector<std::vector<Rat>> m(dim(), std::vector<Rat>(dim(), Rat(0)));
        for (std::size_t l = 0; l < dim(); ++l) {
            if (b == SfBasis::S) {
                for (std::size_t t = 0; t < dim(); ++t)
                    m[l][t] = Rat(ct.table[l][t]) / Rat(z_tau(parts[t]));
            } else if (b == SfBasis::E || b == SfBasis::H) {
                PExp prod;
                prod.emplace(Partition{}, Rat(1));
                for (int k : parts[l].parts)
                    prod = pexp_mul(prod, b == SfBasis::E ? ek_in_p(k)
                                                          : hk_in_p(k));
                for (const auto& [tau, c] : prod) m[l][index.at(tau)] = c;
            } else {
                throw std::logic_error("basis_in_p: unsupported");
            }
        }
        return m;
    }

    // rows: tau, cols: nu -> coefficient of m_nu in p_tau
    std::vector<std::vector<Rat>> p_in_m() const {
        std::vector<std::vector<Rat>> m(dim(), std::vector<Rat>(dim(), Rat(0)));
        for (std::size_t t = 0; t < dim(); ++t)
            for (const auto& [nu, c] : ptau_in_m(parts[t]))
                m[t][index.at(nu)] = c;
        return m;
    }
};

inline std::vector<std::vector<Rat>> invert_rat(
    const std::vector<std::vector<Rat>>& a) {
    const std::size_t n = a.size();
    Matrix<Rat> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = a[i][j];
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<Rat> e(n, Rat(0));
        e[col] = Rat(1);
        auto s = solve_linear(m, e);
        if (s.status != LinearSolution<Rat>::Status::Unique)
            throw std::logic_error("transition matrix not invertible");
        for (std::size_t i = 0; i < n; ++i) inv[i][col] = s.solution[i];
    }
    return inv;
}

// y = M^T x with Rat matrix and RatFunc vectors
inline std::vector<RatFunc> apply_transposed(
    const std::vector<std::vector<Rat>>& m, const std::vector<RatFunc>& x) {
    const std::size_t n = m.size();
    std::vector<RatFunc> y(n);
    for (std::size_t l = 0; l < n; ++l) {
        if (x[l].is_zero()) continue;
        for (std::size_t t = 0; t < n; ++t) {
            if (m[l][t].is_zero()) continue;
            y[t] += x[l] * RatFunc(m[l][t]);
        }
    }
    return y;
}

inline std::vector<RatFunc> coeff_vector(const SymFunc& f, const Tables& tb) {
    std::vector<RatFunc> v(tb.dim());
    for (const auto& [l, c] : f.coeffs) v[tb.index.at(l)] = c;
    return v;
}

inline SymFunc from_vector(int n, SfBasis b, const std::vector<RatFunc>& v,
                           const Tables& tb) {
    SymFunc f;
    f.n = n;
    f.basis = b;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) f.coeffs.emplace(tb.parts[i], v[i]);
    return f;
}

}  // namespace sf_detail

// Exact basis conversion; round trips are identities.
inline SymFunc convert_basis(const SymFunc& f, SfBasis target) {
    using namespace sf_detail;
    if (f.basis == target) return f;
    if (f.n == 0) {
        SymFunc r = f;
        r.basis = target;
        return r;
    }
    Tables tb(f.n);
    std::vector<RatFunc> v = coeff_vector(f, tb);

    // to the power-sum basis
    std::vector<RatFunc> p;
    switch (f.basis) {
        case SfBasis::P: p = std::move(v); break;
        case SfBasis::S:
        case SfBasis::E:
        case SfBasis::H:
            p = apply_transposed(tb.basis_in_p(f.basis), v);
            break;
        case SfBasis::M: {
            // m-coords are R^T p-coords, so p = (R^T)^{-1} m = (R^{-1})^T m
            p = apply_transposed(invert_rat(tb.p_in_m()), v);
            break;
        }
    }

    // from the power-sum basis
    std::vector<RatFunc> out;
    switch (target) {
        case SfBasis::P: out = std::move(p); break;
        case SfBasis::S: {
            // coeff of s_lambda = sum_tau chi^lambda(tau) p_tau-coeff
            out.assign(tb.dim(), RatFunc());
            for (std::size_t t = 0; t < tb.dim(); ++t) {
                if (p[t].is_zero()) continue;
                for (std::size_t l = 0; l < tb.dim(); ++l)
                    if (tb.ct.table[l][t] != 0)
                        out[l] += p[t] * RatFunc(Rat(tb.ct.table[l][t]));
            }
            break;
        }
        case SfBasis::E:
        case SfBasis::H: {
            auto m = tb.basis_in_p(target);
            std::vector<std::vector<Rat>> mt(tb.dim(),
                                             std::vector<Rat>(tb.dim()));
            for (std::size_t i = 0; i < tb.dim(); ++i)
                for (std::size_t j = 0; j < tb.dim(); ++j) mt[i][j] = m[j][i];
            auto inv = invert_rat(mt);
            // out = inv * p, but apply_transposed computes M^T x; transpose
            std::vector<std::vector<Rat>> invt(tb.dim(),
                                               std::vector<Rat>(tb.dim()));
            for (std::size_t i = 0; i < tb.dim(); ++i)
                for (std::size_t j = 0; j < tb.dim(); ++j)
                    invt[i][j] = inv[j][i];
            out = apply_transposed(invt, p);
            break;
        }
        case SfBasis::M: {
            out = apply_transposed(tb.p_in_m(), p);
            break;
        }
    }
    return sf_detail::from_vector(f.n, target, out, tb);
}

// Formal alphabet c(q,t) * X; composition of alphabets multiplies scalars.
struct Alphabet {
    RatFunc scalar;  // c(q,t)

    static Alphabet X() { return {RatFunc(1)}; }
    static Alphabet X_over_one_minus_q() {
        return {RatFunc(MPoly::constant(1),
                        MPoly::constant(1) - MPoly::variable(var_q()))};
    }
    static Alphabet X_over_one_minus_t() {
        return {RatFunc(MPoly::constant(1),
                        MPoly::constant(1) - MPoly::variable(var_t()))};
    }
    static Alphabet X_times_one_minus_q() {
        return {RatFunc(MPoly::constant(1) - MPoly::variable(var_q()))};
    }
};

// f[c(q,t) X]: p_k picks up the factor c(q^k, t^k).  Input in any basis;
// result in the Schur basis.
inline SymFunc plethystic_eval(const SymFunc& f, const Alphabet& a) {
    SymFunc p = convert_basis(f, SfBasis::P);
    SymFunc scaledp;
    scaledp.n = p.n;
    scaledp.basis = SfBasis::P;
    for (const auto& [tau, c] : p.coeffs) {
        RatFunc mult(1);
        for (int k : tau.parts) mult *= a.scalar.raised(k);
        scaledp.add(tau, c * mult);
    }
    return convert_basis(scaledp, SfBasis::S);
}

// f[1]: one-variable principal specialization, via p_k[1] = 1.
inline RatFunc principal_value_at_one(const SymFunc& f) {
    SymFunc p = convert_basis(f, SfBasis::P);
    RatFunc v;
    for (const auto& [tau, c] : p.coeffs) v += c;
    return v;
}

// product of two symmetric functions (through the power-sum basis)
inline SymFunc symfunc_mul(const SymFunc& f, const SymFunc& g) {
    SymFunc fp = convert_basis(f, SfBasis::P);
    SymFunc gp = convert_basis(g, SfBasis::P);
    SymFunc r;
    r.n = f.n + g.n;
    r.basis = SfBasis::P;
    for (const auto& [pa, ca] : fp.coeffs)
        for (const auto& [pb, cb] : gp.coeffs)
            r.add(sf_detail::concat_parts(pa, pb), ca * cb);
    return r;
}

}  // namespace msw

#endif
