#ifndef MSW_MACDONALD_HPP
#define MSW_MACDONALD_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "msw/linalg.hpp"
#include "msw/partition.hpp"
#include "msw/symfunc.hpp"

namespace msw {

// Transformed Macdonald polynomial in the Schur basis: the coefficient of
// s_lambda is Ktilde_{lambda,mu}(q,t).
struct HtildeResult {
    Partition mu;
    std::map<Partition, RatFunc> expansion;
    bool all_polynomial = true;            // every entry reduced to den = 1
    std::vector<Partition> non_polynomial;  // offenders, if any

    RatFunc coeff(const Partition& lambda) const {
        auto it = expansion.find(lambda);
        return it == expansion.end() ? RatFunc() : it->second;
    }

    SymFunc as_symfunc() const {
        SymFunc f;
        f.n = mu.size();
        f.basis = SfBasis::S;
        for (const auto& [l, c] : expansion)
            if (!c.is_zero()) f.coeffs.emplace(l, c);
        return f;
    }
};

// The unique degree-n symmetric function with
//   (1) Htilde in span{ s_lambda[X/(1-q)] : lambda >= mu },
//   (2) Htilde in span{ s_lambda[X/(1-t)] : lambda >= mu' },
//   (3) value 1 at the one-variable specialization.
// Both spanning sets are expressed in Schur coordinates, the two coefficient
// subspaces are intersected exactly over Q(q,t), and the one-dimensional
// intersection is normalized by (3).
inline HtildeResult htilde(const Partition& mu) {
    const int n = mu.size();
    if (n < 1) throw std::invalid_argument("htilde: empty partition");
    const auto parts = enumerate_partitions(n);
    const std::size_t N = parts.size();
    std::map<Partition, int> index;
    for (std::size_t i = 0; i < N; ++i) index[parts[i]] = static_cast<int>(i);

    const Partition muc = conjugate(mu);

    auto span_rows = [&](const Partition& bound, const Alphabet& alpha) {
        std::vector<std::vector<RatFunc>> rows;
        for (const auto& l : parts) {
            if (!dominates(l, bound)) continue;
            SymFunc v = plethystic_eval(SymFunc::single(n, SfBasis::S, l), alpha);
            std::vector<RatFunc> row(N);
            for (const auto& [p, c] : v.coeffs) row[index.at(p)] = c;
            rows.push_back(std::move(row));
        }
        return rows;
    };

    auto rows1 = span_rows(mu, Alphabet::X_over_one_minus_q());
    auto rows2 = span_rows(muc, Alphabet::X_over_one_minus_t());

    // dual constraints of each span, stacked, cut out the intersection
    std::vector<std::vector<RatFunc>> constraints;
    for (auto* rows : {&rows1, &rows2}) {
        Matrix<RatFunc> m(std::move(*rows));
        for (auto& c : kernel_basis(m)) constraints.push_back(std::move(c));
    }
    Matrix<RatFunc> stacked(constraints.size(), N);
    for (std::size_t i = 0; i < constraints.size(); ++i)
        for (std::size_t j = 0; j < N; ++j)
            stacked.at(i, j) = std::move(constraints[i][j]);
    auto inter = kernel_basis(stacked);
    if (inter.size() != 1)
        throw std::runtime_error(
            "characterization failure: intersection dimension " +
            std::to_string(inter.size()) + " for mu=" + mu.str());

    // condition (3): scale so the sum over one-row lambdas of coeff *
    // s_lambda[1] is 1; s_lambda[1] vanishes unless lambda has one part
    std::vector<RatFunc>& v = inter[0];
    RatFunc norm = v[index.at(Partition{std::vector<int>{n}})];
    if (norm.is_zero())
        throw std::runtime_error("characterization failure: normalization zero");

    HtildeResult res;
    res.mu = mu;
    for (std::size_t i = 0; i < N; ++i) {
        if (v[i].is_zero()) continue;
        RatFunc c = v[i] / norm;
        if (!c.is_polynomial()) {
            res.all_polynomial = false;
            res.non_polynomial.push_back(parts[i]);
        }
        res.expansion.emplace(parts[i], std::move(c));
    }
    return res;
}

struct KostkaTable {
    int n;
    std::vector<Partition> partitions;  // reverse-lex, indexes rows and cols
    // entry(lambda, mu) with rows lambda, columns mu
    std::vector<std::vector<RatFunc>> ktilde;

    const RatFunc& at(std::size_t l, std::size_t m) const {
        return ktilde[l][m];
    }
};

inline KostkaTable ktilde_table(int n) {
    if (n < 1) throw std::invalid_argument("ktilde_table: n must be positive");
    KostkaTable kt;
    kt.n = n;
    kt.partitions = enumerate_partitions(n);
    const std::size_t N = kt.partitions.size();
    kt.ktilde.assign(N, std::vector<RatFunc>(N));
    for (std::size_t m = 0; m < N; ++m) {
        HtildeResult h = htilde(kt.partitions[m]);
        for (std::size_t l = 0; l < N; ++l)
            kt.ktilde[l][m] = h.coeff(kt.partitions[l]);
    }
    return kt;
}

// K_{lambda,mu}(q,t) = t^{n(mu)} Ktilde_{lambda,mu}(q, 1/t); the result must
// be an honest polynomial (this encodes the t-degree bound).
struct KColumn {
    Partition mu;
    std::vector<Partition> lambdas;
    std::vector<RatFunc> values;
    bool all_polynomial = true;
};

inline KColumn ktilde_to_k(const Partition& mu, const KostkaTable& table) {
    auto it = std::find(table.partitions.begin(), table.partitions.end(), mu);
    if (it == table.partitions.end())
        throw std::invalid_argument("mu not in table");
    std::size_t col = it - table.partitions.begin();
    const int nm = n_stat(mu);
    RatFunc tpow(MPoly(Rat(1), Monomial({{var_t(), nm}})));

    KColumn out;
    out.mu = mu;
    out.lambdas = table.partitions;
    for (std::size_t l = 0; l < table.partitions.size(); ++l) {
        RatFunc k = tpow * table.at(l, col).invert_t();
        if (!k.is_polynomial()) out.all_polynomial = false;
        out.values.push_back(std::move(k));
    }
    return out;
}

// Positivity scan of a full Ktilde table (Macdonald positivity at this n).
struct PositivityReport {
    int n;
    bool all_positive = true;
    struct Violation {
        Partition lambda, mu;
        std::string offending;  // first bad monomial, as text
    };
    std::vector<Violation> violations;
    bool syt_consistent = true;  // Ktilde(1,1) = #SYT(lambda) throughout
};

inline PositivityReport positivity_report(const KostkaTable& table) {
    PositivityReport rep;
    rep.n = table.n;
    for (std::size_t l = 0; l < table.partitions.size(); ++l)
        for (std::size_t m = 0; m < table.partitions.size(); ++m) {
            const RatFunc& k = table.at(l, m);
            if (!k.is_polynomial()) {
                rep.all_positive = false;
                rep.violations.push_back(
                    {table.partitions[l], table.partitions[m], k.str()});
                continue;
            }
            for (const auto& [mono, c] : k.poly().terms()) {
                if (!c.is_integer() || c.sign() < 0) {
                    rep.all_positive = false;
                    rep.violations.push_back({table.partitions[l],
                                              table.partitions[m],
                                              poly_str(MPoly(c, mono))});
                    break;
                }
            }
            if (k.is_polynomial() &&
                k.eval_one_one() != Rat(syt_count_z(table.partitions[l])))
                rep.syt_consistent = false;
        }
    return rep;
}

inline PositivityReport positivity_report(int n) {
    return positivity_report(ktilde_table(n));
}

// Htilde_mu(x; 0, t): the q = 0 slice (transformed Hall-Littlewood).
inline SymFunc q0_specialization(const Partition& mu) {
    HtildeResult h = htilde(mu);
    SymFunc f;
    f.n = mu.size();
    f.basis = SfBasis::S;
    for (const auto& [l, c] : h.expansion) {
        RatFunc c0 = c.substitute_zero_q();
        if (!c0.is_zero()) f.coeffs.emplace(l, c0);
    }
    return f;
}

// prod_{x in D(mu)} (1 - q^{-a(x)} t^{1+l(x)}) (1 - q^{1+a(x)} t^{-l(x)}),
// as a canonical rational function (the Laurent monomials end up in the
// denominator).
inline RatFunc local_hilbert_denominator(const Partition& mu) {
    if (mu.size() < 1) throw std::invalid_argument("empty partition");
    RatFunc prod(1);
    for (const Cell& c : diagram_cells(mu)) {
        auto [a, l] = arm_leg(mu, c);
        MPoly one = MPoly::constant(1);
        MPoly m1(Rat(1), Monomial({{var_q(), -a}, {var_t(), 1 + l}}));
        MPoly m2(Rat(1), Monomial({{var_q(), 1 + a}, {var_t(), -l}}));
        prod *= RatFunc(one - m1);
        prod *= RatFunc(one - m2);
    }
    return prod;
}

}  // namespace msw

#endif
