#ifndef MSW_GHMODULE_HPP
#define MSW_GHMODULE_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "msw/linalg.hpp"
#include "msw/macdonald.hpp"
#include "msw/partition.hpp"
#include "msw/subspace.hpp"
#include "msw/symfunc.hpp"

namespace msw {

// ---------- permutations ----------

inline std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline int permutation_sign(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

// one representative permutation per cycle type: consecutive cycles
inline std::vector<int> cycle_type_representative(const CycleType& tau) {
    std::vector<int> w(tau.size());
    int start = 0;
    for (int len : tau.parts) {
        for (int i = 0; i < len; ++i)
            w[start + i] = start + 1 + (i + 1) % len;
        start += len;
    }
    return w;
}

// ---------- alternation and Delta determinants ----------

// Theta^eps g = sum_w eps(w) w g for the diagonal action on x,y
inline MPoly alternate(const MPoly& g, int n) {
    MPoly r;
    for (const auto& w : all_permutations(n)) {
        MPoly img = g.permute_xy(w);
        r += permutation_sign(w) > 0 ? img : -img;
    }
    return r;
}

// det(x_i^{p_j} y_i^{q_j}) with columns ordered by the lex sort of the
// cells; a cell (i,j) contributes x^i y^j, so Delta_mu is doubly
// homogeneous of x-degree n(mu) and y-degree n(mu')
inline MPoly delta_D(const std::vector<Cell>& cells_in) {
    std::vector<Cell> cells = cells_in;
    std::sort(cells.begin(), cells.end());
    for (std::size_t i = 0; i + 1 < cells.size(); ++i)
        if (cells[i] == cells[i + 1])
            throw std::invalid_argument("delta_D: repeated cells");
    const int n = static_cast<int>(cells.size());
    MPoly det;
    for (const auto& w : all_permutations(n)) {
        Monomial m;
        for (int j = 0; j < n; ++j) {
            int i = w[j];  // row index substituted into column j
            if (cells[j].row > 0) m.e.emplace_back(var_x(i), cells[j].row);
            if (cells[j].col > 0) m.e.emplace_back(var_y(i), cells[j].col);
        }
        m.normalize();
        det.add_term(m, Rat(permutation_sign(w)));
    }
    return det;
}

inline MPoly delta_mu(const Partition& mu) { return delta_D(diagram_cells(mu)); }

// ---------- bigraded subspaces of C[x,y] ----------

struct BigradedSpace {
    int n = 0;  // number of x variables (= y variables)
    std::map<std::pair<int, int>, RowSpace> slices;

    std::map<std::pair<int, int>, int> dims() const {
        std::map<std::pair<int, int>, int> d;
        for (const auto& [k, s] : slices)
            if (s.rank() > 0) d[k] = s.rank();
        return d;
    }

    int total_dim() const {
        int t = 0;
        for (const auto& [k, s] : slices) t += s.rank();
        return t;
    }

    int dim_at(int r, int s) const {
        auto it = slices.find({r, s});
        return it == slices.end() ? 0 : it->second.rank();
    }
};

namespace gh_detail {

// coordinate vector of a bihomogeneous polynomial in x_1..x_n, y_1..y_n
inline SparseRow poly_to_row(const MPoly& p, const BiSlice& sl, int n) {
    SparseRow row;
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> ex(n, 0), ey(n, 0);
        for (const auto& [v, e] : m.e) {
            if (v.kind == VarKind::X) ex[v.index - 1] = e;
            else if (v.kind == VarKind::Y) ey[v.index - 1] = e;
            else throw std::logic_error("poly_to_row: foreign variable");
        }
        row.push(sl.idx(sl.x.find(ex), sl.y.find(ey)), c);
    }
    row.sort_terms();
    return row;
}

}  // namespace gh_detail

// D_mu = span of all iterated partial derivatives of Delta_mu, organized by
// bidegree.  Bidegrees are processed in decreasing total degree, so each
// slice is final before its derivatives feed the next level.  Slices are
// kept in rref form (traces and closure checks read coordinates off pivots).
class DmuBasis {
public:
    explicit DmuBasis(const Partition& mu)
        : mu_(mu), n_(mu.size()), cache_(n_, n_) {
        MPoly delta = delta_mu(mu_);
        auto [dx, dy] = delta.leading_monomial().bidegree();
        top_ = {dx, dy};
        auto& top_space = slice_space(dx, dy);
        top_space.insert(gh_detail::poly_to_row(delta, cache_.slice(dx, dy), n_));

        for (int d = dx + dy; d >= 1; --d) {
            for (int r = std::min(dx, d); r >= 0; --r) {
                int s = d - r;
                if (s < 0 || s > dy) continue;
                auto it = space_.slices.find({r, s});
                if (it == space_.slices.end() || it->second.rank() == 0)
                    continue;
                differentiate_into(r, s);
            }
        }
    }

    const Partition& mu() const { return mu_; }
    int n() const { return n_; }
    std::pair<int, int> top() const { return top_; }
    const BigradedSpace& space() const { return space_; }
    SliceCache& cache() { return cache_; }

    // every slice is closed under all 2n partials (re-derive and test
    // membership); cheap enough to assert outright
    bool verify_closure() {
        for (const auto& [key, rs] : space_.slices) {
            auto [r, s] = key;
            const BiSlice& here = cache_.slice(r, s);
            for (const auto& row : rs.rows()) {
                for (int i = 0; i < n_; ++i) {
                    if (r > 0) {
                        SparseRow d = derivative_row(row, here, r, s, i, true);
                        if (!d.empty() && !space_.slices.at({r - 1, s}).contains(d))
                            return false;
                    }
                    if (s > 0) {
                        SparseRow d = derivative_row(row, here, r, s, i, false);
                        if (!d.empty() && !space_.slices.at({r, s - 1}).contains(d))
                            return false;
                    }
                }
            }
        }
        return true;
    }

private:
    RowSpace& slice_space(int r, int s) {
        auto it = space_.slices.find({r, s});
        if (it == space_.slices.end())
            it = space_.slices
                     .emplace(std::make_pair(r, s),
                              RowSpace(cache_.slice(r, s).size(), true))
                     .first;
        return it->second;
    }

    SparseRow derivative_row(const SparseRow& row, const BiSlice& here, int r,
                             int s, int i, bool xvar) {
        const BiSlice& target =
            xvar ? cache_.slice(r - 1, s) : cache_.slice(r, s - 1);
        SparseRow out;
        for (const auto& [idx, c] : row.t) {
            auto [ix, iy] = here.split(idx);
            std::vector<int> ex = here.x.exps[ix], ey = here.y.exps[iy];
            if (xvar) {
                if (ex[i] == 0) continue;
                Rat mult(ex[i]);
                --ex[i];
                out.push(target.idx(target.x.find(ex), target.y.find(ey)),
                         c * mult);
            } else {
                if (ey[i] == 0) continue;
                Rat mult(ey[i]);
                --ey[i];
                out.push(target.idx(target.x.find(ex), target.y.find(ey)),
                         c * mult);
            }
        }
        out.sort_terms();
        return out;
    }

    void differentiate_into(int r, int s) {
        const BiSlice& here = cache_.slice(r, s);
        const auto& rows = space_.slices.at({r, s}).rows();
        // rows vector may reallocate while we insert into *other* slices
        // only, so iterating by index over a snapshot size is safe
        for (std::size_t k = 0; k < rows.size(); ++k) {
            SparseRow row = rows[k];
            for (int i = 0; i < n_; ++i) {
                if (r > 0) {
                    SparseRow d = derivative_row(row, here, r, s, i, true);
                    if (!d.empty()) slice_space(r - 1, s).insert(std::move(d));
                }
                if (s > 0) {
                    SparseRow d = derivative_row(row, here, r, s, i, false);
                    if (!d.empty()) slice_space(r, s - 1).insert(std::move(d));
                }
            }
        }
    }

    Partition mu_;
    int n_;
    SliceCache cache_;
    std::pair<int, int> top_;
    BigradedSpace space_;
};

inline BigradedSpace dmu_basis(const Partition& mu) {
    return DmuBasis(mu).space();
}

// ---------- bigraded Frobenius series ----------

struct FrobeniusSeries {
    Partition mu;
    // per-bidegree slice characters as Schur expansions with integer coeffs
    std::map<std::pair<int, int>, SymFunc> slices;
    bool multiplicities_nonneg = true;

    // flattened: coefficient of s_lambda is sum over (r,s) of t^r q^s times
    // the multiplicity, with t tracking x-degree and q tracking y-degree
    SymFunc flattened(int n) const {
        SymFunc f;
        f.n = n;
        f.basis = SfBasis::S;
        for (const auto& [key, sf] : slices) {
            auto [r, s] = key;
            MPoly weight(Rat(1), Monomial({{var_t(), r}, {var_q(), s}}));
            for (const auto& [l, c] : sf.coeffs) f.add(l, c * RatFunc(weight));
        }
        return f;
    }
};

// character of each bidegree slice of D_mu via exact traces of one
// representative permutation per cycle type
inline FrobeniusSeries bigraded_frobenius(const Partition& mu) {
    DmuBasis basis(mu);
    const int n = basis.n();
    FrobeniusSeries out;
    out.mu = mu;

    const auto taus = enumerate_partitions(n);
    CharacterTable ct = character_table(n);

    for (const auto& [key, rs] : basis.space().slices) {
        auto [r, s] = key;
        if (rs.rank() == 0) continue;
        const BiSlice& sl = basis.cache().slice(r, s);

        // trace of each cycle-type representative on the slice
        std::vector<Rat> traces;
        for (const auto& tau : taus) {
            std::vector<int> w = cycle_type_representative(tau);
            Rat tr(0);
            for (int k = 0; k < rs.rank(); ++k) {
                // permute coordinates of basis row k
                SparseRow img;
                for (const auto& [idx, c] : rs.rows()[k].t) {
                    auto [ix, iy] = sl.split(idx);
                    const auto& ex = sl.x.exps[ix];
                    const auto& ey = sl.y.exps[iy];
                    std::vector<int> px(n, 0), py(n, 0);
                    for (int i = 0; i < n; ++i) {
                        px[w[i] - 1] = ex[i];
                        py[w[i] - 1] = ey[i];
                    }
                    img.push(sl.idx(sl.x.find(px), sl.y.find(py)), c);
                }
                img.sort_terms();
                // w-stability of the slice is forced by S_n-invariance of
                // D_mu; coordinates() throws if that ever fails
                std::vector<Rat> coords = rs.coordinates(img);
                tr += coords[k];
            }
            traces.push_back(tr);
        }

        // Schur multiplicities: <chi^lambda, ch> = sum_tau tr(tau)
        // chi^lambda(tau) / z_tau
        SymFunc sf;
        sf.n = n;
        sf.basis = SfBasis::S;
        for (std::size_t l = 0; l < taus.size(); ++l) {
            Rat mult(0);
            for (std::size_t t = 0; t < taus.size(); ++t)
                mult += traces[t] * Rat(ct.table[l][t]) / Rat(z_tau(taus[t]));
            if (mult.is_zero()) continue;
            if (!mult.is_integer() || mult.sign() < 0)
                out.multiplicities_nonneg = false;
            sf.coeffs.emplace(taus[l], RatFunc(mult));
        }
        out.slices.emplace(key, std::move(sf));
    }
    return out;
}

// ---------- F = Htilde verification ----------

struct FhReport {
    Partition mu;
    bool equal = true;
    // lambda -> (frobenius coefficient, htilde coefficient) where they differ
    std::map<Partition, std::pair<RatFunc, RatFunc>> diffs;
};

inline FhReport verify_f_equals_h(const Partition& mu) {
    FhReport rep;
    rep.mu = mu;
    SymFunc f = bigraded_frobenius(mu).flattened(mu.size());
    HtildeResult h = htilde(mu);
    std::set<Partition> keys;
    for (const auto& [l, c] : f.coeffs) keys.insert(l);
    for (const auto& [l, c] : h.expansion) keys.insert(l);
    for (const auto& l : keys) {
        RatFunc lhs = f.coeff(l), rhs = h.coeff(l);
        if (!(lhs == rhs)) {
            rep.equal = false;
            rep.diffs.emplace(l, std::make_pair(lhs, rhs));
        }
    }
    return rep;
}

// ---------- apolarity ideal J_mu ----------

// J_mu slice = orthogonal complement of the D_mu slice under the pairing
// <p, f> = (p(d) f)(0), whose Gram matrix on monomials is diagonal with
// factorial weights.
class JmuAnnihilator {
public:
    JmuAnnihilator(const Partition& mu, std::pair<int, int> cutoff)
        : basis_(mu), cutoff_(cutoff) {
        auto [tx, ty] = basis_.top();
        if (cutoff.first < tx || cutoff.second < ty)
            throw std::invalid_argument(
                "cutoff below the top bidegree of Delta_mu");
        for (int r = 0; r <= cutoff.first; ++r)
            for (int s = 0; s <= cutoff.second; ++s) build_slice(r, s);
    }

    const BigradedSpace& space() const { return space_; }
    DmuBasis& dmu() { return basis_; }

    int quotient_dim(int r, int s) const {
        // dim C[x,y]_{r,s} / J_mu slice = dim of the D_mu slice
        auto it = space_.slices.find({r, s});
        if (it == space_.slices.end()) return 0;
        int full = it->second.ncols();
        return full - it->second.rank();
    }

private:
    void build_slice(int r, int s) {
        const BiSlice& sl = basis_.cache().slice(r, s);
        const int N = sl.size();
        RowSpace out(N, true);
        auto it = basis_.space().slices.find({r, s});
        if (it == basis_.space().slices.end() || it->second.rank() == 0) {
            // D slice is zero: J is everything
            for (int i = 0; i < N; ++i) {
                SparseRow v;
                v.push(i, Rat(1));
                out.insert(std::move(v));
            }
        } else {
            // weights: product of factorials of the exponents
            std::vector<Rat> w(N, Rat(1));
            for (int ix = 0; ix < sl.x.size(); ++ix)
                for (int iy = 0; iy < sl.y.size(); ++iy) {
                    mpz_class f = 1;
                    for (int e : sl.x.exps[ix]) f *= factorial_z(e);
                    for (int e : sl.y.exps[iy]) f *= factorial_z(e);
                    w[sl.idx(ix, iy)] = Rat(f);
                }
            // scale D rows entrywise by the weights, then take the kernel
            RowSpace scaled(N, true);
            for (const auto& row : it->second.rows()) {
                SparseRow v;
                for (const auto& [col, c] : row.t) v.push(col, c * w[col]);
                scaled.insert(std::move(v));
            }
            for (auto& k : scaled.annihilator()) out.insert(std::move(k));
        }
        space_.slices.emplace(std::make_pair(r, s), std::move(out));
    }

    DmuBasis basis_;
    std::pair<int, int> cutoff_;
    BigradedSpace space_;
};

inline BigradedSpace jmu_annihilator(const Partition& mu,
                                     std::pair<int, int> cutoff) {
    return JmuAnnihilator(mu, cutoff).space();
}

// ---------- diagonal coinvariants ----------

struct CoinvariantDims {
    int n = 0;
    std::map<std::pair<int, int>, int> dims;  // nonzero quotient dims
    mpz_class total = 0;
};

// C[x,y] / (ideal generated by the polarized power sums p_{h,k}, h+k >= 1).
// Per-slice linear algebra; a slice whose quotient vanishes forces all
// componentwise-larger slices to vanish, so only the staircase of live
// slices is ever row-reduced.  Degrees are bounded by C(n,2) in each
// variable set because the one-set coinvariant ring dies there.
inline CoinvariantDims diagonal_coinvariants_dims(int n) {
    if (n < 1 || n > 4)
        throw std::invalid_argument(
            "diagonal coinvariants supported for 1 <= n <= 4");
    CoinvariantDims out;
    out.n = n;
    SliceCache cache(n, n);
    const int bound = n * (n - 1) / 2;

    auto pol_power_sum = [&](int h, int k) {
        MPoly p;
        for (int i = 1; i <= n; ++i) {
            Monomial m;
            if (h > 0) m.e.emplace_back(var_x(i), h);
            if (k > 0) m.e.emplace_back(var_y(i), k);
            m.normalize();
            p.add_term(m, Rat(1));
        }
        return p;
    };

    std::map<std::pair<int, int>, RowSpace> ideal;
    std::set<std::pair<int, int>> full;

    auto is_full = [&](int r, int s) {
        return r >= 0 && s >= 0 && full.count({r, s}) > 0;
    };

    for (int r = 0; r <= bound; ++r) {
        for (int s = 0; s <= bound; ++s) {
            if (is_full(r - 1, s) || is_full(r, s - 1)) {
                full.insert({r, s});
                continue;
            }
            const BiSlice& sl = cache.slice(r, s);
            RowSpace rs(sl.size(), false);
            // variable multiples of the two parent slices
            for (int par = 0; par < 2; ++par) {
                int pr = par == 0 ? r - 1 : r;
                int ps = par == 0 ? s : s - 1;
                if (pr < 0 || ps < 0) continue;
                auto it = ideal.find({pr, ps});
                if (it == ideal.end()) continue;
                const BiSlice& psl = cache.slice(pr, ps);
                for (const auto& row : it->second.rows()) {
                    for (int i = 0; i < n; ++i) {
                        SparseRow v;
                        for (const auto& [idx, c] : row.t) {
                            auto [ix, iy] = psl.split(idx);
                            std::vector<int> ex = psl.x.exps[ix];
                            std::vector<int> ey = psl.y.exps[iy];
                            if (par == 0) ++ex[i];
                            else ++ey[i];
                            v.push(sl.idx(sl.x.find(ex), sl.y.find(ey)), c);
                        }
                        v.sort_terms();
                        rs.insert(std::move(v));
                    }
                }
            }
            if (r + s >= 1 && r + s <= n)
                rs.insert(gh_detail::poly_to_row(pol_power_sum(r, s), sl, n));
            int qdim = sl.size() - rs.rank();
            if (qdim == 0) {
                full.insert({r, s});
            } else {
                out.dims[{r, s}] = qdim;
                out.total += qdim;
            }
            ideal.emplace(std::make_pair(r, s), std::move(rs));
        }
    }
    return out;
}

}  // namespace msw

#endif
