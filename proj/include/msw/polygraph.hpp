#ifndef MSW_POLYGRAPH_HPP
#define MSW_POLYGRAPH_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "msw/ghmodule.hpp"
#include "msw/linalg.hpp"
#include "msw/mpoly.hpp"
#include "msw/subspace.hpp"

namespace msw {

// ---------- arrangement specifications ----------

// V(x_j : j in T) ∩ W_f, in coordinates x_1..x_n, y_1..y_n, a_1..a_l,
// b_1..b_l; W_f is cut out by a_i - x_{f(i)}, b_i - y_{f(i)}.
struct PolyComponent {
    std::vector<int> f;  // size l, values in 1..n
    std::vector<int> T;  // strictly increasing subset of 1..n
};

struct ArrangementSpec {
    int n = 0, l = 0;
    std::vector<PolyComponent> comps;
};

inline std::vector<std::vector<int>> all_functions(int l, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> f(l, 1);
    for (;;) {
        out.push_back(f);
        int i = 0;
        while (i < l && f[i] == n) f[i++] = 1;
        if (i == l) break;
        ++f[i];
    }
    if (l == 0) out.assign(1, {});
    return out;
}

inline ArrangementSpec z_spec(int n, int l) {
    ArrangementSpec s;
    s.n = n;
    s.l = l;
    for (auto& f : all_functions(l, n)) s.comps.push_back({f, {}});
    return s;
}

// Y(m,r,k): components V(x_j : j in T) ∩ W_f over |T ∩ [r]\f([k])| >= m.
// Only inclusion-maximal subspaces matter, i.e. minimal T: the m-subsets of
// [r]\f([k]).  m <= 0 degenerates to Z(n,l); an empty component list is the
// empty arrangement.
inline ArrangementSpec y_arrangement_spec(int n, int l, int m, int r, int k) {
    if (r < 0 || r > n || k < 0 || k > l)
        throw std::invalid_argument("y_arrangement_spec: bad r or k");
    if (m <= 0) return z_spec(n, l);
    ArrangementSpec s;
    s.n = n;
    s.l = l;
    for (auto& f : all_functions(l, n)) {
        std::vector<int> pool;
        for (int j = 1; j <= r; ++j) {
            bool hit = false;
            for (int i = 0; i < k; ++i)
                if (f[i] == j) { hit = true; break; }
            if (!hit) pool.push_back(j);
        }
        if (static_cast<int>(pool.size()) < m) continue;
        std::vector<int> pick(m);
        auto rec = [&](auto&& self, int from, int depth) -> void {
            if (depth == m) {
                s.comps.push_back({f, pick});
                return;
            }
            for (std::size_t i = from; i < pool.size(); ++i) {
                pick[depth] = pool[i];
                self(self, static_cast<int>(i) + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
    }
    return s;
}

// ---------- the evaluation representation of R = O(arrangement) ----------
//
// R embeds into the direct sum over components of k[x,y]/(x_T); a slice of R
// is the row space of the evaluation map on ambient monomials.  All ranks,
// quotients and sub-arrangement ideals are computed inside these component
// coordinates, which stay small even when the ambient ideal slices are huge.
class PolygraphEngine {
public:
    PolygraphEngine(ArrangementSpec spec, int Dx, int Dy,
                    bool keep_bases = true)
        : spec_(std::move(spec)), Dx_(Dx), Dy_(Dy),
          ambient_(spec_.n + spec_.l, spec_.n + spec_.l),
          comp_(spec_.n, spec_.n) {
        for (int dy = 0; dy <= Dy_; ++dy) {
            for (int dx = 0; dx <= Dx_; ++dx) build_slice(dx, dy);
            if (!keep_bases && dy >= 2) {
                for (int dx = 0; dx <= Dx_; ++dx) slices_.erase({dx, dy - 2});
            }
        }
        if (!keep_bases) {
            // keep nothing but the tables
            slices_.clear();
        }
    }

    const ArrangementSpec& spec() const { return spec_; }
    int Dx() const { return Dx_; }
    int Dy() const { return Dy_; }
    int ncomps() const { return static_cast<int>(spec_.comps.size()); }

    int block_size(int dx, int dy) {
        const BiSlice& sl = comp_.slice(dx, dy);
        return sl.size();
    }
    int ncols(int dx, int dy) { return ncomps() * block_size(dx, dy); }

    int r_dim(int dx, int dy) const { return rdims_.at({dx, dy}); }
    int y_quotient_dim(int dx, int dy) const { return yquot_.at({dx, dy}); }
    const std::map<std::pair<int, int>, int>& r_dims() const { return rdims_; }
    const std::map<std::pair<int, int>, int>& y_quotients() const {
        return yquot_;
    }

    const RowSpace& r_slice(int dx, int dy) const {
        auto it = slices_.find({dx, dy});
        if (it == slices_.end())
            throw std::logic_error("slice bases were not retained");
        return it->second;
    }

    // evaluation of a bihomogeneous ambient polynomial in component coords
    SparseRow phi(const MPoly& p, int dx, int dy) {
        SparseRow out;
        for (const auto& [mono, c] : p.terms()) {
            auto [mx, my] = mono.bidegree();
            if (mx != dx || my != dy)
                throw std::invalid_argument("phi: wrong bidegree");
            for (int ci = 0; ci < ncomps(); ++ci) {
                int idx = image_index(mono, ci, dx, dy);
                if (idx >= 0) out.push(idx, c);
            }
        }
        out.sort_terms();
        return out;
    }

    // inside-R ideal slice of a sub-arrangement: elements of the R slice
    // whose evaluation vanishes on every component of `sub`
    RowSpace sub_ideal_slice(const ArrangementSpec& sub, int dx, int dy) {
        const RowSpace& base = r_slice(dx, dy);
        std::vector<int> cols = vanishing_columns(sub, dx, dy);
        const int k = base.rank();
        RowSpace out(ncols(dx, dy), false);
        if (k == 0) return out;
        // kernel of the restriction of the basis matrix to those columns
        Matrix<Rat> m(cols.size(), k);
        for (std::size_t ci = 0; ci < cols.size(); ++ci)
            for (int r = 0; r < k; ++r)
                m.at(ci, r) = base.rows()[r].coeff_at(cols[ci]);
        for (const auto& combo : kernel_basis(m)) {
            SparseRow v;
            for (int r = 0; r < k; ++r) {
                if (combo[r].is_zero()) continue;
                for (const auto& [col, c] : base.rows()[r].t)
                    v.push(col, c * combo[r]);
            }
            v.sort_terms();
            out.insert(std::move(v));
        }
        return out;
    }

    // multiply a component-coordinate row by x_i or y_i (1-based i <= n)
    SparseRow row_times_xy(const SparseRow& row, int dx, int dy, bool xvar,
                           int i) {
        const BiSlice& from = comp_.slice(dx, dy);
        const BiSlice& to =
            xvar ? comp_.slice(dx + 1, dy) : comp_.slice(dx, dy + 1);
        const int bs_from = from.size();
        const int bs_to = to.size();
        SparseRow out;
        for (const auto& [idx, c] : row.t) {
            int ci = idx / bs_from, loc = idx % bs_from;
            auto [ix, iy] = from.split(loc);
            std::vector<int> e =
                xvar ? from.x.exps[ix] : from.y.exps[iy];
            ++e[i - 1];
            int nloc = xvar ? to.idx(to.x.find(e), iy)
                            : to.idx(ix, to.y.find(e));
            out.push(ci * bs_to + nloc, c);
        }
        out.sort_terms();
        return out;
    }

private:
    int image_index(const Monomial& mono, int ci, int dx, int dy) {
        const PolyComponent& comp = spec_.comps[ci];
        const int n = spec_.n;
        std::vector<int> ex(n, 0), ey(n, 0);
        for (const auto& [v, e] : mono.e) {
            switch (v.kind) {
                case VarKind::X: ex[v.index - 1] += e; break;
                case VarKind::Y: ey[v.index - 1] += e; break;
                case VarKind::A: ex[comp.f[v.index - 1] - 1] += e; break;
                case VarKind::B: ey[comp.f[v.index - 1] - 1] += e; break;
                default:
                    throw std::invalid_argument("phi: foreign variable");
            }
        }
        for (int j : comp.T)
            if (ex[j - 1] > 0) return -1;  // dies in k[x,y]/(x_T)
        const BiSlice& sl = comp_.slice(dx, dy);
        return ci * sl.size() + sl.idx(sl.x.find(ex), sl.y.find(ey));
    }

    std::vector<int> vanishing_columns(const ArrangementSpec& sub, int dx,
                                       int dy) {
        // v vanishes on V(x_T) ∩ W_f iff the f-block coordinates on
        // monomials with no x_j (j in T) support are zero
        std::map<std::vector<int>, int> comp_of_f;
        for (int ci = 0; ci < ncomps(); ++ci) {
            if (!spec_.comps[ci].T.empty())
                throw std::logic_error("sub_ideal_slice needs a Z base spec");
            comp_of_f[spec_.comps[ci].f] = ci;
        }
        const BiSlice& sl = comp_.slice(dx, dy);
        std::set<int> cols;
        for (const auto& comp : sub.comps) {
            auto it = comp_of_f.find(comp.f);
            if (it == comp_of_f.end())
                throw std::logic_error("sub component not in base spec");
            int ci = it->second;
            for (int ix = 0; ix < sl.x.size(); ++ix) {
                bool avoids = true;
                for (int j : comp.T)
                    if (sl.x.exps[ix][j - 1] > 0) { avoids = false; break; }
                if (!avoids) continue;
                for (int iy = 0; iy < sl.y.size(); ++iy)
                    cols.insert(ci * sl.size() + sl.idx(ix, iy));
            }
        }
        return std::vector<int>(cols.begin(), cols.end());
    }

    void build_slice(int dx, int dy) {
        const BiSlice& amb = ambient_.slice(dx, dy);
        const BiSlice& sl = comp_.slice(dx, dy);
        const int n = spec_.n, l = spec_.l;
        const int bs = sl.size();
        const int nc = ncomps() * bs;
        RowSpace rs(nc, false);

        // evaluate every ambient monomial; each row has one unit entry per
        // live component
        std::vector<int> ex(n, 0), ey(n, 0);
        for (int axi = 0; axi < amb.x.size() && rs.rank() < nc; ++axi) {
            const std::vector<int>& ax = amb.x.exps[axi];
            for (int ayi = 0; ayi < amb.y.size(); ++ayi) {
                const std::vector<int>& ay = amb.y.exps[ayi];
                SparseRow row;
                for (int ci = 0; ci < ncomps(); ++ci) {
                    const PolyComponent& comp = spec_.comps[ci];
                    for (int j = 0; j < n; ++j) { ex[j] = ax[j]; ey[j] = ay[j]; }
                    for (int i = 0; i < l; ++i) {
                        ex[comp.f[i] - 1] += ax[n + i];
                        ey[comp.f[i] - 1] += ay[n + i];
                    }
                    bool dead = false;
                    for (int j : comp.T)
                        if (ex[j - 1] > 0) { dead = true; break; }
                    if (dead) continue;
                    row.push(ci * bs + sl.idx(sl.x.find(ex), sl.y.find(ey)),
                             Rat(1));
                }
                row.sort_terms();
                if (!row.empty()) rs.insert(std::move(row));
                if (rs.rank() == nc) break;
            }
        }

        rdims_[{dx, dy}] = rs.rank();

        // quotient by (y_1..y_n) R: subtract the rank of the y-multiples of
        // the previous y-degree slice
        int yrank = 0;
        if (dy > 0) {
            auto it = slices_.find({dx, dy - 1});
            if (it == slices_.end())
                throw std::logic_error("missing parent slice");
            RowSpace ys(nc, false);
            for (const auto& prow : it->second.rows()) {
                for (int i = 1; i <= n; ++i) {
                    SparseRow v = row_times_xy(prow, dx, dy - 1, false, i);
                    if (!v.empty()) ys.insert(std::move(v));
                }
            }
            yrank = ys.rank();
        }
        yquot_[{dx, dy}] = rs.rank() - yrank;

        slices_.emplace(std::make_pair(dx, dy), std::move(rs));
    }

    ArrangementSpec spec_;
    int Dx_, Dy_;
    SliceCache ambient_;  // x-kind: x then a; y-kind: y then b
    SliceCache comp_;     // component space k[x,y]
    std::map<std::pair<int, int>, RowSpace> slices_;
    std::map<std::pair<int, int>, int> rdims_, yquot_;
};

// ---------- Hilbert tables and certificates ----------

struct BivariateHilbert {
    ArrangementSpec spec;
    int Dx = 0, Dy = 0;
    std::map<std::pair<int, int>, int> dims;
};

inline BivariateHilbert hilbert_series(const ArrangementSpec& spec, int Dx,
                                       int Dy) {
    PolygraphEngine eng(spec, Dx, Dy, false);
    BivariateHilbert h;
    h.spec = spec;
    h.Dx = Dx;
    h.Dy = Dy;
    h.dims = eng.r_dims();
    return h;
}

struct FreenessCertificate {
    bool pass = true;
    std::optional<std::pair<int, int>> first_discrepancy;
    std::map<std::pair<int, int>, int> h;  // dim R slices
    std::map<std::pair<int, int>, int> g;  // dim (R/(y)R) slices
};

// truncated freeness test: h_d(s) = g_d(s) / (1-s)^n mod s^{Dy+1}, i.e.
// h_d(e) = sum_{e' <= e} g_d(e') C(e-e'+n-1, n-1)
inline FreenessCertificate freeness_from_tables(
    int n, int Dx, int Dy, const std::map<std::pair<int, int>, int>& h,
    const std::map<std::pair<int, int>, int>& g) {
    FreenessCertificate cert;
    cert.h = h;
    cert.g = g;
    for (int d = 0; d <= Dx && cert.pass; ++d)
        for (int e = 0; e <= Dy; ++e) {
            mpz_class expect = 0;
            for (int ep = 0; ep <= e; ++ep) {
                auto it = g.find({d, ep});
                if (it == g.end()) continue;
                expect += mpz_class(it->second) * binomial_z(e - ep + n - 1, n - 1);
            }
            auto it = h.find({d, e});
            int have = it == h.end() ? 0 : it->second;
            if (expect != have) {
                cert.pass = false;
                cert.first_discrepancy = {d, e};
                break;
            }
        }
    return cert;
}

inline FreenessCertificate freeness_certificate(const ArrangementSpec& spec,
                                                int Dx, int Dy) {
    PolygraphEngine eng(spec, Dx, Dy, false);
    return freeness_from_tables(spec.n, Dx, Dy, eng.r_dims(),
                                eng.y_quotients());
}

// ---------- generic-fiber Hilbert series ----------

struct GenericHsReport {
    bool pass = true;
    bool stabilized = true;
    std::vector<long> combinatorial;  // (a) pair enumeration per degree
    std::vector<long> stabilized_dims;  // (b) finite differences at Dy
    std::vector<long> formula;          // n^l C(d+n-1, n-1)
};

namespace poly_detail {

// (n-1)-th finite difference in e of dims(d, e), evaluated at e
inline long finite_difference(const std::map<std::pair<int, int>, int>& dims,
                              int n, int d, int e) {
    mpz_class acc = 0;
    for (int j = 0; j <= n - 1; ++j) {
        auto it = dims.find({d, e - j});
        long v = it == dims.end() ? 0 : it->second;
        mpz_class term = binomial_z(n - 1, j) * v;
        if (j % 2 == 0) acc += term;
        else acc -= term;
    }
    return static_cast<long>(acc.get_si());
}

inline long qualifying_pairs(int n, int l, int m, int r, int k, int d) {
    // pairs (e, f) with |e| = d and |[r] \ S_k(e,f)| >= m, where
    // S_k(e,f) = {j : e_j > 0} ∪ f([k])
    MonoBasis eb = make_mono_basis(n, d);
    auto fs = all_functions(l, n);
    long count = 0;
    for (const auto& e : eb.exps)
        for (const auto& f : fs) {
            int free_count = 0;
            for (int j = 1; j <= r; ++j) {
                if (e[j - 1] > 0) continue;
                bool in_fk = false;
                for (int i = 0; i < k; ++i)
                    if (f[i] == j) { in_fk = true; break; }
                if (!in_fk) ++free_count;
            }
            if (free_count >= m) ++count;
        }
    return count;
}

}  // namespace poly_detail

// Generic-fiber Hilbert check for Z(n,l): the generic dimension in x-degree d
// equals n^l C(d+n-1, n-1), computed (a) by pair enumeration and (b) from
// the stabilized (n-1)-th y-degree differences of the bigraded table.
inline GenericHsReport generic_hs_check(int n, int l, int Dx, int Dy = -1) {
    if (Dy < 0) Dy = Dx;
    GenericHsReport rep;
    PolygraphEngine eng(z_spec(n, l), Dx, Dy, false);
    mpz_class nl = 1;
    for (int i = 0; i < l; ++i) nl *= n;
    for (int d = 0; d <= Dx; ++d) {
        long comb = poly_detail::qualifying_pairs(n, l, 0, 0, 0, d);
        long diff = poly_detail::finite_difference(eng.r_dims(), n, d, Dy);
        long diff_prev = poly_detail::finite_difference(eng.r_dims(), n, d, Dy - 1);
        mpz_class formula = nl * binomial_z(d + n - 1, n - 1);
        rep.combinatorial.push_back(comb);
        rep.stabilized_dims.push_back(diff);
        rep.formula.push_back(static_cast<long>(formula.get_si()));
        if (diff != diff_prev) rep.stabilized = false;
        if (comb != formula || diff != formula) rep.pass = false;
    }
    rep.pass = rep.pass && rep.stabilized;
    return rep;
}

struct YGenericReport {
    bool pass = true;
    bool stabilized = true;
    std::vector<long> enumerator;  // per degree
    std::vector<long> stabilized_dims;
};

inline YGenericReport y_generic_enumerator(int n, int l, int m, int r, int k,
                                           int Dx, int Dy = -1) {
    if (Dy < 0) Dy = Dx;
    YGenericReport rep;
    ArrangementSpec spec = y_arrangement_spec(n, l, m, r, k);
    PolygraphEngine eng(spec, Dx, Dy, false);
    for (int d = 0; d <= Dx; ++d) {
        long comb = poly_detail::qualifying_pairs(n, l, m, r, k, d);
        long diff = poly_detail::finite_difference(eng.r_dims(), n, d, Dy);
        long diff_prev = poly_detail::finite_difference(eng.r_dims(), n, d, Dy - 1);
        rep.enumerator.push_back(comb);
        rep.stabilized_dims.push_back(diff);
        if (diff != diff_prev) rep.stabilized = false;
        if (comb != diff) rep.pass = false;
    }
    rep.pass = rep.pass && rep.stabilized;
    return rep;
}

// ---------- ambient ideal slices (small instances) ----------

struct BigradedIdeal {
    ArrangementSpec spec;
    int Dx = 0, Dy = 0;
    int nx = 0, ny = 0;  // ambient variable counts per grading side
    std::map<std::pair<int, int>, RowSpace> slices;  // ambient coordinates

    int dim_at(int dx, int dy) const {
        auto it = slices.find({dx, dy});
        return it == slices.end() ? 0 : it->second.rank();
    }
};

namespace poly_detail {

// ambient coordinate row of a bihomogeneous polynomial in x,y,a,b
inline SparseRow ambient_row(const MPoly& p, const BiSlice& sl, int n, int l) {
    SparseRow row;
    for (const auto& [mono, c] : p.terms()) {
        std::vector<int> ex(n + l, 0), ey(n + l, 0);
        for (const auto& [v, e] : mono.e) {
            switch (v.kind) {
                case VarKind::X: ex[v.index - 1] = e; break;
                case VarKind::A: ex[n + v.index - 1] = e; break;
                case VarKind::Y: ey[v.index - 1] = e; break;
                case VarKind::B: ey[n + v.index - 1] = e; break;
                default: throw std::invalid_argument("foreign variable");
            }
        }
        row.push(sl.idx(sl.x.find(ex), sl.y.find(ey)), c);
    }
    row.sort_terms();
    return row;
}

// span of { g * monomial } for bihomogeneous generators, one bidegree
inline RowSpace generated_ideal_slice(const std::vector<MPoly>& gens, int n,
                                      int l, SliceCache& amb, int dx, int dy,
                                      bool rref) {
    const BiSlice& sl = amb.slice(dx, dy);
    RowSpace rs(sl.size(), rref);
    for (const MPoly& g : gens) {
        if (g.is_zero()) continue;
        auto [gx, gy] = g.leading_monomial().bidegree();
        if (gx > dx || gy > dy) continue;
        const BiSlice& mb = amb.slice(dx - gx, dy - gy);
        for (int ix = 0; ix < mb.x.size(); ++ix)
            for (int iy = 0; iy < mb.y.size(); ++iy) {
                Monomial mono;
                for (int v = 0; v < n; ++v) {
                    if (mb.x.exps[ix][v]) mono.e.emplace_back(var_x(v + 1), mb.x.exps[ix][v]);
                    if (mb.y.exps[iy][v]) mono.e.emplace_back(var_y(v + 1), mb.y.exps[iy][v]);
                }
                for (int v = 0; v < l; ++v) {
                    if (mb.x.exps[ix][n + v]) mono.e.emplace_back(var_a(v + 1), mb.x.exps[ix][n + v]);
                    if (mb.y.exps[iy][n + v]) mono.e.emplace_back(var_b(v + 1), mb.y.exps[iy][n + v]);
                }
                mono.normalize();
                rs.insert(ambient_row(g.times_monomial(mono), sl, n, l));
                if (rs.rank() == sl.size()) return rs;
            }
    }
    return rs;
}

// U ∩ V via stacked dual constraints (both in rref mode)
inline RowSpace intersect_spaces(const RowSpace& u, const RowSpace& v) {
    const int N = u.ncols();
    RowSpace cons(N, true);
    for (auto& r : u.annihilator()) cons.insert(std::move(r));
    for (auto& r : v.annihilator()) cons.insert(std::move(r));
    RowSpace out(N, true);
    for (auto& r : cons.annihilator()) out.insert(std::move(r));
    return out;
}

}  // namespace poly_detail

// restriction of an ambient polynomial to one component: a_i -> x_{f(i)},
// b_i -> y_{f(i)}, then x_j -> 0 for j in T
inline MPoly restrict_to_component(const MPoly& p, const PolyComponent& comp) {
    MPoly r;
    for (const auto& [mono, c] : p.terms()) {
        Monomial m2;
        bool dead = false;
        for (const auto& [v, e] : mono.e) {
            Var w = v;
            if (v.kind == VarKind::A) w = var_x(comp.f[v.index - 1]);
            else if (v.kind == VarKind::B) w = var_y(comp.f[v.index - 1]);
            if (w.kind == VarKind::X)
                for (int j : comp.T)
                    if (w.index == static_cast<std::uint32_t>(j)) dead = true;
            if (dead) break;
            m2.e.emplace_back(w, e);
        }
        if (dead) continue;
        m2.normalize();
        r.add_term(m2, c);
    }
    return r;
}

// exact membership of p in the (radical) ideal of the arrangement
inline bool vanishes_on(const ArrangementSpec& spec, const MPoly& p) {
    for (const auto& comp : spec.comps)
        if (!restrict_to_component(p, comp).is_zero()) return false;
    return true;
}

// generators of I_{T,f} in bidegree-graded form
inline std::vector<MPoly> component_generators(const PolyComponent& comp,
                                               int n) {
    std::vector<MPoly> gens;
    for (std::size_t i = 0; i < comp.f.size(); ++i) {
        gens.push_back(MPoly::variable(var_a(i + 1)) -
                       MPoly::variable(var_x(comp.f[i])));
        gens.push_back(MPoly::variable(var_b(i + 1)) -
                       MPoly::variable(var_y(comp.f[i])));
    }
    for (int j : comp.T) gens.push_back(MPoly::variable(var_x(j)));
    return gens;
}

// one ambient slice of the ideal of a single component
inline RowSpace component_ideal(const PolyComponent& comp, int n, int l,
                                SliceCache& amb, int dx, int dy,
                                bool rref = true) {
    return poly_detail::generated_ideal_slice(component_generators(comp, n),
                                              n, l, amb, dx, dy, rref);
}

// Ambient ideal slices of the arrangement: the intersection of the
// component ideals, taken pairwise in a balanced tree via kernels of
// stacked dual constraints.  Intended for desk-size instances.
inline BigradedIdeal arrangement_ideal(const ArrangementSpec& spec, int Dx,
                                       int Dy) {
    BigradedIdeal out;
    out.spec = spec;
    out.Dx = Dx;
    out.Dy = Dy;
    out.nx = spec.n + spec.l;
    out.ny = spec.n + spec.l;
    SliceCache amb(out.nx, out.ny);
    for (int dx = 0; dx <= Dx; ++dx)
        for (int dy = 0; dy <= Dy; ++dy) {
            const BiSlice& sl = amb.slice(dx, dy);
            if (spec.comps.empty()) {
                // empty arrangement: the unit ideal, full slices
                RowSpace full(sl.size(), true);
                for (int i = 0; i < sl.size(); ++i) {
                    SparseRow v;
                    v.push(i, Rat(1));
                    full.insert(std::move(v));
                }
                out.slices.emplace(std::make_pair(dx, dy), std::move(full));
                continue;
            }
            std::vector<RowSpace> level;
            for (const auto& comp : spec.comps)
                level.push_back(
                    component_ideal(comp, spec.n, spec.l, amb, dx, dy, true));
            while (level.size() > 1) {
                std::vector<RowSpace> next;
                for (std::size_t i = 0; i + 1 < level.size(); i += 2)
                    next.push_back(
                        poly_detail::intersect_spaces(level[i], level[i + 1]));
                if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
                level = std::move(next);
            }
            out.slices.emplace(std::make_pair(dx, dy), std::move(level[0]));
        }
    return out;
}

// ideal slices are genuinely ideal slices: multiplication by every variable
// lands in the next slice
inline bool validate_ideal_closure(const BigradedIdeal& ideal) {
    SliceCache amb(ideal.nx, ideal.ny);
    for (const auto& [key, rs] : ideal.slices) {
        auto [dx, dy] = key;
        const BiSlice& from = amb.slice(dx, dy);
        for (int side = 0; side < 2; ++side) {
            int tx = dx + (side == 0 ? 1 : 0), ty = dy + (side == 0 ? 0 : 1);
            if (tx > ideal.Dx || ty > ideal.Dy) continue;
            const BiSlice& to = amb.slice(tx, ty);
            const auto& target = ideal.slices.at({tx, ty});
            int nvars = side == 0 ? ideal.nx : ideal.ny;
            for (const auto& row : rs.rows())
                for (int v = 0; v < nvars; ++v) {
                    SparseRow img;
                    for (const auto& [idx, c] : row.t) {
                        auto [ix, iy] = from.split(idx);
                        std::vector<int> e =
                            side == 0 ? from.x.exps[ix] : from.y.exps[iy];
                        ++e[v];
                        int nidx = side == 0 ? to.idx(to.x.find(e), iy)
                                             : to.idx(ix, to.y.find(e));
                        img.push(nidx, c);
                    }
                    img.sort_terms();
                    if (!target.contains(img)) return false;
                }
        }
    }
    return true;
}

}  // namespace msw

#endif
