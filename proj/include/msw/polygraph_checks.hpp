#ifndef MSW_POLYGRAPH_CHECKS_HPP
#define MSW_POLYGRAPH_CHECKS_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "msw/polygraph.hpp"

namespace msw {

// ---------- J^d = intersection of (x_i-x_j, y_i-y_j)^d ----------

struct JPowerReport {
    int n = 0, d = 0, Dx = 0, Dy = 0;
    bool containment = true;  // J^d inside the intersection, every slice
    bool equality = true;     // slice dims agree
    bool freeness = true;     // truncated k[y]-freeness certificate for J^d
    std::optional<std::pair<int, int>> first_discrepancy;
    std::map<std::pair<int, int>, int> jd_dims;
    std::map<std::pair<int, int>, int> cap_dims;
};

namespace poly_detail {

// all Delta_D for n-element cell sets with bidegree at most (Dx, Dy),
// grouped by bidegree
inline std::map<std::pair<int, int>, std::vector<MPoly>> delta_basis_by_bidegree(
    int n, int Dx, int Dy) {
    std::vector<Cell> grid;
    for (int i = 0; i <= Dx; ++i)
        for (int j = 0; j <= Dy; ++j) grid.push_back({i, j});
    std::map<std::pair<int, int>, std::vector<MPoly>> out;
    std::vector<Cell> pick;
    auto rec = [&](auto&& self, std::size_t from, int sx, int sy) -> void {
        if (static_cast<int>(pick.size()) == n) {
            out[{sx, sy}].push_back(delta_D(pick));
            return;
        }
        for (std::size_t g = from; g < grid.size(); ++g) {
            int nx = sx + grid[g].row, ny = sy + grid[g].col;
            if (nx > Dx || ny > Dy) continue;
            pick.push_back(grid[g]);
            self(self, g + 1, nx, ny);
            pick.pop_back();
        }
    };
    rec(rec, 0, 0, 0);
    return out;
}

// graded ideal slices from exact generators placed at their own bidegree:
// slice(r,s) = sum of variable multiples of the lower slices plus the
// generators of bidegree exactly (r,s)
inline std::map<std::pair<int, int>, RowSpace> graded_ideal_slices(
    int n, int Dx, int Dy,
    const std::map<std::pair<int, int>, std::vector<MPoly>>& exact_gens,
    SliceCache& cache, bool rref) {
    std::map<std::pair<int, int>, RowSpace> out;
    for (int total = 0; total <= Dx + Dy; ++total)
        for (int r = std::min(total, Dx); r >= 0; --r) {
            int s = total - r;
            if (s > Dy) continue;
            const BiSlice& here = cache.slice(r, s);
            RowSpace rs(here.size(), rref);
            for (int side = 0; side < 2; ++side) {
                int pr = side == 0 ? r - 1 : r;
                int ps = side == 0 ? s : s - 1;
                if (pr < 0 || ps < 0) continue;
                const BiSlice& from = cache.slice(pr, ps);
                for (const auto& row : out.at({pr, ps}).rows())
                    for (int i = 0; i < n; ++i)
                        rs.insert(bislice_times_var(row, from, here,
                                                    side == 0, i));
            }
            auto it = exact_gens.find({r, s});
            if (it != exact_gens.end())
                for (const MPoly& g : it->second)
                    rs.insert(gh_detail::poly_to_row(g, here, n));
            out.emplace(std::make_pair(r, s), std::move(rs));
        }
    return out;
}

}  // namespace poly_detail

inline JPowerReport jpower_check(int n, int d, int Dx, int Dy) {
    if (n < 2 || d < 1) throw std::invalid_argument("jpower_check: n>=2, d>=1");
    JPowerReport rep;
    rep.n = n;
    rep.d = d;
    rep.Dx = Dx;
    rep.Dy = Dy;
    SliceCache cache(n, n);

    // J^d slices: variable multiples plus exact products of d alternants
    auto deltas = poly_detail::delta_basis_by_bidegree(n, Dx, Dy);
    std::map<std::pair<int, int>, std::vector<MPoly>> products;
    {
        std::vector<std::pair<std::pair<int, int>, MPoly>> flat;
        for (const auto& [bd, list] : deltas)
            for (const auto& g : list) flat.emplace_back(bd, g);
        // d-fold products within the truncation, multisets via sorted index
        auto rec = [&](auto&& self, std::size_t from, int depth,
                       std::pair<int, int> bd, const MPoly& acc) -> void {
            if (depth == d) {
                products[bd].push_back(acc);
                return;
            }
            for (std::size_t i = from; i < flat.size(); ++i) {
                int nx = bd.first + flat[i].first.first;
                int ny = bd.second + flat[i].first.second;
                if (nx > Dx || ny > Dy) continue;
                self(self, i, depth + 1, {nx, ny},
                     depth == 0 ? flat[i].second : acc * flat[i].second);
            }
        };
        rec(rec, 0, 0, {0, 0}, MPoly());
    }
    auto jd = poly_detail::graded_ideal_slices(n, Dx, Dy, products, cache,
                                               /*rref=*/false);

    // per-pair power ideals (x_i - x_j, y_i - y_j)^d, rref for annihilators
    std::vector<std::map<std::pair<int, int>, RowSpace>> pair_slices;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            MPoly lx = MPoly::variable(var_x(i)) - MPoly::variable(var_x(j));
            MPoly ly = MPoly::variable(var_y(i)) - MPoly::variable(var_y(j));
            std::map<std::pair<int, int>, std::vector<MPoly>> gens;
            MPoly pow = MPoly::constant(1);
            for (int c = 0; c <= d; ++c) {
                // lx^c ly^{d-c}
                MPoly g = MPoly::constant(1);
                for (int a = 0; a < c; ++a) g *= lx;
                for (int a = 0; a < d - c; ++a) g *= ly;
                if (c <= Dx && d - c <= Dy) gens[{c, d - c}].push_back(g);
            }
            (void)pow;
            pair_slices.push_back(poly_detail::graded_ideal_slices(
                n, Dx, Dy, gens, cache, /*rref=*/true));
        }

    for (int r = 0; r <= Dx; ++r)
        for (int s = 0; s <= Dy; ++s) {
            const RowSpace& jslice = jd.at({r, s});
            rep.jd_dims[{r, s}] = jslice.rank();
            // containment in every pair power
            for (const auto& ps : pair_slices) {
                const RowSpace& pslice = ps.at({r, s});
                for (const auto& row : jslice.rows())
                    if (!pslice.contains(row)) {
                        rep.containment = false;
                        break;
                    }
            }
            // intersection dimension via stacked dual constraints
            const int N = cache.slice(r, s).size();
            RowSpace cons(N, false);
            for (const auto& ps : pair_slices)
                for (auto& a : ps.at({r, s}).annihilator())
                    cons.insert(std::move(a));
            int capdim = N - cons.rank();
            rep.cap_dims[{r, s}] = capdim;
            if (capdim != jslice.rank()) {
                rep.equality = false;
                if (!rep.first_discrepancy) rep.first_discrepancy = {r, s};
            }
        }

    // truncated freeness certificate for J^d as a k[y]-module
    std::map<std::pair<int, int>, int> g;
    for (int r = 0; r <= Dx; ++r)
        for (int s = 0; s <= Dy; ++s) {
            int yrank = 0;
            if (s > 0) {
                const BiSlice& from = cache.slice(r, s - 1);
                const BiSlice& here = cache.slice(r, s);
                RowSpace ys(here.size(), false);
                for (const auto& row : jd.at({r, s - 1}).rows())
                    for (int i = 0; i < n; ++i)
                        ys.insert(bislice_times_var(row, from, here, false, i));
                yrank = ys.rank();
            }
            g[{r, s}] = rep.jd_dims[{r, s}] - yrank;
        }
    FreenessCertificate cert =
        freeness_from_tables(n, Dx, Dy, rep.jd_dims, g);
    rep.freeness = cert.pass;
    return rep;
}

// ---------- the explicit n = 2 common ideal basis ----------

namespace poly_detail {

inline std::vector<int> theta_f(const std::vector<int>& f) {
    std::vector<int> g = f;
    for (int& v : g) v = v == 1 ? 2 : 1;
    return g;
}

inline MPoly theta_poly(const MPoly& p) { return p.permute_xy({2, 1}); }

}  // namespace poly_detail

// p[e, f] for n = 2: the common-basis elements, by the four construction
// cases (the (h,0) case is the theta twist of (0,h-1))
inline MPoly n2_basis_element(const std::vector<int>& e,
                              const std::vector<int>& f) {
    const int l = static_cast<int>(f.size());
    MPoly one = MPoly::constant(1);
    if (e[0] == 0 && e[1] == 0) {
        MPoly p = one;
        for (int j = 2; j <= l; ++j)
            if (f[j - 1] != f[0])
                p *= MPoly::variable(var_b(j)) - MPoly::variable(var_b(1));
        if (l >= 1 && f[0] == 1)
            p *= MPoly::variable(var_b(1)) - MPoly::variable(var_y(2));
        return p;
    }
    if (e[0] == 0) {  // e = (0, h), h > 0
        int h = e[1];
        std::vector<int> fiber1;
        for (int i = 1; i <= l; ++i)
            if (f[i - 1] == 1) fiber1.push_back(i);
        std::size_t scount = std::min<std::size_t>(h, fiber1.size());
        MPoly p = one;
        int xpow = h - static_cast<int>(scount);
        if (xpow > 0) p *= MPoly::variable(var_x(2), xpow);
        for (std::size_t i = 0; i < scount; ++i)
            p *= MPoly::variable(var_a(fiber1[i])) -
                 MPoly::variable(var_x(1)) - MPoly::variable(var_x(2));
        for (std::size_t i = scount; i < fiber1.size(); ++i)
            p *= MPoly::variable(var_b(fiber1[i])) - MPoly::variable(var_y(2));
        return p;
    }
    if (e[1] == 0) {  // e = (h, 0), h > 0
        MPoly inner =
            n2_basis_element({0, e[0] - 1}, poly_detail::theta_f(f));
        return MPoly::variable(var_x(1)) * poly_detail::theta_poly(inner);
    }
    int h = std::min(e[0], e[1]);
    MPoly res = n2_basis_element({e[0] - h, e[1] - h}, f);
    return MPoly::variable(var_x(1), h) * MPoly::variable(var_x(2), h) * res;
}

struct N2BasisReport {
    int l = 0, Dx = 0, Dy = 0;
    bool spanning = true;       // images span R(2,l)/(y) per bidegree
    bool enumerator_ok = true;  // x-degree enumerator is 2^l/(1-t)^2
    bool membership_ok = true;  // ideal-membership rule matches exact vanishing
    bool ideal_span_ok = true;  // flagged elements span each I(m,r,k) slice
    bool generators_ok = true;  // explicit generator presentations match
    std::string first_failure;
};

namespace poly_detail {

inline bool n2_flagged(const std::vector<int>& e, const std::vector<int>& f,
                       int m, int r, int k) {
    // |[r] \ S_k(e,f)| < m with S_k(e,f) = {j : e_j > 0} ∪ f([k])
    int free_count = 0;
    for (int j = 1; j <= r; ++j) {
        if (e[j - 1] > 0) continue;
        bool hit = false;
        for (int i = 0; i < k; ++i)
            if (f[i] == j) { hit = true; break; }
        if (!hit) ++free_count;
    }
    return free_count < m;
}

// span, inside R, of the ideal generated by ambient polynomials
inline RowSpace generated_in_r(PolygraphEngine& eng, const std::vector<MPoly>& gens,
                               int dx, int dy) {
    const int n = eng.spec().n, l = eng.spec().l;
    SliceCache amb(n + l, n + l);
    RowSpace rs(eng.ncols(dx, dy), false);
    for (const MPoly& g : gens) {
        if (g.is_zero()) continue;
        auto [gx, gy] = g.leading_monomial().bidegree();
        if (gx > dx || gy > dy) continue;
        const BiSlice& mb = amb.slice(dx - gx, dy - gy);
        for (int ix = 0; ix < mb.x.size(); ++ix)
            for (int iy = 0; iy < mb.y.size(); ++iy) {
                Monomial mono;
                for (int v = 0; v < n; ++v) {
                    if (mb.x.exps[ix][v])
                        mono.e.emplace_back(var_x(v + 1), mb.x.exps[ix][v]);
                    if (mb.y.exps[iy][v])
                        mono.e.emplace_back(var_y(v + 1), mb.y.exps[iy][v]);
                }
                for (int v = 0; v < l; ++v) {
                    if (mb.x.exps[ix][n + v])
                        mono.e.emplace_back(var_a(v + 1), mb.x.exps[ix][n + v]);
                    if (mb.y.exps[iy][n + v])
                        mono.e.emplace_back(var_b(v + 1), mb.y.exps[iy][n + v]);
                }
                mono.normalize();
                rs.insert(eng.phi(g.times_monomial(mono), dx, dy));
            }
    }
    return rs;
}

inline bool same_row_space(const RowSpace& a, const RowSpace& b) {
    if (a.rank() != b.rank()) return false;
    for (const auto& row : a.rows())
        if (!b.contains(row)) return false;
    return true;
}

}  // namespace poly_detail

inline N2BasisReport n2_common_basis(int l, int Dx, int Dy) {
    N2BasisReport rep;
    rep.l = l;
    rep.Dx = Dx;
    rep.Dy = Dy;
    std::ostringstream fail;

    PolygraphEngine eng(z_spec(2, l), Dx, Dy, true);

    // collect basis elements with their bidegrees
    struct Elem {
        std::vector<int> e, f;
        MPoly p;
        int dx, dy;
    };
    std::vector<Elem> elems;
    for (int e1 = 0; e1 <= Dx; ++e1)
        for (int e2 = 0; e1 + e2 <= Dx; ++e2)
            for (const auto& f : all_functions(l, 2)) {
                MPoly p = n2_basis_element({e1, e2}, f);
                auto [dx, dy] = p.leading_monomial().bidegree();
                if (dx != e1 + e2)
                    throw std::logic_error("p[e,f] has wrong x-degree");
                elems.push_back({{e1, e2}, f, p, dx, dy});
            }

    // (b) degree enumerator: coefficient of t^d in 2^l/(1-t)^2 is 2^l (d+1)
    for (int dd = 0; dd <= Dx; ++dd) {
        long count = 0;
        for (const auto& el : elems)
            if (el.dx == dd) ++count;
        long expect = (1L << l) * (dd + 1);
        if (count != expect) {
            rep.enumerator_ok = false;
            if (fail.str().empty())
                fail << "enumerator at degree " << dd << ": " << count
                     << " != " << expect;
        }
    }

    // (a) spanning of R/(y) per bidegree: basis images plus y-multiples of
    // the previous slice must fill the whole R slice
    for (int dx = 0; dx <= Dx && rep.spanning; ++dx)
        for (int dy = 0; dy <= Dy; ++dy) {
            RowSpace rs(eng.ncols(dx, dy), false);
            if (dy > 0)
                for (const auto& row : eng.r_slice(dx, dy - 1).rows())
                    for (int i = 1; i <= 2; ++i)
                        rs.insert(eng.row_times_xy(row, dx, dy - 1, false, i));
            for (const auto& el : elems)
                if (el.dx == dx && el.dy == dy)
                    rs.insert(eng.phi(el.p, dx, dy));
            if (rs.rank() != eng.r_dim(dx, dy)) {
                rep.spanning = false;
                if (fail.str().empty())
                    fail << "spanning fails at bidegree (" << dx << "," << dy
                         << ")";
                break;
            }
        }

    // (c) the ideal-membership rule and per-slice spanning of each I(m,r,k)
    for (int m = 1; m <= 2; ++m)
        for (int r = m; r <= 2; ++r)
            for (int k = 0; k <= l; ++k) {
                ArrangementSpec ysp = y_arrangement_spec(2, l, m, r, k);
                for (const auto& el : elems) {
                    bool flagged = poly_detail::n2_flagged(el.e, el.f, m, r, k);
                    bool vanish = vanishes_on(ysp, el.p);
                    if (flagged != vanish) {
                        rep.membership_ok = false;
                        if (fail.str().empty())
                            fail << "membership mismatch at e=(" << el.e[0]
                                 << "," << el.e[1] << ") m=" << m << " r=" << r
                                 << " k=" << k;
                    }
                }
                // flagged elements, padded by y-monomials, span the ideal
                for (int dx = 0; dx <= Dx && rep.ideal_span_ok; ++dx)
                    for (int dy = 0; dy <= Dy; ++dy) {
                        RowSpace ideal = eng.sub_ideal_slice(ysp, dx, dy);
                        RowSpace span(eng.ncols(dx, dy), false);
                        for (const auto& el : elems) {
                            if (el.dx != dx || el.dy > dy) continue;
                            if (!poly_detail::n2_flagged(el.e, el.f, m, r, k))
                                continue;
                            MonoBasis yb = make_mono_basis(2, dy - el.dy);
                            for (const auto& al : yb.exps) {
                                Monomial mono;
                                for (int v = 0; v < 2; ++v)
                                    if (al[v])
                                        mono.e.emplace_back(var_y(v + 1), al[v]);
                                mono.normalize();
                                span.insert(eng.phi(el.p.times_monomial(mono),
                                                    dx, dy));
                            }
                        }
                        if (span.rank() != ideal.rank()) {
                            rep.ideal_span_ok = false;
                            if (fail.str().empty())
                                fail << "ideal span fails at (" << dx << ","
                                     << dy << ") m=" << m << " r=" << r
                                     << " k=" << k;
                            break;
                        }
                    }
            }

    // explicit generator presentations of the nontrivial ideals for n = 2
    auto check_generators = [&](int m, int r, int k,
                                const std::vector<MPoly>& gens,
                                const char* name) {
        ArrangementSpec ysp = y_arrangement_spec(2, l, m, r, k);
        for (int dx = 0; dx <= Dx; ++dx)
            for (int dy = 0; dy <= Dy; ++dy) {
                RowSpace ideal = eng.sub_ideal_slice(ysp, dx, dy);
                RowSpace gen = poly_detail::generated_in_r(eng, gens, dx, dy);
                if (!poly_detail::same_row_space(gen, ideal)) {
                    rep.generators_ok = false;
                    if (fail.str().empty())
                        fail << name << " mismatch at (" << dx << "," << dy
                             << ")";
                    return;
                }
            }
    };

    {
        // I(2,2,0) = (x, a)
        std::vector<MPoly> gens{MPoly::variable(var_x(1)),
                                MPoly::variable(var_x(2))};
        for (int i = 1; i <= l; ++i) gens.push_back(MPoly::variable(var_a(i)));
        check_generators(2, 2, 0, gens, "I(2,2,0)");
    }
    for (int k = 0; k <= l; ++k) {
        // I(1,2,k) = (x1 x2) + sum_{i<=k} (a_i - x1 - x2, b_i - b_1)
        std::vector<MPoly> gens{MPoly::variable(var_x(1)) *
                                MPoly::variable(var_x(2))};
        for (int i = 1; i <= k; ++i) {
            gens.push_back(MPoly::variable(var_a(i)) -
                           MPoly::variable(var_x(1)) -
                           MPoly::variable(var_x(2)));
            gens.push_back(MPoly::variable(var_b(i)) -
                           MPoly::variable(var_b(1)));
        }
        check_generators(1, 2, k, gens, "I(1,2,k)");

        // I(1,1,k) = (x1) + sum_{i<=k} (a_i - x2, b_i - y2)
        std::vector<MPoly> gens2{MPoly::variable(var_x(1))};
        for (int i = 1; i <= k; ++i) {
            gens2.push_back(MPoly::variable(var_a(i)) -
                            MPoly::variable(var_x(2)));
            gens2.push_back(MPoly::variable(var_b(i)) -
                            MPoly::variable(var_y(2)));
        }
        check_generators(1, 1, k, gens2, "I(1,1,k)");
    }

    rep.first_failure = fail.str();
    return rep;
}

// ---------- univariate polygraph (one set of variables) ----------

struct UnivariateReport {
    int n = 0, l = 0, D = 0;
    bool spans = true;       // a^e monomials span R/(x) per degree
    bool counts_ok = true;   // per-degree counts match the quotient dims
    long basis_count = 0;    // number of a^e with all e_i < n, |e| <= D
    bool total_is_nl = true; // equals n^l when the truncation covers l(n-1)
};

// In k[x, a] with I = sum_i (prod_j (a_i - x_j)): the monomials a^e with
// 0 <= e_i < n descend to a basis of R/(x)R; verified per degree up to D.
inline UnivariateReport univariate_polygraph_basis(int n, int l, int D) {
    if (n < 1 || l < 1)
        throw std::invalid_argument("univariate_polygraph_basis: n, l >= 1");
    UnivariateReport rep;
    rep.n = n;
    rep.l = l;
    rep.D = D;

    auto fs = all_functions(l, n);
    const int nc = static_cast<int>(fs.size());

    // R slices: rank of the substitution map a_i -> x_{f(i)} on monomials
    std::vector<RowSpace> rslices;  // per degree
    std::vector<MonoBasis> amb, comp;
    for (int dd = 0; dd <= D; ++dd) {
        amb.push_back(make_mono_basis(n + l, dd));
        comp.push_back(make_mono_basis(n, dd));
    }
    for (int dd = 0; dd <= D; ++dd) {
        RowSpace rs(nc * comp[dd].size(), false);
        for (const auto& e : amb[dd].exps) {
            SparseRow row;
            for (int ci = 0; ci < nc; ++ci) {
                std::vector<int> img(n, 0);
                for (int j = 0; j < n; ++j) img[j] = e[j];
                for (int i = 0; i < l; ++i) img[fs[ci][i] - 1] += e[n + i];
                row.push(ci * comp[dd].size() + comp[dd].find(img), Rat(1));
            }
            row.sort_terms();
            rs.insert(std::move(row));
        }
        rslices.push_back(std::move(rs));
    }

    for (int dd = 0; dd <= D; ++dd) {
        // x-multiples of the previous degree
        RowSpace quot(nc * comp[dd].size(), false);
        if (dd > 0) {
            for (const auto& row : rslices[dd - 1].rows())
                for (int j = 0; j < n; ++j) {
                    SparseRow v;
                    for (const auto& [idx, c] : row.t) {
                        int ci = idx / comp[dd - 1].size();
                        std::vector<int> img = comp[dd - 1].exps[idx % comp[dd - 1].size()];
                        ++img[j];
                        v.push(ci * comp[dd].size() + comp[dd].find(img), c);
                    }
                    v.sort_terms();
                    quot.insert(std::move(v));
                }
        }
        int xrank = quot.rank();

        // a^e images with all exponents < n
        long count = 0;
        for (const auto& e : amb[dd].exps) {
            bool pure_a = true, small = true;
            for (int j = 0; j < n && pure_a; ++j)
                if (e[j] > 0) pure_a = false;
            for (int i = 0; i < l && small; ++i)
                if (e[n + i] >= n) small = false;
            if (!pure_a || !small) continue;
            ++count;
            SparseRow row;
            for (int ci = 0; ci < nc; ++ci) {
                std::vector<int> img(n, 0);
                for (int i = 0; i < l; ++i) img[fs[ci][i] - 1] += e[n + i];
                row.push(ci * comp[dd].size() + comp[dd].find(img), Rat(1));
            }
            row.sort_terms();
            quot.insert(std::move(row));
        }
        rep.basis_count += count;

        if (quot.rank() != rslices[dd].rank()) rep.spans = false;
        if (rslices[dd].rank() - xrank != count) rep.counts_ok = false;
    }

    mpz_class nl = 1;
    for (int i = 0; i < l; ++i) nl *= n;
    if (D >= l * (n - 1)) rep.total_is_nl = (rep.basis_count == nl);
    return rep;
}

}  // namespace msw

#endif
