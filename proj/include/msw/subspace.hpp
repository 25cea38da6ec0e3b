#ifndef MSW_SUBSPACE_HPP
#define MSW_SUBSPACE_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "msw/mpoly.hpp"
#include "msw/rat.hpp"

namespace msw {

// Sparse coordinate vector over Q, terms sorted by column index.
struct SparseRow {
    std::vector<std::pair<int, Rat>> t;

    bool empty() const { return t.empty(); }
    int lead() const { return t.front().first; }

    void push(int col, const Rat& c) {
        if (!c.is_zero()) t.emplace_back(col, c);
    }

    void sort_terms() {
        std::sort(t.begin(), t.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<int, Rat>> out;
        for (auto& [c, v] : t) {
            if (!out.empty() && out.back().first == c) out.back().second += v;
            else out.emplace_back(c, v);
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const auto& p) { return p.second.is_zero(); }),
                  out.end());
        t = std::move(out);
    }

    SparseRow scaled(const Rat& c) const {
        SparseRow r;
        if (c.is_zero()) return r;
        r.t.reserve(t.size());
        for (const auto& [col, v] : t) r.t.emplace_back(col, v * c);
        return r;
    }

    Rat coeff_at(int col) const {
        auto it = std::lower_bound(
            t.begin(), t.end(), col,
            [](const auto& p, int c) { return p.first < c; });
        return (it != t.end() && it->first == col) ? it->second : Rat(0);
    }
};

// r = a + c*b, both sorted
inline SparseRow axpy(const SparseRow& a, const Rat& c, const SparseRow& b) {
    SparseRow r;
    r.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        if (a.t[i].first < b.t[j].first) r.t.push_back(a.t[i++]);
        else if (b.t[j].first < a.t[i].first) {
            Rat v = c * b.t[j].second;
            if (!v.is_zero()) r.t.emplace_back(b.t[j].first, v);
            ++j;
        } else {
            Rat v = a.t[i].second + c * b.t[j].second;
            if (!v.is_zero()) r.t.emplace_back(a.t[i].first, v);
            ++i, ++j;
        }
    }
    while (i < a.t.size()) r.t.push_back(a.t[i++]);
    while (j < b.t.size()) {
        Rat v = c * b.t[j].second;
        if (!v.is_zero()) r.t.emplace_back(b.t[j].first, v);
        ++j;
    }
    return r;
}

// Incremental row reduction over Q.  Rows are kept pivot-normalized; in rref
// mode pivot columns are also eliminated from the other rows, which makes
// coordinate extraction and annihilators straightforward.
class RowSpace {
public:
    explicit RowSpace(int ncols, bool rref = false)
        : ncols_(ncols), rref_(rref), col_to_row_(ncols, -1) {}

    int ncols() const { return ncols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<SparseRow>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    SparseRow reduce(SparseRow v) const {
        while (!v.empty()) {
            int r = col_to_row_[v.lead()];
            if (r < 0) {
                if (!rref_) return v;  // leading term cannot be cancelled
                break;
            }
            v = axpy(v, -v.t.front().second, rows_[r]);
        }
        if (!rref_ || v.empty()) return v;
        // in rref mode non-leading pivot columns may still appear
        for (;;) {
            bool hit = false;
            SparseRow w = v;
            for (const auto& [col, c] : v.t) {
                int r = col_to_row_[col];
                if (r >= 0) {
                    w = axpy(w, -c, rows_[r]);
                    hit = true;
                }
            }
            v = std::move(w);
            if (!hit || v.empty()) return v;
        }
    }

    bool contains(const SparseRow& v) const { return reduce(v).empty(); }

    // Inserts the vector; returns true if the rank grew.
    bool insert(SparseRow v) {
        while (!v.empty()) {
            int r = col_to_row_[v.lead()];
            if (r < 0) break;
            v = axpy(v, -v.t.front().second, rows_[r]);
        }
        if (v.empty()) return false;
        Rat lead = v.t.front().second;
        if (!lead.is_one()) v = v.scaled(Rat(1) / lead);
        int pivot = v.lead();
        if (rref_) {
            // eliminate remaining pivot columns from the new row
            for (std::size_t k = 1; k < v.t.size();) {
                int r = col_to_row_[v.t[k].first];
                if (r >= 0) {
                    v = axpy(v, -v.t[k].second, rows_[r]);
                    k = 1;  // axpy may reshuffle; restart past the pivot
                } else {
                    ++k;
                }
            }
            // eliminate the new pivot from existing rows
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                Rat c = rows_[i].coeff_at(pivot);
                if (!c.is_zero()) rows_[i] = axpy(rows_[i], -c, v);
            }
        }
        col_to_row_[pivot] = static_cast<int>(rows_.size());
        pivots_.push_back(pivot);
        rows_.push_back(std::move(v));
        return true;
    }

    // Coordinates of v in the stored basis (rref only); throws when v is not
    // in the span.
    std::vector<Rat> coordinates(const SparseRow& v) const {
        if (!rref_) throw std::logic_error("coordinates need rref mode");
        std::vector<Rat> c(rows_.size(), Rat(0));
        SparseRow rem = v;
        for (const auto& [col, val] : v.t) {
            int r = col_to_row_[col];
            if (r >= 0) c[r] = val;
        }
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (!c[r].is_zero()) rem = axpy(rem, -c[r], rows_[r]);
        if (!rem.empty())
            throw std::logic_error("vector not in subspace");
        return c;
    }

    // Basis of {c : B c = 0} for the stored basis matrix B (rref only):
    // one vector per free column.
    std::vector<SparseRow> annihilator() const {
        if (!rref_) throw std::logic_error("annihilator needs rref mode");
        std::vector<SparseRow> out;
        std::vector<bool> is_pivot(ncols_, false);
        for (int p : pivots_) is_pivot[p] = true;
        for (int c = 0; c < ncols_; ++c) {
            if (is_pivot[c]) continue;
            SparseRow v;
            v.push(c, Rat(1));
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                Rat val = rows_[r].coeff_at(c);
                if (!val.is_zero()) v.push(pivots_[r], -val);
            }
            v.sort_terms();
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    int ncols_;
    bool rref_;
    std::vector<SparseRow> rows_;
    std::vector<int> pivots_;
    std::vector<int> col_to_row_;
};

// Monomials of fixed total degree in a fixed number of variables, with a
// stable enumeration order and exponent-vector lookup.
struct MonoBasis {
    int nvars = 0, deg = 0;
    std::vector<std::vector<int>> exps;
    std::map<std::vector<int>, int> index;

    int size() const { return static_cast<int>(exps.size()); }

    int find(const std::vector<int>& e) const {
        auto it = index.find(e);
        if (it == index.end()) throw std::logic_error("monomial not in slice");
        return it->second;
    }
};

inline MonoBasis make_mono_basis(int nvars, int deg) {
    MonoBasis b;
    b.nvars = nvars;
    b.deg = deg;
    std::vector<int> cur(nvars, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == nvars - 1) {
            cur[pos] = rem;
            b.index[cur] = static_cast<int>(b.exps.size());
            b.exps.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, rem - e);
        }
        cur[pos] = 0;
    };
    if (nvars == 0) {
        if (deg == 0) {
            b.index[{}] = 0;
            b.exps.push_back({});
        }
        return b;
    }
    rec(rec, 0, deg);
    return b;
}

// Bihomogeneous slice: product of an x-side and a y-side monomial basis.
// Index = ix * ysize + iy.
struct BiSlice {
    MonoBasis x, y;

    int size() const { return x.size() * y.size(); }
    int idx(int ix, int iy) const { return ix * y.size() + iy; }
    std::pair<int, int> split(int i) const {
        return {i / y.size(), i % y.size()};
    }
};

// multiply a slice coordinate row by the var_index0-th x (or y) variable
inline SparseRow bislice_times_var(const SparseRow& row, const BiSlice& from,
                                   const BiSlice& to, bool xvar,
                                   int var_index0) {
    SparseRow out;
    for (const auto& [idx, c] : row.t) {
        auto [ix, iy] = from.split(idx);
        if (xvar) {
            std::vector<int> e = from.x.exps[ix];
            ++e[var_index0];
            out.push(to.idx(to.x.find(e), iy), c);
        } else {
            std::vector<int> e = from.y.exps[iy];
            ++e[var_index0];
            out.push(to.idx(ix, to.y.find(e)), c);
        }
    }
    out.sort_terms();
    return out;
}

// Cache of slice bases keyed by (x-degree, y-degree); one instance per
// computation keeps the module free of shared mutable state.
class SliceCache {
public:
    SliceCache(int nx_vars, int ny_vars) : nx_(nx_vars), ny_(ny_vars) {}

    const BiSlice& slice(int dx, int dy) {
        auto key = std::make_pair(dx, dy);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        BiSlice s;
        s.x = make_mono_basis(nx_, dx);
        s.y = make_mono_basis(ny_, dy);
        return cache_.emplace(key, std::move(s)).first->second;
    }

    int nx() const { return nx_; }
    int ny() const { return ny_; }

private:
    int nx_, ny_;
    std::map<std::pair<int, int>, BiSlice> cache_;
};

}  // namespace msw

#endif
