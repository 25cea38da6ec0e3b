#ifndef MSW_LINALG_HPP
#define MSW_LINALG_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "msw/mpoly.hpp"
#include "msw/qt_arith.hpp"
#include "msw/rat.hpp"
#include "msw/ratfunc.hpp"

namespace msw {

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t r, std::size_t c, const T& fill = T())
        : rows_(r), cols_(c), data_(r, std::vector<T>(c, fill)) {}
    explicit Matrix(std::vector<std::vector<T>> rows)
        : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()),
          data_(std::move(rows)) {
        for (const auto& r : data_)
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& at(std::size_t i, std::size_t j) { return data_[i][j]; }
    const T& at(std::size_t i, std::size_t j) const { return data_[i][j]; }
    std::vector<T>& row(std::size_t i) { return data_[i]; }
    const std::vector<T>& row(std::size_t i) const { return data_[i]; }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("dimension mismatch");
        std::vector<T> r(rows_, T());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                r[i] += data_[i][j] * v[j];
        return r;
    }

private:
    std::size_t rows_, cols_;
    std::vector<std::vector<T>> data_;
};

// Field/domain pairing for fraction-free elimination.  Rational-function
// matrices are cleared to Z[q,t] rows; rational matrices to integer rows.
struct QtDomain {
    using Field = RatFunc;
    using Dom = MPoly;

    static bool is_zero(const Dom& a) { return a.is_zero(); }
    static Dom one() { return MPoly::constant(1); }
    static Dom mul(const Dom& a, const Dom& b) { return a * b; }
    static Dom sub(const Dom& a, const Dom& b) { return a - b; }
    static Dom div_exact(const Dom& a, const Dom& b) { return a.divided_exact(b); }
    static Field to_field(const Dom& a) { return RatFunc(a); }

    // scale a RatFunc row to polynomial entries (lcm of denominators), then
    // strip integer content; row scaling preserves kernels and row spaces
    static std::vector<Dom> clear_row(const std::vector<Field>& row) {
        MPoly l = MPoly::constant(1);
        for (const auto& e : row)
            if (!e.is_zero()) {
                MPoly g = qt::gcd_qt(l, e.den());
                l = l.divided_exact(g) * e.den();
            }
        std::vector<Dom> out;
        out.reserve(row.size());
        for (const auto& e : row) {
            if (e.is_zero()) out.emplace_back();
            else out.push_back(e.num() * l.divided_exact(e.den()));
        }
        // make the row primitive over Z
        Rat c(0);
        for (const auto& p : out)
            if (!p.is_zero()) {
                Rat pc = p.content().abs();
                c = c.is_zero() ? pc
                                : Rat(gcd_z(c.num(), pc.num()),
                                      lcm_z(c.den(), pc.den()));
            }
        if (!c.is_zero() && !c.is_one())
            for (auto& p : out) p = p.scaled(Rat(1) / c);
        return out;
    }
};

struct RatDomain {
    using Field = Rat;
    using Dom = Rat;

    static bool is_zero(const Dom& a) { return a.is_zero(); }
    static Dom one() { return Rat(1); }
    static Dom mul(const Dom& a, const Dom& b) { return a * b; }
    static Dom sub(const Dom& a, const Dom& b) { return a - b; }
    static Dom div_exact(const Dom& a, const Dom& b) { return a / b; }
    static Field to_field(const Dom& a) { return a; }

    static std::vector<Dom> clear_row(const std::vector<Field>& row) {
        mpz_class l = 1;
        for (const auto& e : row) l = lcm_z(l, e.den());
        std::vector<Dom> out;
        out.reserve(row.size());
        mpz_class g = 0;
        for (const auto& e : row) {
            out.push_back(e * Rat(l));
            g = gcd_z(g, out.back().num());
        }
        if (g > 1)
            for (auto& e : out) e /= Rat(g);
        return out;
    }
};

template <class D>
struct EchelonResult {
    std::vector<std::vector<D>> mat;  // echelon form, zero rows dropped
    std::vector<int> pivot_cols;      // per surviving row
    int rank = 0;
};

// Fraction-free Bareiss elimination over the domain; the input rows must be
// domain entries (denominators already cleared).
template <class Traits>
EchelonResult<typename Traits::Dom> bareiss_echelon(
    std::vector<std::vector<typename Traits::Dom>> m) {
    using D = typename Traits::Dom;
    EchelonResult<D> res;
    if (m.empty()) return res;
    const std::size_t rows = m.size(), cols = m[0].size();
    D prev = Traits::one();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // deterministic pivot: first row with a nonzero entry in column c
        std::size_t piv = r;
        while (piv < rows && Traits::is_zero(m[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        const D pivot = m[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (Traits::is_zero(m[i][c])) {
                // still rescale per the Bareiss one-step identity
                for (std::size_t j = c + 1; j < cols; ++j)
                    m[i][j] = Traits::div_exact(Traits::mul(m[i][j], pivot), prev);
            } else {
                const D factor = m[i][c];
                m[i][c] = D();
                for (std::size_t j = c + 1; j < cols; ++j)
                    m[i][j] = Traits::div_exact(
                        Traits::sub(Traits::mul(m[i][j], pivot),
                                    Traits::mul(m[r][j], factor)),
                        prev);
            }
        }
        res.pivot_cols.push_back(static_cast<int>(c));
        prev = pivot;
        ++r;
    }
    res.rank = static_cast<int>(r);
    m.resize(r);
    res.mat = std::move(m);
    return res;
}

template <class Traits>
EchelonResult<typename Traits::Dom> echelon_of(
    const Matrix<typename Traits::Field>& m) {
    std::vector<std::vector<typename Traits::Dom>> cleared;
    cleared.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        cleared.push_back(Traits::clear_row(m.row(i)));
    return bareiss_echelon<Traits>(std::move(cleared));
}

// Basis of {v : M v = 0}; an empty matrix yields the full standard basis.
template <class Traits>
std::vector<std::vector<typename Traits::Field>> kernel_basis_impl(
    const Matrix<typename Traits::Field>& m) {
    using F = typename Traits::Field;
    const std::size_t cols = m.cols();
    auto ech = echelon_of<Traits>(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<F>> basis;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<F> v(cols, F());
        v[free_c] = F(1);
        for (int i = ech.rank - 1; i >= 0; --i) {
            const int pc = ech.pivot_cols[i];
            F s;
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (!Traits::is_zero(ech.mat[i][j]) && !(v[j] == F()))
                    s += Traits::to_field(ech.mat[i][j]) * v[j];
            v[pc] = -s / Traits::to_field(ech.mat[i][pc]);
        }
        // normalize: first nonzero coordinate equal to one
        for (auto& x : v)
            if (!(x == F())) {
                F lead = x;
                for (auto& y : v) y /= lead;
                break;
            }
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::vector<std::vector<RatFunc>> kernel_basis(const Matrix<RatFunc>& m) {
    return kernel_basis_impl<QtDomain>(m);
}
inline std::vector<std::vector<Rat>> kernel_basis(const Matrix<Rat>& m) {
    return kernel_basis_impl<RatDomain>(m);
}

template <class F>
struct LinearSolution {
    enum class Status { Unique, Underdetermined, Inconsistent };
    Status status = Status::Inconsistent;
    std::vector<F> solution;  // a particular solution when consistent
    int kernel_dim = 0;

    bool consistent() const { return status != Status::Inconsistent; }
};

// Exact solve of M x = b; inconsistency is reported, never silent.
template <class Traits>
LinearSolution<typename Traits::Field> solve_linear_impl(
    const Matrix<typename Traits::Field>& m,
    const std::vector<typename Traits::Field>& b) {
    using F = typename Traits::Field;
    if (m.rows() != b.size()) throw std::invalid_argument("dimension mismatch");
    const std::size_t cols = m.cols();
    Matrix<F> aug(m.rows(), cols + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, cols) = b[i];
    }
    auto ech = echelon_of<Traits>(aug);

    LinearSolution<F> out;
    for (int pc : ech.pivot_cols)
        if (pc == static_cast<int>(cols)) return out;  // 0 = nonzero row

    out.kernel_dim = static_cast<int>(cols) - ech.rank;
    out.status = out.kernel_dim == 0 ? LinearSolution<F>::Status::Unique
                                     : LinearSolution<F>::Status::Underdetermined;
    std::vector<F> x(cols, F());
    for (int i = ech.rank - 1; i >= 0; --i) {
        const int pc = ech.pivot_cols[i];
        F s = Traits::to_field(ech.mat[i][cols]);
        for (std::size_t j = pc + 1; j < cols; ++j)
            if (!Traits::is_zero(ech.mat[i][j]) && !(x[j] == F()))
                s -= Traits::to_field(ech.mat[i][j]) * x[j];
        x[pc] = s / Traits::to_field(ech.mat[i][pc]);
    }
    out.solution = std::move(x);
    return out;
}

inline LinearSolution<RatFunc> solve_linear(const Matrix<RatFunc>& m,
                                            const std::vector<RatFunc>& b) {
    return solve_linear_impl<QtDomain>(m, b);
}
inline LinearSolution<Rat> solve_linear(const Matrix<Rat>& m,
                                        const std::vector<Rat>& b) {
    return solve_linear_impl<RatDomain>(m, b);
}

template <class T>
int rank_of(const Matrix<T>& m) {
    if constexpr (std::is_same_v<T, Rat>)
        return echelon_of<RatDomain>(m).rank;
    else
        return echelon_of<QtDomain>(m).rank;
}

}  // namespace msw

#endif
