#ifndef MSW_TESTS_ORACLE_HPP
#define MSW_TESTS_ORACLE_HPP

// Test-only oracle: textbook Gaussian elimination with field division.
// Deliberately independent of the fraction-free path in msw/linalg.hpp.

#include <optional>
#include <vector>

namespace oracle {

template <class F>
struct Rref {
    std::vector<std::vector<F>> mat;
    std::vector<int> pivot_cols;
    int rank = 0;
};

template <class F>
Rref<F> rref(std::vector<std::vector<F>> m) {
    Rref<F> out;
    if (m.empty()) return out;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == F()) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        F lead = m[r][c];
        for (std::size_t j = 0; j < cols; ++j) m[r][j] = m[r][j] / lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == F()) continue;
            F f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] = m[i][j] - f * m[r][j];
        }
        out.pivot_cols.push_back(static_cast<int>(c));
        ++r;
    }
    out.rank = static_cast<int>(r);
    m.resize(r);
    out.mat = std::move(m);
    return out;
}

template <class F>
std::vector<std::vector<F>> kernel(const std::vector<std::vector<F>>& m,
                                   std::size_t cols) {
    auto e = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<F> v(cols, F());
        v[fc] = F(1);
        for (int i = 0; i < e.rank; ++i)
            v[e.pivot_cols[i]] = -e.mat[i][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve M x = b; returns particular solution or nullopt when inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const std::vector<std::vector<F>>& m,
                                    const std::vector<F>& b) {
    if (m.empty()) return std::vector<F>{};
    const std::size_t cols = m[0].size();
    std::vector<std::vector<F>> aug = m;
    for (std::size_t i = 0; i < m.size(); ++i) aug[i].push_back(b[i]);
    auto e = rref(aug);
    for (int pc : e.pivot_cols)
        if (pc == static_cast<int>(cols)) return std::nullopt;
    std::vector<F> x(cols, F());
    for (int i = 0; i < e.rank; ++i) x[e.pivot_cols[i]] = e.mat[i][cols];
    return x;
}

}  // namespace oracle

#endif
