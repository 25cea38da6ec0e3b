#ifndef MSW_PARTITION_HPP
#define MSW_PARTITION_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "msw/rat.hpp"

namespace msw {

// Integer partition: weakly decreasing positive parts.  The empty partition
// (n = 0) is allowed as a value but rejected by most operations.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) { validate(); }
    Partition(std::initializer_list<int> p) : parts(p) { validate(); }

    void validate() const {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) throw std::invalid_argument("nonpositive part");
            if (i + 1 < parts.size() && parts[i] < parts[i + 1])
                throw std::invalid_argument("parts not weakly decreasing");
        }
    }

    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }

    int part(int i) const {  // 1-based, 0 beyond the length
        return (i >= 1 && i <= length()) ? parts[i - 1] : 0;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.parts < b.parts;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + "]";
    }
};

// Cell of a diagram, zero-indexed; (row i, column j) is in D(mu) iff
// j < mu_{i+1}.
struct Cell {
    int row = 0, col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend bool operator<(const Cell& a, const Cell& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    }
};

inline bool cell_in_diagram(const Partition& mu, const Cell& c) {
    return c.row >= 0 && c.col >= 0 && c.row < mu.length() &&
           c.col < mu.parts[c.row];
}

inline std::vector<Cell> diagram_cells(const Partition& mu) {
    std::vector<Cell> cells;
    for (int i = 0; i < mu.length(); ++i)
        for (int j = 0; j < mu.parts[i]; ++j) cells.push_back({i, j});
    return cells;
}

// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            Partition p;
            p.parts = cur;
            out.push_back(std::move(p));
            return;
        }
        for (int k = std::min(rem, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rem - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline Partition conjugate(const Partition& mu) {
    Partition r;
    if (mu.empty()) return r;
    r.parts.resize(mu.parts[0]);
    for (int j = 0; j < mu.parts[0]; ++j) {
        int cnt = 0;
        for (int p : mu.parts)
            if (p > j) ++cnt;
        r.parts[j] = cnt;
    }
    return r;
}

// Dominance: every prefix sum of lambda weakly exceeds that of mu.
inline bool dominates(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("dominance requires equal sizes");
    int sl = 0, sm = 0;
    int len = std::max(lambda.length(), mu.length());
    for (int i = 1; i <= len; ++i) {
        sl += lambda.part(i);
        sm += mu.part(i);
        if (sl < sm) return false;
    }
    return true;
}

// n(mu) = sum_i (i-1) mu_i = sum of row indices over the diagram.
inline int n_stat(const Partition& mu) {
    int s = 0;
    for (int i = 0; i < mu.length(); ++i) s += i * mu.parts[i];
    return s;
}

// Arm counts cells strictly right in the same row, leg strictly below in the
// same column (zero-indexed diagram).
inline std::pair<int, int> arm_leg(const Partition& mu, const Cell& c) {
    if (!cell_in_diagram(mu, c))
        throw std::invalid_argument("cell outside diagram");
    int arm = mu.parts[c.row] - c.col - 1;
    int leg = 0;
    for (int i = c.row + 1; i < mu.length(); ++i)
        if (mu.parts[i] > c.col) ++leg;
    return {arm, leg};
}

// Hook length formula.
inline mpz_class syt_count_z(const Partition& lambda) {
    if (lambda.empty()) return 1;
    mpz_class hooks = 1;
    for (const Cell& c : diagram_cells(lambda)) {
        auto [a, l] = arm_leg(lambda, c);
        hooks *= (a + l + 1);
    }
    return factorial_z(static_cast<unsigned>(lambda.size())) / hooks;
}

inline long syt_count(const Partition& lambda) {
    return syt_count_z(lambda).get_si();
}

// Centralizer order z_tau = prod_k k^{m_k} m_k! for tau with m_k parts k.
inline mpz_class z_tau(const Partition& tau) {
    mpz_class z = 1;
    int i = 0;
    while (i < tau.length()) {
        int j = i;
        while (j < tau.length() && tau.parts[j] == tau.parts[i]) ++j;
        int mult = j - i;
        for (int r = 0; r < mult; ++r) z *= tau.parts[i];
        z *= factorial_z(static_cast<unsigned>(mult));
        i = j;
    }
    return z;
}

using CycleType = Partition;

}  // namespace msw

#endif
