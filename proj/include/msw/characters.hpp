#ifndef MSW_CHARACTERS_HPP
#define MSW_CHARACTERS_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "msw/partition.hpp"

namespace msw {

namespace detail {

// Murnaghan-Nakayama on beta-sets: remove an r-strip from lambda by
// subtracting r from one first-column hook length; the crossing count gives
// the sign.
inline long mn_recurse(const std::vector<int>& betas,
                       const std::vector<int>& tau, std::size_t ti,
                       std::map<std::pair<std::vector<int>, std::size_t>, long>& memo);

inline std::vector<int> beta_set(const Partition& lambda) {
    std::vector<int> b(lambda.parts.begin(), lambda.parts.end());
    int l = lambda.length();
    for (int i = 0; i < l; ++i) b[i] += l - 1 - i;  // strictly decreasing
    return b;
}

inline long mn_recurse(const std::vector<int>& betas,
                       const std::vector<int>& tau, std::size_t ti,
                       std::map<std::pair<std::vector<int>, std::size_t>, long>& memo) {
    if (ti == tau.size()) return 1;
    auto key = std::make_pair(betas, ti);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const int r = tau[ti];
    long total = 0;
    for (std::size_t i = 0; i < betas.size(); ++i) {
        int target = betas[i] - r;
        if (target < 0) continue;
        bool clash = false;
        int crossings = 0;
        for (std::size_t j = 0; j < betas.size(); ++j) {
            if (j == i) continue;
            if (betas[j] == target) { clash = true; break; }
            if (betas[j] < betas[i] && betas[j] > target) ++crossings;
        }
        if (clash) continue;
        std::vector<int> next = betas;
        next[i] = target;
        std::sort(next.begin(), next.end(), std::greater<int>());
        long sub = mn_recurse(next, tau, ti + 1, memo);
        total += (crossings % 2 == 0) ? sub : -sub;
    }
    memo[key] = total;
    return total;
}

}  // namespace detail

// chi^lambda evaluated on the class of cycle type tau.
inline long character_value(const Partition& lambda, const CycleType& tau) {
    if (lambda.size() != tau.size())
        throw std::invalid_argument("character: size mismatch");
    if (lambda.empty()) return 1;
    std::map<std::pair<std::vector<int>, std::size_t>, long> memo;
    return detail::mn_recurse(detail::beta_set(lambda), tau.parts, 0, memo);
}

// Full character table for S_n: table[l][t] = chi^{lambda_l}(tau_t), with
// both axes in reverse-lexicographic partition order.
struct CharacterTable {
    int n;
    std::vector<Partition> partitions;
    std::vector<std::vector<long>> table;
};

inline CharacterTable character_table(int n) {
    CharacterTable ct;
    ct.n = n;
    ct.partitions = enumerate_partitions(n);
    const std::size_t m = ct.partitions.size();
    ct.table.assign(m, std::vector<long>(m, 0));
    for (std::size_t l = 0; l < m; ++l)
        for (std::size_t t = 0; t < m; ++t)
            ct.table[l][t] = character_value(ct.partitions[l], ct.partitions[t]);
    return ct;
}

}  // namespace msw

#endif
