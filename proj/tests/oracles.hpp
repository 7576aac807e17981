#pragma once

// Test-only oracles. Nothing here calls into the code paths it is used to
// check: permutations are plain vectors, S_d is walked with
// std::next_permutation, and partition counts use a parts-bounded table.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using Images = std::vector<int>; // 0-based one-line

inline std::vector<int> cycle_lengths(const Images& p)
{
    std::vector<bool> seen(p.size(), false);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i])
            continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

/// Visits all d! permutations in lexicographic order.
inline void for_each_perm(int d, const std::function<void(const Images&)>& visit)
{
    Images p(static_cast<std::size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    do {
        visit(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

inline Images canonical(const std::vector<int>& lam)
{
    Images img;
    int start = 0;
    for (int k : lam) {
        for (int i = 0; i < k; ++i)
            img.push_back(start + (i + 1) % k);
        start += k;
    }
    return img;
}

/// #{(s, t) : type s = mu, type t = nu, t(s(x)) = pi(x)} by a walk over S_d x C_mu.
inline std::uint64_t naive_factorizations(const std::vector<int>& mu, const std::vector<int>& nu,
                                          const std::vector<int>& lam, bool sigma_first = true)
{
    int d = std::accumulate(lam.begin(), lam.end(), 0);
    auto pi = canonical(lam);
    std::vector<Images> class_mu, class_nu;
    for_each_perm(d, [&](const Images& p) {
        auto t = cycle_lengths(p);
        if (t == mu)
            class_mu.push_back(p);
        if (t == nu)
            class_nu.push_back(p);
    });
    std::uint64_t count = 0;
    for (const auto& s : class_mu)
        for (const auto& t : class_nu) {
            bool ok = true;
            for (int x = 0; x < d && ok; ++x) {
                int y = sigma_first ? t[static_cast<std::size_t>(s[static_cast<std::size_t>(x)])]
                                    : s[static_cast<std::size_t>(t[static_cast<std::size_t>(x)])];
                ok = y == pi[static_cast<std::size_t>(x)];
            }
            count += ok;
        }
    return count;
}

/// Number of partitions of n into parts of size at most k (classic table).
inline std::uint64_t partitions_bounded(int n, int k)
{
    std::vector<std::vector<std::uint64_t>> table(static_cast<std::size_t>(n + 1),
                                                  std::vector<std::uint64_t>(static_cast<std::size_t>(k + 1), 0));
    for (int j = 0; j <= k; ++j)
        table[0][static_cast<std::size_t>(j)] = 1;
    for (int m = 1; m <= n; ++m)
        for (int j = 1; j <= k; ++j) {
            auto& cell = table[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)];
            cell = table[static_cast<std::size_t>(m)][static_cast<std::size_t>(j - 1)];
            if (m >= j)
                cell += table[static_cast<std::size_t>(m - j)][static_cast<std::size_t>(j)];
        }
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

inline std::uint64_t partitions(int n)
{
    return partitions_bounded(n, std::max(n, 1));
}

/// Partitions of m with at most `max_parts` parts (conjugate of bounded part size).
inline std::uint64_t partitions_with_at_most_parts(int m, int max_parts)
{
    if (max_parts <= 0)
        return m == 0 ? 1 : 0;
    return partitions_bounded(m, max_parts);
}

} // namespace oracle
