#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace tokgraph {

/// C(n, k) with overflow detection; zero when k < 0 or k > n.
std::uint64_t binomial(int n, int k);

/// Colex rank of a strictly increasing k-subset: sum_i C(s_i, i+1).
/// S < T in colex order iff max(S Δ T) lies in T.
std::uint64_t subset_rank(std::span<const int> subset);

/// Inverse of subset_rank for k-subsets of {0..n-1}.
std::vector<int> subset_unrank(std::uint64_t rank, int n, int k);

/// Ranks of pairs {a, b} appear constantly in the 2-token code paths.
inline std::uint64_t pair_rank(int a, int b)
{
    if (a > b) std::swap(a, b);
    return static_cast<std::uint64_t>(b) * (b - 1) / 2 + a;
}

}  // namespace tokgraph
