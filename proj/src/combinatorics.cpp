#include "tokgraph/combinatorics.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace tokgraph {

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) {
        // c * (n - k + i) / i is exact at every step.
        const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        if (c > std::numeric_limits<std::uint64_t>::max() / num)
            throw std::overflow_error("binomial(" + std::to_string(n) + "," + std::to_string(k) + ") overflows");
        c = c * num / static_cast<std::uint64_t>(i);
    }
    return c;
}

std::uint64_t subset_rank(std::span<const int> subset)
{
    std::uint64_t r = 0;
    int prev = -1;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] <= prev) throw std::invalid_argument("subset must be strictly increasing and non-negative");
        prev = subset[i];
        r += binomial(subset[i], static_cast<int>(i) + 1);
    }
    return r;
}

std::vector<int> subset_unrank(std::uint64_t rank, int n, int k)
{
    if (k < 0 || k > n) throw std::out_of_range("subset size out of range");
    if (rank >= binomial(n, k)) throw std::out_of_range("rank " + std::to_string(rank) + " out of range");
    std::vector<int> s(static_cast<std::size_t>(k));
    int top = n - 1;
    for (int i = k; i >= 1; --i) {
        // Largest element c with C(c, i) <= rank.
        while (binomial(top, i) > rank) --top;
        s[i - 1] = top;
        rank -= binomial(top, i);
        --top;
    }
    return s;
}

}  // namespace tokgraph
