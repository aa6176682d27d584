#include "hlab/subset.hpp"

#include "hlab/binomial.hpp"
#include "hlab/errors.hpp"

#include <numeric>
#include <string>

namespace hlab {

auto rank_subset(std::span<const int> s, int r) -> std::uint64_t
{
    if (static_cast<int>(s.size()) != r)
        throw MalformedSubsetError("subset has " + std::to_string(s.size()) + " elements, expected " +
                                   std::to_string(r));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0)
            throw MalformedSubsetError("negative subset element");
        if (i > 0 && s[i] <= s[i - 1])
            throw MalformedSubsetError("subset elements must be strictly increasing");
    }
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (__builtin_add_overflow(rank, binom(s[i], static_cast<std::int64_t>(i) + 1), &rank))
            throw OverflowError("subset rank exceeds 64 bits");
    }
    return rank;
}

auto rank_subset_unchecked(std::span<const int> s) noexcept -> std::uint64_t
{
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::uint64_t c = 0;
        try_binom(s[i], static_cast<std::int64_t>(i) + 1, c);
        rank += c;
    }
    return rank;
}

auto unrank_subset(std::uint64_t k, int r) -> Subset
{
    if (r < 0)
        throw ParameterError("negative uniformity");
    Subset out(static_cast<std::size_t>(r));
    for (int i = r; i >= 1; --i) {
        // Largest a with C(a, i) <= k; C(i-1, i) = 0 so a >= i-1.
        std::int64_t lo = i - 1;
        std::int64_t step = 1;
        std::int64_t hi = lo + step;
        std::uint64_t c = 0;
        while (try_binom(hi, i, c) && c <= k) {
            lo = hi;
            step *= 2;
            hi = lo + step;
        }
        while (hi - lo > 1) {
            const std::int64_t mid = lo + (hi - lo) / 2;
            if (try_binom(mid, i, c) && c <= k)
                lo = mid;
            else
                hi = mid;
        }
        out[static_cast<std::size_t>(i - 1)] = static_cast<int>(lo);
        k -= binom(lo, i);
    }
    return out;
}

auto next_combination(std::span<int> s, int n) noexcept -> bool
{
    const auto k = s.size();
    for (std::size_t i = 0; i < k; ++i) {
        const int limit = (i + 1 < k) ? s[i + 1] : n;
        if (s[i] + 1 < limit) {
            ++s[i];
            for (std::size_t j = 0; j < i; ++j)
                s[j] = static_cast<int>(j);
            return true;
        }
    }
    return false;
}

auto first_combination(int k) -> Subset
{
    Subset s(static_cast<std::size_t>(k));
    std::iota(s.begin(), s.end(), 0);
    return s;
}

auto all_subsets_of(std::span<const int> ground, int k) -> std::vector<Subset>
{
    std::vector<Subset> out;
    const int g = static_cast<int>(ground.size());
    if (k < 0 || k > g)
        return out;
    auto idx = first_combination(k);
    do {
        Subset s(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            s[i] = ground[static_cast<std::size_t>(idx[i])];
        out.push_back(std::move(s));
    } while (next_combination(idx, g));
    return out;
}

} // namespace hlab
