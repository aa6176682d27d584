#include "hlab/binomial.hpp"

#include "hlab/errors.hpp"

#include <array>
#include <string>

namespace hlab {

namespace {

constexpr int kTableSize = 128;

struct PascalTable {
    std::array<std::array<std::uint64_t, kTableSize>, kTableSize> value{};
    std::array<std::array<bool, kTableSize>, kTableSize> overflow{};

    PascalTable()
    {
        for (int n = 0; n < kTableSize; ++n) {
            value[n][0] = 1;
            for (int k = 1; k <= n; ++k) {
                const bool of = overflow[n - 1][k - 1] || overflow[n - 1][k];
                std::uint64_t sum = 0;
                const bool add_of = __builtin_add_overflow(value[n - 1][k - 1], value[n - 1][k], &sum);
                overflow[n][k] = of || add_of;
                value[n][k] = overflow[n][k] ? 0 : sum;
            }
        }
    }
};

auto table() -> const PascalTable&
{
    static const PascalTable t;
    return t;
}

} // namespace

auto try_binom(std::int64_t n, std::int64_t k, std::uint64_t& out) noexcept -> bool
{
    if (k < 0 || n < 0 || k > n) {
        out = 0;
        return true;
    }
    if (n < kTableSize) {
        const auto& t = table();
        if (t.overflow[n][k])
            return false;
        out = t.value[n][k];
        return true;
    }
    if (k > n - k)
        k = n - k;
    // C(n, i) = C(n, i-1) * (n - k + i) / i stays integral at every step.
    unsigned __int128 acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned __int128>(n - k + i);
        acc /= static_cast<unsigned __int128>(i);
        if (acc > static_cast<unsigned __int128>(UINT64_MAX))
            return false;
    }
    out = static_cast<std::uint64_t>(acc);
    return true;
}

auto binom(std::int64_t n, std::int64_t k) -> std::uint64_t
{
    std::uint64_t out = 0;
    if (!try_binom(n, k, out))
        throw OverflowError("binomial C(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds 64 bits");
    return out;
}

} // namespace hlab
