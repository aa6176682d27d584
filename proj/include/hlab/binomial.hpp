#pragma once

#include <cstdint>

namespace hlab {

/// Exact C(n, k). Values for n < 128 come from a precomputed Pascal table;
/// larger arguments are computed with 128-bit intermediates. Throws
/// OverflowError when the result does not fit in 64 bits. Returns 0 for
/// k < 0 or k > n.
auto binom(std::int64_t n, std::int64_t k) -> std::uint64_t;

/// Same as binom() but never throws; returns false on overflow.
auto try_binom(std::int64_t n, std::int64_t k, std::uint64_t& out) noexcept -> bool;

} // namespace hlab
