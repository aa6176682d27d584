#pragma once

#include "hlab/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace hlab {

/// Number of chunks an exhaustive scan over 2^bits masks is split into.
/// Depends on `bits` only.
constexpr auto mask_chunks(unsigned bits) noexcept -> std::size_t
{
    return std::size_t{1} << std::min(bits, 8U);
}

/// Visits every mask in [0, 2^bits) as visit(acc, mask, popcount(mask)).
/// Chunk c covers the masks whose high bits equal c; one accumulator per
/// chunk is created with make() and the accumulators are returned in
/// chunk order.
template <class Acc, class Make, class Visit>
auto enumerate_masks(unsigned bits, int workers, Make&& make, Visit&& visit) -> std::vector<Acc>
{
    const auto chunks = mask_chunks(bits);
    const unsigned low_bits = bits - static_cast<unsigned>(std::countr_zero(chunks));
    return map_chunks<Acc>(chunks, workers, [&](std::size_t c) {
        Acc acc = make();
        const std::uint64_t begin = static_cast<std::uint64_t>(c) << low_bits;
        const std::uint64_t end = begin + (std::uint64_t{1} << low_bits);
        for (std::uint64_t mask = begin; mask < end; ++mask)
            visit(acc, mask, static_cast<std::uint64_t>(std::popcount(mask)));
        return acc;
    });
}

} // namespace hlab
