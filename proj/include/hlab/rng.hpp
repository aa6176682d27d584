#pragma once

#include <array>
#include <cstdint>

namespace hlab {

/// The one pseudo-random generator used throughout: xoshiro256** 1.0.
///
/// Seeding: the 256-bit state is filled with four consecutive outputs of
/// SplitMix64 started at `seed` (increment 0x9e3779b97f4a7c15, multipliers
/// 0xbf58476d1ce4e5b9 and 0x94d049bb133111eb, shifts 30/27/31).
///
/// Substreams: substream(i) is the seeded state advanced by i applications
/// of the standard xoshiro256 jump polynomial (2^128 steps each), so
/// substreams never overlap for fewer than 2^128 draws each.
///
/// Bounded integers use Lemire's multiply-and-reject method, so the output
/// is bit-identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept;

    auto seed() const noexcept -> std::uint64_t { return seed_; }

    auto next() noexcept -> std::uint64_t;

    /// Uniform in [0, bound). bound must be nonzero.
    auto below(std::uint64_t bound) noexcept -> std::uint64_t;

    /// Uniform double in [0, 1) with 53 random bits.
    auto unit() noexcept -> double;

    /// Bernoulli(num/den) with den > 0, num <= den. Always consumes at
    /// least one draw.
    auto bernoulli(std::uint64_t num, std::uint64_t den) noexcept -> bool;

    /// Independent generator for task index i.
    auto substream(std::uint64_t i) const noexcept -> Rng;

    void jump() noexcept;

private:
    std::uint64_t seed_;
    std::array<std::uint64_t, 4> s_{};
};

auto splitmix64(std::uint64_t& state) noexcept -> std::uint64_t;

} // namespace hlab
