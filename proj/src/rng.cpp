#include "hlab/rng.hpp"

namespace hlab {

namespace {

constexpr auto rotl(std::uint64_t x, int k) noexcept -> std::uint64_t
{
    return (x << k) | (x >> (64 - k));
}

constexpr std::array<std::uint64_t, 4> kJump = {
    0x180ec6d33cfd0abaULL, 0xd5a61266f0c9392cULL, 0xa9582618e03fc9aaULL, 0x39abdc4529b1661cULL};

} // namespace

auto splitmix64(std::uint64_t& state) noexcept -> std::uint64_t
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) noexcept : seed_(seed)
{
    std::uint64_t sm = seed;
    for (auto& word : s_)
        word = splitmix64(sm);
}

auto Rng::next() noexcept -> std::uint64_t
{
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

auto Rng::below(std::uint64_t bound) noexcept -> std::uint64_t
{
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<unsigned __int128>(next()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

auto Rng::unit() noexcept -> double
{
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

auto Rng::bernoulli(std::uint64_t num, std::uint64_t den) noexcept -> bool
{
    return below(den) < num;
}

void Rng::jump() noexcept
{
    std::array<std::uint64_t, 4> acc{};
    for (const auto word : kJump) {
        for (int b = 0; b < 64; ++b) {
            if (word & (std::uint64_t{1} << b)) {
                for (int i = 0; i < 4; ++i)
                    acc[i] ^= s_[i];
            }
            next();
        }
    }
    s_ = acc;
}

auto Rng::substream(std::uint64_t i) const noexcept -> Rng
{
    Rng out(seed_);
    for (std::uint64_t k = 0; k < i; ++k)
        out.jump();
    return out;
}

} // namespace hlab
