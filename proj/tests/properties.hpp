#pragma once

// Randomized property suites for every module. Each suite draws its
// instances from an Rng derived from a master seed and appends every value
// it computes to a transcript, so two runs (or runs with different worker
// counts) can be compared byte for byte.

#include "hlab/rng.hpp"

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace props {

class Context {
public:
    Context(std::uint64_t master_seed, int workers) : master_seed_(master_seed), workers_(workers) {}

    auto workers() const noexcept -> int { return workers_; }
    /// A generator private to `suite`, derived from the master seed.
    auto rng(std::string_view suite) const -> hlab::Rng;

    void check(bool ok, std::string_view property, const std::string& detail = {});
    template <class T>
    void record(std::string_view key, const T& value)
    {
        transcript_ << key << '=' << value << '\n';
    }

    auto failures() const noexcept -> const std::vector<std::string>& { return failures_; }
    auto checks() const noexcept -> std::uint64_t { return checks_; }
    auto transcript() const -> std::string { return transcript_.str(); }

private:
    std::uint64_t master_seed_;
    int workers_;
    std::uint64_t checks_ = 0;
    std::vector<std::string> failures_;
    std::ostringstream transcript_;
};

void core_properties(Context& ctx);
void family_properties(Context& ctx);
void measure_properties(Context& ctx);
void steiner_properties(Context& ctx);
void supersat_properties(Context& ctx);
void extremal_properties(Context& ctx);
void cli_properties(Context& ctx);

inline constexpr std::uint64_t kMasterSeed = 20240611;

/// Every suite above, in module order.
void all_properties(Context& ctx);

} // namespace props
