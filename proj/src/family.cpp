#include "hlab/family.hpp"

#include "hlab/binomial.hpp"
#include "hlab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

namespace hlab {

namespace detail {

/// Every labeled edge mask on k vertices that is isomorphic to some member
/// of order k. Stored as a flat bit table for small masks, a hash set for
/// masks up to 64 bits, and canonical codes beyond that.
struct PatternIndex {
    enum class Kind { Table, Hash, Canonical };

    int k = 0;
    int r = 0;
    std::uint64_t local_bits = 0;
    Kind kind = Kind::Table;
    std::vector<std::uint64_t> table;
    std::unordered_set<std::uint64_t> hashed;
    std::vector<CanonicalCode> codes;

    auto matches(std::uint64_t mask) const -> bool
    {
        if (kind == Kind::Table)
            return (table[mask >> 6] >> (mask & 63)) & 1U;
        return hashed.count(mask) != 0;
    }

    auto matches(std::span<const std::uint64_t> mask) const -> bool
    {
        if (kind != Kind::Canonical)
            return matches(mask.empty() ? std::uint64_t{0} : mask[0]);
        const auto g = RUniformGraph::from_mask(k, r, mask);
        return std::binary_search(codes.begin(), codes.end(), canonical_code(g));
    }
};

} // namespace detail

namespace {

constexpr std::uint64_t kTableBits = 22;
constexpr int kMaxOrbitOrder = 9;

auto build_pattern(int k, int r, const std::vector<const RUniformGraph*>& members,
                   const std::vector<const CanonicalCode*>& codes) -> std::shared_ptr<const detail::PatternIndex>
{
    auto idx = std::make_shared<detail::PatternIndex>();
    idx->k = k;
    idx->r = r;
    idx->local_bits = binom(k, r);
    if (idx->local_bits > 64 || k > kMaxOrbitOrder) {
        idx->kind = detail::PatternIndex::Kind::Canonical;
        for (const auto* c : codes)
            idx->codes.push_back(*c);
        std::sort(idx->codes.begin(), idx->codes.end());
        return idx;
    }
    if (idx->local_bits <= kTableBits) {
        idx->kind = detail::PatternIndex::Kind::Table;
        idx->table.assign(words_for(std::uint64_t{1} << idx->local_bits), 0);
    } else {
        idx->kind = detail::PatternIndex::Kind::Hash;
    }

    std::vector<int> sigma(static_cast<std::size_t>(k));
    Subset image(static_cast<std::size_t>(r));
    for (const auto* g : members) {
        const auto edges = g->edges();
        std::iota(sigma.begin(), sigma.end(), 0);
        do {
            std::uint64_t mask = 0;
            for (const auto& e : edges) {
                for (int i = 0; i < r; ++i)
                    image[i] = sigma[static_cast<std::size_t>(e[i])];
                std::sort(image.begin(), image.end());
                mask |= std::uint64_t{1} << rank_subset_unchecked(image);
            }
            if (idx->kind == detail::PatternIndex::Kind::Table)
                idx->table[mask >> 6] |= std::uint64_t{1} << (mask & 63);
            else
                idx->hashed.insert(mask);
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    return idx;
}

} // namespace

auto normalize_family(std::vector<RUniformGraph> raw) -> ForbiddenFamily
{
    if (raw.empty())
        throw ConstructionError("forbidden family must be nonempty");
    const int r = raw.front().uniformity();
    for (const auto& g : raw) {
        if (g.uniformity() != r)
            throw ConstructionError("forbidden family mixes uniformities");
        if (g.order() < r)
            throw ConstructionError("family member with " + std::to_string(g.order()) +
                                    " vertices cannot carry an edge of size " + std::to_string(r));
    }

    std::vector<std::pair<CanonicalCode, RUniformGraph>> keyed;
    keyed.reserve(raw.size());
    for (auto& g : raw) {
        auto code = canonical_code(g);
        keyed.emplace_back(std::move(code), std::move(g));
    }
    // CanonicalCode orders by (r, n, mask), i.e. by (order, code).
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    keyed.erase(std::unique(keyed.begin(), keyed.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                keyed.end());

    ForbiddenFamily fam;
    fam.r_ = r;
    for (auto& [code, g] : keyed) {
        fam.codes_.push_back(std::move(code));
        fam.members_.push_back(std::move(g));
    }
    fam.t_ = fam.members_.front().order();

    std::size_t i = 0;
    while (i < fam.members_.size()) {
        const int k = fam.members_[i].order();
        std::vector<const RUniformGraph*> same;
        std::vector<const CanonicalCode*> same_codes;
        for (; i < fam.members_.size() && fam.members_[i].order() == k; ++i) {
            same.push_back(&fam.members_[i]);
            same_codes.push_back(&fam.codes_[i]);
        }
        fam.patterns_.push_back(build_pattern(k, r, same, same_codes));
    }
    return fam;
}

struct FamilyMatcher::OrderClass {
    std::shared_ptr<const detail::PatternIndex> pattern;
    std::vector<int> ground;
    std::uint64_t subsets = 0;
    std::vector<Subset> local_rsets;
    std::vector<std::uint32_t> table;
    bool precomputed = false;
};

namespace {

constexpr std::uint64_t kMaxPrecomputedEntries = std::uint64_t{1} << 23;

inline auto bit_of(std::span<const std::uint64_t> mask, std::uint64_t rank) noexcept -> std::uint64_t
{
    return (mask[rank >> 6] >> (rank & 63)) & 1U;
}

} // namespace

FamilyMatcher::FamilyMatcher(const ForbiddenFamily& fam, int n, std::vector<int> ground) : n_(n), r_(fam.uniformity())
{
    if (fam.size() == 0)
        throw ParameterError("matcher needs a nonempty family");
    if (ground.empty()) {
        ground.resize(static_cast<std::size_t>(n));
        std::iota(ground.begin(), ground.end(), 0);
    }
    for (std::size_t i = 0; i < ground.size(); ++i)
        if (ground[i] < 0 || ground[i] >= n || (i > 0 && ground[i] <= ground[i - 1]))
            throw MalformedSubsetError("matcher ground set must be strictly increasing within 0..n-1");

    const auto slots = binom(n, r_);
    const int g = static_cast<int>(ground.size());
    for (const auto& pattern : fam.patterns()) {
        if (pattern->k > g)
            continue;
        OrderClass oc;
        oc.pattern = pattern;
        oc.ground = ground;
        oc.subsets = binom(g, pattern->k);
        oc.local_rsets = all_subsets_of(first_combination(pattern->k), r_);
        std::uint64_t entries = 0;
        const bool small = !__builtin_mul_overflow(oc.subsets, pattern->local_bits, &entries) &&
                           entries <= kMaxPrecomputedEntries && slots <= UINT32_MAX;
        if (small) {
            oc.precomputed = true;
            oc.table.reserve(static_cast<std::size_t>(entries));
            auto idx = first_combination(pattern->k);
            Subset global(static_cast<std::size_t>(r_));
            do {
                for (const auto& ls : oc.local_rsets) {
                    for (int i = 0; i < r_; ++i)
                        global[i] = ground[static_cast<std::size_t>(idx[static_cast<std::size_t>(ls[i])])];
                    oc.table.push_back(static_cast<std::uint32_t>(rank_subset_unchecked(global)));
                }
            } while (next_combination(idx, g));
        }
        classes_.push_back(std::move(oc));
    }
}

FamilyMatcher::~FamilyMatcher() = default;
FamilyMatcher::FamilyMatcher(FamilyMatcher&&) noexcept = default;
auto FamilyMatcher::operator=(FamilyMatcher&&) noexcept -> FamilyMatcher& = default;

namespace {

/// Calls visit(matched) for each k-subset of the class's ground set;
/// stops early when visit returns false.
template <class OrderClassT, class Visit>
void scan_class(const OrderClassT& oc, int r, std::span<const std::uint64_t> mask, Visit&& visit)
{
    const auto& pat = *oc.pattern;
    const auto bits = pat.local_bits;
    const bool wide = pat.kind == detail::PatternIndex::Kind::Canonical;
    std::vector<std::uint64_t> wide_mask(wide ? words_for(bits) : 0);

    auto check = [&](auto&& rank_of) -> bool {
        if (!wide) {
            std::uint64_t local = 0;
            for (std::uint64_t j = 0; j < bits; ++j)
                local |= bit_of(mask, rank_of(j)) << j;
            return pat.matches(local);
        }
        std::fill(wide_mask.begin(), wide_mask.end(), 0);
        for (std::uint64_t j = 0; j < bits; ++j)
            wide_mask[j >> 6] |= bit_of(mask, rank_of(j)) << (j & 63);
        return pat.matches(std::span<const std::uint64_t>(wide_mask));
    };

    if (oc.precomputed) {
        const std::uint32_t* row = oc.table.data();
        for (std::uint64_t s = 0; s < oc.subsets; ++s, row += bits) {
            if (!visit(check([row](std::uint64_t j) { return static_cast<std::uint64_t>(row[j]); })))
                return;
        }
        return;
    }

    const int g = static_cast<int>(oc.ground.size());
    auto idx = first_combination(pat.k);
    Subset global(static_cast<std::size_t>(r));
    do {
        auto rank_of = [&](std::uint64_t j) {
            const auto& ls = oc.local_rsets[static_cast<std::size_t>(j)];
            for (int i = 0; i < r; ++i)
                global[i] = oc.ground[static_cast<std::size_t>(idx[static_cast<std::size_t>(ls[i])])];
            return rank_subset_unchecked(global);
        };
        if (!visit(check(rank_of)))
            return;
    } while (next_combination(idx, g));
}

} // namespace

auto FamilyMatcher::contains(std::span<const std::uint64_t> mask) const -> bool
{
    for (const auto& oc : classes_) {
        bool found = false;
        scan_class(oc, r_, mask, [&](bool matched) {
            found = matched;
            return !matched;
        });
        if (found)
            return true;
    }
    return false;
}

auto FamilyMatcher::count(std::span<const std::uint64_t> mask) const -> std::uint64_t
{
    std::uint64_t total = 0;
    for (const auto& oc : classes_) {
        scan_class(oc, r_, mask, [&](bool matched) {
            total += matched ? 1 : 0;
            return true;
        });
    }
    return total;
}

namespace {

void check_uniformity(const RUniformGraph& g, const ForbiddenFamily& fam)
{
    if (fam.size() == 0)
        throw ParameterError("empty forbidden family");
    if (g.uniformity() != fam.uniformity())
        throw ParameterError("graph uniformity " + std::to_string(g.uniformity()) +
                             " differs from family uniformity " + std::to_string(fam.uniformity()));
}

} // namespace

auto contains_induced(const RUniformGraph& g, const ForbiddenFamily& fam) -> bool
{
    check_uniformity(g, fam);
    return FamilyMatcher(fam, g.order()).contains(g.words());
}

auto count_induced(const RUniformGraph& g, const ForbiddenFamily& fam) -> std::uint64_t
{
    check_uniformity(g, fam);
    return FamilyMatcher(fam, g.order()).count(g.words());
}

} // namespace hlab
