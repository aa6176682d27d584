#include "hlab/extremal.hpp"

#include "hlab/binomial.hpp"
#include "hlab/errors.hpp"
#include "hlab/family.hpp"
#include "hlab/parallel.hpp"

#include <array>
#include <bit>
#include <string>

namespace hlab {

namespace {

auto adjacency_rows(const RUniformGraph& f) -> std::vector<std::uint32_t>
{
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(f.order()), 0);
    for (const auto& e : f.edges()) {
        adj[static_cast<std::size_t>(e[0])] |= std::uint32_t{1} << e[1];
        adj[static_cast<std::size_t>(e[1])] |= std::uint32_t{1} << e[0];
    }
    return adj;
}

/// Backtracking over vertex-to-part assignments. Parts 0..s-1 are cliques,
/// the rest independent sets; of several empty parts of one type only the
/// first is tried.
class PartitionSearch {
public:
    PartitionSearch(const std::vector<std::uint32_t>& adj, int s, int t)
        : adj_(adj), k_(static_cast<int>(adj.size())), s_(s), parts_(static_cast<std::size_t>(t), 0)
    {
    }

    auto run() -> bool { return assign(0); }

    auto witness() const -> CliqueIndependentPartition
    {
        CliqueIndependentPartition p;
        for (std::size_t j = 0; j < parts_.size(); ++j) {
            Subset members;
            for (int v = 0; v < k_; ++v)
                if (parts_[j] & (std::uint32_t{1} << v))
                    members.push_back(v);
            (static_cast<int>(j) < s_ ? p.cliques : p.independents).push_back(std::move(members));
        }
        return p;
    }

private:
    auto assign(int v) -> bool
    {
        if (v == k_)
            return true;
        const std::uint32_t bit = std::uint32_t{1} << v;
        bool empty_clique_tried = false;
        bool empty_indep_tried = false;
        for (std::size_t j = 0; j < parts_.size(); ++j) {
            const bool clique = static_cast<int>(j) < s_;
            if (parts_[j] == 0) {
                bool& tried = clique ? empty_clique_tried : empty_indep_tried;
                if (tried)
                    continue;
                tried = true;
            }
            const std::uint32_t row = adj_[static_cast<std::size_t>(v)];
            const bool fits = clique ? (parts_[j] & ~row) == 0 : (parts_[j] & row) == 0;
            if (!fits)
                continue;
            parts_[j] |= bit;
            if (assign(v + 1))
                return true;
            parts_[j] &= ~bit;
        }
        return false;
    }

    const std::vector<std::uint32_t>& adj_;
    int k_;
    int s_;
    std::vector<std::uint32_t> parts_;
};

void require_graph(const RUniformGraph& f)
{
    if (f.uniformity() != 2)
        throw ParameterError("partition parameter is defined for 2-graphs only");
}

auto edge_list_mask(int n, const std::vector<Subset>& edges, const char* what) -> std::uint64_t
{
    std::uint64_t mask = 0;
    for (const auto& e : edges) {
        if (e.size() != 2)
            throw ParameterError(std::string(what) + " contains a non-pair");
        Subset s = e;
        if (s[0] > s[1])
            std::swap(s[0], s[1]);
        if (s[0] < 0 || s[1] >= n || s[0] == s[1])
            throw ParameterError(std::string(what) + " contains an edge outside 0.." + std::to_string(n - 1));
        mask |= std::uint64_t{1} << rank_subset_unchecked(s);
    }
    return mask;
}

auto mask_edges(std::uint64_t mask) -> std::vector<Subset>
{
    std::vector<Subset> out;
    for (int b = 0; b < 64; ++b)
        if (mask & (std::uint64_t{1} << b))
            out.push_back(unrank_subset(static_cast<std::uint64_t>(b), 2));
    return out;
}

/// Lexicographically least E0 (by mask) subset of `free_edges` such that
/// every graph E0 u X, X subset of E, avoids F.
auto find_base(std::uint64_t e, std::uint64_t free_edges, const std::vector<std::uint8_t>& bad)
    -> std::optional<std::uint64_t>
{
    std::uint64_t e0 = 0;
    for (;;) {
        bool clean = !bad[e0 | e] && !bad[e0];
        if (clean) {
            // Downward from the top: graphs with many edges are the likely offenders.
            std::uint64_t x = e;
            for (;;) {
                if (bad[e0 | x]) {
                    clean = false;
                    break;
                }
                if (x == 0)
                    break;
                x = (x - 1) & e;
            }
        }
        if (clean)
            return e0;
        if (e0 == free_edges)
            return std::nullopt;
        e0 = (e0 - free_edges) & free_edges;
    }
}

} // namespace

auto find_partition(const RUniformGraph& f, int s, int t) -> std::optional<CliqueIndependentPartition>
{
    require_graph(f);
    if (f.order() > 31)
        throw SizeLimitError("partition search supports at most 31 vertices");
    if (s < 0 || s > t)
        throw ParameterError("need 0 <= s <= t");
    const auto adj = adjacency_rows(f);
    PartitionSearch search(adj, s, t);
    if (!search.run())
        return std::nullopt;
    return search.witness();
}

auto tau(const RUniformGraph& f) -> TauResult
{
    require_graph(f);
    const int k = f.order();
    if (k > kMaxTauOrder)
        throw SizeLimitError("tau supports graphs with at most " + std::to_string(kMaxTauOrder) + " vertices");
    // Level k is always satisfiable with singleton parts.
    for (int t = k - 1; t >= 0; --t) {
        for (int s = 0; s <= t; ++s) {
            if (find_partition(f, s, t))
                continue;
            TauResult res;
            res.t = t;
            res.witness_s = s;
            for (int s2 = 0; s2 <= t + 1; ++s2) {
                auto p = find_partition(f, s2, t + 1);
                if (!p)
                    throw Error("internal: level above tau is not fully partitionable");
                res.refutations.push_back(std::move(*p));
            }
            return res;
        }
    }
    throw DegenerateSubsetError("partition parameter is undefined for the graph on zero vertices");
}

auto predicted_c_half(const RUniformGraph& f) -> Rational
{
    const auto res = tau(f);
    if (res.t == 0)
        throw DegenerateSubsetError("tau(F) = 0; the prediction 1/tau is undefined");
    return Rational(1, res.t);
}

auto witness_check(int n, const RUniformGraph& f, const std::vector<Subset>& e, const std::vector<Subset>& e0)
    -> WitnessResult
{
    require_graph(f);
    if (n < 0 || binom(n, 2) > 64)
        throw SizeLimitError("witness_check supports at most 11 vertices");
    const auto em = edge_list_mask(n, e, "E");
    const auto e0m = edge_list_mask(n, e0, "E0");
    if (em & e0m)
        throw ParameterError("E and E0 overlap");
    if (std::popcount(em) > kMaxWitnessEdges)
        throw SizeLimitError("witness_check enumerates at most 2^" + std::to_string(kMaxWitnessEdges) + " subsets of E");

    WitnessResult res;
    res.ok = true;
    if (f.order() > n)
        return res;
    const FamilyMatcher matcher(normalize_family({f}), n);
    std::uint64_t x = 0;
    for (;;) {
        const std::array<std::uint64_t, 1> words{e0m | x};
        if (matcher.contains(words)) {
            res.ok = false;
            res.counterexample = mask_edges(x);
            return res;
        }
        if (x == em)
            return res;
        x = (x - em) & em;
    }
}

auto exstar(int n, const RUniformGraph& f, int workers) -> ExStarResult
{
    require_graph(f);
    if (n < 0 || n > kMaxExstarOrder)
        throw FeasibilityError("exstar supports n <= " + std::to_string(kMaxExstarOrder));
    const auto slots = static_cast<unsigned>(binom(n, 2));
    const std::uint64_t full = slots == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << slots) - 1;

    std::vector<std::uint8_t> bad(static_cast<std::size_t>(full) + 1, 0);
    if (f.order() <= n) {
        const FamilyMatcher matcher(normalize_family({f}), n);
        for (std::uint64_t g = 0; g <= full; ++g) {
            const std::array<std::uint64_t, 1> words{g};
            bad[static_cast<std::size_t>(g)] = matcher.contains(words) ? 1 : 0;
        }
    }

    constexpr std::size_t kChunk = 64;
    for (int k = static_cast<int>(slots); k >= 0; --k) {
        std::vector<std::uint64_t> candidates;
        if (k == 0) {
            candidates.push_back(0);
        } else {
            // Gosper's hack: masks with k set bits in increasing order.
            std::uint64_t e = (std::uint64_t{1} << k) - 1;
            while (e <= full) {
                candidates.push_back(e);
                const std::uint64_t c = e & (0 - e);
                const std::uint64_t r = e + c;
                if (r == 0)
                    break;
                e = (((r ^ e) >> 2) / c) | r;
            }
        }
        const auto chunks = (candidates.size() + kChunk - 1) / kChunk;
        using Found = std::optional<std::pair<std::uint64_t, std::uint64_t>>;
        const auto found = map_chunks<Found>(chunks, workers, [&](std::size_t c) -> Found {
            const auto end = std::min(candidates.size(), (c + 1) * kChunk);
            for (auto i = c * kChunk; i < end; ++i) {
                const auto e = candidates[i];
                if (auto e0 = find_base(e, full & ~e, bad))
                    return std::make_pair(e, *e0);
            }
            return std::nullopt;
        });
        for (const auto& hit : found) {
            if (hit) {
                return ExStarResult{static_cast<std::uint64_t>(k), mask_edges(hit->first), mask_edges(hit->second)};
            }
        }
    }
    throw ConstructionError("every graph on " + std::to_string(n) + " vertices contains the pattern");
}

auto to_json(const CliqueIndependentPartition& p) -> nlohmann::json
{
    return {{"s", p.cliques.size()}, {"cliques", p.cliques}, {"independents", p.independents}};
}

auto to_json(const TauResult& t) -> nlohmann::json
{
    auto refutations = nlohmann::json::array();
    for (const auto& p : t.refutations)
        refutations.push_back(to_json(p));
    return {{"t", t.t}, {"witness_s", t.witness_s}, {"refutations", std::move(refutations)}};
}

auto to_json(const WitnessResult& w) -> nlohmann::json
{
    return {{"ok", w.ok}, {"counterexample", w.counterexample ? nlohmann::json(*w.counterexample) : nlohmann::json(nullptr)}};
}

auto to_json(const ExStarResult& x) -> nlohmann::json
{
    return {{"value", x.value}, {"E", x.e}, {"E0", x.e0}};
}

} // namespace hlab
