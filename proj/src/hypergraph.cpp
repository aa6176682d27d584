#include "hlab/hypergraph.hpp"

#include "hlab/binomial.hpp"
#include "hlab/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace hlab {

namespace {

void check_shape(int n, int r)
{
    if (r < 1)
        throw ParameterError("uniformity must be at least 1");
    if (n < 0)
        throw ParameterError("vertex count must be nonnegative");
}

auto compare_masks(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) -> std::strong_ordering
{
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i])
            return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
}

} // namespace

RUniformGraph::RUniformGraph(int n, int r) : n_(n), r_(r)
{
    check_shape(n, r);
    slots_ = binom(n, r);
    words_.assign(words_for(slots_), 0);
}

auto RUniformGraph::from_edges(int n, int r, std::span<const Subset> edges) -> RUniformGraph
{
    RUniformGraph g(n, r);
    for (const auto& e : edges)
        g.set_edge(e);
    return g;
}

auto RUniformGraph::from_mask(int n, int r, std::span<const std::uint64_t> words) -> RUniformGraph
{
    RUniformGraph g(n, r);
    if (words.size() < g.words_.size())
        throw ParameterError("edge mask shorter than C(n,r) bits");
    std::copy_n(words.begin(), g.words_.size(), g.words_.begin());
    for (std::size_t i = g.words_.size(); i < words.size(); ++i)
        if (words[i] != 0)
            throw ParameterError("edge mask has bits beyond C(n,r)");
    if (const auto tail = g.slots_ & 63; tail != 0 && !g.words_.empty()) {
        if (g.words_.back() >> tail)
            throw ParameterError("edge mask has bits beyond C(n,r)");
    }
    return g;
}

auto RUniformGraph::complete(int n, int r) -> RUniformGraph
{
    RUniformGraph g(n, r);
    for (std::uint64_t k = 0; k < g.slots_; ++k)
        g.set_edge(k);
    return g;
}

auto RUniformGraph::has_edge(std::span<const int> e) const -> bool
{
    const auto rank = rank_subset(e, r_);
    if (!e.empty() && e.back() >= n_)
        throw MalformedSubsetError("edge vertex out of range");
    return has_edge(rank);
}

void RUniformGraph::set_edge(std::uint64_t rank, bool present)
{
    if (rank >= slots_)
        throw MalformedSubsetError("edge rank " + std::to_string(rank) + " out of range");
    const std::uint64_t bit = std::uint64_t{1} << (rank & 63);
    if (present)
        words_[rank >> 6] |= bit;
    else
        words_[rank >> 6] &= ~bit;
}

void RUniformGraph::set_edge(std::span<const int> e, bool present)
{
    const auto rank = rank_subset(e, r_);
    if (!e.empty() && e.back() >= n_)
        throw MalformedSubsetError("edge vertex " + std::to_string(e.back()) + " out of range");
    set_edge(rank, present);
}

auto RUniformGraph::edge_count() const noexcept -> std::uint64_t
{
    std::uint64_t c = 0;
    for (const auto w : words_)
        c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
}

auto RUniformGraph::edges() const -> std::vector<Subset>
{
    std::vector<Subset> out;
    if (n_ < r_)
        return out;
    auto e = first_combination(r_);
    std::uint64_t rank = 0;
    do {
        if (has_edge(rank))
            out.push_back(e);
        ++rank;
    } while (next_combination(e, n_));
    return out;
}

auto induced_subgraph(const RUniformGraph& g, std::span<const int> d) -> RUniformGraph
{
    const int r = g.uniformity();
    const int k = static_cast<int>(d.size());
    if (k < r)
        throw DegenerateSubsetError("vertex subset of size " + std::to_string(k) + " is smaller than r=" +
                                    std::to_string(r));
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 0 || d[i] >= g.order() || (i > 0 && d[i] <= d[i - 1]))
            throw MalformedSubsetError("induced_subgraph needs a strictly increasing subset of the vertices");
    }
    RUniformGraph out(k, r);
    auto local = first_combination(r);
    Subset global(static_cast<std::size_t>(r));
    std::uint64_t local_rank = 0;
    do {
        for (int i = 0; i < r; ++i)
            global[i] = d[static_cast<std::size_t>(local[i])];
        if (g.has_edge(rank_subset_unchecked(global)))
            out.set_edge(local_rank);
        ++local_rank;
    } while (next_combination(local, k));
    return out;
}

auto permute(const RUniformGraph& g, std::span<const int> sigma) -> RUniformGraph
{
    const int n = g.order();
    if (static_cast<int>(sigma.size()) != n)
        throw ParameterError("permutation length differs from vertex count");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (const int v : sigma) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw ParameterError("sigma is not a permutation of the vertex set");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    RUniformGraph out(n, g.uniformity());
    for (auto e : g.edges()) {
        for (auto& v : e)
            v = sigma[static_cast<std::size_t>(v)];
        std::sort(e.begin(), e.end());
        out.set_edge(rank_subset_unchecked(e));
    }
    return out;
}

auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) -> std::strong_ordering
{
    if (auto c = a.r <=> b.r; c != 0)
        return c;
    if (auto c = a.n <=> b.n; c != 0)
        return c;
    return compare_masks(a.words, b.words);
}

auto default_canonical_bound(int r) noexcept -> int
{
    return r <= 2 ? 10 : 8;
}

auto canonical_code(const RUniformGraph& g, int bound) -> CanonicalCode
{
    const int n = g.order();
    const int r = g.uniformity();
    if (bound < 0)
        bound = default_canonical_bound(r);
    if (n > bound)
        throw SizeLimitError("canonical_code: n=" + std::to_string(n) + " exceeds bound " + std::to_string(bound));

    const auto edges = g.edges();
    const auto nwords = g.words().size();
    std::vector<std::uint64_t> best(g.words().begin(), g.words().end());
    std::vector<std::uint64_t> cur(nwords);
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    Subset image(static_cast<std::size_t>(r));

    // Pair ranks looked up directly for graphs; generic ranking otherwise.
    std::vector<std::uint32_t> pair_rank;
    if (r == 2) {
        pair_rank.assign(static_cast<std::size_t>(n * n), 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b) {
                    const int lo = std::min(a, b);
                    const int hi = std::max(a, b);
                    pair_rank[static_cast<std::size_t>(a * n + b)] =
                        static_cast<std::uint32_t>(binom(hi, 2) + static_cast<std::uint64_t>(lo));
                }
    }

    while (std::next_permutation(sigma.begin(), sigma.end())) {
        std::fill(cur.begin(), cur.end(), 0);
        for (const auto& e : edges) {
            std::uint64_t rank = 0;
            if (r == 2) {
                rank = pair_rank[static_cast<std::size_t>(sigma[e[0]] * n + sigma[e[1]])];
            } else {
                for (int i = 0; i < r; ++i)
                    image[i] = sigma[static_cast<std::size_t>(e[i])];
                std::sort(image.begin(), image.end());
                rank = rank_subset_unchecked(image);
            }
            cur[rank >> 6] |= std::uint64_t{1} << (rank & 63);
        }
        if (compare_masks(cur, best) < 0)
            best = cur;
    }
    return CanonicalCode{n, r, std::move(best)};
}

auto to_probability(const Rational& p) -> Probability
{
    if (p < 0 || p > 1)
        throw ParameterError("edge probability " + to_string(p) + " outside [0,1]");
    const BigInt& num = boost::multiprecision::numerator(p);
    const BigInt& den = boost::multiprecision::denominator(p);
    if (den > BigInt(UINT64_MAX))
        throw ParameterError("edge probability denominator exceeds 64 bits");
    return Probability{static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den)};
}

void fill_random_mask(std::span<std::uint64_t> words, std::uint64_t slots, Probability p, Rng& rng)
{
    std::fill(words.begin(), words.end(), 0);
    for (std::uint64_t k = 0; k < slots; ++k) {
        if (rng.bernoulli(p.num, p.den))
            words[k >> 6] |= std::uint64_t{1} << (k & 63);
    }
}

auto random_graph(int n, int r, const Rational& p, Rng& rng) -> RUniformGraph
{
    const auto prob = to_probability(p);
    RUniformGraph g(n, r);
    std::vector<std::uint64_t> words(g.words().size());
    fill_random_mask(words, g.slots(), prob, rng);
    return RUniformGraph::from_mask(n, r, words);
}

} // namespace hlab
