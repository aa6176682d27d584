#pragma once

#include "hlab/family.hpp"
#include "hlab/measure.hpp"
#include "hlab/predicate.hpp"
#include "hlab/steiner.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace hlab {

// Exact finite-instance checks of the block-averaging argument behind
// hereditary supersaturation. Throughout, A is a class of r-graphs on n
// vertices given as an EdgePredicate, F a forbidden family, and D_1..D_d
// the blocks of a partial Steiner system. "F < G[D]" means the subgraph
// induced on D contains an induced member of F.

struct LemmaParameters {
    Rational nu;                          // cut fraction
    std::optional<Rational> gamma;        // threshold; nu/4 when absent
    std::optional<Rational> epsilon;      // slack of the class A (reported only)
    std::optional<Rational> epsilon_prime; // slack at block order m (reported only)
    std::optional<Rational> lambda;       // demanded uncovered fraction of the system

    auto effective_gamma() const -> Rational { return gamma ? *gamma : nu / 4; }
};

/// Largest block count partition_table() indexes (cells are keyed by a
/// d-bit pattern).
inline constexpr std::uint64_t kMaxPartitionBlocks = 20;

/// theta = mu_n({G in A : F < G[block]}).
auto block_theta(const EdgePredicate& a, const Subset& block, const ForbiddenFamily& fam, int n, const Rational& p,
                 const MeasureOptions& options = {}) -> Rational;

struct LemmaReport {
    std::uint64_t d = 0;
    Rational mu_a;
    std::vector<Rational> theta;
    std::vector<std::uint64_t> index_set; // I = {i : theta_i >= gamma mu(A)}, 0-based
    Rational eta;                          // |I| / d (0 when d = 0)
    Rational gamma;
    Rational nu;

    bool theta_le_mu_a = false;   // theta_i <= mu(A) for all i
    Rational theta_sum;
    Rational theta_upper;         // (eta d + (1 - eta) gamma d) mu(A)
    bool theta_bound_holds = false;

    Rational mu_m_b;              // mu_m(Forb(F)) at block order m
    Rational tail;                // tail_mass(nu, d, mu_m_b)
    bool tail_small = false;      // tail <= mu(A) / 2
    Rational chain_lhs;           // eta + (1 - eta) gamma
    bool chain_holds = false;     // chain_lhs >= nu / 2
    bool implication_holds = false; // !tail_small || chain_holds

    std::optional<bool> lambda_met; // when a lambda was demanded
    LemmaParameters params;
};

auto lemma_report(const EdgePredicate& a, const SteinerSystem& sys, const ForbiddenFamily& fam,
                  const LemmaParameters& params, const Rational& p, const MeasureOptions& options = {})
    -> LemmaReport;

struct PartitionTable {
    std::uint64_t d = 0;
    std::map<std::uint32_t, Rational> cells; // bit i of the key set iff F < G[D_i]; nonempty cells only
    Rational mu_a;                           // computed separately from the cells
    std::vector<Rational> theta;             // computed separately with block_theta()
    Rational cell_sum;                       // sum_S mu(A_S)
    Rational weighted_sum;                   // sum_S |S| mu(A_S)
    Rational theta_sum;                      // sum_i theta_i
    bool partition_holds = false;            // cell_sum == mu_a
    bool identity_holds = false;             // weighted_sum == theta_sum
};

auto partition_table(const EdgePredicate& a, const SteinerSystem& sys, const ForbiddenFamily& fam, const Rational& p,
                     const MeasureOptions& options = {}) -> PartitionTable;

struct CellBound {
    std::uint32_t cell = 0;
    int size = 0;
    Rational measure;
    Rational bound; // mu_m(B)^(d - |S|)
    Rational slack; // bound - measure
    bool holds = false;
};

struct ProjectionReport {
    std::vector<CellBound> cells;
    bool all_hold = false;
};

/// mu(A_S) <= mu_m_b^(d - |S|) for every stored cell.
auto projection_bound_check(const PartitionTable& table, const Rational& mu_m_b, std::uint64_t d) -> ProjectionReport;

/// sum_{i=0}^{floor(nu d)} C(d, i) mu_m_b^(d - i).
auto tail_mass(const Rational& nu, std::uint64_t d, const Rational& mu_m_b) -> Rational;

struct TailDomination {
    std::uint64_t cutoff = 0; // floor(nu d)
    Rational tail;
    Rational small_mass;      // sum of mu(A_S) over |S| <= cutoff
    bool dominates = false;
};

auto tail_domination(const PartitionTable& table, const Rational& nu, const Rational& mu_m_b) -> TailDomination;

struct SupersatReport {
    int n = 0;
    int m = 0;
    int t = 0;
    Rational gamma;
    Rational mu_a;
    std::vector<Subset> x;                 // X, in colex order
    std::uint64_t x_size = 0;
    Rational eta_x;                        // |X| / C(n,m)
    Rational averaging_lhs;                // sum over all m-sets D of theta_D
    Rational averaging_rhs;                // gamma mu(A) |X|
    bool averaging_holds = false;

    std::optional<RUniformGraph> best_graph; // argmax over G in A of #{D : F < G[D]}; lowest mask on ties
    std::uint64_t best_mset_count = 0;
    bool best_meets_gamma_x = false;       // best_mset_count >= gamma |X|
    std::uint64_t distinct_copies = 0;     // count_induced(best_graph, F)
    bool copies_cover_msets = false;       // distinct_copies * C(n-t, m-t) >= best_mset_count
    Rational delta_floor;                  // gamma eta_x (2m)^-t n^t
    bool floor_met = false;                // distinct_copies >= delta_floor
    bool proviso = false;                  // n >= 2t
};

auto x_set(const EdgePredicate& a, const ForbiddenFamily& fam, int m, const Rational& gamma, int n, const Rational& p,
           const MeasureOptions& options = {}) -> SupersatReport;

struct FloorReport {
    Rational ratio; // gamma eta C(n,m) / C(n-t, m-t)
    Rational floor; // gamma eta (2m)^-t n^t
    bool ok = false;
    bool proviso = false; // n >= 2t
};

/// Requires 0 <= t <= m <= n; throws ParameterError otherwise. When the
/// proviso fails the comparison is still reported.
auto counting_floor(int n, int m, int t, const Rational& gamma, const Rational& eta) -> FloorReport;

auto to_json(const LemmaReport& rep) -> nlohmann::json;
auto to_json(const PartitionTable& table) -> nlohmann::json;
auto to_json(const ProjectionReport& rep) -> nlohmann::json;
auto to_json(const TailDomination& rep) -> nlohmann::json;
auto to_json(const SupersatReport& rep) -> nlohmann::json;
auto to_json(const FloorReport& rep) -> nlohmann::json;

} // namespace hlab
