#pragma once

#include "laptab/enumerate.hpp"
#include "laptab/gio.hpp"
#include "laptab/psd.hpp"
#include "laptab/reduce.hpp"
#include "laptab/wgraph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace laptab {

inline constexpr std::string_view kToolVersion = "laptab 0.1.0";

enum class CheckId {
    GM_WEIGHTED,
    BROUWER_WEIGHTED,
    BROUWER_01,
    TREE_BOUND,
    STAR_COROLLARY,
    BLOCK_SUMS,
    THETA_MAJ,
    GMIII,
    BIII,
    ADJ_TREE_MIN_STAR,
    ADJ_TREE_MAX_TFAM,
    LAP_TREE_MIN_PATH,
    LAP_TREE_MAX_SFAM,
    LAP_TAIL_MAX_STAR,
    LAP_TAIL_MIN_SPIDER,
    ADJMAX_GRAPHS,
};

std::string_view to_string(CheckId id);
std::optional<CheckId> parse_check_id(std::string_view name);
const std::vector<CheckId>& all_check_ids();
/// Proved statements: a Violated verdict is a bug, not a finding.
bool is_proved(CheckId id);
/// Checks over rank-one decompositions rather than graphs.
bool is_decomposition_check(CheckId id);

/// Either every k in [1, n-1] or an explicit list clipped to that interval.
struct KRange {
    bool all = true;
    std::vector<int> values;

    static KRange every() { return {}; }
    static KRange only(std::vector<int> ks) { return {false, std::move(ks)}; }
    /// "all", "3", "1,2,5" or "2-4".
    static KRange parse(std::string_view text);

    std::vector<int> resolve(int n) const { return resolve_between(1, n - 1); }
    std::vector<int> resolve_between(int lo, int hi) const;
};

struct CheckSpec {
    CheckId id = CheckId::GM_WEIGHTED;
    KRange k_range;
};

enum class BrouwerForm { Vector, Tableau };

/// Per-k checks. Each builds one report; the scan evaluates spectra once per instance.
Report check_gm_weighted(const WeightedGraph& g, int k);
/// Vector form rejects negative weights with NegativeWeight.
Report check_brouwer_weighted(const WeightedGraph& g, int k, BrouwerForm form);
Report check_brouwer_01(const WeightedGraph& g, int k);
Report check_tree_bound(const WeightedGraph& t, int k);
Report check_star_corollary(std::span<const double> weights, int k);
Report check_block_sums(const WeightedGraph& g, int k);

/// Bound vector of the weighted star corollary.
std::vector<double> star_corollary_bound(std::span<const double> weights);
/// Edge weights of a star centered at vertex 0, in leaf order.
std::vector<double> star_weights(const WeightedGraph& g);

/// Every report of `id` on one graph instance for the k values in range that
/// satisfy the statement's hypotheses. Conjecture violations are re-checked.
std::vector<Report> evaluate_instance(CheckId id, const Instance& inst, const KRange& ks);

/// Seeded random decompositions for the decomposition checks.
struct DecompositionSource {
    int n_min = 3;
    int n_max = 8;
    std::uint64_t count = 0;
    std::uint64_t seed = 0;

    /// Order, term count and vectors drawn from mix(seed, index). Term
    /// counts are chosen to satisfy the hypotheses of `id`.
    RankOneDecomposition instance(CheckId id, std::uint64_t index) const;
};

std::vector<Report> evaluate_decomposition(CheckId id, const RankOneDecomposition& d, const std::string& instance_id,
                                           const KRange& ks, std::optional<std::uint64_t> seed);

struct GroupStats {
    std::uint64_t reports = 0;
    std::uint64_t violations = 0;
    std::uint64_t marginal = 0;
    double min_slack = 0.0;
    std::string argmin_instance;
};

struct ScanSummary {
    CheckId id = CheckId::GM_WEIGHTED;
    std::uint64_t instances = 0;
    std::uint64_t reports = 0;
    std::uint64_t violations = 0;
    std::uint64_t marginal = 0;
    /// Initial violations cleared by the re-check at 1000x tighter tolerances.
    std::uint64_t retracted = 0;
    /// Instances where no k satisfied the statement's hypotheses.
    std::uint64_t not_applicable = 0;
    std::uint64_t errors = 0;
    std::vector<std::string> error_messages;
    std::optional<double> min_slack;
    std::string argmin_instance;
    int argmin_k = 0;
    /// Keyed "n=..,k=.." (with ",t=..,s=.." for ADJMAX_GRAPHS).
    std::map<std::string, GroupStats> groups;
    std::vector<std::string> counterexample_files;
};

struct ScanOptions {
    KRange k_range;
    /// 0 selects LAPTAB_WORKERS or the hardware concurrency.
    int workers = 0;
    /// Directory for confirmed counterexamples (.wel); none when empty.
    std::string counterexample_dir;
};

struct ScanResult {
    std::vector<Report> reports;
    ScanSummary summary;
};

int default_workers();

ScanResult scan(CheckId id, const InstanceStream& stream, const ScanOptions& options);
ScanResult scan_decompositions(CheckId id, const DecompositionSource& source, const ScanOptions& options);

/// Per (k, t): the smallest s such that no group with s' >= s has violations.
std::map<std::string, int> adjmax_thresholds(const ScanSummary& summary);

std::string format_summary(const ScanSummary& summary);

enum class ArrangementObjective { LaplacianSum, AdjacencySum };
enum class ArrangementSense { Max, Min };

struct ArrangementResult {
    WeightedGraph best;
    double value = 0.0;
    bool exhaustive = false;
    std::uint64_t evaluations = 0;
};

inline constexpr double kExhaustiveLimit = 3628800.0;

/// Places the weights (padded with zeros to C(n,2)) on the pairs of K_n to
/// extremize the sum of the k largest eigenvalues. Exhaustive over distinct
/// placements when there are at most 10! of them (or n <= 5), otherwise
/// seeded hill climbing with pair swaps for `budget` evaluations.
ArrangementResult search_arrangement(int n, std::span<const double> weights, int k, ArrangementObjective objective,
                                     ArrangementSense sense, std::uint64_t budget, std::uint64_t seed);

/// Graph on n vertices whose pair weights (lexicographic i<j) are a.
WeightedGraph graph_from_pair_vector(int n, std::span<const double> a);
/// a -> sum of the k largest restricted Laplacian eigenvalues of that graph.
VectorFunction pair_vector_laplacian_sum(int n, int k);
/// a -> sum of the first k conjugate degrees.
VectorFunction pair_vector_gm_rhs(int n, int k);
/// a -> sum of the first k weight-tableau rows.
VectorFunction pair_vector_tableau_rhs(int n, int k);

} // namespace laptab
