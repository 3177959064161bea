#pragma once

#include "laptab/wgraph.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace laptab {

/// Unweighted star with center 0.
WeightedGraph star(int n);
/// Unweighted path 0-1-...-(n-1).
WeightedGraph path(int n);
WeightedGraph complete(int n);

/// Replaces every edge (in pair order) by a path through a new vertex n + index.
WeightedGraph subdivision(const WeightedGraph& g);

/// Subdivision of `base` (a tree on vertices 0..k-1) with n - (2k-1) pendants
/// added to base vertices, lowest current degree first, ties to the lower
/// index. Infeasible if n < 2k - 1 or if the base degrees cannot be balanced
/// to a spread of at most 1.
WeightedGraph t_family(int n, int k, const WeightedGraph& base);
/// Same construction with an explicit pendant count per base vertex. The
/// degree spread is not enforced.
WeightedGraph t_family(const WeightedGraph& base, std::span<const int> pendants);

/// Star S_k (center 0, leaves 1..k-1) plus n - k pendants spread over the leaves.
WeightedGraph s_family(int n, int k);

/// Center 0 with k legs; the first (n-1) mod k legs are one vertex longer.
WeightedGraph spider(int n, int k);

struct CliqueSplit {
    int t = 0;
    int s = 0;
};

/// e = C(t,2) + s with 0 <= s < t and t maximal (t >= 1).
CliqueSplit split_edges(long long e);

/// K_t on 0..t-1, vertex t joined to 0..s-1, the rest isolated.
WeightedGraph brualdi_hoffman(int n, long long e);

/// (k-1) copies of K_t followed by brualdi_hoffman on the remaining
/// n - (k-1)t vertices with C(t-1,2) + s edges.
WeightedGraph adjmax_graph(int n, int k, int t, int s);

/// Attaches r pendants to every vertex of X (one side of a bipartition of g)
/// and compares lambda_i(G') with sqrt(r + lambda_i(g)^2) for i = 1..k.
bool check_pendant_sqrt_shift(const WeightedGraph& g, std::span<const int> x, int r, int k);

enum class FCompare { Less, Greater, TiedToDepth };

std::string_view to_string(FCompare c);

/// Keys (p2, -p4, p6, -p8, p10) with p_2m the sum of the 2m-th powers of the
/// positive adjacency eigenvalues.
std::vector<double> f_comparison_keys(const WeightedGraph& tree);

/// Orders f_T1 against f_T2 for large x by the first differing key.
FCompare asymptotic_f_compare(const WeightedGraph& t1, const WeightedGraph& t2);

enum class FamilyKind { Star, Path, Subdivision, TFamily, SFamily, Spider, BrualdiHoffman, AdjMax };

std::optional<FamilyKind> parse_family_kind(std::string_view name);

/// Builds a family member from integer parameters:
/// Star/Path (n), Subdivision of a path (n), TFamily on a path base (n, k),
/// SFamily/Spider (n, k), BrualdiHoffman (n, e), AdjMax (n, k, t, s).
WeightedGraph make_family(FamilyKind kind, std::span<const long long> params);

} // namespace laptab
