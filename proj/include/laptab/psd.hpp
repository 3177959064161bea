#pragma once

#include "laptab/major.hpp"
#include "laptab/rng.hpp"
#include "laptab/symmat.hpp"
#include "laptab/wgraph.hpp"

#include <cstdint>
#include <vector>

namespace laptab {

struct RankOneTerm {
    double theta = 0.0;
    std::vector<double> u;
};

/// L = sum theta_i u_i u_i^T on R^n.
struct RankOneDecomposition {
    int n = 0;
    std::vector<RankOneTerm> terms;

    int size() const noexcept { return static_cast<int>(terms.size()); }
    /// Thetas, descending.
    std::vector<double> sorted_thetas() const;
};

inline constexpr double kUnitTolerance = 1e-10;
inline constexpr double kIrreducibleThreshold = 1e-12;

SymMatrix assemble(const RankOneDecomposition& d);

/// Column-pivoted Gram-Schmidt. Columns are dropped once the best remaining
/// residual falls to 1e-9 times the largest input norm.
struct SpanBasis {
    int rank = 0;
    /// Orthonormal basis vectors, in pivot order.
    std::vector<std::vector<double>> basis;
    /// Residual norm of each accepted pivot, relative to the largest input norm.
    std::vector<double> pivot_residuals;
    /// Best residual left after the last accepted pivot (0 when all columns were used).
    double leftover = 0.0;
};

SpanBasis pivoted_span(const std::vector<std::vector<double>>& vectors);

/// Number of eigenvalues with |lambda| above spectral_tolerance(m).
int numerical_rank(const SymMatrix& m);

/// With every theta positive, rank(L) equals dim span{u_i} and the images agree.
bool check_span_rank(const RankOneDecomposition& d);
/// The same for nonzero thetas of either sign, given linearly independent u_i.
bool check_span_rank_independent(const RankOneDecomposition& d);

/// Sorted thetas against the leading eigenvalues for k <= min(n, t). Totals
/// are compared only when t <= n; for t > n the total gap counts only an
/// excess of theta over the spectrum.
MajorizationVerdict check_theta_majorization(const RankOneDecomposition& d);

/// omega_ij = -L_ij. Entries with |omega| at most 1e-14 * max(1, |L|_F) are
/// treated as absent.
WeightedGraph adjacency_from_laplacian(const SymMatrix& l);

/// One prefix inequality lhs <= rhs at a given k.
struct PrefixCheck {
    int k = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    double tol = 0.0;
    Verdict verdict = Verdict::Holds;
};

/// Theta prefix against the conjugate-sequence prefix of the assembled graph.
PrefixCheck check_gmiii(const RankOneDecomposition& d, int k);
/// Theta prefix against the weight-tableau row-sum prefix.
PrefixCheck check_biii(const RankOneDecomposition& d, int k);

struct NegativeEntryReport {
    bool irreducible = false;
    double min_offdiagonal = 0.0;
    /// NotApplicable when the assembled matrix is reducible; otherwise Holds
    /// when some off-diagonal entry is below -tol.
    Verdict verdict = Verdict::NotApplicable;
};

NegativeEntryReport check_negative_entry_necessity(const RankOneDecomposition& d);

/// Standard normals, mean removed, normalized.
std::vector<double> random_unit_jperp(int n, SplitMix64& rng);

/// Unit vectors in R^n (or in j-perp) with thetas uniform in [0.1, 2).
RankOneDecomposition random_decomposition(int n, int t, std::uint64_t seed);
RankOneDecomposition random_jperp_decomposition(int n, int t, std::uint64_t seed);
/// t <= n independent Gaussian vectors with thetas of random sign and magnitude in [0.1, 2).
RankOneDecomposition random_independent_decomposition(int n, int t, std::uint64_t seed);

} // namespace laptab
