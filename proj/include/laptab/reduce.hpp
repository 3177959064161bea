#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace laptab {

/// One step of sign-pattern peeling: alpha times a {-1,0,1} pattern.
struct PeelTerm {
    double alpha = 0.0;
    std::vector<int> pattern;
};

/// Repeatedly subtracts alpha * sign(a) with alpha the smallest nonzero |a_i|.
/// Entries with |a_i| <= zero_tol count as zero; a negative zero_tol selects
/// 1e-12 * |a|_inf.
std::vector<PeelTerm> peel_sign_patterns(std::span<const double> a, double zero_tol = -1.0);

/// Sum of alpha_t * pattern_t.
std::vector<double> reconstruct(std::span<const PeelTerm> terms, std::size_t m);

inline constexpr int kMaxSignedSupport = 25;
inline constexpr int kMaxUnsignedSupport = 30;

/// Vectors of length m supported on `support` (0-based) with entries in
/// {0,1} or, when is_signed, {0,1,-1}.
struct LatticeDomain {
    int m = 0;
    std::vector<int> support;
    bool is_signed = false;

    std::uint64_t size() const;
};

/// Odometer over a lattice domain. The first support index turns fastest and
/// each digit runs 0, 1, -1.
class LatticeEnumerator {
public:
    explicit LatticeEnumerator(const LatticeDomain& d);

    /// Writes the next point into out; false once exhausted.
    bool next(std::vector<double>& out);

private:
    LatticeDomain d_;
    std::vector<int> digits_;
    bool started_ = false;
    bool done_ = false;
};

/// All points in odometer order. Guarded like LatticeEnumerator.
std::vector<std::vector<double>> enumerate_lattice(const LatticeDomain& d);

using VectorFunction = std::function<double(std::span<const double>)>;

struct BoundEquivalenceReport {
    std::uint64_t lattice_points = 0;
    std::uint64_t lattice_failures = 0;
    std::optional<std::vector<double>> first_lattice_failure;
    int random_trials = 0;
    int random_failures = 0;
    std::optional<std::vector<double>> first_random_failure;
    /// min over all tested points of f - phi.
    double min_lattice_slack = 0.0;
    double min_random_slack = 0.0;

    bool lattice_holds() const { return lattice_failures == 0; }
    bool random_holds() const { return random_failures == 0; }
    /// Lattice success without random success contradicts the reduction.
    bool consistent() const { return !lattice_holds() || random_holds(); }
};

inline constexpr double kHomogeneityTolerance = 1e-7;

/// Checks phi <= f on every lattice point and on `trials` seeded random
/// vectors on the support (nonnegative when the domain is unsigned). Before
/// that, positive homogeneity of phi and f and subadditivity of phi are
/// spot-checked on 8 random pairs; a failure throws HomogeneityViolation.
BoundEquivalenceReport verify_bound_equivalence(const VectorFunction& phi, const VectorFunction& f,
                                                const LatticeDomain& d, int trials, std::uint64_t seed);

} // namespace laptab
