#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace laptab {

/// Per-check outcome. Marginal means |slack| < tol: the inequality holds up to
/// rounding, so a scan never reports it as a counterexample.
enum class Verdict { Holds, Marginal, Violated, NotApplicable };

std::string_view to_string(Verdict v);
Verdict classify(double slack, double tol);
/// Holds and Marginal both count as non-violations.
inline bool is_violation(Verdict v)
{
    return v == Verdict::Violated;
}

/// Outcome of a prefix-sum comparison x against y.
struct MajorizationVerdict {
    bool holds = false;
    /// Some slack (or the total gap) lies inside the (-tol, tol) band.
    bool marginal = false;
    /// RHS prefix minus LHS prefix for k = 1..m-1.
    std::vector<double> prefix_slacks;
    /// |sum x - sum y|.
    double total_gap = 0.0;
    double tol = 0.0;
};

/// 1e-9 * max(1, |x|_inf + |y|_inf).
double majorization_tolerance(std::span<const double> x, std::span<const double> y);

/// x is majorized by y: descending prefix sums of x stay below those of y and the totals agree.
/// A negative tol selects majorization_tolerance(x, y).
MajorizationVerdict majorizes(std::span<const double> x, std::span<const double> y, double tol = -1.0);

/// Same prefix test in the given order, without sorting.
MajorizationVerdict unordered_majorizes(std::span<const double> x, std::span<const double> y, double tol = -1.0);

} // namespace laptab
