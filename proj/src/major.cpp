#include "laptab/major.hpp"

#include "laptab/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace laptab {

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Holds:
        return "Holds";
    case Verdict::Marginal:
        return "Marginal";
    case Verdict::Violated:
        return "Violated";
    case Verdict::NotApplicable:
        return "NotApplicable";
    }
    return "unknown";
}

Verdict classify(double slack, double tol)
{
    if (slack < -tol)
        return Verdict::Violated;
    if (std::abs(slack) < tol)
        return Verdict::Marginal;
    return Verdict::Holds;
}

double majorization_tolerance(std::span<const double> x, std::span<const double> y)
{
    double xi = 0.0;
    double yi = 0.0;
    for (double v : x)
        xi = std::max(xi, std::abs(v));
    for (double v : y)
        yi = std::max(yi, std::abs(v));
    return 1e-9 * std::max(1.0, xi + yi);
}

namespace {

    MajorizationVerdict prefix_compare(std::span<const double> x, std::span<const double> y, double tol)
    {
        if (x.size() != y.size())
            fail(ErrorCode::LengthMismatch, "majorization needs vectors of equal length");
        if (x.empty())
            fail(ErrorCode::LengthMismatch, "majorization needs nonempty vectors");
        if (tol < 0.0)
            tol = majorization_tolerance(x, y);

        MajorizationVerdict v;
        v.tol = tol;
        v.holds = true;
        double sx = 0.0;
        double sy = 0.0;
        for (std::size_t k = 0; k + 1 < x.size(); ++k) {
            sx += x[k];
            sy += y[k];
            const double slack = sy - sx;
            v.prefix_slacks.push_back(slack);
            if (slack < -tol)
                v.holds = false;
            if (std::abs(slack) < tol)
                v.marginal = true;
        }
        sx += x.back();
        sy += y.back();
        v.total_gap = std::abs(sx - sy);
        if (v.total_gap > tol)
            v.holds = false;
        return v;
    }

} // namespace

MajorizationVerdict majorizes(std::span<const double> x, std::span<const double> y, double tol)
{
    std::vector<double> xs(x.begin(), x.end());
    std::vector<double> ys(y.begin(), y.end());
    std::sort(xs.begin(), xs.end(), std::greater<>());
    std::sort(ys.begin(), ys.end(), std::greater<>());
    if (tol < 0.0 && xs.size() == ys.size())
        tol = majorization_tolerance(x, y);
    return prefix_compare(xs, ys, tol);
}

MajorizationVerdict unordered_majorizes(std::span<const double> x, std::span<const double> y, double tol)
{
    return prefix_compare(x, y, tol);
}

} // namespace laptab
