#include "laptab/reduce.hpp"

#include "laptab/error.hpp"
#include "laptab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace laptab {

std::vector<PeelTerm> peel_sign_patterns(std::span<const double> a, double zero_tol)
{
    double amax = 0.0;
    for (double x : a) {
        if (!std::isfinite(x))
            fail(ErrorCode::NonFinite, "peeling needs finite entries");
        amax = std::max(amax, std::abs(x));
    }
    if (zero_tol < 0.0)
        zero_tol = 1e-12 * amax;

    std::vector<double> rest(a.begin(), a.end());
    std::vector<PeelTerm> terms;
    for (;;) {
        double alpha = std::numeric_limits<double>::infinity();
        for (double x : rest)
            if (std::abs(x) > zero_tol)
                alpha = std::min(alpha, std::abs(x));
        if (!std::isfinite(alpha))
            break;
        PeelTerm t{alpha, std::vector<int>(rest.size(), 0)};
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (std::abs(rest[i]) <= zero_tol) {
                rest[i] = 0.0;
                continue;
            }
            t.pattern[i] = rest[i] > 0.0 ? 1 : -1;
            rest[i] -= alpha * t.pattern[i];
            // The minimizing entries land exactly on zero, others may carry dust.
            if (std::abs(rest[i]) <= zero_tol)
                rest[i] = 0.0;
        }
        terms.push_back(std::move(t));
    }
    return terms;
}

std::vector<double> reconstruct(std::span<const PeelTerm> terms, std::size_t m)
{
    std::vector<double> out(m, 0.0);
    for (const auto& t : terms) {
        if (t.pattern.size() != m)
            fail(ErrorCode::LengthMismatch, "pattern length differs from m");
        for (std::size_t i = 0; i < m; ++i)
            out[i] += t.alpha * t.pattern[i];
    }
    return out;
}

std::uint64_t LatticeDomain::size() const
{
    const std::uint64_t base = is_signed ? 3 : 2;
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < support.size(); ++i)
        s *= base;
    return s;
}

namespace {

    void validate(const LatticeDomain& d)
    {
        if (d.support.empty())
            fail(ErrorCode::EmptySubset, "lattice support is empty");
        const int limit = d.is_signed ? kMaxSignedSupport : kMaxUnsignedSupport;
        if (static_cast<int>(d.support.size()) > limit)
            fail(ErrorCode::DomainTooLarge,
                 "support of size " + std::to_string(d.support.size()) + " exceeds " + std::to_string(limit));
        for (int i : d.support)
            if (i < 0 || i >= d.m)
                fail(ErrorCode::IndexOutOfRange, "support index " + std::to_string(i) + " outside m");
    }

    constexpr double kDigitValue[3] = {0.0, 1.0, -1.0};

} // namespace

LatticeEnumerator::LatticeEnumerator(const LatticeDomain& d)
    : d_(d)
    , digits_(d.support.size(), 0)
{
    validate(d_);
}

bool LatticeEnumerator::next(std::vector<double>& out)
{
    if (done_)
        return false;
    if (started_) {
        const int base = d_.is_signed ? 3 : 2;
        std::size_t pos = 0;
        while (pos < digits_.size() && ++digits_[pos] == base)
            digits_[pos++] = 0;
        if (pos == digits_.size()) {
            done_ = true;
            return false;
        }
    }
    started_ = true;
    out.assign(static_cast<std::size_t>(d_.m), 0.0);
    for (std::size_t p = 0; p < digits_.size(); ++p)
        out[static_cast<std::size_t>(d_.support[p])] = kDigitValue[digits_[p]];
    return true;
}

std::vector<std::vector<double>> enumerate_lattice(const LatticeDomain& d)
{
    LatticeEnumerator it(d);
    std::vector<std::vector<double>> all;
    std::vector<double> v;
    while (it.next(v))
        all.push_back(v);
    return all;
}

namespace {

    std::vector<double> random_point(const LatticeDomain& d, SplitMix64& rng)
    {
        std::vector<double> v(static_cast<std::size_t>(d.m), 0.0);
        for (int i : d.support)
            v[static_cast<std::size_t>(i)] = d.is_signed ? rng.normal() : rng.uniform01();
        return v;
    }

    bool close(double a, double b)
    {
        return std::abs(a - b) <= kHomogeneityTolerance * std::max({1.0, std::abs(a), std::abs(b)});
    }

    void spot_check(const VectorFunction& phi, const VectorFunction& f, const LatticeDomain& d, SplitMix64& rng)
    {
        for (int trial = 0; trial < 8; ++trial) {
            const auto v = random_point(d, rng);
            const auto u = random_point(d, rng);
            const double alpha = rng.uniform(0.25, 4.0);
            std::vector<double> scaled(v);
            std::vector<double> sum(v);
            for (std::size_t i = 0; i < v.size(); ++i) {
                scaled[i] *= alpha;
                sum[i] += u[i];
            }
            if (!close(phi(scaled), alpha * phi(v)))
                fail(ErrorCode::HomogeneityViolation, "phi is not positively homogeneous");
            if (!close(f(scaled), alpha * f(v)))
                fail(ErrorCode::HomogeneityViolation, "f is not positively homogeneous");
            const double lhs = phi(sum);
            const double rhs = phi(v) + phi(u);
            if (lhs > rhs && !close(lhs, rhs))
                fail(ErrorCode::HomogeneityViolation, "phi is not subadditive");
        }
    }

    double point_slack(const VectorFunction& phi, const VectorFunction& f, std::span<const double> v, bool& ok)
    {
        const double p = phi(v);
        const double q = f(v);
        const double tol = 1e-9 * std::max({1.0, std::abs(p), std::abs(q)});
        ok = p <= q + tol;
        return q - p;
    }

} // namespace

BoundEquivalenceReport verify_bound_equivalence(const VectorFunction& phi, const VectorFunction& f,
                                                const LatticeDomain& d, int trials, std::uint64_t seed)
{
    if (trials < 0)
        fail(ErrorCode::InvalidArgument, "trial count is negative");
    LatticeEnumerator it(d);
    SplitMix64 rng(seed);
    spot_check(phi, f, d, rng);

    BoundEquivalenceReport rep;
    rep.min_lattice_slack = std::numeric_limits<double>::infinity();
    rep.min_random_slack = std::numeric_limits<double>::infinity();
    std::vector<double> v;
    while (it.next(v)) {
        bool ok = true;
        rep.min_lattice_slack = std::min(rep.min_lattice_slack, point_slack(phi, f, v, ok));
        ++rep.lattice_points;
        if (!ok && rep.lattice_failures++ == 0)
            rep.first_lattice_failure = v;
    }
    for (int t = 0; t < trials; ++t) {
        const auto r = random_point(d, rng);
        bool ok = true;
        rep.min_random_slack = std::min(rep.min_random_slack, point_slack(phi, f, r, ok));
        ++rep.random_trials;
        if (!ok && rep.random_failures++ == 0)
            rep.first_random_failure = r;
    }
    return rep;
}

} // namespace laptab
