#include "laptab/psd.hpp"

#include "laptab/error.hpp"
#include "laptab/tableau.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

namespace laptab {

namespace {

    double dot(std::span<const double> a, std::span<const double> b)
    {
        return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
    }

    double norm(std::span<const double> a)
    {
        return std::sqrt(dot(a, a));
    }

    void check_shapes(const RankOneDecomposition& d)
    {
        if (d.n < 0)
            fail(ErrorCode::BadOrder, "negative order");
        for (const auto& t : d.terms) {
            if (static_cast<int>(t.u.size()) != d.n)
                fail(ErrorCode::DimensionMismatch,
                     "term vector has length " + std::to_string(t.u.size()) + ", expected " + std::to_string(d.n));
            if (!std::isfinite(t.theta) || !std::all_of(t.u.begin(), t.u.end(), [](double x) { return std::isfinite(x); }))
                fail(ErrorCode::NonFinite, "decomposition entries must be finite");
            if (norm(t.u) == 0.0)
                fail(ErrorCode::ZeroVector, "decomposition vectors must be nonzero");
        }
    }

    void require_positive(const RankOneDecomposition& d)
    {
        for (const auto& t : d.terms)
            if (!(t.theta > 0.0))
                fail(ErrorCode::NonPositiveTheta, "theta must be positive");
    }

    void require_nonnegative(const RankOneDecomposition& d)
    {
        for (const auto& t : d.terms)
            if (t.theta < 0.0)
                fail(ErrorCode::NonPositiveTheta, "theta must be nonnegative");
    }

    void require_unit(const RankOneDecomposition& d)
    {
        for (const auto& t : d.terms)
            if (std::abs(norm(t.u) - 1.0) > kUnitTolerance)
                fail(ErrorCode::NonUnitVector, "decomposition vector is not a unit vector");
    }

    void require_jperp(const RankOneDecomposition& d)
    {
        const double tol = kUnitTolerance * std::sqrt(static_cast<double>(d.n));
        for (const auto& t : d.terms)
            if (std::abs(std::accumulate(t.u.begin(), t.u.end(), 0.0)) > tol)
                fail(ErrorCode::NotInJPerp, "decomposition vector is not orthogonal to the ones vector");
    }

    std::vector<std::vector<double>> term_vectors(const RankOneDecomposition& d)
    {
        std::vector<std::vector<double>> us;
        us.reserve(d.terms.size());
        for (const auto& t : d.terms)
            us.push_back(t.u);
        return us;
    }

    // Distance from v to span(basis), relative to |v|.
    double relative_distance(std::span<const double> v, const std::vector<std::vector<double>>& basis)
    {
        std::vector<double> r(v.begin(), v.end());
        for (const auto& q : basis) {
            const double c = dot(q, r);
            for (std::size_t i = 0; i < r.size(); ++i)
                r[i] -= c * q[i];
        }
        const double nv = norm(v);
        return nv == 0.0 ? 0.0 : norm(r) / nv;
    }

    constexpr double kSpanAgreement = 1e-6;

    bool spans_agree(const RankOneDecomposition& d)
    {
        const auto us = term_vectors(d);
        const SpanBasis span = pivoted_span(us);
        const SymMatrix m = assemble(d);
        const Spectrum s = jacobi_eigen(m);
        const double tol = spectral_tolerance(m);
        std::vector<std::vector<double>> image;
        for (int i = 0; i < s.size(); ++i)
            if (std::abs(s.values[i]) > tol)
                image.push_back(s.vector(i));
        if (static_cast<int>(image.size()) != span.rank)
            return false;
        for (const auto& v : image)
            if (relative_distance(v, span.basis) > kSpanAgreement)
                return false;
        for (const auto& u : us)
            if (relative_distance(u, image) > kSpanAgreement)
                return false;
        return true;
    }

    void require_check_domain(const RankOneDecomposition& d, int k)
    {
        check_shapes(d);
        require_nonnegative(d);
        require_unit(d);
        require_jperp(d);
        if (d.n < 2)
            fail(ErrorCode::BadOrder, "decomposition checks need n >= 2");
        const int kmax = std::min(d.size(), d.n - 1);
        if (k < 1 || k > kmax)
            fail(ErrorCode::KOutOfRange, "k=" + std::to_string(k) + " outside [1, " + std::to_string(kmax) + "]");
    }

    template <typename RhsFn>
    PrefixCheck theta_prefix_check(const RankOneDecomposition& d, int k, RhsFn rhs_prefix)
    {
        require_check_domain(d, k);
        const SymMatrix l = assemble(d);
        const WeightedGraph g = adjacency_from_laplacian(l);
        const auto thetas = d.sorted_thetas();
        PrefixCheck c;
        c.k = k;
        c.lhs = std::accumulate(thetas.begin(), thetas.begin() + k, 0.0);
        c.rhs = rhs_prefix(g, k);
        c.slack = c.rhs - c.lhs;
        c.tol = spectral_tolerance(l);
        c.verdict = classify(c.slack, c.tol);
        return c;
    }

    std::vector<double> gaussian(int n, SplitMix64& rng)
    {
        std::vector<double> v(static_cast<std::size_t>(n));
        for (double& x : v)
            x = rng.normal();
        return v;
    }

    void normalize(std::vector<double>& v)
    {
        const double nv = norm(v);
        for (double& x : v)
            x /= nv;
    }

    // Pivots inside (1e-12, floor) make the numerical rank depend on the
    // threshold; such draws are resampled.
    bool well_separated(const std::vector<std::vector<double>>& us, double floor)
    {
        const SpanBasis s = pivoted_span(us);
        for (double r : s.pivot_residuals)
            if (r < floor)
                return false;
        return s.leftover <= 1e-12;
    }

    constexpr int kMaxResample = 1000;

} // namespace

std::vector<double> RankOneDecomposition::sorted_thetas() const
{
    std::vector<double> th;
    th.reserve(terms.size());
    for (const auto& t : terms)
        th.push_back(t.theta);
    std::sort(th.begin(), th.end(), std::greater<>());
    return th;
}

SymMatrix assemble(const RankOneDecomposition& d)
{
    check_shapes(d);
    SymMatrix m(d.n);
    for (const auto& t : d.terms)
        for (int i = 0; i < d.n; ++i)
            for (int j = i; j < d.n; ++j)
                m.add(i, j, t.theta * t.u[i] * t.u[j]);
    return m;
}

SpanBasis pivoted_span(const std::vector<std::vector<double>>& vectors)
{
    SpanBasis out;
    if (vectors.empty())
        return out;
    std::vector<std::vector<double>> r = vectors;
    double scale = 0.0;
    for (const auto& v : r)
        scale = std::max(scale, norm(v));
    if (scale == 0.0)
        return out;
    const double drop = 1e-9 * scale;
    std::vector<char> used(r.size(), 0);
    for (;;) {
        std::size_t best = r.size();
        double best_norm = 0.0;
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (used[c])
                continue;
            const double nc = norm(r[c]);
            if (best == r.size() || nc > best_norm) {
                best = c;
                best_norm = nc;
            }
        }
        if (best == r.size()) {
            out.leftover = 0.0;
            break;
        }
        if (best_norm <= drop) {
            out.leftover = best_norm / scale;
            break;
        }
        used[best] = 1;
        std::vector<double> q = r[best];
        for (double& x : q)
            x /= best_norm;
        // Re-orthogonalize against the accepted basis for stability.
        for (const auto& b : out.basis) {
            const double c = dot(b, q);
            for (std::size_t i = 0; i < q.size(); ++i)
                q[i] -= c * b[i];
        }
        normalize(q);
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (used[c])
                continue;
            const double proj = dot(q, r[c]);
            for (std::size_t i = 0; i < q.size(); ++i)
                r[c][i] -= proj * q[i];
        }
        out.basis.push_back(std::move(q));
        out.pivot_residuals.push_back(best_norm / scale);
        ++out.rank;
    }
    return out;
}

int numerical_rank(const SymMatrix& m)
{
    const auto values = jacobi_eigen(m, kJacobiTolerance, EigenMode::ValuesOnly).values;
    const double tol = spectral_tolerance(m);
    return static_cast<int>(std::count_if(values.begin(), values.end(), [tol](double x) { return std::abs(x) > tol; }));
}

bool check_span_rank(const RankOneDecomposition& d)
{
    check_shapes(d);
    require_positive(d);
    return spans_agree(d);
}

bool check_span_rank_independent(const RankOneDecomposition& d)
{
    check_shapes(d);
    for (const auto& t : d.terms)
        if (t.theta == 0.0)
            fail(ErrorCode::NonPositiveTheta, "theta must be nonzero");
    if (pivoted_span(term_vectors(d)).rank != d.size())
        fail(ErrorCode::InvalidArgument, "decomposition vectors are linearly dependent");
    return spans_agree(d);
}

MajorizationVerdict check_theta_majorization(const RankOneDecomposition& d)
{
    check_shapes(d);
    require_positive(d);
    require_unit(d);
    if (d.terms.empty() || d.n < 1)
        fail(ErrorCode::LengthMismatch, "theta majorization needs at least one term");
    const auto thetas = d.sorted_thetas();
    const auto lambda = jacobi_eigen(assemble(d), kJacobiTolerance, EigenMode::ValuesOnly).values;
    const std::size_t m = static_cast<std::size_t>(std::min(d.n, d.size()));
    const std::span<const double> th(thetas.data(), m);
    const std::span<const double> la(lambda.data(), m);
    MajorizationVerdict v = unordered_majorizes(th, la);
    if (d.size() > d.n) {
        const double excess = std::accumulate(th.begin(), th.end(), 0.0) - std::accumulate(la.begin(), la.end(), 0.0);
        v.total_gap = std::max(0.0, excess);
        v.holds = v.total_gap <= v.tol
            && std::all_of(v.prefix_slacks.begin(), v.prefix_slacks.end(), [&](double s) { return s >= -v.tol; });
    }
    return v;
}

WeightedGraph adjacency_from_laplacian(const SymMatrix& l)
{
    const int n = l.order();
    const double tol = spectral_tolerance(l);
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j)
            row += l(i, j);
        if (std::abs(row) > tol)
            fail(ErrorCode::RowSumNotZero, "row " + std::to_string(i) + " of the Laplacian does not sum to zero");
    }
    const double dust = 1e-14 * std::max(1.0, l.frobenius_norm());
    WeightedGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(l(i, j)) > dust)
                g.set_weight(i, j, -l(i, j));
    return g;
}

PrefixCheck check_gmiii(const RankOneDecomposition& d, int k)
{
    return theta_prefix_check(d, k, [](const WeightedGraph& g, int kk) {
        const auto cs = conjugate_sequence(g);
        return std::accumulate(cs.dstar.begin(), cs.dstar.begin() + kk, 0.0);
    });
}

PrefixCheck check_biii(const RankOneDecomposition& d, int k)
{
    return theta_prefix_check(d, k, [](const WeightedGraph& g, int kk) {
        const auto rows = tableau_row_sums(g);
        return std::accumulate(rows.r.begin(), rows.r.begin() + kk, 0.0);
    });
}

NegativeEntryReport check_negative_entry_necessity(const RankOneDecomposition& d)
{
    check_shapes(d);
    require_positive(d);
    require_jperp(d);
    if (d.size() >= d.n - 1)
        fail(ErrorCode::InvalidArgument, "negative-entry necessity needs t < n - 1");
    const SymMatrix l = assemble(d);
    const int n = d.n;
    WeightedGraph a(n);
    NegativeEntryReport rep;
    rep.min_offdiagonal = 0.0;
    bool first = true;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double w = -l(i, j);
            if (first || w < rep.min_offdiagonal)
                rep.min_offdiagonal = w;
            first = false;
            if (std::abs(w) > kIrreducibleThreshold)
                a.set_weight(i, j, w);
        }
    }
    rep.irreducible = is_connected(a);
    if (!rep.irreducible) {
        rep.verdict = Verdict::NotApplicable;
        return rep;
    }
    rep.verdict = rep.min_offdiagonal < -spectral_tolerance(l) ? Verdict::Holds : Verdict::Violated;
    return rep;
}

std::vector<double> random_unit_jperp(int n, SplitMix64& rng)
{
    if (n < 2)
        fail(ErrorCode::BadOrder, "j-perp is trivial for n < 2");
    for (;;) {
        auto v = gaussian(n, rng);
        const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
        for (double& x : v)
            x -= mean;
        if (norm(v) < 1e-6)
            continue;
        normalize(v);
        return v;
    }
}

RankOneDecomposition random_decomposition(int n, int t, std::uint64_t seed)
{
    if (n < 1 || t < 0)
        fail(ErrorCode::InvalidArgument, "random decomposition needs n >= 1 and t >= 0");
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < kMaxResample; ++attempt) {
        RankOneDecomposition d{n, {}};
        for (int i = 0; i < t; ++i) {
            auto u = gaussian(n, rng);
            normalize(u);
            d.terms.push_back({rng.uniform(0.1, 2.0), std::move(u)});
        }
        if (well_separated(term_vectors(d), 1e-3))
            return d;
    }
    fail(ErrorCode::Infeasible, "could not draw a well-conditioned decomposition");
}

RankOneDecomposition random_jperp_decomposition(int n, int t, std::uint64_t seed)
{
    if (n < 2 || t < 0)
        fail(ErrorCode::InvalidArgument, "random j-perp decomposition needs n >= 2 and t >= 0");
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < kMaxResample; ++attempt) {
        RankOneDecomposition d{n, {}};
        for (int i = 0; i < t; ++i) {
            auto u = random_unit_jperp(n, rng);
            d.terms.push_back({rng.uniform(0.1, 2.0), std::move(u)});
        }
        if (well_separated(term_vectors(d), 1e-3))
            return d;
    }
    fail(ErrorCode::Infeasible, "could not draw a well-conditioned decomposition");
}

RankOneDecomposition random_independent_decomposition(int n, int t, std::uint64_t seed)
{
    if (n < 1 || t < 0 || t > n)
        fail(ErrorCode::InvalidArgument, "independent decomposition needs 0 <= t <= n");
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < kMaxResample; ++attempt) {
        RankOneDecomposition d{n, {}};
        for (int i = 0; i < t; ++i) {
            const double mag = rng.uniform(0.1, 2.0);
            const double theta = rng.uniform01() < 0.5 ? -mag : mag;
            d.terms.push_back({theta, gaussian(n, rng)});
        }
        const SpanBasis s = pivoted_span(term_vectors(d));
        if (s.rank == t && well_separated(term_vectors(d), 0.05))
            return d;
    }
    fail(ErrorCode::Infeasible, "could not draw an independent decomposition");
}

} // namespace laptab
