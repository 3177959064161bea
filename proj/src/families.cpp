#include "laptab/families.hpp"

#include "laptab/error.hpp"
#include "laptab/tableau.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace laptab {

namespace {

    void add_clique(WeightedGraph& g, int offset, int t)
    {
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j)
                g.set_weight(offset + i, offset + j, 1.0);
    }

    // Appends a new vertex joined to v.
    void attach_pendant(WeightedGraph& g, int v)
    {
        g.add_vertices(1);
        g.set_weight(v, g.order() - 1, 1.0);
    }

    // Lowest current degree first, ties to the lower position.
    std::vector<int> balanced_counts(std::vector<int> degree, int pendants)
    {
        std::vector<int> counts(degree.size(), 0);
        for (int p = 0; p < pendants; ++p) {
            const auto it = std::min_element(degree.begin(), degree.end());
            const auto idx = static_cast<std::size_t>(it - degree.begin());
            ++*it;
            ++counts[idx];
        }
        return counts;
    }

    std::vector<int> int_degrees(const WeightedGraph& g)
    {
        std::vector<int> d(static_cast<std::size_t>(g.order()), 0);
        for (const auto& [p, w] : g.edges()) {
            ++d[p.first];
            ++d[p.second];
        }
        return d;
    }

} // namespace

WeightedGraph star(int n)
{
    if (n < 2)
        fail(ErrorCode::BadOrder, "star needs n >= 2");
    WeightedGraph g(n);
    for (int v = 1; v < n; ++v)
        g.set_weight(0, v, 1.0);
    return g;
}

WeightedGraph path(int n)
{
    if (n < 1)
        fail(ErrorCode::BadOrder, "path needs n >= 1");
    WeightedGraph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.set_weight(v, v + 1, 1.0);
    return g;
}

WeightedGraph complete(int n)
{
    if (n < 1)
        fail(ErrorCode::BadOrder, "complete graph needs n >= 1");
    WeightedGraph g(n);
    add_clique(g, 0, n);
    return g;
}

WeightedGraph subdivision(const WeightedGraph& g)
{
    if (!g.is_unweighted())
        fail(ErrorCode::WeightedInput, "subdivision needs an unweighted graph");
    WeightedGraph s(g.order() + g.edge_count());
    int fresh = g.order();
    for (const auto& [p, w] : g.edges()) {
        s.set_weight(p.first, fresh, 1.0);
        s.set_weight(fresh, p.second, 1.0);
        ++fresh;
    }
    return s;
}

WeightedGraph t_family(const WeightedGraph& base, std::span<const int> pendants)
{
    if (!is_tree(base) || !base.is_unweighted())
        fail(ErrorCode::NotATree, "t_family base must be an unweighted tree");
    if (static_cast<int>(pendants.size()) != base.order())
        fail(ErrorCode::LengthMismatch, "one pendant count per base vertex");
    WeightedGraph g = subdivision(base);
    for (int v = 0; v < base.order(); ++v) {
        if (pendants[v] < 0)
            fail(ErrorCode::InvalidArgument, "pendant counts must be nonnegative");
        for (int p = 0; p < pendants[v]; ++p)
            attach_pendant(g, v);
    }
    return g;
}

WeightedGraph t_family(int n, int k, const WeightedGraph& base)
{
    if (k < 1 || base.order() != k)
        fail(ErrorCode::BadOrder, "t_family base must have order k");
    if (n < 2 * k - 1)
        fail(ErrorCode::Infeasible, "t_family needs n >= 2k - 1");
    if (!is_tree(base))
        fail(ErrorCode::NotATree, "t_family base must be a tree");
    std::vector<int> deg = int_degrees(base);
    const auto counts = balanced_counts(deg, n - (2 * k - 1));
    for (int v = 0; v < k; ++v)
        deg[v] += counts[v];
    const auto [lo, hi] = std::minmax_element(deg.begin(), deg.end());
    if (*hi - *lo > 1)
        fail(ErrorCode::Infeasible,
             "base degrees cannot be balanced with " + std::to_string(n - (2 * k - 1)) + " pendants");
    return t_family(base, counts);
}

WeightedGraph s_family(int n, int k)
{
    if (k < 3 || n < k)
        fail(ErrorCode::Infeasible, "s_family needs n >= k >= 3");
    WeightedGraph g = star(k);
    const auto counts = balanced_counts(std::vector<int>(static_cast<std::size_t>(k - 1), 1), n - k);
    for (int i = 0; i < k - 1; ++i)
        for (int p = 0; p < counts[i]; ++p)
            attach_pendant(g, i + 1);
    return g;
}

WeightedGraph spider(int n, int k)
{
    if (k < 2 || n < k + 1)
        fail(ErrorCode::Infeasible, "spider needs n >= k + 1 >= 3");
    WeightedGraph g(n);
    const int q = (n - 1) / k;
    const int r = (n - 1) % k;
    int next = 1;
    for (int leg = 0; leg < k; ++leg) {
        int prev = 0;
        const int len = q + (leg < r ? 1 : 0);
        for (int step = 0; step < len; ++step) {
            g.set_weight(prev, next, 1.0);
            prev = next++;
        }
    }
    return g;
}

CliqueSplit split_edges(long long e)
{
    if (e < 0)
        fail(ErrorCode::InvalidArgument, "negative edge count");
    long long t = 1;
    while (binom2(t + 1) <= e)
        ++t;
    return {static_cast<int>(t), static_cast<int>(e - binom2(t))};
}

WeightedGraph brualdi_hoffman(int n, long long e)
{
    if (n < 1)
        fail(ErrorCode::BadOrder, "brualdi_hoffman needs n >= 1");
    if (e < 0 || e > binom2(n))
        fail(ErrorCode::TooManyEdges, std::to_string(e) + " edges do not fit on " + std::to_string(n) + " vertices");
    const auto [t, s] = split_edges(e);
    WeightedGraph g(n);
    add_clique(g, 0, t);
    for (int v = 0; v < s; ++v)
        g.set_weight(t, v, 1.0);
    return g;
}

WeightedGraph adjmax_graph(int n, int k, int t, int s)
{
    if (k < 2 || t < 1 || static_cast<long long>(k) * t > n || s < 1 || s > t)
        fail(ErrorCode::Infeasible, "adjmax_graph needs k >= 2, 1 <= t <= n/k and s in [1, t]");
    const int offset = (k - 1) * t;
    const int rest = n - offset;
    const long long tail = binom2(t - 1) + s;
    if (tail > binom2(rest))
        fail(ErrorCode::Infeasible, "the last component does not fit on the remaining vertices");
    WeightedGraph g(n);
    for (int c = 0; c < k - 1; ++c)
        add_clique(g, c * t, t);
    const WeightedGraph last = brualdi_hoffman(rest, tail);
    for (const auto& [p, w] : last.edges())
        g.set_weight(offset + p.first, offset + p.second, w);
    return g;
}

bool check_pendant_sqrt_shift(const WeightedGraph& g, std::span<const int> x, int r, int k)
{
    if (r < 1)
        fail(ErrorCode::InvalidArgument, "pendant count r must be at least 1");
    const int n = g.order();
    std::vector<char> in_x(static_cast<std::size_t>(n), 0);
    for (int v : x) {
        if (v < 0 || v >= n)
            fail(ErrorCode::IndexOutOfRange, "X contains a vertex outside the graph");
        in_x[v] = 1;
    }
    for (const auto& [p, w] : g.edges())
        if (in_x[p.first] == in_x[p.second])
            fail(ErrorCode::NotBipartite, "X is not one side of a bipartition");
    if (k < 1 || k > n)
        fail(ErrorCode::KOutOfRange, "k outside [1, n]");
    const auto lambda = adjacency_eigenvalues(g);
    const double base_tol = spectral_tolerance(g.adjacency());
    if (!(lambda[k - 1] > base_tol))
        fail(ErrorCode::NonPositiveLambdaK, "lambda_k(g) must be positive");

    WeightedGraph h = g;
    for (int v : x)
        for (int p = 0; p < r; ++p)
            attach_pendant(h, v);
    const SymMatrix ah = h.adjacency();
    const auto shifted = jacobi_eigen(ah, kJacobiTolerance, EigenMode::ValuesOnly).values;
    const double tol = spectral_tolerance(ah);
    for (int i = 0; i < k; ++i)
        if (std::abs(shifted[i] - std::sqrt(r + lambda[i] * lambda[i])) > tol)
            return false;
    return true;
}

std::string_view to_string(FCompare c)
{
    switch (c) {
    case FCompare::Less:
        return "Less";
    case FCompare::Greater:
        return "Greater";
    case FCompare::TiedToDepth:
        return "TiedToDepth";
    }
    return "unknown";
}

std::vector<double> f_comparison_keys(const WeightedGraph& tree)
{
    const SymMatrix a = tree.adjacency();
    const auto lambda = jacobi_eigen(a, kJacobiTolerance, EigenMode::ValuesOnly).values;
    const double tol = spectral_tolerance(a);
    std::vector<double> keys(5, 0.0);
    for (double l : lambda) {
        if (l <= tol)
            continue;
        const double sq = l * l;
        double power = sq;
        for (std::size_t m = 0; m < keys.size(); ++m) {
            keys[m] += (m % 2 == 0 ? power : -power);
            power *= sq;
        }
    }
    return keys;
}

namespace {

    int positive_count(const WeightedGraph& g)
    {
        const SymMatrix a = g.adjacency();
        const auto lambda = jacobi_eigen(a, kJacobiTolerance, EigenMode::ValuesOnly).values;
        const double tol = spectral_tolerance(a);
        return static_cast<int>(std::count_if(lambda.begin(), lambda.end(), [tol](double l) { return l > tol; }));
    }

} // namespace

FCompare asymptotic_f_compare(const WeightedGraph& t1, const WeightedGraph& t2)
{
    if (positive_count(t1) != positive_count(t2))
        fail(ErrorCode::EigCountMismatch, "trees differ in their number of positive eigenvalues");
    const auto a = f_comparison_keys(t1);
    const auto b = f_comparison_keys(t2);
    for (std::size_t m = 0; m < a.size(); ++m) {
        const double tol = 1e-9 * std::max({1.0, std::abs(a[m]), std::abs(b[m])});
        if (a[m] < b[m] - tol)
            return FCompare::Less;
        if (a[m] > b[m] + tol)
            return FCompare::Greater;
    }
    return FCompare::TiedToDepth;
}

std::optional<FamilyKind> parse_family_kind(std::string_view name)
{
    static constexpr std::pair<std::string_view, FamilyKind> kNames[] = {
        {"star", FamilyKind::Star},
        {"path", FamilyKind::Path},
        {"subdivision", FamilyKind::Subdivision},
        {"tfamily", FamilyKind::TFamily},
        {"sfamily", FamilyKind::SFamily},
        {"spider", FamilyKind::Spider},
        {"brualdi-hoffman", FamilyKind::BrualdiHoffman},
        {"adjmax", FamilyKind::AdjMax},
    };
    for (const auto& [key, kind] : kNames)
        if (key == name)
            return kind;
    return std::nullopt;
}

WeightedGraph make_family(FamilyKind kind, std::span<const long long> params)
{
    const auto need = [&](std::size_t count) {
        if (params.size() != count)
            fail(ErrorCode::InvalidArgument,
                 "expected " + std::to_string(count) + " parameters, got " + std::to_string(params.size()));
    };
    const auto p = [&](std::size_t i) { return static_cast<int>(params[i]); };
    switch (kind) {
    case FamilyKind::Star:
        need(1);
        return star(p(0));
    case FamilyKind::Path:
        need(1);
        return path(p(0));
    case FamilyKind::Subdivision:
        need(1);
        return subdivision(path(p(0)));
    case FamilyKind::TFamily:
        need(2);
        return t_family(p(0), p(1), path(p(1)));
    case FamilyKind::SFamily:
        need(2);
        return s_family(p(0), p(1));
    case FamilyKind::Spider:
        need(2);
        return spider(p(0), p(1));
    case FamilyKind::BrualdiHoffman:
        need(2);
        return brualdi_hoffman(p(0), params[1]);
    case FamilyKind::AdjMax:
        need(4);
        return adjmax_graph(p(0), p(1), p(2), p(3));
    }
    fail(ErrorCode::InvalidArgument, "unknown family");
}

} // namespace laptab
