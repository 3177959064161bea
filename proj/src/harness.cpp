#include "laptab/harness.hpp"

#include "laptab/error.hpp"
#include "laptab/families.hpp"
#include "laptab/rng.hpp"
#include "laptab/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace laptab {

namespace {

    constexpr std::pair<CheckId, std::string_view> kCheckNames[] = {
        {CheckId::GM_WEIGHTED, "GM_WEIGHTED"},
        {CheckId::BROUWER_WEIGHTED, "BROUWER_WEIGHTED"},
        {CheckId::BROUWER_01, "BROUWER_01"},
        {CheckId::TREE_BOUND, "TREE_BOUND"},
        {CheckId::STAR_COROLLARY, "STAR_COROLLARY"},
        {CheckId::BLOCK_SUMS, "BLOCK_SUMS"},
        {CheckId::THETA_MAJ, "THETA_MAJ"},
        {CheckId::GMIII, "GMIII"},
        {CheckId::BIII, "BIII"},
        {CheckId::ADJ_TREE_MIN_STAR, "ADJ_TREE_MIN_STAR"},
        {CheckId::ADJ_TREE_MAX_TFAM, "ADJ_TREE_MAX_TFAM"},
        {CheckId::LAP_TREE_MIN_PATH, "LAP_TREE_MIN_PATH"},
        {CheckId::LAP_TREE_MAX_SFAM, "LAP_TREE_MAX_SFAM"},
        {CheckId::LAP_TAIL_MAX_STAR, "LAP_TAIL_MAX_STAR"},
        {CheckId::LAP_TAIL_MIN_SPIDER, "LAP_TAIL_MIN_SPIDER"},
        {CheckId::ADJMAX_GRAPHS, "ADJMAX_GRAPHS"},
    };

    constexpr std::size_t kMaxErrorMessages = 20;
    constexpr double kRecheckFactor = 1e-3;

} // namespace

std::string_view to_string(CheckId id)
{
    for (const auto& [key, name] : kCheckNames)
        if (key == id)
            return name;
    return "UNKNOWN";
}

std::optional<CheckId> parse_check_id(std::string_view name)
{
    for (const auto& [key, label] : kCheckNames)
        if (label == name)
            return key;
    return std::nullopt;
}

const std::vector<CheckId>& all_check_ids()
{
    static const std::vector<CheckId> ids = [] {
        std::vector<CheckId> v;
        for (const auto& entry : kCheckNames)
            v.push_back(entry.first);
        return v;
    }();
    return ids;
}

bool is_proved(CheckId id)
{
    switch (id) {
    case CheckId::GM_WEIGHTED:
    case CheckId::TREE_BOUND:
    case CheckId::STAR_COROLLARY:
    case CheckId::BLOCK_SUMS:
    case CheckId::THETA_MAJ:
    case CheckId::GMIII:
        return true;
    default:
        return false;
    }
}

bool is_decomposition_check(CheckId id)
{
    return id == CheckId::THETA_MAJ || id == CheckId::GMIII || id == CheckId::BIII;
}

KRange KRange::parse(std::string_view text)
{
    if (text == "all" || text.empty())
        return every();
    const auto number = [&](std::string_view t) {
        int v = 0;
        const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || p != t.data() + t.size() || v < 1)
            fail(ErrorCode::InvalidArgument, "bad k value '" + std::string(t) + "'");
        return v;
    };
    std::vector<int> ks;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view() : text.substr(comma + 1);
        if (const auto dash = item.find('-'); dash != std::string_view::npos) {
            const int lo = number(item.substr(0, dash));
            const int hi = number(item.substr(dash + 1));
            if (hi < lo)
                fail(ErrorCode::InvalidArgument, "empty k interval '" + std::string(item) + "'");
            for (int k = lo; k <= hi; ++k)
                ks.push_back(k);
        } else {
            ks.push_back(number(item));
        }
    }
    return only(std::move(ks));
}

std::vector<int> KRange::resolve_between(int lo, int hi) const
{
    std::vector<int> out;
    if (all) {
        for (int k = lo; k <= hi; ++k)
            out.push_back(k);
        return out;
    }
    for (int k : values)
        if (k >= lo && k <= hi)
            out.push_back(k);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

    // One prefix inequality lhs <= rhs. `total` marks the full-length prefix
    // of a majorization, where equality is required.
    struct Row {
        std::string label;
        int k = 0;
        double lhs = 0.0;
        double rhs = 0.0;
        double tol = 0.0;
        bool total = false;
        std::string group;
    };

    Verdict row_verdict(const Row& r, double factor)
    {
        const double slack = r.rhs - r.lhs;
        const double tol = r.tol * factor;
        if (r.total)
            return std::abs(slack) <= tol ? Verdict::Marginal : Verdict::Violated;
        return classify(slack, tol);
    }

    double prefix(std::span<const double> v, int k)
    {
        return std::accumulate(v.begin(), v.begin() + k, 0.0);
    }

    std::string group_key(int n, int k)
    {
        return "n=" + std::to_string(n) + ",k=" + std::to_string(k);
    }

    double pair_tolerance(double lhs, double rhs)
    {
        return 1e-9 * std::max(1.0, std::abs(lhs) + std::abs(rhs));
    }

    // Rows for lhs-vector against rhs-vector prefixes over the ks given, the
    // last index being a total when `majorization` is set.
    void prefix_rows(std::vector<Row>& rows, const std::string& label, int n, const std::vector<int>& ks,
                     std::span<const double> lhs, std::span<const double> rhs, double tol, bool majorization)
    {
        for (int k : ks) {
            Row r;
            r.label = label;
            r.k = k;
            r.lhs = prefix(lhs, k);
            r.rhs = prefix(rhs, k);
            r.tol = tol;
            r.total = majorization && k == static_cast<int>(lhs.size());
            r.group = group_key(n, k);
            rows.push_back(std::move(r));
        }
    }

    void require_unweighted_tree(const WeightedGraph& g)
    {
        if (!is_tree(g))
            fail(ErrorCode::NotATree, "input is not a tree");
        if (!g.is_unweighted())
            fail(ErrorCode::WeightedInput, "tree conjectures are stated for unweighted trees");
    }

    std::vector<double> sorted_desc(std::vector<double> v)
    {
        std::sort(v.begin(), v.end(), std::greater<>());
        return v;
    }

    // Spectra of reference graphs, shared by all workers.
    class ReferenceCache {
    public:
        template <typename Fn>
        std::vector<double> get(const std::string& key, Fn compute)
        {
            {
                std::lock_guard lock(mutex_);
                const auto it = values_.find(key);
                if (it != values_.end())
                    return it->second;
            }
            std::vector<double> v = compute();
            std::lock_guard lock(mutex_);
            return values_.emplace(key, std::move(v)).first->second;
        }

    private:
        std::mutex mutex_;
        std::map<std::string, std::vector<double>> values_;
    };

    ReferenceCache& cache()
    {
        static ReferenceCache c;
        return c;
    }

    std::string tol_tag(double eig_tol)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3g", eig_tol);
        return buf;
    }

    double tfamily_max(int n, int k, double eig_tol)
    {
        const auto v = cache().get("tfam:" + std::to_string(n) + ":" + std::to_string(k) + ":" + tol_tag(eig_tol), [&] {
            double best = -std::numeric_limits<double>::infinity();
            InstanceStream bases = InstanceStream::all_trees(k);
            Instance base;
            while (bases.next(base)) {
                try {
                    const auto lambda = adjacency_eigenvalues(t_family(n, k, base.graph), eig_tol);
                    best = std::max(best, prefix(lambda, k));
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::Infeasible)
                        throw;
                }
            }
            return std::vector<double>{best};
        });
        return v.front();
    }

    std::vector<double> reference_spectrum(const std::string& name, int n, int k, double eig_tol)
    {
        const std::string key = name + ":" + std::to_string(n) + ":" + std::to_string(k) + ":" + tol_tag(eig_tol);
        return cache().get(key, [&] {
            if (name == "star-adj")
                return adjacency_eigenvalues(star(n), eig_tol);
            if (name == "star-lap")
                return laplacian_eigenvalues(star(n), eig_tol);
            if (name == "path-lap")
                return laplacian_eigenvalues(path(n), eig_tol);
            if (name == "sfam-lap")
                return laplacian_eigenvalues(s_family(n, k), eig_tol);
            if (name == "spider-lap")
                return laplacian_eigenvalues(spider(n, k), eig_tol);
            fail(ErrorCode::InvalidArgument, "unknown reference " + name);
        });
    }

    // Brouwer vector and tableau forms share the restricted spectrum.
    void brouwer_rows(std::vector<Row>& rows, const WeightedGraph& g, const std::vector<int>& ks,
                      const std::vector<double>& mu, double tol)
    {
        const int n = g.order();
        if (!g.has_negative_weight())
            prefix_rows(rows, "BROUWER_WEIGHTED:vector", n, ks, mu, brouwer_bound_vector(g), tol, true);
        prefix_rows(rows, "BROUWER_WEIGHTED:tableau", n, ks, mu, tableau_row_sums(g).r, tol, true);
    }

    struct AdjmaxMatch {
        int t = 0;
        int s = 0;
    };

    std::optional<AdjmaxMatch> adjmax_match(int n, int k, long long e)
    {
        for (int t = 1; t <= n / k; ++t) {
            const long long base = (k - 1) * binom2(t) + binom2(t - 1);
            if (e > base && e <= base + t)
                return AdjmaxMatch{t, static_cast<int>(e - base)};
        }
        return std::nullopt;
    }

    std::vector<Row> graph_rows(CheckId id, const WeightedGraph& g, const KRange& range, double eig_tol)
    {
        const int n = g.order();
        std::vector<Row> rows;
        const std::string label(to_string(id));
        switch (id) {
        case CheckId::GM_WEIGHTED: {
            if (n < 2)
                fail(ErrorCode::BadOrder, "needs n >= 2");
            const auto mu = restricted_spectrum(g, eig_tol).mu;
            const double tol = spectral_tolerance(laplacian(g));
            prefix_rows(rows, label, n, range.resolve(n), mu, conjugate_sequence(g).dstar, tol, true);
            break;
        }
        case CheckId::BROUWER_WEIGHTED: {
            if (n < 2)
                fail(ErrorCode::BadOrder, "needs n >= 2");
            const auto mu = restricted_spectrum(g, eig_tol).mu;
            brouwer_rows(rows, g, range.resolve(n), mu, spectral_tolerance(laplacian(g)));
            break;
        }
        case CheckId::BROUWER_01: {
            if (!g.is_unweighted())
                fail(ErrorCode::WeightedInput, "BROUWER_01 needs an unweighted graph");
            if (n < 2)
                fail(ErrorCode::BadOrder, "needs n >= 2");
            const auto mu = restricted_spectrum(g, eig_tol).mu;
            const double tol = spectral_tolerance(laplacian(g));
            const double e = g.edge_count();
            for (int k : range.resolve(n))
                rows.push_back({label, k, prefix(mu, k), e + binom2(k + 1), tol, false, group_key(n, k)});
            break;
        }
        case CheckId::TREE_BOUND: {
            if (!is_tree(g))
                fail(ErrorCode::NotATree, "TREE_BOUND needs a tree");
            if (g.has_negative_weight())
                fail(ErrorCode::NegativeWeight, "TREE_BOUND needs nonnegative weights");
            if (n < 2)
                fail(ErrorCode::BadOrder, "needs n >= 2");
            auto mu = restricted_spectrum(g, eig_tol).mu;
            const double tol = spectral_tolerance(laplacian(g));
            const double e = total_weight(g);
            if (g.is_unweighted()) {
                for (int k : range.resolve(n))
                    rows.push_back({label, k, prefix(mu, k), e + 2.0 * k - 1.0, tol, false, group_key(n, k)});
                break;
            }
            mu.push_back(0.0);
            mu = sorted_desc(std::move(mu));
            std::vector<double> w;
            for (const auto& [p, x] : g.edges())
                w.push_back(x);
            w = sorted_desc(std::move(w));
            w.resize(static_cast<std::size_t>(2 * n), 0.0);
            std::vector<double> bound(static_cast<std::size_t>(n), 0.0);
            bound[0] = e + w[0];
            for (int k = 2; k <= n; ++k)
                bound[k - 1] = w[2 * k - 3] + w[2 * k - 2];
            prefix_rows(rows, label, n, range.resolve(n), mu, bound, tol, true);
            break;
        }
        case CheckId::STAR_COROLLARY: {
            const auto weights = star_weights(g);
            const auto mu = restricted_spectrum(g, eig_tol).mu;
            const auto bound = sorted_desc(star_corollary_bound(weights));
            prefix_rows(rows, label, n, range.resolve(n), mu, bound, spectral_tolerance(laplacian(g)), true);
            break;
        }
        case CheckId::BLOCK_SUMS: {
            if (n < 2)
                fail(ErrorCode::BadOrder, "needs n >= 2");
            const auto mu = restricted_spectrum(g, eig_tol).mu;
            prefix_rows(rows, label, n, range.resolve(n), mu, block_sums(g), spectral_tolerance(laplacian(g)), true);
            break;
        }
        case CheckId::ADJ_TREE_MIN_STAR: {
            require_unweighted_tree(g);
            const auto lambda = adjacency_eigenvalues(g, eig_tol);
            const auto ref = reference_spectrum("star-adj", n, 0, eig_tol);
            for (int k : range.resolve_between(2, n - 2)) {
                const double lhs = prefix(ref, k);
                const double rhs = prefix(lambda, k);
                rows.push_back({label, k, lhs, rhs, pair_tolerance(lhs, rhs), false, group_key(n, k)});
            }
            break;
        }
        case CheckId::ADJ_TREE_MAX_TFAM: {
            require_unweighted_tree(g);
            const auto lambda = adjacency_eigenvalues(g, eig_tol);
            for (int k : range.resolve_between(2, (n + 1) / 3)) {
                const double rhs = tfamily_max(n, k, eig_tol);
                if (!std::isfinite(rhs))
                    continue;
                const double lhs = prefix(lambda, k);
                rows.push_back({label, k, lhs, rhs, pair_tolerance(lhs, rhs), false, group_key(n, k)});
            }
            break;
        }
        case CheckId::LAP_TREE_MIN_PATH: {
            require_unweighted_tree(g);
            const auto mu = laplacian_eigenvalues(g, eig_tol);
            const auto ref = reference_spectrum("path-lap", n, 0, eig_tol);
            for (int k : range.resolve_between(2, n - 1)) {
                const double lhs = prefix(ref, k);
                const double rhs = prefix(mu, k);
                rows.push_back({label, k, lhs, rhs, pair_tolerance(lhs, rhs), false, group_key(n, k)});
            }
            break;
        }
        case CheckId::LAP_TREE_MAX_SFAM: {
            require_unweighted_tree(g);
            const auto mu = laplacian_eigenvalues(g, eig_tol);
            for (int k : range.resolve_between(3, std::min(n, n - 1))) {
                const auto ref = reference_spectrum("sfam-lap", n, k, eig_tol);
                const double lhs = prefix(mu, k);
                const double rhs = prefix(ref, k);
                rows.push_back({label, k, lhs, rhs, pair_tolerance(lhs, rhs), false, group_key(n, k)});
            }
            break;
        }
        case CheckId::LAP_TAIL_MAX_STAR: {
            require_unweighted_tree(g);
            const auto mu = laplacian_eigenvalues(g, eig_tol);
            const auto ref = reference_spectrum("star-lap", n, 0, eig_tol);
            for (int k : range.resolve_between(3, n - 1)) {
                const double lhs = tail_sum(mu, k);
                const double rhs = tail_sum(ref, k);
                rows.push_back({label, k, lhs, rhs, pair_tolerance(lhs, rhs), false, group_key(n, k)});
            }
            break;
        }
        case CheckId::LAP_TAIL_MIN_SPIDER: {
            require_unweighted_tree(g);
            const auto mu = laplacian_eigenvalues(g, eig_tol);
            for (int k : range.resolve_between(3, n - 1)) {
                const auto ref = reference_spectrum("spider-lap", n, k, eig_tol);
                const double lhs = tail_sum(ref, k);
                const double rhs = tail_sum(mu, k);
                rows.push_back({label, k, lhs, rhs, pair_tolerance(lhs, rhs), false, group_key(n, k)});
            }
            break;
        }
        case CheckId::ADJMAX_GRAPHS: {
            if (!g.is_unweighted())
                fail(ErrorCode::WeightedInput, "ADJMAX_GRAPHS needs an unweighted graph");
            const auto lambda = adjacency_eigenvalues(g, eig_tol);
            for (int k : range.resolve_between(2, n - 1)) {
                const auto m = adjmax_match(n, k, g.edge_count());
                if (!m)
                    continue;
                const std::string key = "bh:" + std::to_string(m->t) + ":" + std::to_string(m->s);
                const auto ref = cache().get(key + ":" + tol_tag(eig_tol), [&] {
                    return adjacency_eigenvalues(brualdi_hoffman(m->t + 1, binom2(m->t - 1) + m->s), eig_tol);
                });
                const double lhs = prefix(lambda, k);
                const double rhs = (k - 1) * (m->t - 1.0) + ref.front();
                rows.push_back({label, k, lhs, rhs, pair_tolerance(lhs, rhs), false,
                                group_key(n, k) + ",t=" + std::to_string(m->t) + ",s=" + std::to_string(m->s)});
            }
            break;
        }
        case CheckId::THETA_MAJ:
        case CheckId::GMIII:
        case CheckId::BIII:
            fail(ErrorCode::InvalidArgument, std::string(label) + " runs over decompositions, not graphs");
        }
        return rows;
    }

    std::vector<Row> decomposition_rows(CheckId id, const RankOneDecomposition& d, const KRange& range, double eig_tol)
    {
        std::vector<Row> rows;
        const std::string label(to_string(id));
        const int n = d.n;
        const int t = d.size();
        if (id == CheckId::THETA_MAJ) {
            check_theta_majorization(d);
            const auto thetas = d.sorted_thetas();
            const SymMatrix m = assemble(d);
            const auto lambda = jacobi_eigen(m, eig_tol, EigenMode::ValuesOnly).values;
            const int top = std::min(n, t);
            const double tol = spectral_tolerance(m);
            for (int k : range.resolve_between(1, top)) {
                Row r{label, k, prefix(thetas, k), prefix(lambda, k), tol, k == top && t <= n, group_key(n, k)};
                rows.push_back(std::move(r));
            }
            return rows;
        }
        if (id != CheckId::GMIII && id != CheckId::BIII)
            fail(ErrorCode::InvalidArgument, label + " runs over graphs, not decompositions");
        for (int k : range.resolve_between(1, std::min(t, n - 1))) {
            const PrefixCheck c = id == CheckId::GMIII ? check_gmiii(d, k) : check_biii(d, k);
            rows.push_back({label, k, c.lhs, c.rhs, c.tol, false, group_key(n, k)});
        }
        return rows;
    }

    struct Evaluated {
        Report report;
        std::string group;
        bool retracted = false;
    };

    Report make_report(const Row& r, const std::string& instance_id, int n, Verdict v, std::optional<std::uint64_t> seed)
    {
        Report rep;
        rep.tool_version = std::string(kToolVersion);
        rep.conjecture = r.label;
        rep.instance_id = instance_id;
        rep.n = n;
        rep.k = r.k;
        rep.lhs = r.lhs;
        rep.rhs = r.rhs;
        rep.slack = r.rhs - r.lhs;
        rep.verdict = v;
        rep.seed = seed;
        return rep;
    }

    // Violated rows are recomputed with the eigensolver and comparison
    // tolerances tightened 1000x; the refined verdict is the one reported.
    template <typename RowFn>
    std::vector<Evaluated> finish_rows(const std::vector<Row>& rows, RowFn recompute, const std::string& instance_id,
                                       int n, std::optional<std::uint64_t> seed)
    {
        std::vector<Evaluated> out;
        std::optional<std::vector<Row>> refined;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Row& r = rows[i];
            Verdict v = row_verdict(r, 1.0);
            bool retracted = false;
            Row final_row = r;
            if (v == Verdict::Violated) {
                try {
                    if (!refined)
                        refined = recompute(kJacobiTolerance * kRecheckFactor);
                    const auto match = std::find_if(refined->begin(), refined->end(), [&](const Row& x) {
                        return x.label == r.label && x.k == r.k;
                    });
                    if (match != refined->end()) {
                        final_row = *match;
                        v = row_verdict(final_row, kRecheckFactor);
                        retracted = v != Verdict::Violated;
                    }
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::NoConvergence)
                        throw;
                }
            }
            out.push_back({make_report(final_row, instance_id, n, v, seed), final_row.group, retracted});
        }
        return out;
    }

    std::vector<Evaluated> evaluate_graph(CheckId id, const Instance& inst, const KRange& ks)
    {
        const auto rows = graph_rows(id, inst.graph, ks, kJacobiTolerance);
        return finish_rows(
            rows, [&](double eig_tol) { return graph_rows(id, inst.graph, ks, eig_tol); }, inst.id,
            inst.graph.order(), inst.seed);
    }

    std::vector<Evaluated> evaluate_decomp(CheckId id, const RankOneDecomposition& d, const std::string& instance_id,
                                           const KRange& ks, std::optional<std::uint64_t> seed)
    {
        const auto rows = decomposition_rows(id, d, ks, kJacobiTolerance);
        return finish_rows(
            rows, [&](double eig_tol) { return decomposition_rows(id, d, ks, eig_tol); }, instance_id, d.n, seed);
    }

    std::vector<Report> strip(std::vector<Evaluated> ev)
    {
        std::vector<Report> out;
        out.reserve(ev.size());
        for (auto& e : ev)
            out.push_back(std::move(e.report));
        return out;
    }

    Report single(CheckId id, const WeightedGraph& g, int k, std::string_view label)
    {
        if (k < 1 || k > g.order() - 1)
            fail(ErrorCode::KOutOfRange, "k=" + std::to_string(k) + " outside [1, n-1]");
        const Instance inst{"", g, std::nullopt};
        for (auto& r : strip(evaluate_graph(id, inst, KRange::only({k}))))
            if (r.conjecture == label)
                return r;
        fail(ErrorCode::KOutOfRange, "k=" + std::to_string(k) + " is outside the statement's hypotheses");
    }

} // namespace

Report check_gm_weighted(const WeightedGraph& g, int k)
{
    return single(CheckId::GM_WEIGHTED, g, k, "GM_WEIGHTED");
}

Report check_brouwer_weighted(const WeightedGraph& g, int k, BrouwerForm form)
{
    if (form == BrouwerForm::Vector) {
        if (g.has_negative_weight())
            fail(ErrorCode::NegativeWeight, "the vector form needs nonnegative weights");
        return single(CheckId::BROUWER_WEIGHTED, g, k, "BROUWER_WEIGHTED:vector");
    }
    return single(CheckId::BROUWER_WEIGHTED, g, k, "BROUWER_WEIGHTED:tableau");
}

Report check_brouwer_01(const WeightedGraph& g, int k)
{
    return single(CheckId::BROUWER_01, g, k, "BROUWER_01");
}

Report check_tree_bound(const WeightedGraph& t, int k)
{
    return single(CheckId::TREE_BOUND, t, k, "TREE_BOUND");
}

Report check_star_corollary(std::span<const double> weights, int k)
{
    const int n = static_cast<int>(weights.size()) + 1;
    WeightedGraph g(n);
    for (int v = 1; v < n; ++v)
        g.set_weight(0, v, weights[v - 1]);
    return single(CheckId::STAR_COROLLARY, g, k, "STAR_COROLLARY");
}

Report check_block_sums(const WeightedGraph& g, int k)
{
    return single(CheckId::BLOCK_SUMS, g, k, "BLOCK_SUMS");
}

std::vector<double> star_corollary_bound(std::span<const double> weights)
{
    const int leaves = static_cast<int>(weights.size());
    if (leaves < 2)
        fail(ErrorCode::BadOrder, "the star corollary needs n >= 3");
    const auto w = sorted_desc(std::vector<double>(weights.begin(), weights.end()));
    const auto positive = static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](double x) { return x > 0.0; }));
    const double head = std::accumulate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(positive), 0.0);
    const double tail = std::accumulate(w.begin() + static_cast<std::ptrdiff_t>(positive), w.end(), 0.0);
    std::vector<double> b(w);
    b.front() += head;
    b.back() += tail;
    return b;
}

std::vector<double> star_weights(const WeightedGraph& g)
{
    if (g.order() < 3)
        fail(ErrorCode::BadOrder, "the star corollary needs n >= 3");
    for (const auto& [p, w] : g.edges())
        if (p.first != 0)
            fail(ErrorCode::InvalidArgument, "graph is not a star centered at vertex 0");
    std::vector<double> w;
    for (int v = 1; v < g.order(); ++v)
        w.push_back(g.weight(0, v));
    return w;
}

std::vector<Report> evaluate_instance(CheckId id, const Instance& inst, const KRange& ks)
{
    return strip(evaluate_graph(id, inst, ks));
}

RankOneDecomposition DecompositionSource::instance(CheckId id, std::uint64_t index) const
{
    if (n_min < 2 || n_max < n_min)
        fail(ErrorCode::BadOrder, "decomposition sources need 2 <= n_min <= n_max");
    SplitMix64 rng(mix_seed(seed, index));
    const int n = n_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max - n_min + 1)));
    const int t = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const std::uint64_t inner = rng.next();
    if (id == CheckId::THETA_MAJ)
        return random_decomposition(n, t, inner);
    return random_jperp_decomposition(n, t, inner);
}

std::vector<Report> evaluate_decomposition(CheckId id, const RankOneDecomposition& d, const std::string& instance_id,
                                           const KRange& ks, std::optional<std::uint64_t> seed)
{
    return strip(evaluate_decomp(id, d, instance_id, ks, seed));
}

int default_workers()
{
    if (const char* env = std::getenv("LAPTAB_WORKERS")) {
        int v = 0;
        const std::string_view s(env);
        const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc() && p == s.data() + s.size() && v > 0)
            return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

    struct Partial {
        std::vector<Report> reports;
        ScanSummary summary;
        std::vector<std::pair<std::uint64_t, std::size_t>> violations; // (instance index, report index)
    };

    void note_slack(std::optional<double>& best, std::string& argmin, double slack, const std::string& id)
    {
        if (!best || slack < *best) {
            best = slack;
            argmin = id;
        }
    }

    void absorb(Partial& p, std::uint64_t index, std::vector<Evaluated>&& ev)
    {
        ScanSummary& s = p.summary;
        ++s.instances;
        if (ev.empty())
            ++s.not_applicable;
        for (auto& e : ev) {
            const Report& r = e.report;
            ++s.reports;
            if (r.verdict == Verdict::Violated) {
                ++s.violations;
                p.violations.emplace_back(index, p.reports.size());
            }
            if (r.verdict == Verdict::Marginal)
                ++s.marginal;
            if (e.retracted)
                ++s.retracted;
            if (!s.min_slack || r.slack < *s.min_slack) {
                s.min_slack = r.slack;
                s.argmin_instance = r.instance_id;
                s.argmin_k = r.k;
            }
            GroupStats& gs = s.groups[e.group];
            std::optional<double> gmin;
            if (gs.reports > 0)
                gmin = gs.min_slack;
            note_slack(gmin, gs.argmin_instance, r.slack, r.instance_id);
            gs.min_slack = *gmin;
            ++gs.reports;
            if (r.verdict == Verdict::Violated)
                ++gs.violations;
            if (r.verdict == Verdict::Marginal)
                ++gs.marginal;
            p.reports.push_back(std::move(e.report));
        }
    }

    void record_error(Partial& p, const std::string& id, const std::exception& e)
    {
        ++p.summary.instances;
        ++p.summary.errors;
        if (p.summary.error_messages.size() < kMaxErrorMessages)
            p.summary.error_messages.push_back(id + ": " + e.what());
    }

    void merge(Partial& into, Partial&& from)
    {
        ScanSummary& a = into.summary;
        ScanSummary& b = from.summary;
        for (const auto& [idx, pos] : from.violations)
            into.violations.emplace_back(idx, pos + into.reports.size());
        into.reports.insert(into.reports.end(), std::make_move_iterator(from.reports.begin()),
                            std::make_move_iterator(from.reports.end()));
        a.instances += b.instances;
        a.reports += b.reports;
        a.violations += b.violations;
        a.marginal += b.marginal;
        a.retracted += b.retracted;
        a.not_applicable += b.not_applicable;
        a.errors += b.errors;
        for (auto& m : b.error_messages)
            if (a.error_messages.size() < kMaxErrorMessages)
                a.error_messages.push_back(std::move(m));
        if (b.min_slack && (!a.min_slack || *b.min_slack < *a.min_slack)) {
            a.min_slack = b.min_slack;
            a.argmin_instance = b.argmin_instance;
            a.argmin_k = b.argmin_k;
        }
        for (auto& [key, g] : b.groups) {
            auto it = a.groups.find(key);
            if (it == a.groups.end()) {
                a.groups.emplace(key, std::move(g));
                continue;
            }
            GroupStats& ga = it->second;
            if (g.min_slack < ga.min_slack) {
                ga.min_slack = g.min_slack;
                ga.argmin_instance = g.argmin_instance;
            }
            ga.reports += g.reports;
            ga.violations += g.violations;
            ga.marginal += g.marginal;
        }
    }

    template <typename Work>
    Partial run_partitioned(std::uint64_t count, int workers, Work work)
    {
        if (workers <= 0)
            workers = default_workers();
        const std::uint64_t w = std::max<std::uint64_t>(1, std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), count));
        std::vector<Partial> parts(static_cast<std::size_t>(w));
        const auto run = [&](std::uint64_t part) {
            const std::uint64_t lo = part * count / w;
            const std::uint64_t hi = (part + 1) * count / w;
            for (std::uint64_t i = lo; i < hi; ++i)
                work(parts[static_cast<std::size_t>(part)], i);
        };
        if (w == 1) {
            run(0);
        } else {
            std::vector<std::thread> threads;
            for (std::uint64_t part = 0; part < w; ++part)
                threads.emplace_back(run, part);
            for (auto& t : threads)
                t.join();
        }
        Partial all;
        for (auto& p : parts)
            merge(all, std::move(p));
        return all;
    }

    std::string file_safe(std::string s)
    {
        for (char& c : s)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_')
                c = '_';
        return s;
    }

    std::string counterexample_path(const std::string& dir, const Report& r, std::string_view ext)
    {
        return (std::filesystem::path(dir)
                / (file_safe(r.conjecture) + "_" + file_safe(r.instance_id) + "_k" + std::to_string(r.k) + std::string(ext)))
            .string();
    }

    void write_text(const std::string& path, const std::string& text)
    {
        std::ofstream out(path);
        out << text;
        if (!out)
            fail(ErrorCode::IOError, "cannot write " + path);
    }

    std::string format_decomposition(const RankOneDecomposition& d)
    {
        std::ostringstream out;
        out.precision(17);
        out << d.n << ' ' << d.size() << '\n';
        for (const auto& t : d.terms) {
            out << t.theta;
            for (double x : t.u)
                out << ' ' << x;
            out << '\n';
        }
        return out.str();
    }

} // namespace

ScanResult scan(CheckId id, const InstanceStream& stream, const ScanOptions& options)
{
    if (is_decomposition_check(id))
        fail(ErrorCode::InvalidArgument, std::string(to_string(id)) + " scans decompositions; use scan_decompositions");
    Partial all = run_partitioned(stream.size(), options.workers, [&](Partial& p, std::uint64_t i) {
        Instance inst;
        try {
            inst = stream.instance(i);
            absorb(p, i, evaluate_graph(id, inst, options.k_range));
        } catch (const Error& e) {
            record_error(p, inst.id.empty() ? std::to_string(i) : inst.id, e);
        }
    });
    all.summary.id = id;
    if (!options.counterexample_dir.empty() && !all.violations.empty()) {
        std::filesystem::create_directories(options.counterexample_dir);
        for (const auto& [idx, pos] : all.violations) {
            const Report& r = all.reports[pos];
            const std::string path = counterexample_path(options.counterexample_dir, r, ".wel");
            write_text(path, format_weighted_edgelist(stream.instance(idx).graph));
            all.summary.counterexample_files.push_back(path);
        }
    }
    return {std::move(all.reports), std::move(all.summary)};
}

ScanResult scan_decompositions(CheckId id, const DecompositionSource& source, const ScanOptions& options)
{
    if (!is_decomposition_check(id))
        fail(ErrorCode::InvalidArgument, std::string(to_string(id)) + " scans graphs; use scan");
    const auto instance_id = [&](std::uint64_t i) { return "decomp:" + std::to_string(i); };
    Partial all = run_partitioned(source.count, options.workers, [&](Partial& p, std::uint64_t i) {
        try {
            const auto d = source.instance(id, i);
            absorb(p, i, evaluate_decomp(id, d, instance_id(i), options.k_range, source.seed));
        } catch (const Error& e) {
            record_error(p, instance_id(i), e);
        }
    });
    all.summary.id = id;
    if (!options.counterexample_dir.empty() && !all.violations.empty()) {
        std::filesystem::create_directories(options.counterexample_dir);
        for (const auto& [idx, pos] : all.violations) {
            const Report& r = all.reports[pos];
            const std::string path = counterexample_path(options.counterexample_dir, r, ".dec");
            write_text(path, format_decomposition(source.instance(id, idx)));
            all.summary.counterexample_files.push_back(path);
        }
    }
    return {std::move(all.reports), std::move(all.summary)};
}

std::map<std::string, int> adjmax_thresholds(const ScanSummary& summary)
{
    // (k, t) -> s -> violations
    std::map<std::pair<int, int>, std::map<int, std::uint64_t>> table;
    for (const auto& [key, g] : summary.groups) {
        int n = 0;
        int k = 0;
        int t = 0;
        int s = 0;
        if (std::sscanf(key.c_str(), "n=%d,k=%d,t=%d,s=%d", &n, &k, &t, &s) != 4)
            continue;
        table[{k, t}][s] += g.violations;
    }
    std::map<std::string, int> out;
    for (const auto& [kt, by_s] : table) {
        int threshold = -1;
        for (auto it = by_s.rbegin(); it != by_s.rend() && it->second == 0; ++it)
            threshold = it->first;
        out["k=" + std::to_string(kt.first) + ",t=" + std::to_string(kt.second)] = threshold;
    }
    return out;
}

std::string format_summary(const ScanSummary& s)
{
    std::ostringstream out;
    out.precision(12);
    out << "check " << to_string(s.id) << (is_proved(s.id) ? " (proved)" : " (conjecture)") << '\n';
    out << "instances " << s.instances << ", reports " << s.reports << ", violated " << s.violations << ", marginal "
        << s.marginal << ", retracted " << s.retracted << ", not applicable " << s.not_applicable << ", errors "
        << s.errors << '\n';
    if (s.min_slack)
        out << "min slack " << *s.min_slack << " at " << s.argmin_instance << " k=" << s.argmin_k << '\n';
    for (const auto& [key, g] : s.groups)
        out << "  [" << key << "] reports " << g.reports << ", violated " << g.violations << ", min slack "
            << g.min_slack << " at " << g.argmin_instance << '\n';
    if (s.id == CheckId::ADJMAX_GRAPHS)
        for (const auto& [key, threshold] : adjmax_thresholds(s))
            out << "  empirical threshold [" << key << "] s >= "
                << (threshold < 0 ? std::string("none") : std::to_string(threshold)) << '\n';
    for (const auto& m : s.error_messages)
        out << "  error " << m << '\n';
    for (const auto& f : s.counterexample_files)
        out << "  counterexample " << f << '\n';
    return out.str();
}

WeightedGraph graph_from_pair_vector(int n, std::span<const double> a)
{
    if (n < 1)
        fail(ErrorCode::BadOrder, "graphs need n >= 1");
    if (static_cast<long long>(a.size()) != binom2(n))
        fail(ErrorCode::LengthMismatch, "pair vector must have C(n,2) entries");
    WeightedGraph g(n);
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.set_weight(i, j, a[idx++]);
    return g;
}

VectorFunction pair_vector_laplacian_sum(int n, int k)
{
    return [n, k](std::span<const double> a) { return prefix(restricted_spectrum(graph_from_pair_vector(n, a)).mu, k); };
}

VectorFunction pair_vector_gm_rhs(int n, int k)
{
    return [n, k](std::span<const double> a) { return prefix(conjugate_sequence(graph_from_pair_vector(n, a)).dstar, k); };
}

VectorFunction pair_vector_tableau_rhs(int n, int k)
{
    return [n, k](std::span<const double> a) { return prefix(tableau_row_sums(graph_from_pair_vector(n, a)).r, k); };
}

namespace {

    double arrangement_value(int n, std::span<const double> a, int k, ArrangementObjective objective)
    {
        const WeightedGraph g = graph_from_pair_vector(n, a);
        const auto values = objective == ArrangementObjective::LaplacianSum ? laplacian_eigenvalues(g) : adjacency_eigenvalues(g);
        return prefix(values, k);
    }

    double distinct_permutations(const std::vector<double>& sorted)
    {
        double count = 1.0;
        std::size_t run = 0;
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            run = (i > 0 && sorted[i] == sorted[i - 1]) ? run + 1 : 1;
            count *= static_cast<double>(i + 1) / static_cast<double>(run);
        }
        return count;
    }

} // namespace

ArrangementResult search_arrangement(int n, std::span<const double> weights, int k, ArrangementObjective objective,
                                     ArrangementSense sense, std::uint64_t budget, std::uint64_t seed)
{
    if (n < 2)
        fail(ErrorCode::BadOrder, "arrangements need n >= 2");
    const auto m = static_cast<std::size_t>(binom2(n));
    if (weights.size() > m)
        fail(ErrorCode::Infeasible, std::to_string(weights.size()) + " weights do not fit on C(n,2) pairs");
    if (k < 1 || k > n)
        fail(ErrorCode::KOutOfRange, "k outside [1, n]");
    for (double w : weights) {
        if (!std::isfinite(w))
            fail(ErrorCode::NonFinite, "weights must be finite");
        if (w < 0.0)
            fail(ErrorCode::NegativeWeight, "arrangement weights must be nonnegative");
    }
    std::vector<double> a(weights.begin(), weights.end());
    a.resize(m, 0.0);
    std::sort(a.begin(), a.end());

    const auto better = [sense](double x, double y) { return sense == ArrangementSense::Max ? x > y : x < y; };
    ArrangementResult res;
    std::vector<double> best = a;
    res.value = arrangement_value(n, a, k, objective);
    res.evaluations = 1;

    if (n <= 5 || distinct_permutations(a) <= kExhaustiveLimit) {
        res.exhaustive = true;
        while (std::next_permutation(a.begin(), a.end())) {
            const double v = arrangement_value(n, a, k, objective);
            ++res.evaluations;
            if (better(v, res.value)) {
                res.value = v;
                best = a;
            }
        }
        res.best = graph_from_pair_vector(n, best);
        return res;
    }

    SplitMix64 rng(seed);
    for (std::size_t i = m - 1; i > 0; --i)
        std::swap(a[i], a[static_cast<std::size_t>(rng.below(i + 1))]);
    double current = arrangement_value(n, a, k, objective);
    ++res.evaluations;
    if (better(current, res.value)) {
        res.value = current;
        best = a;
    }
    while (res.evaluations < budget) {
        const auto i = static_cast<std::size_t>(rng.below(m));
        const auto j = static_cast<std::size_t>(rng.below(m));
        if (a[i] == a[j])
            continue;
        std::swap(a[i], a[j]);
        const double v = arrangement_value(n, a, k, objective);
        ++res.evaluations;
        if (better(current, v)) {
            std::swap(a[i], a[j]);
            continue;
        }
        current = v;
        if (better(v, res.value)) {
            res.value = v;
            best = a;
        }
    }
    res.best = graph_from_pair_vector(n, best);
    return res;
}

} // namespace laptab
