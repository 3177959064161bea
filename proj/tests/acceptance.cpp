// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "laptab/enumerate.hpp"
#include "laptab/families.hpp"
#include "laptab/gio.hpp"
#include "laptab/harness.hpp"
#include "laptab/psd.hpp"
#include "laptab/reduce.hpp"
#include "laptab/rng.hpp"
#include "laptab/tableau.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <set>
#include <string>
#include <vector>

using namespace laptab;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

int g_failures = 0;

void run(int id, const char* name, double limit_seconds, const std::function<Outcome()>& body)
{
    const auto start = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > limit_seconds) {
        out.ok = false;
        out.detail += " runtime limit exceeded";
    }
    if (!out.ok)
        ++g_failures;
    std::printf("%s criterion %d (%s): %.2fs limit %.0fs; %s\n", out.ok ? "PASS" : "FAIL", id, name, secs,
                limit_seconds, out.detail.c_str());
    std::fflush(stdout);
}

void fail_if(Outcome& o, bool bad, const std::string& why)
{
    if (bad) {
        o.ok = false;
        o.detail += why + "; ";
    }
}

std::string summary_line(const ScanSummary& s)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s instances=%llu reports=%llu violations=%llu marginal=%llu errors=%llu",
                  std::string(to_string(s.id)).c_str(), static_cast<unsigned long long>(s.instances),
                  static_cast<unsigned long long>(s.reports), static_cast<unsigned long long>(s.violations),
                  static_cast<unsigned long long>(s.marginal), static_cast<unsigned long long>(s.errors));
    return buf;
}

void expect_clean(Outcome& o, const ScanResult& r, std::uint64_t instances)
{
    fail_if(o, r.summary.instances != instances, "instance count " + std::to_string(r.summary.instances));
    fail_if(o, r.summary.violations != 0, "violations in " + summary_line(r.summary));
    fail_if(o, r.summary.errors != 0,
            "errors in " + summary_line(r.summary) +
                (r.summary.error_messages.empty() ? std::string() : ": " + r.summary.error_messages.front()));
    o.detail += summary_line(r.summary) + "; ";
}

ScanOptions options(int workers = 0, KRange ks = KRange::every())
{
    ScanOptions o;
    o.workers = workers;
    o.k_range = std::move(ks);
    return o;
}

bool close_all(const std::vector<double>& got, std::vector<double> want, double tol)
{
    std::sort(want.begin(), want.end(), std::greater<>());
    if (got.size() != want.size())
        return false;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (std::abs(got[i] - want[i]) > tol)
            return false;
    return true;
}

Outcome eigensolver()
{
    Outcome o;
    for (int n = 2; n <= 12; ++n) {
        std::vector<double> kn(static_cast<std::size_t>(n - 1), n);
        kn.push_back(0.0);
        std::vector<double> sn{static_cast<double>(n), 0.0};
        for (int i = 0; i < n - 2; ++i)
            sn.push_back(1.0);
        std::vector<double> pn;
        for (int i = 0; i < n; ++i) {
            const double s = std::sin(i * std::numbers::pi / (2.0 * n));
            pn.push_back(4.0 * s * s);
        }
        fail_if(o, !close_all(laplacian_eigenvalues(complete(n)), kn, 1e-9), "K_" + std::to_string(n));
        fail_if(o, !close_all(laplacian_eigenvalues(star(n)), sn, 1e-9), "S_" + std::to_string(n));
        fail_if(o, !close_all(laplacian_eigenvalues(path(n)), pn, 1e-9), "P_" + std::to_string(n));
    }
    o.detail += "K_n, S_n, P_n for n = 2..12 within 1e-9";
    return o;
}

Outcome example_matrix()
{
    Outcome o;
    const auto g = read_weighted_edgelist(std::string(LAPTAB_DATA_DIR) + "/example33.wel");
    const auto deg = degrees(g);
    const std::vector<double> printed_deg{1.1, 3, -8.9, 1};
    const std::vector<double> printed_dstar{20.2, -5, -19};
    for (int i = 0; i < 4; ++i)
        fail_if(o, std::abs(deg[i] - printed_deg[i]) > 1e-12, "degree " + std::to_string(i));
    const auto dstar = conjugate_sequence(g).dstar;
    for (int j = 0; j < 3; ++j)
        fail_if(o, std::abs(dstar[j] - printed_dstar[j]) > 1e-12, "d* entry " + std::to_string(j));
    for (int k = 1; k <= 3; ++k) {
        const auto r = check_gm_weighted(g, k);
        fail_if(o, is_violation(r.verdict), "GM violated at k=" + std::to_string(k));
        char buf[96];
        std::snprintf(buf, sizeof buf, "k=%d %s slack=%.6g ", k, std::string(to_string(r.verdict)).c_str(), r.slack);
        o.detail += buf;
    }
    return o;
}

Outcome grone_merris()
{
    Outcome o;
    expect_clean(o, scan(CheckId::GM_WEIGHTED, InstanceStream::all_graphs(6), options()), 32768);
    expect_clean(o,
                 scan(CheckId::GM_WEIGHTED, InstanceStream::random_weighted(3, 8, 10000, Distribution::UniformSym, 1),
                      options()),
                 10000);
    expect_clean(o,
                 scan(CheckId::GM_WEIGHTED, InstanceStream::random_weighted(3, 8, 10000, Distribution::SparseTree, 2),
                      options()),
                 10000);
    return o;
}

Outcome brouwer01()
{
    Outcome o;
    for (int n = 2; n <= 6; ++n) {
        const auto s = InstanceStream::all_graphs(n);
        expect_clean(o, scan(CheckId::BROUWER_01, s, options()), s.size());
    }
    return o;
}

Outcome brouwer_weighted()
{
    Outcome o;
    const auto r = scan(CheckId::BROUWER_WEIGHTED,
                        InstanceStream::random_weighted(2, 8, 100000, Distribution::Uniform01, 3), options());
    expect_clean(o, r, 100000);
    o.detail += "retracted=" + std::to_string(r.summary.retracted);
    return o;
}

Outcome tree_bounds()
{
    Outcome o;
    std::uint64_t trees = 0;
    for (int n = 2; n <= 8; ++n) {
        const auto s = InstanceStream::all_trees(n);
        trees += s.size();
        const auto r = scan(CheckId::TREE_BOUND, s, options());
        fail_if(o, r.summary.violations != 0 || r.summary.errors != 0, summary_line(r.summary));
    }
    o.detail += "labeled trees n<=8: " + std::to_string(trees) + "; ";
    expect_clean(o,
                 scan(CheckId::TREE_BOUND, InstanceStream::random_weighted(2, 8, 10000, Distribution::SparseTree, 4),
                      options()),
                 10000);
    return o;
}

Outcome decompositions()
{
    Outcome o;
    const DecompositionSource src{3, 8, 10000, 5};
    expect_clean(o, scan_decompositions(CheckId::THETA_MAJ, src, options()), 10000);
    expect_clean(o, scan_decompositions(CheckId::GMIII, src, options()), 10000);

    int span_failures = 0;
    int neg_failures = 0;
    int irreducible = 0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        SplitMix64 rng(mix_seed(6, i));
        const int n = 3 + static_cast<int>(rng.below(6));
        const int t = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (!check_span_rank(random_decomposition(n, t, rng.next())))
            ++span_failures;
        const int t_small = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 2)));
        const auto neg = check_negative_entry_necessity(random_jperp_decomposition(n, t_small, rng.next()));
        irreducible += neg.irreducible ? 1 : 0;
        if (neg.verdict == Verdict::Violated)
            ++neg_failures;
    }
    fail_if(o, span_failures != 0, "span-rank failures " + std::to_string(span_failures));
    fail_if(o, neg_failures != 0, "negative-entry failures " + std::to_string(neg_failures));
    o.detail += "span-rank 10000 ok=" + std::to_string(10000 - span_failures) +
                ", negative-entry irreducible=" + std::to_string(irreducible);
    return o;
}

Outcome peeling()
{
    Outcome o;
    SplitMix64 rng(7);
    int bad_error = 0;
    int bad_terms = 0;
    for (int trial = 0; trial < 100000; ++trial) {
        const std::size_t m = 1 + rng.below(20);
        std::vector<double> a(m);
        for (double& v : a) {
            const auto roll = rng.below(5);
            v = roll == 0 ? 0.0 : roll == 1 ? static_cast<double>(rng.below(4)) - 2.0 : rng.normal();
        }
        const auto terms = peel_sign_patterns(a);
        const auto back = reconstruct(terms, m);
        double inf = 0.0;
        std::set<double> mags;
        for (double v : a) {
            inf = std::max(inf, std::abs(v));
            if (v != 0.0)
                mags.insert(std::abs(v));
        }
        for (std::size_t i = 0; i < m; ++i)
            if (std::abs(back[i] - a[i]) > static_cast<double>(m) * 1e-12 * inf) {
                ++bad_error;
                break;
            }
        if (terms.size() > mags.size())
            ++bad_terms;
    }
    fail_if(o, bad_error != 0, "reconstruction error bound exceeded " + std::to_string(bad_error));
    fail_if(o, bad_terms != 0, "too many terms " + std::to_string(bad_terms));
    o.detail += "100000 vectors, m<=20";
    return o;
}

Outcome tree_conjectures()
{
    Outcome o;
    const auto dir = std::filesystem::temp_directory_path() / "laptab_acceptance_cx";
    std::filesystem::remove_all(dir);
    for (int n = 5; n <= 8; ++n) {
        const auto trees = InstanceStream::all_trees(n);
        const double star_l1 = adjacency_eigenvalues(star(n)).front();
        const double star_two = std::sqrt(n - 1.0);
        double best = 1e300;
        int non_star_minimizers = 0;
        int l1_failures = 0;
        for (std::uint64_t i = 0; i < trees.size(); ++i) {
            const auto g = trees.instance(i).graph;
            const auto lam = adjacency_eigenvalues(g);
            const double two = lam[0] + lam[1];
            const auto deg = degrees(g);
            const bool is_star = *std::max_element(deg.begin(), deg.end()) == n - 1.0;
            best = std::min(best, two);
            if (!is_star && two <= star_two + 1e-9)
                ++non_star_minimizers;
            if (lam[0] > star_l1 + 1e-9)
                ++l1_failures;
        }
        fail_if(o, std::abs(best - star_two) > 1e-9, "minimum of lambda1+lambda2 not at the star, n=" + std::to_string(n));
        fail_if(o, non_star_minimizers != 0, "non-star minimizer at n=" + std::to_string(n));
        fail_if(o, l1_failures != 0, "lambda1 above the star at n=" + std::to_string(n));

        for (CheckId id : {CheckId::ADJ_TREE_MIN_STAR, CheckId::LAP_TAIL_MAX_STAR, CheckId::LAP_TAIL_MIN_SPIDER}) {
            ScanOptions a = options(1, id == CheckId::ADJ_TREE_MIN_STAR ? KRange::only({2}) : KRange::only({3}));
            a.counterexample_dir = dir.string();
            ScanOptions b = a;
            b.workers = 4;
            const auto first = scan(id, trees, a);
            const auto second = scan(id, trees, b);
            fail_if(o, write_reports(first.reports, ReportFormat::JSONLines) !=
                           write_reports(second.reports, ReportFormat::JSONLines),
                    "non-deterministic " + std::string(to_string(id)));
            fail_if(o, format_summary(first.summary) != format_summary(second.summary), "summary differs");
            fail_if(o, first.summary.errors != 0, "errors in " + summary_line(first.summary));
            fail_if(o, first.summary.counterexample_files.size() != first.summary.violations,
                    "unserialized counterexample");
            if (n == 8)
                o.detail += summary_line(first.summary) + "; ";
        }
    }
    std::filesystem::remove_all(dir);
    return o;
}

Outcome graph6()
{
    Outcome o;
    std::uint64_t count = 0;
    for (int n = 1; n <= 6; ++n) {
        const auto s = InstanceStream::all_graphs(n);
        for (std::uint64_t i = 0; i < s.size(); ++i) {
            const auto g = s.instance(i).graph;
            if (!(decode_graph6(encode_graph6(g)) == g))
                fail_if(o, true, "round trip " + s.instance(i).id);
            ++count;
        }
    }
    fail_if(o, !(decode_graph6("A_") == complete(2)), "A_");
    fail_if(o, !(decode_graph6("Bw") == complete(3)), "Bw");
    fail_if(o, !(decode_graph6("C~") == complete(4)), "C~");
    o.detail += std::to_string(count) + " graphs round-tripped, goldens checked";
    return o;
}

Outcome determinism()
{
    Outcome o;
    auto compare = [&](const std::string& label, const std::function<ScanResult(int)>& f) {
        const auto a = write_reports(f(1).reports, ReportFormat::JSONLines);
        const auto b = write_reports(f(8).reports, ReportFormat::JSONLines);
        fail_if(o, a != b, label + " differs");
        fail_if(o, a.empty(), label + " empty");
        o.detail += label + " " + std::to_string(a.size()) + " bytes identical; ";
    };
    compare("GM_WEIGHTED random", [](int w) {
        return scan(CheckId::GM_WEIGHTED, InstanceStream::random_weighted(3, 8, 2000, Distribution::UniformSym, 11),
                    options(w));
    });
    compare("BROUWER_WEIGHTED random", [](int w) {
        return scan(CheckId::BROUWER_WEIGHTED,
                    InstanceStream::random_weighted(3, 8, 2000, Distribution::Uniform01, 11), options(w));
    });
    compare("TREE_BOUND trees:7", [](int w) { return scan(CheckId::TREE_BOUND, InstanceStream::all_trees(7), options(w)); });
    compare("BIII decompositions", [](int w) {
        return scan_decompositions(CheckId::BIII, DecompositionSource{3, 8, 2000, 11}, options(w));
    });
    return o;
}

} // namespace

int main()
{
    run(1, "eigensolver closed forms", 1, eigensolver);
    run(2, "mixed-sign 4x4 example", 1, example_matrix);
    run(3, "weighted Grone-Merris", 120, grone_merris);
    run(4, "Brouwer on {0,1} graphs n<=6", 60, brouwer01);
    run(5, "weighted Brouwer scan", 600, brouwer_weighted);
    run(6, "tree bounds", 120, tree_bounds);
    run(7, "rank-one decomposition properties", 120, decompositions);
    run(8, "sign-pattern peeling", 30, peeling);
    run(9, "tree eigenvalue-sum scans", 300, tree_conjectures);
    run(10, "graph6 round trip", 60, graph6);
    run(11, "worker-count determinism", 300, determinism);
    std::printf("%d criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
