#include "laptab/error.hpp"
#include "laptab/families.hpp"
#include "laptab/gio.hpp"
#include "laptab/harness.hpp"
#include "laptab/psd.hpp"
#include "laptab/reduce.hpp"
#include "laptab/tableau.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace laptab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolated = 2;

bool ends_with(std::string_view s, std::string_view suffix)
{
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

WeightedGraph load_graph(const std::string& path)
{
    if (ends_with(path, ".g6") || ends_with(path, ".s6")) {
        auto graphs = read_graph6_file(path);
        if (graphs.empty())
            fail(ErrorCode::ParseError, path + " holds no graphs");
        return graphs.front();
    }
    return read_weighted_edgelist(path);
}

std::vector<double> parse_reals(const std::string& text)
{
    std::vector<double> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            fail(ErrorCode::ParseError, "bad number '" + item + "'");
        }
        if (used != item.size())
            fail(ErrorCode::ParseError, "bad number '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<long long> parse_integers(const std::string& text)
{
    std::vector<long long> out;
    for (double v : parse_reals(text)) {
        if (v != std::floor(v))
            fail(ErrorCode::ParseError, "expected integers");
        out.push_back(static_cast<long long>(v));
    }
    return out;
}

void print_values(const char* label, const std::vector<double>& v)
{
    std::printf("%s", label);
    for (double x : v)
        std::printf(" %.12g", x);
    std::printf("\n");
}

int emit(const std::vector<Report>& reports)
{
    write_reports(std::cout, reports, ReportFormat::JSONLines);
    for (const auto& r : reports)
        if (r.verdict == Verdict::Violated)
            return kExitViolated;
    return kExitOk;
}

// "5" or "5-8".
std::pair<int, int> parse_order_range(const std::string& text)
{
    const auto dash = text.find('-');
    const auto ints = parse_integers(dash == std::string::npos ? text : text.substr(0, dash) + "," + text.substr(dash + 1));
    if (ints.size() == 1)
        return {static_cast<int>(ints[0]), static_cast<int>(ints[0])};
    if (ints.size() != 2 || ints[1] < ints[0])
        fail(ErrorCode::InvalidArgument, "bad order range '" + text + "'");
    return {static_cast<int>(ints[0]), static_cast<int>(ints[1])};
}

struct Source {
    std::string kind;
    int n_min = 0;
    int n_max = 0;
    std::uint64_t count = 0;
    std::string path;
};

Source parse_source(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        fail(ErrorCode::InvalidArgument, "source must look like kind:args");
    Source s;
    s.kind = text.substr(0, colon);
    const std::string args = text.substr(colon + 1);
    if (s.kind == "g6") {
        s.path = args;
        return s;
    }
    if (s.kind == "random") {
        const auto comma = args.find(',');
        if (comma == std::string::npos)
            fail(ErrorCode::InvalidArgument, "random source is random:n,count");
        std::tie(s.n_min, s.n_max) = parse_order_range(args.substr(0, comma));
        const auto c = parse_integers(args.substr(comma + 1));
        if (c.size() != 1 || c[0] < 0)
            fail(ErrorCode::InvalidArgument, "bad instance count");
        s.count = static_cast<std::uint64_t>(c[0]);
        return s;
    }
    if (s.kind != "trees" && s.kind != "graphs")
        fail(ErrorCode::InvalidArgument, "unknown source kind '" + s.kind + "'");
    std::tie(s.n_min, s.n_max) = parse_order_range(args);
    return s;
}

Distribution default_distribution(CheckId id)
{
    switch (id) {
    case CheckId::GM_WEIGHTED:
    case CheckId::BLOCK_SUMS:
        return Distribution::UniformSym;
    case CheckId::TREE_BOUND:
        return Distribution::SparseTree;
    case CheckId::STAR_COROLLARY:
        return Distribution::StarSym;
    default:
        return Distribution::Uniform01;
    }
}

InstanceStream build_stream(const Source& s, Distribution dist, std::uint64_t seed)
{
    if (s.kind == "g6")
        return InstanceStream::from_graphs(read_graph6_file(s.path), "g6");
    if (s.kind == "random")
        return InstanceStream::random_weighted(s.n_min, s.n_max, s.count, dist, seed);
    std::vector<InstanceStream> parts;
    for (int n = s.n_min; n <= s.n_max; ++n)
        parts.push_back(s.kind == "trees" ? InstanceStream::all_trees(n) : InstanceStream::all_graphs(n));
    return InstanceStream::concat(parts);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Laplacian eigenvalue bounds: checkers, scans and constructions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    std::string file;
    std::string k_text = "all";

    auto* eig = app.add_subcommand("eig", "Restricted Laplacian, full Laplacian and adjacency spectra");
    eig->add_option("file", file, "Weighted edge list, .g6 or .s6")->required();

    auto* gm = app.add_subcommand("gm", "Weighted Grone-Merris check");
    gm->add_option("file", file)->required();
    gm->add_option("--k", k_text, "k values: all, 3, 1,2 or 2-4");

    std::string form = "both";
    auto* brouwer = app.add_subcommand("brouwer", "Weighted Brouwer checks");
    brouwer->add_option("file", file)->required();
    brouwer->add_option("--k", k_text);
    brouwer->add_option("--form", form, "vector, tableau or both")
        ->check(CLI::IsMember({"4.1", "4.5", "vector", "tableau", "both"}));

    auto* tree = app.add_subcommand("tree-bound", "Tree bound check");
    tree->add_option("file", file)->required();
    tree->add_option("--k", k_text);

    std::string check_name;
    std::string source_text;
    std::string out_path;
    std::string dist_name;
    std::string cex_dir;
    int workers = 0;
    std::uint64_t seed = 0;
    auto* scan_cmd = app.add_subcommand("scan", "Run a check over an instance source");
    scan_cmd->add_option("--check", check_name)->required();
    scan_cmd->add_option("--source", source_text, "trees:n | graphs:n | random:n,count | g6:path (n may be a range a-b)")
        ->required();
    scan_cmd->add_option("--k-range", k_text);
    scan_cmd->add_option("--workers", workers, "Worker threads (default LAPTAB_WORKERS or all cores)");
    scan_cmd->add_option("--seed", seed);
    scan_cmd->add_option("--out", out_path, "Report file (.jsonl or .csv)");
    scan_cmd->add_option("--dist", dist_name, "uniform01 | uniformsym | sparsetree | starsym");
    scan_cmd->add_option("--counterexamples", cex_dir, "Directory for confirmed violations");

    std::string kind;
    std::string params;
    auto* fam = app.add_subcommand("families", "Build a named family member");
    fam->add_option("--kind", kind, "star | path | subdivision | tfamily | sfamily | spider | brualdi-hoffman | adjmax")
        ->required();
    fam->add_option("--params", params, "Comma separated integers")->required();

    std::string vector_text;
    double zero_tol = -1.0;
    auto* peel = app.add_subcommand("peel", "Sign-pattern peeling of a vector");
    peel->add_option("--vector", vector_text)->required();
    peel->add_option("--zero-tol", zero_tol);

    std::string psd_check;
    int n = 5;
    int t = 2;
    int k = 1;
    auto* psd = app.add_subcommand("psd", "Checks on a seeded random rank-one decomposition");
    psd->add_option("--check", psd_check)->required()->check(CLI::IsMember({"theta", "gmiii", "biii", "neg", "span"}));
    psd->add_option("--n", n);
    psd->add_option("--t", t);
    psd->add_option("--k", k);
    psd->add_option("--seed", seed);

    std::string weights_text;
    std::string objective = "lap";
    std::string sense = "max";
    std::uint64_t budget = 20000;
    auto* arrange = app.add_subcommand("arrange", "Extremal placement of a weight multiset");
    arrange->add_option("--n", n)->required();
    arrange->add_option("--weights", weights_text)->required();
    arrange->add_option("--k", k);
    arrange->add_option("--objective", objective)->check(CLI::IsMember({"lap", "adj"}));
    arrange->add_option("--sense", sense)->check(CLI::IsMember({"max", "min"}));
    arrange->add_option("--budget", budget);
    arrange->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const KRange ks = KRange::parse(k_text);

        if (*eig) {
            const WeightedGraph g = load_graph(file);
            if (g.order() >= 2)
                print_values("restricted", restricted_spectrum(g).mu);
            print_values("laplacian", laplacian_eigenvalues(g));
            print_values("adjacency", adjacency_eigenvalues(g));
            return kExitOk;
        }

        if (*gm || *brouwer || *tree) {
            const CheckId id = *gm ? CheckId::GM_WEIGHTED : *brouwer ? CheckId::BROUWER_WEIGHTED : CheckId::TREE_BOUND;
            const WeightedGraph g = load_graph(file);
            if (*brouwer && (form == "4.1" || form == "vector") && g.has_negative_weight())
                fail(ErrorCode::NegativeWeight, "the vector form needs nonnegative weights");
            std::vector<Report> reports = evaluate_instance(id, Instance{file, g, std::nullopt}, ks);
            if (*brouwer && form != "both") {
                const std::string keep = (form == "4.1" || form == "vector") ? "BROUWER_WEIGHTED:vector"
                                                                             : "BROUWER_WEIGHTED:tableau";
                std::erase_if(reports, [&](const Report& r) { return r.conjecture != keep; });
            }
            return emit(reports);
        }

        if (*scan_cmd) {
            const auto id = parse_check_id(check_name);
            if (!id)
                fail(ErrorCode::InvalidArgument, "unknown check '" + check_name + "'");
            const Source src = parse_source(source_text);
            ScanOptions opts;
            opts.k_range = ks;
            opts.workers = workers;
            opts.counterexample_dir = cex_dir;
            ScanResult result;
            if (is_decomposition_check(*id)) {
                if (src.kind != "random")
                    fail(ErrorCode::InvalidArgument, "decomposition checks take a random:n,count source");
                result = scan_decompositions(*id, DecompositionSource{src.n_min, src.n_max, src.count, seed}, opts);
            } else {
                Distribution dist = default_distribution(*id);
                if (!dist_name.empty()) {
                    const auto d = parse_distribution(dist_name);
                    if (!d)
                        fail(ErrorCode::InvalidArgument, "unknown distribution '" + dist_name + "'");
                    dist = *d;
                }
                result = scan(*id, build_stream(src, dist, seed), opts);
            }
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                if (!out)
                    fail(ErrorCode::IOError, "cannot write " + out_path);
                write_reports(out, result.reports, ends_with(out_path, ".csv") ? ReportFormat::CSV : ReportFormat::JSONLines);
            }
            std::cout << format_summary(result.summary);
            return result.summary.violations > 0 ? kExitViolated : kExitOk;
        }

        if (*fam) {
            const auto fk = parse_family_kind(kind);
            if (!fk)
                fail(ErrorCode::InvalidArgument, "unknown family '" + kind + "'");
            const WeightedGraph g = make_family(*fk, parse_integers(params));
            std::cout << format_weighted_edgelist(g);
            if (g.is_unweighted())
                std::cout << "# graph6 " << encode_graph6(g) << '\n';
            return kExitOk;
        }

        if (*peel) {
            const auto a = parse_reals(vector_text);
            for (const auto& term : peel_sign_patterns(a, zero_tol)) {
                std::printf("%.17g", term.alpha);
                for (int s : term.pattern)
                    std::printf(" %d", s);
                std::printf("\n");
            }
            return kExitOk;
        }

        if (*psd) {
            if (psd_check == "theta") {
                const auto d = random_decomposition(n, t, seed);
                const auto v = check_theta_majorization(d);
                print_values("prefix_slacks", v.prefix_slacks);
                std::printf("total_gap %.3g holds %d marginal %d\n", v.total_gap, v.holds, v.marginal);
                return v.holds ? kExitOk : kExitViolated;
            }
            if (psd_check == "span") {
                const bool ok = check_span_rank(random_decomposition(n, t, seed));
                std::printf("span_rank %s\n", ok ? "agrees" : "differs");
                return ok ? kExitOk : kExitViolated;
            }
            const auto d = random_jperp_decomposition(n, t, seed);
            if (psd_check == "neg") {
                const auto r = check_negative_entry_necessity(d);
                std::printf("irreducible %d min_offdiagonal %.12g verdict %s\n", r.irreducible, r.min_offdiagonal,
                            std::string(to_string(r.verdict)).c_str());
                return r.verdict == Verdict::Violated ? kExitViolated : kExitOk;
            }
            const PrefixCheck c = psd_check == "gmiii" ? check_gmiii(d, k) : check_biii(d, k);
            std::printf("k %d lhs %.12g rhs %.12g slack %.3g verdict %s\n", c.k, c.lhs, c.rhs, c.slack,
                        std::string(to_string(c.verdict)).c_str());
            return c.verdict == Verdict::Violated ? kExitViolated : kExitOk;
        }

        if (*arrange) {
            const auto w = parse_reals(weights_text);
            const auto res = search_arrangement(n, w, k,
                                                objective == "lap" ? ArrangementObjective::LaplacianSum
                                                                   : ArrangementObjective::AdjacencySum,
                                                sense == "max" ? ArrangementSense::Max : ArrangementSense::Min, budget,
                                                seed);
            std::printf("# value %.12g %s after %llu evaluations\n", res.value, res.exhaustive ? "exhaustive" : "heuristic",
                        static_cast<unsigned long long>(res.evaluations));
            std::cout << format_weighted_edgelist(res.best);
            return kExitOk;
        }
    } catch (const Error& e) {
        std::cerr << "laptab: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "laptab: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
