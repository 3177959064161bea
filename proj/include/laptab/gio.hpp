#pragma once

#include "laptab/major.hpp"
#include "laptab/wgraph.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace laptab {

inline constexpr int kMaxGraph6Order = 258047;

/// Strips an optional ">>graph6<<" header and trailing CR/LF.
WeightedGraph decode_graph6(std::string_view line);
/// Short or long form depending on n. Only unweighted graphs.
std::string encode_graph6(const WeightedGraph& g);

/// Line starting with ':' (after an optional ">>sparse6<<" header).
WeightedGraph decode_sparse6(std::string_view line);

/// "n m" then m lines "u v w" (1-based). '#' starts a comment.
WeightedGraph parse_weighted_edgelist(std::string_view text);
WeightedGraph read_weighted_edgelist(const std::string& path);
std::string format_weighted_edgelist(const WeightedGraph& g);

/// Decodes every non-empty line of a graph6/sparse6 file.
std::vector<WeightedGraph> read_graph6_file(const std::string& path);

struct Report {
    std::string tool_version;
    std::string conjecture;
    std::string instance_id;
    int n = 0;
    int k = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    Verdict verdict = Verdict::Holds;
    std::optional<std::uint64_t> seed;

    bool operator==(const Report&) const = default;
};

enum class ReportFormat { JSONLines, CSV };

inline constexpr std::string_view kCsvHeader = "tool_version,conjecture,instance_id,n,k,lhs,rhs,slack,verdict,seed";

std::string format_report_json(const Report& r);
void write_reports(std::ostream& out, const std::vector<Report>& reports, ReportFormat format);
std::string write_reports(const std::vector<Report>& reports, ReportFormat format);

Report parse_report_json(std::string_view line);
std::vector<Report> read_reports_jsonl(std::string_view text);

} // namespace laptab
