#include "laptab/gio.hpp"

#include "laptab/error.hpp"
#include "laptab/tableau.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace laptab {

namespace {

    std::string_view trim_eol(std::string_view s)
    {
        while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
            s.remove_suffix(1);
        return s;
    }

    std::string_view strip_header(std::string_view s, std::string_view header)
    {
        if (s.substr(0, header.size()) == header)
            s.remove_prefix(header.size());
        return s;
    }

    int sixbits(char c)
    {
        const int v = static_cast<unsigned char>(c);
        if (v < 63 || v > 126)
            fail(ErrorCode::BadChar, "character code " + std::to_string(v) + " outside 63..126");
        return v - 63;
    }

    // Reads N(n) and advances pos past it.
    int read_order(std::string_view s, std::size_t& pos)
    {
        if (pos >= s.size())
            fail(ErrorCode::TruncatedBits, "missing order");
        const int first = sixbits(s[pos]);
        if (first < 63) {
            ++pos;
            return first;
        }
        if (pos + 1 < s.size() && s[pos + 1] == '~')
            fail(ErrorCode::OrderTooLarge, "graph6 orders above 258047 are not supported");
        if (pos + 4 > s.size())
            fail(ErrorCode::TruncatedBits, "truncated long-form order");
        int n = 0;
        for (std::size_t i = pos + 1; i < pos + 4; ++i)
            n = (n << 6) | sixbits(s[i]);
        pos += 4;
        return n;
    }

    void write_order(std::string& out, int n)
    {
        if (n < 0 || n > kMaxGraph6Order)
            fail(ErrorCode::OrderTooLarge, "order outside the graph6 range");
        if (n <= 62) {
            out.push_back(static_cast<char>(n + 63));
            return;
        }
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }

    // Big-endian bit reader over 6-bit characters.
    class BitReader {
    public:
        BitReader(std::string_view s, std::size_t pos)
            : s_(s)
            , pos_(pos)
        {
        }

        bool has(int bits) const { return static_cast<std::size_t>(bits) <= remaining(); }

        int bit()
        {
            if (used_ == 6) {
                current_ = sixbits(s_[pos_++]);
                used_ = 0;
            }
            return (current_ >> (5 - used_++)) & 1;
        }

        std::size_t remaining() const { return (s_.size() - pos_) * 6 + static_cast<std::size_t>(6 - used_); }

    private:
        std::string_view s_;
        std::size_t pos_;
        int current_ = 0;
        int used_ = 6;
    };

    [[noreturn]] void parse_error(int line, const std::string& what)
    {
        fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
    }

    std::string read_file(const std::string& path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            fail(ErrorCode::IOError, "cannot open " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    std::string format_double(double x)
    {
        if (!std::isfinite(x))
            return "null";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return buf;
    }

    std::string csv_field(const std::string& s)
    {
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"')
                out.push_back('"');
            out.push_back(c);
        }
        out.push_back('"');
        return out;
    }

    Verdict parse_verdict(const std::string& s)
    {
        for (Verdict v : {Verdict::Holds, Verdict::Marginal, Verdict::Violated, Verdict::NotApplicable})
            if (to_string(v) == s)
                return v;
        fail(ErrorCode::ParseError, "unknown verdict " + s);
    }

} // namespace

WeightedGraph decode_graph6(std::string_view line)
{
    std::string_view s = strip_header(trim_eol(line), ">>graph6<<");
    std::size_t pos = 0;
    const int n = read_order(s, pos);
    const long long bits = binom2(n);
    const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    const std::size_t have = s.size() - pos;
    if (have < need)
        fail(ErrorCode::TruncatedBits, "expected " + std::to_string(need) + " data bytes, found " + std::to_string(have));
    if (have > need)
        fail(ErrorCode::TrailingGarbage, std::to_string(have - need) + " extra bytes after the edge bits");
    BitReader reader(s, pos);
    WeightedGraph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (reader.bit())
                g.set_weight(i, j, 1.0);
    return g;
}

std::string encode_graph6(const WeightedGraph& g)
{
    if (!g.is_unweighted())
        fail(ErrorCode::WeightedInput, "graph6 stores unweighted graphs only");
    std::string out;
    const int n = g.order();
    write_order(out, n);
    int acc = 0;
    int used = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.weight(i, j) != 0.0 ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                used = 0;
            }
        }
    }
    if (used > 0)
        out.push_back(static_cast<char>((acc << (6 - used)) + 63));
    return out;
}

WeightedGraph decode_sparse6(std::string_view line)
{
    std::string_view s = strip_header(trim_eol(line), ">>sparse6<<");
    if (s.empty() || s.front() != ':')
        fail(ErrorCode::BadChar, "sparse6 lines start with ':'");
    std::size_t pos = 1;
    const int n = read_order(s, pos);
    int k = 0;
    while ((1LL << k) < n)
        ++k;
    BitReader reader(s, pos);
    WeightedGraph g(n);
    long long v = 0;
    while (reader.has(1 + k)) {
        const int b = reader.bit();
        long long x = 0;
        for (int i = 0; i < k; ++i)
            x = (x << 1) | reader.bit();
        if (b)
            ++v;
        if (x >= n || v >= n)
            break;
        if (x > v) {
            v = x;
        } else {
            if (x == v)
                fail(ErrorCode::LoopEdge, "sparse6 loop at vertex " + std::to_string(v));
            g.set_weight(static_cast<int>(x), static_cast<int>(v), 1.0);
        }
    }
    return g;
}

WeightedGraph parse_weighted_edgelist(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    std::optional<WeightedGraph> g;
    int expected = 0;
    int seen_edges = 0;
    std::set<std::pair<int, int>> seen;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = trim_eol(raw);
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::istringstream fields{std::string(line)};
        std::vector<std::string> tok;
        for (std::string t; fields >> t;)
            tok.push_back(t);
        if (tok.empty())
            continue;
        const auto to_int = [&](const std::string& t) {
            int v = 0;
            const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
            if (ec != std::errc() || p != t.data() + t.size())
                parse_error(line_no, "expected an integer, got '" + t + "'");
            return v;
        };
        if (!g) {
            if (tok.size() != 2)
                parse_error(line_no, "header must be 'n m'");
            const int n = to_int(tok[0]);
            expected = to_int(tok[1]);
            if (n < 0 || expected < 0)
                parse_error(line_no, "negative count in header");
            g.emplace(n);
            continue;
        }
        if (tok.size() != 3)
            parse_error(line_no, "edge lines are 'u v w'");
        if (seen_edges == expected)
            parse_error(line_no, "more edge lines than the header declares");
        const int u = to_int(tok[0]);
        const int v = to_int(tok[1]);
        double w = 0.0;
        const auto [p, ec] = std::from_chars(tok[2].data(), tok[2].data() + tok[2].size(), w);
        if (ec != std::errc() || p != tok[2].data() + tok[2].size() || !std::isfinite(w))
            parse_error(line_no, "bad weight '" + tok[2] + "'");
        if (u < 1 || v < 1 || u > g->order() || v > g->order())
            fail(ErrorCode::IndexOutOfRange, "line " + std::to_string(line_no) + ": vertex outside 1..n");
        if (u == v)
            fail(ErrorCode::SelfLoop, "line " + std::to_string(line_no) + ": self-loop");
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            fail(ErrorCode::DuplicateEdge, "line " + std::to_string(line_no) + ": repeated pair");
        g->set_weight(u - 1, v - 1, w);
        ++seen_edges;
    }
    if (!g)
        parse_error(line_no, "missing header");
    if (seen_edges != expected)
        parse_error(line_no, "header declares " + std::to_string(expected) + " edges, found " + std::to_string(seen_edges));
    return *g;
}

WeightedGraph read_weighted_edgelist(const std::string& path)
{
    return parse_weighted_edgelist(read_file(path));
}

std::string format_weighted_edgelist(const WeightedGraph& g)
{
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [p, w] : g.edges())
        out += std::to_string(p.first + 1) + " " + std::to_string(p.second + 1) + " " + format_double(w) + "\n";
    return out;
}

std::vector<WeightedGraph> read_graph6_file(const std::string& path)
{
    std::istringstream in(read_file(path));
    std::vector<WeightedGraph> graphs;
    for (std::string line; std::getline(in, line);) {
        const std::string_view body = trim_eol(line);
        if (body.empty())
            continue;
        const bool sparse = strip_header(body, ">>sparse6<<").substr(0, 1) == ":";
        graphs.push_back(sparse ? decode_sparse6(body) : decode_graph6(body));
    }
    return graphs;
}

std::string format_report_json(const Report& r)
{
    using nlohmann::json;
    std::string out = "{\"tool_version\":" + json(r.tool_version).dump();
    out += ",\"conjecture\":" + json(r.conjecture).dump();
    out += ",\"instance_id\":" + json(r.instance_id).dump();
    out += ",\"n\":" + std::to_string(r.n);
    out += ",\"k\":" + std::to_string(r.k);
    out += ",\"lhs\":" + format_double(r.lhs);
    out += ",\"rhs\":" + format_double(r.rhs);
    out += ",\"slack\":" + format_double(r.slack);
    out += ",\"verdict\":" + json(std::string(to_string(r.verdict))).dump();
    out += ",\"seed\":" + (r.seed ? std::to_string(*r.seed) : std::string("null"));
    out += "}";
    return out;
}

void write_reports(std::ostream& out, const std::vector<Report>& reports, ReportFormat format)
{
    if (format == ReportFormat::CSV)
        out << kCsvHeader << '\n';
    for (const auto& r : reports) {
        if (format == ReportFormat::JSONLines) {
            out << format_report_json(r) << '\n';
            continue;
        }
        out << csv_field(r.tool_version) << ',' << csv_field(r.conjecture) << ',' << csv_field(r.instance_id) << ','
            << r.n << ',' << r.k << ',' << format_double(r.lhs) << ',' << format_double(r.rhs) << ','
            << format_double(r.slack) << ',' << to_string(r.verdict) << ','
            << (r.seed ? std::to_string(*r.seed) : std::string()) << '\n';
    }
    if (!out)
        fail(ErrorCode::IOError, "failed to write reports");
}

std::string write_reports(const std::vector<Report>& reports, ReportFormat format)
{
    std::ostringstream out;
    write_reports(out, reports, format);
    return out.str();
}

Report parse_report_json(std::string_view line)
{
    using nlohmann::json;
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, e.what());
    }
    const auto real = [&](const char* key) {
        const auto& v = j.at(key);
        return v.is_null() ? std::nan("") : v.get<double>();
    };
    try {
        Report r;
        r.tool_version = j.at("tool_version").get<std::string>();
        r.conjecture = j.at("conjecture").get<std::string>();
        r.instance_id = j.at("instance_id").get<std::string>();
        r.n = j.at("n").get<int>();
        r.k = j.at("k").get<int>();
        r.lhs = real("lhs");
        r.rhs = real("rhs");
        r.slack = real("slack");
        r.verdict = parse_verdict(j.at("verdict").get<std::string>());
        if (!j.at("seed").is_null())
            r.seed = j.at("seed").get<std::uint64_t>();
        return r;
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, e.what());
    }
}

std::vector<Report> read_reports_jsonl(std::string_view text)
{
    std::vector<Report> out;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);)
        if (!trim_eol(line).empty())
            out.push_back(parse_report_json(trim_eol(line)));
    return out;
}

} // namespace laptab
