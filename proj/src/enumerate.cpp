#include "laptab/enumerate.hpp"

#include "laptab/error.hpp"
#include "laptab/rng.hpp"
#include "laptab/tableau.hpp"

#include <algorithm>
#include <string>

namespace laptab {

WeightedGraph prufer_decode(int n, std::span<const int> seq)
{
    if (n < 2)
        fail(ErrorCode::BadOrder, "Pruefer decoding needs n >= 2");
    if (static_cast<int>(seq.size()) != n - 2)
        fail(ErrorCode::LengthMismatch, "Pruefer sequence must have n - 2 labels");
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int v : seq) {
        if (v < 0 || v >= n)
            fail(ErrorCode::LabelOutOfRange, "Pruefer label " + std::to_string(v) + " outside [0, n)");
        ++degree[v];
    }
    WeightedGraph g(n);
    int ptr = 0;
    while (degree[ptr] != 1)
        ++ptr;
    int leaf = ptr;
    for (int v : seq) {
        g.set_weight(leaf, v, 1.0);
        if (--degree[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            ++ptr;
            while (degree[ptr] != 1)
                ++ptr;
            leaf = ptr;
        }
    }
    g.set_weight(leaf, n - 1, 1.0);
    return g;
}

WeightedGraph graph_from_mask(int n, std::uint64_t mask)
{
    WeightedGraph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1ULL)
                g.set_weight(i, j, 1.0);
    return g;
}

std::string_view to_string(Distribution d)
{
    switch (d) {
    case Distribution::Uniform01:
        return "uniform01";
    case Distribution::UniformSym:
        return "uniformsym";
    case Distribution::SparseTree:
        return "sparsetree";
    case Distribution::StarSym:
        return "starsym";
    }
    return "unknown";
}

std::optional<Distribution> parse_distribution(std::string_view name)
{
    for (Distribution d : {Distribution::Uniform01, Distribution::UniformSym, Distribution::SparseTree,
                           Distribution::StarSym})
        if (to_string(d) == name)
            return d;
    return std::nullopt;
}

namespace {

    WeightedGraph draw_graph(int n, Distribution dist, SplitMix64& rng)
    {
        WeightedGraph g(n);
        switch (dist) {
        case Distribution::Uniform01:
        case Distribution::UniformSym:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    g.set_weight(i, j, dist == Distribution::Uniform01 ? rng.uniform01() : rng.uniform(-1.0, 1.0));
            break;
        case Distribution::SparseTree: {
            std::vector<int> seq(static_cast<std::size_t>(std::max(0, n - 2)));
            for (int& v : seq)
                v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            const WeightedGraph tree = prufer_decode(n, seq);
            for (const auto& [p, w] : tree.edges())
                g.set_weight(p.first, p.second, rng.uniform01());
            break;
        }
        case Distribution::StarSym:
            for (int v = 1; v < n; ++v)
                g.set_weight(0, v, rng.uniform(-1.0, 1.0));
            break;
        }
        return g;
    }

    std::uint64_t ipow(std::uint64_t base, int exp)
    {
        std::uint64_t r = 1;
        for (int i = 0; i < exp; ++i)
            r *= base;
        return r;
    }

} // namespace

WeightedGraph random_weighted_graph(int n, Distribution dist, std::uint64_t seed, std::uint64_t index)
{
    if (n < 2)
        fail(ErrorCode::BadOrder, "random graphs need n >= 2");
    SplitMix64 rng(mix_seed(seed, index));
    return draw_graph(n, dist, rng);
}

InstanceStream InstanceStream::all_trees(int n)
{
    if (n < 2)
        fail(ErrorCode::BadOrder, "trees need n >= 2");
    if (n > kMaxTreeOrder)
        fail(ErrorCode::OrderTooLarge, "labeled tree enumeration is limited to n <= 10");
    InstanceStream s;
    Segment seg;
    seg.kind = Kind::AllTrees;
    seg.n_min = seg.n_max = n;
    seg.count = ipow(static_cast<std::uint64_t>(n), n - 2);
    s.push(std::move(seg));
    return s;
}

InstanceStream InstanceStream::all_graphs(int n)
{
    if (n < 1)
        fail(ErrorCode::BadOrder, "graphs need n >= 1");
    if (n > kMaxGraphOrder)
        fail(ErrorCode::OrderTooLarge, "labeled graph enumeration is limited to n <= 7");
    InstanceStream s;
    Segment seg;
    seg.kind = Kind::AllGraphs;
    seg.n_min = seg.n_max = n;
    seg.count = 1ULL << binom2(n);
    s.push(std::move(seg));
    return s;
}

InstanceStream InstanceStream::random_weighted(int n_min, int n_max, std::uint64_t count, Distribution dist,
                                               std::uint64_t seed)
{
    if (n_min < 2 || n_max < n_min)
        fail(ErrorCode::BadOrder, "random graphs need 2 <= n_min <= n_max");
    if (dist == Distribution::StarSym && n_min < 3)
        fail(ErrorCode::BadOrder, "random stars need n >= 3");
    InstanceStream s;
    Segment seg;
    seg.kind = Kind::RandomWeighted;
    seg.n_min = n_min;
    seg.n_max = n_max;
    seg.count = count;
    seg.dist = dist;
    seg.seed = seed;
    s.push(std::move(seg));
    return s;
}

InstanceStream InstanceStream::from_graphs(std::vector<WeightedGraph> graphs, std::string label)
{
    InstanceStream s;
    Segment seg;
    seg.kind = Kind::List;
    seg.count = graphs.size();
    seg.graphs = std::make_shared<const std::vector<WeightedGraph>>(std::move(graphs));
    seg.label = std::move(label);
    s.push(std::move(seg));
    return s;
}

InstanceStream InstanceStream::concat(const std::vector<InstanceStream>& parts)
{
    InstanceStream s;
    for (const auto& p : parts)
        for (const auto& seg : p.segments_)
            s.push(seg);
    return s;
}

void InstanceStream::push(Segment s)
{
    starts_.push_back(total_);
    total_ += s.count;
    segments_.push_back(std::move(s));
}

std::uint64_t InstanceStream::size() const
{
    return total_;
}

Instance InstanceStream::instance(std::uint64_t index) const
{
    if (index >= total_)
        fail(ErrorCode::IndexOutOfRange, "instance index " + std::to_string(index) + " past the end of the stream");
    const auto it = std::upper_bound(starts_.begin(), starts_.end(), index);
    const auto seg = static_cast<std::size_t>(it - starts_.begin()) - 1;
    return from_segment(segments_[seg], index - starts_[seg]);
}

Instance InstanceStream::from_segment(const Segment& s, std::uint64_t index) const
{
    Instance inst;
    const std::string local = std::to_string(index);
    switch (s.kind) {
    case Kind::AllTrees: {
        const int n = s.n_min;
        std::vector<int> seq(static_cast<std::size_t>(n - 2));
        std::uint64_t rest = index;
        for (int pos = n - 3; pos >= 0; --pos) {
            seq[static_cast<std::size_t>(pos)] = static_cast<int>(rest % static_cast<std::uint64_t>(n));
            rest /= static_cast<std::uint64_t>(n);
        }
        inst.graph = prufer_decode(n, seq);
        inst.id = "tree:" + std::to_string(n) + ":" + local;
        break;
    }
    case Kind::AllGraphs:
        inst.graph = graph_from_mask(s.n_min, index);
        inst.id = "graph:" + std::to_string(s.n_min) + ":" + local;
        break;
    case Kind::RandomWeighted: {
        SplitMix64 rng(mix_seed(s.seed, index));
        int n = s.n_min;
        if (s.n_max > s.n_min)
            n += static_cast<int>(rng.below(static_cast<std::uint64_t>(s.n_max - s.n_min + 1)));
        inst.graph = draw_graph(n, s.dist, rng);
        inst.id = "random:" + std::string(to_string(s.dist)) + ":" + std::to_string(n) + ":" + local;
        inst.seed = s.seed;
        break;
    }
    case Kind::List:
        inst.graph = (*s.graphs)[static_cast<std::size_t>(index)];
        inst.id = s.label + ":" + local;
        break;
    }
    return inst;
}

bool InstanceStream::next(Instance& out)
{
    if (cursor_ >= total_)
        return false;
    out = instance(cursor_++);
    return true;
}

} // namespace laptab
