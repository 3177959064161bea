#pragma once

#include "laptab/wgraph.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace laptab {

/// Labeled tree on 0..n-1 from a Pruefer sequence of n-2 labels in [0, n).
WeightedGraph prufer_decode(int n, std::span<const int> seq);

/// Graph whose edge set is the bitmask: bit b selects the b-th pair (i<j) in
/// lexicographic order.
WeightedGraph graph_from_mask(int n, std::uint64_t mask);

inline constexpr int kMaxTreeOrder = 10;
inline constexpr int kMaxGraphOrder = 7;

enum class Distribution {
    /// Every pair weighted uniformly in [0, 1).
    Uniform01,
    /// Every pair weighted uniformly in [-1, 1).
    UniformSym,
    /// Uniform labeled tree with edge weights in [0, 1).
    SparseTree,
    /// Star centered at 0 with edge weights in [-1, 1).
    StarSym,
};

std::string_view to_string(Distribution d);
std::optional<Distribution> parse_distribution(std::string_view name);

struct Instance {
    std::string id;
    WeightedGraph graph;
    std::optional<std::uint64_t> seed;
};

/// A finite, index-addressed sequence of graphs. instance(i) is a pure
/// function of the stream description and i, so workers may share a stream.
class InstanceStream {
public:
    InstanceStream() = default;

    /// All n^(n-2) labeled trees, Pruefer sequences in lexicographic order.
    static InstanceStream all_trees(int n);
    /// All 2^C(n,2) labeled graphs in increasing mask order.
    static InstanceStream all_graphs(int n);
    /// `count` seeded random graphs; with n_min < n_max the order is drawn per instance.
    static InstanceStream random_weighted(int n_min, int n_max, std::uint64_t count, Distribution dist,
                                          std::uint64_t seed);
    static InstanceStream random_weighted(int n, std::uint64_t count, Distribution dist, std::uint64_t seed)
    {
        return random_weighted(n, n, count, dist, seed);
    }
    /// Explicit graphs, ids "<label>:<index>".
    static InstanceStream from_graphs(std::vector<WeightedGraph> graphs, std::string label);

    /// Segments played back to back.
    static InstanceStream concat(const std::vector<InstanceStream>& parts);

    std::uint64_t size() const;
    Instance instance(std::uint64_t index) const;

    /// Sequential access for single consumers.
    bool next(Instance& out);
    void rewind() { cursor_ = 0; }

private:
    enum class Kind { AllTrees, AllGraphs, RandomWeighted, List };

    struct Segment {
        Kind kind = Kind::List;
        int n_min = 0;
        int n_max = 0;
        std::uint64_t count = 0;
        Distribution dist = Distribution::Uniform01;
        std::uint64_t seed = 0;
        std::shared_ptr<const std::vector<WeightedGraph>> graphs;
        std::string label;
    };

    Instance from_segment(const Segment& s, std::uint64_t index) const;

    std::vector<Segment> segments_;
    std::vector<std::uint64_t> starts_;
    std::uint64_t total_ = 0;
    std::uint64_t cursor_ = 0;

    void push(Segment s);
};

/// Instance `index` of a random stream with fixed order n.
WeightedGraph random_weighted_graph(int n, Distribution dist, std::uint64_t seed, std::uint64_t index);

} // namespace laptab
