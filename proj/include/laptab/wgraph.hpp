#pragma once

#include "laptab/symmat.hpp"

#include <map>
#include <utility>
#include <vector>

namespace laptab {

/// A symmetric zero-diagonal weight assignment on vertices 0..n-1. Only
/// nonzero weights are stored, keyed on (i, j) with i < j; absent pairs are 0.
class WeightedGraph {
public:
    using Pair = std::pair<int, int>;
    using EdgeMap = std::map<Pair, double>;

    explicit WeightedGraph(int n = 0);

    int order() const noexcept { return n_; }
    const EdgeMap& edges() const noexcept { return weights_; }
    int edge_count() const noexcept { return static_cast<int>(weights_.size()); }

    double weight(int i, int j) const;
    /// Writing 0 removes the pair.
    void set_weight(int i, int j, double w);
    void add_vertices(int count);

    /// Every stored weight is exactly 1.
    bool is_unweighted() const;
    bool has_negative_weight() const;

    SymMatrix adjacency() const;
    std::vector<std::vector<int>> neighbours() const;

    bool operator==(const WeightedGraph& other) const = default;

private:
    Pair key(int i, int j) const;

    int n_ = 0;
    EdgeMap weights_;
};

/// Restricted Laplacian spectrum: the n-1 eigenvalues of L on j-perp.
struct RestrictedSpectrum {
    std::vector<double> mu;
};

/// L = D - A with D_ii the weighted row sums.
SymMatrix laplacian(const WeightedGraph& g);
RestrictedSpectrum restricted_spectrum(const WeightedGraph& g, double tol = kJacobiTolerance);
double total_weight(const WeightedGraph& g);
/// Adds w to every pair weight (absent pairs become w).
WeightedGraph shift(const WeightedGraph& g, double w);
std::vector<double> degrees(const WeightedGraph& g);

/// Connectivity of the support pattern, ignoring weights with |w| <= threshold.
bool is_connected(const WeightedGraph& g, double threshold = 0.0);
/// n - 1 edges and connected.
bool is_tree(const WeightedGraph& g);

/// Adjacency eigenvalues, descending.
std::vector<double> adjacency_eigenvalues(const WeightedGraph& g, double tol = kJacobiTolerance);
/// Full Laplacian eigenvalues (all n), descending.
std::vector<double> laplacian_eigenvalues(const WeightedGraph& g, double tol = kJacobiTolerance);

} // namespace laptab
