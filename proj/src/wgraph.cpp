#include "laptab/wgraph.hpp"

#include "laptab/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace laptab {

WeightedGraph::WeightedGraph(int n)
    : n_(n)
{
    if (n < 0)
        fail(ErrorCode::BadOrder, "negative graph order");
}

WeightedGraph::Pair WeightedGraph::key(int i, int j) const
{
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        fail(ErrorCode::IndexOutOfRange,
             "vertex pair (" + std::to_string(i) + ", " + std::to_string(j) + ") outside order " + std::to_string(n_));
    if (i == j)
        fail(ErrorCode::SelfLoop, "weighted graphs carry no diagonal weights");
    return i < j ? Pair{i, j} : Pair{j, i};
}

double WeightedGraph::weight(int i, int j) const
{
    if (i == j)
        return 0.0;
    const auto it = weights_.find(key(i, j));
    return it == weights_.end() ? 0.0 : it->second;
}

void WeightedGraph::set_weight(int i, int j, double w)
{
    if (!std::isfinite(w))
        fail(ErrorCode::NonFinite, "edge weight is not finite");
    const Pair k = key(i, j);
    if (w == 0.0)
        weights_.erase(k);
    else
        weights_[k] = w;
}

void WeightedGraph::add_vertices(int count)
{
    n_ += count;
}

bool WeightedGraph::is_unweighted() const
{
    return std::all_of(weights_.begin(), weights_.end(), [](const auto& e) { return e.second == 1.0; });
}

bool WeightedGraph::has_negative_weight() const
{
    return std::any_of(weights_.begin(), weights_.end(), [](const auto& e) { return e.second < 0.0; });
}

SymMatrix WeightedGraph::adjacency() const
{
    SymMatrix a(n_);
    for (const auto& [p, w] : weights_)
        a.set(p.first, p.second, w);
    return a;
}

std::vector<std::vector<int>> WeightedGraph::neighbours() const
{
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
    for (const auto& [p, w] : weights_) {
        adj[p.first].push_back(p.second);
        adj[p.second].push_back(p.first);
    }
    return adj;
}

SymMatrix laplacian(const WeightedGraph& g)
{
    SymMatrix l(g.order());
    std::vector<double> d(static_cast<std::size_t>(g.order()), 0.0);
    for (const auto& [p, w] : g.edges()) {
        l.set(p.first, p.second, -w);
        d[p.first] += w;
        d[p.second] += w;
    }
    for (int i = 0; i < g.order(); ++i)
        l.set(i, i, d[i]);
    return l;
}

RestrictedSpectrum restricted_spectrum(const WeightedGraph& g, double tol)
{
    const int n = g.order();
    if (n < 2)
        fail(ErrorCode::BadOrder, "restricted spectrum needs n >= 2");
    const std::vector<double> ones(static_cast<std::size_t>(n), 1.0);
    const SymMatrix reduced = restrict_to_complement(laplacian(g), ones);
    return {jacobi_eigen(reduced, tol, EigenMode::ValuesOnly).values};
}

double total_weight(const WeightedGraph& g)
{
    double e = 0.0;
    for (const auto& [p, w] : g.edges())
        e += w;
    return e;
}

WeightedGraph shift(const WeightedGraph& g, double w)
{
    WeightedGraph out(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            out.set_weight(i, j, g.weight(i, j) + w);
    return out;
}

std::vector<double> degrees(const WeightedGraph& g)
{
    std::vector<double> d(static_cast<std::size_t>(g.order()), 0.0);
    for (const auto& [p, w] : g.edges()) {
        d[p.first] += w;
        d[p.second] += w;
    }
    return d;
}

bool is_connected(const WeightedGraph& g, double threshold)
{
    const int n = g.order();
    if (n <= 1)
        return true;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [p, w] : g.edges()) {
        if (std::abs(w) <= threshold)
            continue;
        adj[p.first].push_back(p.second);
        adj[p.second].push_back(p.first);
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : adj[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

bool is_tree(const WeightedGraph& g)
{
    return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

std::vector<double> adjacency_eigenvalues(const WeightedGraph& g, double tol)
{
    return jacobi_eigen(g.adjacency(), tol, EigenMode::ValuesOnly).values;
}

std::vector<double> laplacian_eigenvalues(const WeightedGraph& g, double tol)
{
    return jacobi_eigen(laplacian(g), tol, EigenMode::ValuesOnly).values;
}

} // namespace laptab
