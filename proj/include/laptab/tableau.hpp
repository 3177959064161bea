#pragma once

#include "laptab/wgraph.hpp"

#include <span>
#include <vector>

namespace laptab {

/// Weighted conjugate degree sequence. Row i of `row_sorted` holds vertex i's
/// n-1 off-diagonal weights (absent pairs as 0) in descending order, and
/// dstar[j] is the sum of column j.
struct ConjugateSequence {
    std::vector<double> dstar;
    std::vector<std::vector<double>> row_sorted;
};

/// Row sums r_1..r_{n-1} of the staircase weight tableau together with the
/// globally sorted pair weights it is built from.
struct TableauRows {
    std::vector<double> r;
    std::vector<double> sorted_weights;
};

/// All C(n,2) pair weights (absent pairs as 0), descending. Ties keep pair order.
std::vector<double> sorted_pair_weights(const WeightedGraph& g);

ConjugateSequence conjugate_sequence(const WeightedGraph& g);

/// Closed-form row sums: row i (1-based) holds sorted weights C(i,2)+1..C(i+1,2)
/// on its left staircase and (i-1)n-C(i,2)+1..in-C(i+1,2) on its right part.
TableauRows tableau_row_sums(const WeightedGraph& g);

/// Materialized (n-1) x n tableau: entries on or below the diagonal are filled
/// row-major from the sorted weights, entries strictly above likewise, each from
/// its own counter. Only for cross-checking the closed form (n <= 12).
std::vector<std::vector<double>> materialize_weight_tableau(const WeightedGraph& g);

/// (e + w_1, w_2 + w_3, ..., sum of w_{C(k,2)+1..C(k+1,2)}, ...), length n-1.
std::vector<double> brouwer_bound_vector(const WeightedGraph& g);

/// Blocks of n consecutive entries of the descending off-diagonal multiset
/// (every pair counted twice), length n-1.
std::vector<double> block_sums(const WeightedGraph& g);

/// Denominator-cleared characteristic polynomial of a weighted star's
/// Laplacian, evaluated at mu.
double star_charpoly_eval(std::span<const double> weights, double mu);

inline long long binom2(long long n)
{
    return n * (n - 1) / 2;
}

} // namespace laptab
