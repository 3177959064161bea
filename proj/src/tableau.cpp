#include "laptab/tableau.hpp"

#include "laptab/error.hpp"

#include <algorithm>
#include <functional>

namespace laptab {

namespace {

    void require_order(const WeightedGraph& g)
    {
        if (g.order() < 2)
            fail(ErrorCode::BadOrder, "tableau quantities need n >= 2");
    }

    // Sum of 1-based sorted weights first..last (inclusive); empty when last < first.
    double range_sum(const std::vector<double>& w, long long first, long long last)
    {
        double s = 0.0;
        for (long long i = first; i <= last; ++i)
            s += w[static_cast<std::size_t>(i - 1)];
        return s;
    }

} // namespace

std::vector<double> sorted_pair_weights(const WeightedGraph& g)
{
    const int n = g.order();
    std::vector<double> w;
    w.reserve(static_cast<std::size_t>(binom2(n)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            w.push_back(g.weight(i, j));
    std::stable_sort(w.begin(), w.end(), std::greater<>());
    return w;
}

ConjugateSequence conjugate_sequence(const WeightedGraph& g)
{
    require_order(g);
    const int n = g.order();
    ConjugateSequence cs;
    cs.dstar.assign(static_cast<std::size_t>(n - 1), 0.0);
    cs.row_sorted.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& row = cs.row_sorted[i];
        row.reserve(static_cast<std::size_t>(n - 1));
        for (int j = 0; j < n; ++j)
            if (j != i)
                row.push_back(g.weight(i, j));
        std::stable_sort(row.begin(), row.end(), std::greater<>());
    }
    for (int j = 0; j < n - 1; ++j)
        for (int i = 0; i < n; ++i)
            cs.dstar[j] += cs.row_sorted[i][j];
    return cs;
}

TableauRows tableau_row_sums(const WeightedGraph& g)
{
    require_order(g);
    const long long n = g.order();
    TableauRows t;
    t.sorted_weights = sorted_pair_weights(g);
    t.r.reserve(static_cast<std::size_t>(n - 1));
    for (long long i = 1; i <= n - 1; ++i) {
        const double left = range_sum(t.sorted_weights, binom2(i) + 1, binom2(i + 1));
        const double right = range_sum(t.sorted_weights, (i - 1) * n - binom2(i) + 1, i * n - binom2(i + 1));
        t.r.push_back(left + right);
    }
    return t;
}

std::vector<std::vector<double>> materialize_weight_tableau(const WeightedGraph& g)
{
    require_order(g);
    const int n = g.order();
    if (n > 12)
        fail(ErrorCode::OrderTooLarge, "tableau materialization is limited to n <= 12");
    const auto w = sorted_pair_weights(g);
    std::vector<std::vector<double>> tab(static_cast<std::size_t>(n - 1),
                                         std::vector<double>(static_cast<std::size_t>(n), 0.0));
    std::size_t lower = 0;
    std::size_t upper = 0;
    for (int i = 0; i < n - 1; ++i) {
        for (int c = 0; c <= i; ++c)
            tab[i][c] = w[lower++];
        for (int c = i + 1; c < n; ++c)
            tab[i][c] = w[upper++];
    }
    return tab;
}

std::vector<double> brouwer_bound_vector(const WeightedGraph& g)
{
    require_order(g);
    const long long n = g.order();
    const auto w = sorted_pair_weights(g);
    std::vector<double> b;
    b.reserve(static_cast<std::size_t>(n - 1));
    b.push_back(total_weight(g) + w[0]);
    for (long long k = 2; k <= n - 1; ++k)
        b.push_back(range_sum(w, binom2(k) + 1, binom2(k + 1)));
    return b;
}

std::vector<double> block_sums(const WeightedGraph& g)
{
    require_order(g);
    const int n = g.order();
    std::vector<double> all;
    all.reserve(static_cast<std::size_t>(n) * (n - 1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                all.push_back(g.weight(i, j));
    std::stable_sort(all.begin(), all.end(), std::greater<>());
    std::vector<double> blocks(static_cast<std::size_t>(n - 1), 0.0);
    for (std::size_t idx = 0; idx < all.size(); ++idx)
        blocks[idx / static_cast<std::size_t>(n)] += all[idx];
    return blocks;
}

double star_charpoly_eval(std::span<const double> weights, double mu)
{
    double total = 0.0;
    double product = 1.0;
    for (double w : weights) {
        total += w;
        product *= mu - w;
    }
    double correction = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        double others = 1.0;
        for (std::size_t j = 0; j < weights.size(); ++j)
            if (j != i)
                others *= mu - weights[j];
        correction += weights[i] * weights[i] * others;
    }
    return product * (mu - total) - correction;
}

} // namespace laptab
