#include "laptab/error.hpp"
#include "laptab/families.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

using namespace laptab;

namespace {

std::vector<double> sorted_degrees(const WeightedGraph& g)
{
    auto d = degrees(g);
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

// Graph invariants used for isomorphism-insensitive comparison.
bool same_spectrum(const WeightedGraph& a, const WeightedGraph& b)
{
    const auto x = adjacency_eigenvalues(a);
    const auto y = adjacency_eigenvalues(b);
    if (x.size() != y.size())
        return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (std::abs(x[i] - y[i]) > 1e-9)
            return false;
    return sorted_degrees(a) == sorted_degrees(b);
}

template <class F>
ErrorCode code_of(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST(Basic, StarPathComplete)
{
    EXPECT_EQ(star(2), path(2));
    EXPECT_EQ(star(2), complete(2));
    EXPECT_EQ(degrees(star(4)), (std::vector<double>{3, 1, 1, 1}));
    EXPECT_EQ(degrees(path(3)), (std::vector<double>{1, 2, 1}));
    EXPECT_EQ(code_of([] { star(1); }), ErrorCode::BadOrder);
}

TEST(Subdivision, Examples)
{
    EXPECT_TRUE(same_spectrum(subdivision(path(2)), path(3)));
    EXPECT_TRUE(same_spectrum(subdivision(path(3)), path(5)));
    const auto s = subdivision(star(4));
    EXPECT_EQ(s.order(), 7);
    EXPECT_EQ(s.edge_count(), 6);
    EXPECT_EQ(degrees(s)[0], 3.0);
    WeightedGraph w(2);
    w.set_weight(0, 1, 2.0);
    EXPECT_EQ(code_of([&] { subdivision(w); }), ErrorCode::WeightedInput);
}

TEST(TFamily, DoubleStar)
{
    EXPECT_TRUE(same_spectrum(t_family(3, 2, path(2)), path(3)));
    const auto ds = t_family(5, 2, path(2));
    EXPECT_TRUE(is_tree(ds));
    EXPECT_EQ(ds.order(), 5);
    EXPECT_EQ(degrees(ds)[0], 2.0);
    EXPECT_EQ(degrees(ds)[1], 2.0);
}

TEST(TFamily, FigureDegreesWithExplicitPendants)
{
    const std::vector<int> pendants{1, 2, 2, 3};
    const auto t = t_family(star(4), pendants);
    EXPECT_EQ(t.order(), 15);
    EXPECT_TRUE(is_tree(t));
    const auto d = degrees(t);
    EXPECT_EQ((std::vector<double>{d[0], d[1], d[2], d[3]}), (std::vector<double>{4, 3, 3, 4}));
}

TEST(TFamily, BalancedDegreesProperty)
{
    for (int k = 2; k <= 5; ++k) {
        for (int n = 2 * k - 1; n <= 2 * k + 8; ++n) {
            const auto t = t_family(n, k, path(k));
            ASSERT_EQ(t.order(), n);
            EXPECT_TRUE(is_tree(t));
            const auto d = degrees(t);
            const auto [lo, hi] = std::minmax_element(d.begin(), d.begin() + k);
            EXPECT_LE(*hi - *lo, 1.0) << "n " << n << " k " << k;
            for (int v = k; v < n; ++v)
                if (v < 2 * k - 1)
                    EXPECT_EQ(d[v], 2.0);
                else
                    EXPECT_EQ(d[v], 1.0);
        }
    }
}

TEST(TFamily, Errors)
{
    EXPECT_EQ(code_of([] { t_family(4, 3, path(3)); }), ErrorCode::Infeasible);
    EXPECT_EQ(code_of([] { t_family(7, 3, path(2)); }), ErrorCode::BadOrder);
    EXPECT_EQ(t_family(5, 3, path(3)), subdivision(path(3)));
}

TEST(SFamily, Examples)
{
    const auto s = s_family(7, 3);
    EXPECT_TRUE(is_tree(s));
    const auto d = degrees(s);
    EXPECT_EQ(d[0], 2.0);
    EXPECT_EQ(d[1], 3.0);
    EXPECT_EQ(d[2], 3.0);
    EXPECT_EQ(s_family(5, 5), star(5));
    EXPECT_EQ(code_of([] { s_family(5, 2); }), ErrorCode::Infeasible);
}

TEST(Spider, Examples)
{
    EXPECT_EQ(spider(4, 3), star(4));
    const auto p73 = spider(7, 3);
    EXPECT_TRUE(is_tree(p73));
    const auto d = degrees(p73);
    EXPECT_EQ(d[0], 3.0);
    EXPECT_EQ(std::count(d.begin(), d.end(), 1.0), 3);
    for (int n = 3; n <= 9; ++n)
        EXPECT_TRUE(same_spectrum(spider(n, 2), path(n))) << n;
    EXPECT_EQ(code_of([] { spider(3, 3); }), ErrorCode::Infeasible);
}

TEST(BrualdiHoffman, Examples)
{
    EXPECT_EQ(brualdi_hoffman(4, 6), complete(4));
    const auto g = brualdi_hoffman(5, 4);
    EXPECT_EQ(g.edge_count(), 4);
    EXPECT_EQ(degrees(g), (std::vector<double>{3, 2, 2, 1, 0}));
    EXPECT_EQ(brualdi_hoffman(3, 0).edge_count(), 0);
    EXPECT_EQ(code_of([] { brualdi_hoffman(3, 4); }), ErrorCode::TooManyEdges);
    const auto split = split_edges(4);
    EXPECT_EQ(split.t, 3);
    EXPECT_EQ(split.s, 1);
}

TEST(AdjMax, Examples)
{
    const auto a = adjmax_graph(6, 2, 3, 1);
    EXPECT_EQ(a.edge_count(), 5);
    const auto b = adjmax_graph(4, 2, 2, 1);
    EXPECT_EQ(b.edge_count(), 2);
    EXPECT_TRUE(same_spectrum(b, [] {
        WeightedGraph g(4);
        g.set_weight(0, 1, 1);
        g.set_weight(2, 3, 1);
        return g;
    }()));
    for (int k = 2; k <= 3; ++k)
        for (int t = 2; t <= 3; ++t)
            for (int s = 1; s <= t; ++s) {
                const int n = k * t + 1;
                EXPECT_EQ(adjmax_graph(n, k, t, s).edge_count(),
                          (k - 1) * t * (t - 1) / 2 + (t - 1) * (t - 2) / 2 + s);
            }
}

TEST(PendantShift, Examples)
{
    const std::vector<int> x0{0};
    EXPECT_TRUE(check_pendant_sqrt_shift(path(2), x0, 3, 1));
    EXPECT_EQ(code_of([&] { check_pendant_sqrt_shift(path(2), x0, 0, 1); }), ErrorCode::InvalidArgument);
    const std::vector<int> part{0, 2};
    EXPECT_TRUE(check_pendant_sqrt_shift(path(4), part, 2, 2));
    const std::vector<int> bad{0, 1};
    EXPECT_EQ(code_of([&] { check_pendant_sqrt_shift(path(4), bad, 2, 2); }), ErrorCode::NotBipartite);
    EXPECT_EQ(code_of([&] { check_pendant_sqrt_shift(path(4), part, 2, 3); }), ErrorCode::NonPositiveLambdaK);
}

TEST(FCompare, Examples)
{
    EXPECT_EQ(asymptotic_f_compare(path(6), path(6)), FCompare::TiedToDepth);

    // Both have matching number 2 and five edges; closed 4-walks give p4 = 17 and 19.
    WeightedGraph double_star(6);
    for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}})
        double_star.set_weight(u, v, 1);
    WeightedGraph broom(6);
    for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 3}, {0, 4}, {0, 5}})
        broom.set_weight(u, v, 1);
    const auto keys = f_comparison_keys(double_star);
    EXPECT_NEAR(keys[0], 5.0, 1e-9);
    EXPECT_NEAR(keys[1], -17.0, 1e-9);
    EXPECT_NEAR(f_comparison_keys(broom)[1], -19.0, 1e-9);
    EXPECT_EQ(asymptotic_f_compare(double_star, broom), FCompare::Greater);
    EXPECT_EQ(asymptotic_f_compare(broom, double_star), FCompare::Less);

    EXPECT_EQ(asymptotic_f_compare(star(4), star(5)), FCompare::Less);
    EXPECT_EQ(code_of([] { asymptotic_f_compare(path(5), star(5)); }), ErrorCode::EigCountMismatch);
}

TEST(MakeFamily, ParsesNames)
{
    EXPECT_EQ(parse_family_kind("spider"), FamilyKind::Spider);
    EXPECT_FALSE(parse_family_kind("wheel").has_value());
    const std::vector<long long> p{7, 3};
    EXPECT_EQ(make_family(FamilyKind::Spider, p), spider(7, 3));
    const std::vector<long long> bh{5, 4};
    EXPECT_EQ(make_family(FamilyKind::BrualdiHoffman, bh), brualdi_hoffman(5, 4));
}
