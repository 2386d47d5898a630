#include <gtest/gtest.h>

#include "tdl/containment.hpp"
#include "tdl/rng.hpp"
#include "tdl/verify/naive.hpp"

using namespace tdl;

namespace {

const Digraph t3 = transitive_tournament(3);

Digraph random_digraph(int n, double p, CounterRng& rng)
{
    Digraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && rng.uniform() < p)
                g.add_arc(u, v);
    return g;
}

bool is_embedding(const Digraph& g, const Digraph& h, const std::vector<int>& map)
{
    std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
    for (int v : map) {
        if (v < 0 || v >= g.order() || used[static_cast<std::size_t>(v)])
            return false;
        used[static_cast<std::size_t>(v)] = true;
    }
    for (auto [x, y] : h.arcs())
        if (!g.has_arc(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]))
            return false;
    return true;
}

}  // namespace

TEST(FindEmbedding, SpecInstances)
{
    EXPECT_FALSE(find_embedding(turan_graph_digraph(4, 2), t3));
    const auto k3 = complete_digraph(3);
    auto map = find_embedding(k3, t3);
    ASSERT_TRUE(map);
    EXPECT_TRUE(is_embedding(k3, t3, *map));

    // Brute force: DT_3(6) is the 2-blow-up of the bidirected triangle.
    const auto t32 = blow_up(t3, 2);
    ASSERT_TRUE(naive::contains(turan_graph_digraph(6, 3), t32));
    EXPECT_TRUE(find_embedding(turan_graph_digraph(6, 3), t32));
    EXPECT_FALSE(find_embedding(turan_graph_digraph(6, 2), t32));
    EXPECT_TRUE(find_embedding(turan_graph_digraph(9, 3), t3));
}

TEST(FindEmbedding, PatternLargerThanHost)
{
    EXPECT_FALSE(find_embedding(complete_digraph(3), transitive_tournament(4)));
    EXPECT_EQ(count_copies(complete_digraph(3), transitive_tournament(4)), 0U);
}

TEST(FindEmbedding, NonInduced)
{
    // T_3 sits inside the complete digraph even though the host has extra arcs.
    EXPECT_TRUE(find_embedding(complete_digraph(5), blow_up(t3, 1)));
}

TEST(CountCopies, SpecInstances)
{
    EXPECT_EQ(count_copies(t3, t3), 1U);
    EXPECT_EQ(naive::count_maps(complete_digraph(3), t3), 6U);
    EXPECT_EQ(count_copies(complete_digraph(3), t3), 6U);
    EXPECT_EQ(count_copies(empty_digraph(5), t3), 0U);
}

TEST(CountCopies, ThreadCountDoesNotChangeResult)
{
    const auto g = turan_graph_digraph(9, 3);
    const auto one = count_copies(g, t3, 1);
    EXPECT_EQ(count_copies(g, t3, 4), one);
    EXPECT_EQ(one, naive::count_maps(g, t3));
}

TEST(ContainmentProperties, AgreesWithNaiveCounting)
{
    CounterRng rng(21);
    const std::vector<Digraph> patterns{t3, transitive_tournament(4), directed_cycle(3), complete_digraph(2),
                                        directed_cycle(4)};
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(6));
        const auto g = random_digraph(n, rng.uniform(), rng);
        const auto& h = patterns[rng.below(patterns.size())];
        const auto fast = count_copies(g, h);
        EXPECT_EQ(fast, naive::count_maps(g, h));
        EXPECT_EQ(find_embedding(g, h).has_value(), fast > 0);
    }
}

TEST(ContainmentProperties, BlowUpPatternPresenceMatchesCount)
{
    CounterRng rng(5);
    const auto t32 = blow_up(t3, 2);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = random_digraph(6, 0.6 + 0.4 * rng.uniform(), rng);
        const bool present = find_embedding(g, t32).has_value();
        EXPECT_EQ(present, naive::contains(g, t32));
        EXPECT_EQ(present, count_copies(g, t32) > 0);
    }
}

TEST(ContainmentProperties, Monotone)
{
    CounterRng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(4));
        const auto g = random_digraph(n, 0.5, rng);
        if (!find_embedding(g, t3))
            continue;
        auto bigger = g;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && rng.uniform() < 0.3)
                    bigger.add_arc(u, v);
        EXPECT_TRUE(find_embedding(bigger, t3));
    }
}

TEST(ContainmentProperties, ThroughArcMatchesDifference)
{
    // For an H-free host plus one arc, contains_through_arc agrees with plain search.
    CounterRng rng(13);
    const EmbeddingSearcher searcher(t3);
    int checked = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(4));
        auto g = random_digraph(n, 0.35, rng);
        if (searcher.find(g))
            continue;
        const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (u == v || g.has_arc(u, v))
            continue;
        g.add_arc(u, v);
        EXPECT_EQ(searcher.contains_through_arc(g, u, v), naive::contains(g, t3));
        ++checked;
    }
    EXPECT_GT(checked, 50);
}

TEST(GreedyClean, AlreadyFree)
{
    const auto g = turan_graph_digraph(6, 2);
    const auto result = greedy_make_h_free(g, t3);
    EXPECT_EQ(result.graph, g);
    EXPECT_TRUE(result.deleted.empty());
}

TEST(GreedyClean, MatchesBruteForceMinimumOnSpecInstances)
{
    const auto k3 = complete_digraph(3);
    ASSERT_EQ(naive::min_deletions(k3, t3), 2U);
    const auto r1 = greedy_make_h_free(k3, t3);
    EXPECT_EQ(r1.deleted.size(), 2U);
    EXPECT_FALSE(find_embedding(r1.graph, t3));

    const auto t4 = transitive_tournament(4);
    ASSERT_EQ(naive::min_deletions(t4, t3), 2U);
    const auto r2 = greedy_make_h_free(t4, t3);
    EXPECT_EQ(r2.deleted.size(), 2U);
    EXPECT_FALSE(find_embedding(r2.graph, t3));
    // Every arc of T_4 lies in two triangles; the smallest arc goes first.
    EXPECT_EQ(r2.deleted.front(), (Arc{0, 1}));
}

TEST(GreedyClean, OutputIsAlwaysFreeAndASubgraph)
{
    CounterRng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(5));
        const auto g = random_digraph(n, 0.7, rng);
        const auto result = greedy_make_h_free(g, t3);
        EXPECT_FALSE(find_embedding(result.graph, t3));
        EXPECT_EQ(result.graph.arc_count() + static_cast<std::int64_t>(result.deleted.size()), g.arc_count());
        for (auto [u, v] : result.graph.arcs())
            EXPECT_TRUE(g.has_arc(u, v));
    }
}

TEST(PatternStats, TransitiveTriangle)
{
    const auto p = pattern_stats(t3, "T_3");
    ASSERT_TRUE(p.m_value);
    EXPECT_EQ(*p.m_value, Rational(2));
    EXPECT_EQ(*p.density_threshold, Rational(1));
    EXPECT_EQ(p.max_degree, 2);
    EXPECT_TRUE(p.satisfies_condition_a(WeightParam::rational(2)));
    EXPECT_FALSE(p.satisfies_condition_a(WeightParam::rational(3, 2)));
    EXPECT_FALSE(p.has_dense_pair);
}

TEST(PatternStats, DoubleTriangle)
{
    const auto p = pattern_stats(complete_digraph(3), "DK_3");
    EXPECT_EQ(*p.density_threshold, Rational(2));
    EXPECT_FALSE(p.satisfies_condition_a(WeightParam::rational(2)));
    EXPECT_TRUE(p.satisfies_condition_a(WeightParam::rational(4)));
    EXPECT_TRUE(p.has_dense_pair);
    EXPECT_EQ(*p.m_value, Rational(5));
}

TEST(PatternStats, BlowUpAgreesWithArcSubsetOracle)
{
    const auto t32 = blow_up(t3, 2);
    const auto oracle = naive::subgraph_densities(t32);
    const auto p = pattern_stats(t32);
    EXPECT_EQ(p.max_degree, 4);
    EXPECT_EQ(*p.m_value, *oracle.m_value);
    EXPECT_EQ(*p.density_threshold, *oracle.density);
    EXPECT_EQ(*p.m_value, Rational(11, 4));
    EXPECT_EQ(*p.density_threshold, Rational(2));
}

TEST(PatternStats, InducedEnumerationMatchesOracleOnRandomPatterns)
{
    CounterRng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const int k = 2 + static_cast<int>(rng.below(3));
        const auto h = random_digraph(k, 0.5, rng);
        if (h.arc_count() > 16)
            continue;
        const auto p = pattern_stats(h);
        const auto oracle = naive::subgraph_densities(h);
        EXPECT_EQ(p.m_value, oracle.m_value);
        EXPECT_EQ(p.density_threshold, oracle.density);
    }
}

TEST(PatternStats, SingleArcHasNoM)
{
    const auto p = pattern_stats(transitive_tournament(2));
    EXPECT_FALSE(p.m_value);
    EXPECT_FALSE(p.density_threshold);
    EXPECT_TRUE(p.satisfies_condition_a(WeightParam::rational(1)));
}

TEST(PatternSpec, Parse)
{
    EXPECT_EQ(parse_pattern_spec("2,1").name, "T_3");
    EXPECT_EQ(parse_pattern_spec("2,2").name, "T_3^2");
    EXPECT_EQ(parse_pattern_spec("3,2").graph.order(), 8);
    EXPECT_THROW(parse_pattern_spec("2"), std::invalid_argument);
    EXPECT_THROW(parse_pattern_spec("2,x"), std::invalid_argument);
    EXPECT_THROW(parse_pattern_spec("0,1"), std::invalid_argument);
}
