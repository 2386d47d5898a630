#include <gtest/gtest.h>

#include "tdl/rng.hpp"
#include "tdl/structure.hpp"
#include "tdl/verify/naive.hpp"

using namespace tdl;

namespace {

const WeightParam two = WeightParam::rational(2);

Digraph random_digraph(int n, double p, CounterRng& rng)
{
    Digraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && rng.uniform() < p)
                g.add_arc(u, v);
    return g;
}

RPartition random_partition(int n, int r, CounterRng& rng)
{
    std::vector<int> a(static_cast<std::size_t>(n));
    for (auto& c : a)
        c = static_cast<int>(rng.below(static_cast<std::uint64_t>(r)));
    return RPartition::from_assignment(r, a);
}

}  // namespace

TEST(RPartition, Validation)
{
    EXPECT_THROW(RPartition::from_classes(3, {{0, 1}, {1, 2}}), std::invalid_argument);
    EXPECT_THROW(RPartition::from_classes(3, {{0, 1}}), std::invalid_argument);
    EXPECT_THROW(RPartition::from_assignment(2, {0, 2}), std::invalid_argument);
    const auto q = RPartition::from_classes(4, {{0, 3}, {}, {1, 2}});
    EXPECT_EQ(q.r(), 3);
    EXPECT_EQ(q.class_of(2), 2);
    EXPECT_THROW(non_crossing_count(directed_cycle(3), q), std::invalid_argument);
}

TEST(NonCrossing, SpecInstances)
{
    EXPECT_EQ(non_crossing_count(turan_graph_digraph(4, 2), RPartition::turan(4, 2)), 0);
    EXPECT_EQ(non_crossing_count(directed_cycle(3), RPartition::from_classes(3, {{0, 1}, {2}})), 1);
    ASSERT_EQ(naive::min_non_crossing(transitive_tournament(4), 3), 1);
    EXPECT_EQ(optimal_partition(transitive_tournament(4), 3, PartitionMode::Exact).non_crossing_arcs, 1);
}

TEST(OptimalPartition, SpecInstances)
{
    const auto r = optimal_partition(turan_graph_digraph(7, 3), 3, PartitionMode::Exact);
    EXPECT_EQ(r.non_crossing_arcs, 0);
    EXPECT_TRUE(r.is_optimal);
    EXPECT_EQ(r.edit_distance_to_dtr, 0);

    ASSERT_EQ(naive::min_non_crossing(complete_digraph(3), 2), 2);
    EXPECT_EQ(optimal_partition(complete_digraph(3), 2, PartitionMode::Exact).non_crossing_arcs, 2);
    ASSERT_EQ(naive::min_non_crossing(directed_cycle(5), 2), 1);
    EXPECT_EQ(optimal_partition(directed_cycle(5), 2, PartitionMode::Exact).non_crossing_arcs, 1);
}

TEST(OptimalPartition, TiesGoToLexicographicallySmallestAssignment)
{
    // Bidirected K_3 into two classes: {0,1},{2} is the smallest optimal assignment (0,0,1).
    const auto r = optimal_partition(complete_digraph(3), 2, PartitionMode::Exact);
    EXPECT_EQ(r.partition.assignment(), (std::vector<int>{0, 0, 1}));
    // Empty graph: everything in class 0.
    EXPECT_EQ(optimal_partition(empty_digraph(4), 3, PartitionMode::Exact).partition.assignment(),
              (std::vector<int>{0, 0, 0, 0}));
}

TEST(OptimalPartition, BudgetIsEnforced)
{
    PartitionOptions tiny;
    tiny.max_assignments = 10;
    EXPECT_THROW(optimal_partition(empty_digraph(8), 3, PartitionMode::Exact, tiny), BudgetExceeded);
    EXPECT_NO_THROW(optimal_partition(empty_digraph(8), 3, PartitionMode::LocalSearch, tiny));
}

TEST(OptimalPartition, LocalSearchFindsBipartition)
{
    const auto g = turan_graph_digraph(40, 2);
    const auto r = optimal_partition(g, 2, PartitionMode::LocalSearch);
    EXPECT_EQ(r.non_crossing_arcs, 0);
    EXPECT_TRUE(r.is_optimal);
}

TEST(PartitionProperties, ExactMatchesOracleAndBoundsEveryPartition)
{
    CounterRng rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(7));
        const int r = 1 + static_cast<int>(rng.below(3));
        const auto g = random_digraph(n, rng.uniform(), rng);
        const auto exact = optimal_partition(g, r, PartitionMode::Exact);
        EXPECT_EQ(exact.non_crossing_arcs, naive::min_non_crossing(g, r));
        const auto q = random_partition(n, r, rng);
        EXPECT_LE(exact.non_crossing_arcs, non_crossing_count(g, q));
        EXPECT_EQ(non_crossing_count(g, q) + crossing_count(g, q), g.arc_count());
    }
}

TEST(PartitionProperties, LocalSearchNeverBeatsExact)
{
    CounterRng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4 + static_cast<int>(rng.below(9));
        const int r = 2 + static_cast<int>(rng.below(2));
        const auto g = random_digraph(n, rng.uniform(), rng);
        const auto exact = optimal_partition(g, r, PartitionMode::Exact);
        const auto local = optimal_partition(g, r, PartitionMode::LocalSearch);
        EXPECT_GE(local.non_crossing_arcs, exact.non_crossing_arcs);
        EXPECT_EQ(local.non_crossing_arcs, non_crossing_count(g, local.partition));
    }
}

TEST(PartitionProperties, EditsReachCompletePartiteDigraph)
{
    CounterRng rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(8));
        const int r = 1 + static_cast<int>(rng.below(3));
        const auto g = random_digraph(n, rng.uniform(), rng);
        const auto q = random_partition(n, r, rng);
        const auto report = make_report(g, q, false);
        EXPECT_EQ(report.edit_distance_to_dtr, report.non_crossing_arcs + report.f2_deficit);
        // Apply the edits.
        Digraph edited(n);
        std::int64_t changes = 0;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v)
                    continue;
                const bool want = q.class_of(u) != q.class_of(v);
                if (want)
                    edited.add_arc(u, v);
                changes += want != g.has_arc(u, v);
            }
        EXPECT_EQ(changes, report.edit_distance_to_dtr);
        EXPECT_EQ(non_crossing_count(edited, q), 0);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                const auto& a = q.classes()[static_cast<std::size_t>(i)];
                const auto& b = q.classes()[static_cast<std::size_t>(j)];
                if (i != j && !a.empty() && !b.empty()) {
                    EXPECT_EQ(pair_densities(edited, a, b, two).d2, Rational(1));
                }
            }
    }
}

TEST(PairDensities, SpecInstances)
{
    const auto g = turan_graph_digraph(4, 2);
    const auto d = pair_densities(g, {0, 1}, {2, 3}, two);
    EXPECT_EQ(d.d2, Rational(1));
    EXPECT_EQ(d.d1_ab, Rational(0));
    EXPECT_EQ(*d.w_ab.exact, Rational(2));

    Digraph one_way(4);
    for (int u : {0, 1})
        for (int v : {2, 3})
            one_way.add_arc(u, v);
    const auto e = pair_densities(one_way, {0, 1}, {2, 3}, two);
    EXPECT_EQ(e.d2, Rational(0));
    EXPECT_EQ(e.d1_ab, Rational(1));
    EXPECT_EQ(*e.w_ab.exact, Rational(1));
    EXPECT_EQ(*e.w_ba.exact, Rational(0));

    const auto z = pair_densities(empty_digraph(4), {0}, {1, 2, 3}, two);
    EXPECT_EQ(z.d2 + z.d1_ab + z.d1_ba, Rational(0));

    EXPECT_THROW(pair_densities(g, {}, {1}, two), std::invalid_argument);
    EXPECT_THROW(pair_densities(g, {0, 1}, {1, 2}, two), std::invalid_argument);
}

TEST(PairDensities, WeightsSumToUnorderedContribution)
{
    CounterRng rng(47);
    const auto a = WeightParam::rational(7, 4);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = random_digraph(8, rng.uniform(), rng);
        const auto d = pair_densities(g, {0, 1, 2}, {3, 4, 5, 6, 7}, a);
        EXPECT_LE(d.d2 + d.d1_ab + d.d1_ba, Rational(1));
        EXPECT_EQ(*d.w_ab.exact + *d.w_ba.exact, Rational(7, 2) * d.d2 + d.d1_ab + d.d1_ba);
    }
}

TEST(FConditions, CompleteBipartiteDigraphPassesAll)
{
    for (int n : {4, 6, 8}) {
        const auto f = f_conditions_check(turan_graph_digraph(n, 2), RPartition::turan(n, 2), 0.01, 0.1);
        EXPECT_TRUE(f.f1);
        EXPECT_TRUE(f.f2);
        EXPECT_TRUE(f.f3);
        EXPECT_TRUE(f.f2_exhaustive);
    }
}

TEST(FConditions, EmptyGraphFailsDensity)
{
    const auto q = RPartition::turan(4, 2);
    const auto f = f_conditions_check(empty_digraph(4), q, 0.1, 0.5);
    EXPECT_FALSE(f.f2);
    ASSERT_TRUE(f.f2_witness);
    EXPECT_EQ(f.f2_witness->u_i, q.classes()[0]);
    EXPECT_EQ(f.f2_witness->u_j, q.classes()[1]);
    EXPECT_TRUE(f.f1);
    EXPECT_TRUE(f.f3);
}

TEST(FConditions, UnbalancedClassFailsF3)
{
    const auto f = f_conditions_check(turan_graph_digraph(5, 2), RPartition::from_classes(5, {{0, 1, 2}, {3, 4}}),
                                      0.1, 0.05);
    EXPECT_FALSE(f.f3);
    EXPECT_EQ(f.f3_violations, (std::vector<int>{0, 1}));
}

TEST(FConditions, ManyNonCrossingArcsFailF1)
{
    const auto f = f_conditions_check(complete_digraph(4), RPartition::turan(4, 2), 0.1, 0.5);
    EXPECT_EQ(f.non_crossing, 4);
    EXPECT_FALSE(f.f1);  // 4 > 0.1 * 16
}

TEST(FConditions, SampledModeAboveExhaustiveLimit)
{
    const int n = 20;
    const auto pass = f_conditions_check(turan_graph_digraph(n, 2), RPartition::turan(n, 2), 0.01, 0.2);
    EXPECT_FALSE(pass.f2_exhaustive);
    EXPECT_TRUE(pass.f2);
    EXPECT_EQ(pass.f2_subset_pairs, 100'000U);

    const auto fail = f_conditions_check(empty_digraph(n), RPartition::turan(n, 2), 0.01, 0.2);
    EXPECT_FALSE(fail.f2);
    EXPECT_EQ(fail.f2_subset_pairs, 1U);
}

TEST(InternalDegree, SpecInstances)
{
    EXPECT_EQ(internal_degree_profile(turan_graph_digraph(4, 2), RPartition::turan(4, 2)),
              (std::vector<int>{0, 0, 0, 0}));
    EXPECT_EQ(internal_degree_profile(complete_digraph(3), RPartition::from_classes(3, {{0, 1}, {2}})),
              (std::vector<int>{2, 2, 0}));
    EXPECT_EQ(internal_degree_profile(transitive_tournament(3), RPartition::from_classes(3, {{0, 1, 2}})),
              (std::vector<int>{2, 2, 2}));
}

TEST(TuranDistance, EmptyGraphNeedsEveryCrossingArc)
{
    EXPECT_EQ(distance_to_turan(empty_digraph(4), 2).distance, 8);
    EXPECT_EQ(distance_to_turan(turan_graph_digraph(5, 2), 2).distance, 0);
    // Two disjoint 2-cycles: best balanced split separates both.
    Digraph g(4);
    g.add_arc(0, 1);
    g.add_arc(1, 0);
    g.add_arc(2, 3);
    g.add_arc(3, 2);
    EXPECT_EQ(distance_to_turan(g, 2).distance, 4);
}

TEST(StabilitySweep, ExactlyExtremalGraphsAreTuran)
{
    const auto rows = stability_sweep(4, 2, 1, two, 0.0, GraphKind::Digraph);
    ASSERT_EQ(rows.size(), 1U);
    EXPECT_EQ(*rows[0].deficit.exact, Rational(0));
    EXPECT_EQ(rows[0].max_distance, 0);
    EXPECT_EQ(rows[0].count, 3U);  // the three labelled copies of DT_2(4)
}

TEST(StabilitySweep, LargeGammaAdmitsEmptyGraph)
{
    const auto rows = stability_sweep(4, 2, 1, two, 1.0, GraphKind::Digraph);
    ASSERT_FALSE(rows.empty());
    EXPECT_EQ(*rows.back().deficit.exact, Rational(8));
    EXPECT_EQ(rows.back().count, 921U);  // every T_3-free digraph on 4 vertices
    EXPECT_GE(rows.back().max_distance, 8);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_GE(rows[i].max_distance, rows[i - 1].max_distance);
        EXPECT_GT(rows[i].count, rows[i - 1].count);
    }
}

TEST(StabilitySweep, RefusesLargeN)
{
    EXPECT_THROW(stability_sweep(6, 2, 1, two, 0.1, GraphKind::Digraph), BudgetExceeded);
}

TEST(StabilitySweep, CsvShape)
{
    const auto csv = frontier_csv(stability_sweep(3, 2, 1, two, 0.0, GraphKind::Digraph));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "deficit,count,max_distance,argmax_graph_hex");
    EXPECT_NE(csv.find("0,3,0,D 3 "), std::string::npos);
}

TEST(StabilitySweep, AgreesWithNaiveFrontier)
{
    const auto t3 = transitive_tournament(3);
    for (auto kind : {GraphKind::Digraph, GraphKind::Oriented})
        for (int n = 2; n <= 4; ++n)
            for (const auto& a : {two, WeightParam::rational(3, 2)}) {
                const auto fast = stability_sweep(n, 2, 1, a, 10.0, kind);
                const auto slow = naive::stability_frontier(n, 2, t3, *a.exact(), kind);
                ASSERT_EQ(fast.size(), slow.size()) << "n=" << n;
                for (std::size_t i = 0; i < fast.size(); ++i) {
                    EXPECT_EQ(*fast[i].deficit.exact, slow[i].deficit);
                    EXPECT_EQ(fast[i].count, slow[i].count);
                    EXPECT_EQ(fast[i].max_distance, slow[i].max_distance);
                    EXPECT_EQ(distance_to_turan(fast[i].argmax, 2).distance, fast[i].max_distance);
                }
            }
}
