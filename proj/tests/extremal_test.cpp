#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "tdl/canonical.hpp"
#include "tdl/extremal.hpp"
#include "tdl/verify/naive.hpp"

using namespace tdl;

namespace {

const Pattern t3 = blow_up_pattern(2, 1);
const WeightParam two = WeightParam::rational(2);

std::size_t iso_classes(const std::vector<Digraph>& graphs)
{
    std::set<std::string> keys;
    for (const auto& g : graphs)
        keys.insert(canonical_key(g));
    return keys.size();
}

}  // namespace

TEST(ExactExtremal, SmallTransitiveTriangleInstances)
{
    const auto c2 = exact_extremal(2, t3, two, GraphKind::Digraph);
    EXPECT_EQ(*c2.value.exact, Rational(2));

    const auto c3 = exact_extremal(3, t3, two, GraphKind::Digraph);
    EXPECT_EQ(*c3.value.exact, Rational(4));
    ASSERT_TRUE(c3.unique_up_to_iso());
    EXPECT_TRUE(are_isomorphic(c3.witnesses.front(), turan_graph_digraph(3, 2)));

    const auto c4 = exact_extremal(4, t3, two, GraphKind::Digraph);
    EXPECT_EQ(*c4.value.exact, Rational(8));
    ASSERT_TRUE(c4.unique_up_to_iso());
    EXPECT_TRUE(are_isomorphic(c4.witnesses.front(), turan_graph_digraph(4, 2)));
}

TEST(ExactExtremal, MatchesNaiveEnumeration)
{
    const std::vector<WeightParam> weights{two, WeightParam::rational(3, 2), WeightParam::rational(1),
                                           WeightParam::log2_3(), WeightParam::rational(5, 2)};
    const std::vector<Pattern> patterns{t3, pattern_stats(directed_cycle(3), "C_3"),
                                        pattern_stats(complete_digraph(2), "DK_2")};
    for (int n = 1; n <= 4; ++n)
        for (auto kind : {GraphKind::Digraph, GraphKind::Oriented})
            for (const auto& w : weights)
                for (const auto& p : patterns) {
                    const auto cert = exact_extremal(n, p, w, kind);
                    const auto oracle = naive::extremal(n, p.graph, w, kind);
                    const auto expected = WeightedValue::of(w, oracle.best_f2, oracle.best_f1);
                    if (w.is_exact())
                        EXPECT_EQ(*cert.value.exact, *expected.exact) << p.name << " n=" << n;
                    else
                        EXPECT_NEAR(cert.value.approx, expected.approx, 1e-9);
                    EXPECT_EQ(cert.labelled_maximizers, oracle.maximizers.size()) << p.name << " n=" << n;
                    EXPECT_EQ(cert.witnesses.size(), iso_classes(oracle.maximizers)) << p.name << " n=" << n;
                }
}

TEST(ExactExtremal, WitnessesAreSound)
{
    for (int n = 3; n <= 5; ++n) {
        const auto cert = exact_extremal(n, t3, two, GraphKind::Digraph);
        for (const auto& w : cert.witnesses) {
            EXPECT_FALSE(find_embedding(w, t3.graph));
            EXPECT_EQ(*weighted_size(w, two).exact, *cert.value.exact);
        }
    }
}

TEST(ExactExtremal, OrientedNeverBeatsDigraph)
{
    for (int n = 2; n <= 5; ++n) {
        const auto d = exact_extremal(n, t3, two, GraphKind::Digraph);
        const auto o = exact_extremal(n, t3, two, GraphKind::Oriented);
        EXPECT_GE(*d.value.exact, *o.value.exact);
        for (const auto& w : o.witnesses)
            EXPECT_TRUE(is_legal(w, GraphKind::Oriented));
    }
}

TEST(ExactExtremal, RefusesBeyondBudget)
{
    EXPECT_THROW(exact_extremal(8, t3, two, GraphKind::Digraph), BudgetExceeded);
    ExtremalOptions tight;
    tight.budget = Budget(std::chrono::duration<double>(0.0));
    EXPECT_THROW(exact_extremal(6, blow_up_pattern(2, 2), two, GraphKind::Digraph, tight), BudgetExceeded);
}

TEST(ExactExtremal, RejectsArclessPattern)
{
    EXPECT_THROW(exact_extremal(3, pattern_stats(empty_digraph(2)), two, GraphKind::Digraph), std::invalid_argument);
}

TEST(LowerBound, Values)
{
    EXPECT_EQ(*lower_bound_construction(5, 2, two).value.exact, Rational(12));
    EXPECT_EQ(*lower_bound_construction(6, 3, two).value.exact, Rational(24));
    const auto irr = lower_bound_construction(5, 2, WeightParam::log2_3());
    EXPECT_NEAR(irr.value.approx, 6 * std::log2(3.0), 1e-12);
    EXPECT_NEAR(irr.value.approx, 9.5098, 1e-4);
    EXPECT_EQ(lower_bound_construction(6, 3, two).graph, turan_graph_digraph(6, 3));
}

TEST(GapScan, TransitiveTriangleHasNoGap)
{
    const auto rows = extremal_gap_scan(3, 5, t3, 2, two, GraphKind::Digraph);
    ASSERT_EQ(rows.size(), 3U);
    for (const auto& row : rows)
        EXPECT_EQ(*row.gap.exact, Rational(0)) << "n=" << row.n;
}

TEST(GapScan, BlowUpPatternSmallN)
{
    const auto t32 = blow_up_pattern(2, 2);
    const auto rows = extremal_gap_scan(3, 3, t32, 2, two, GraphKind::Digraph);
    EXPECT_EQ(*rows[0].extremal.exact, Rational(6));
    EXPECT_EQ(*rows[0].gap.exact, Rational(2));
}

TEST(ExtremalProperties, MonotoneInN)
{
    for (auto kind : {GraphKind::Digraph, GraphKind::Oriented}) {
        Rational previous = 0;
        for (int n = 1; n <= 5; ++n) {
            const auto v = *exact_extremal(n, t3, two, kind).value.exact;
            EXPECT_GE(v, previous);
            previous = v;
        }
    }
}
