#include <gtest/gtest.h>

#include "tdl/canonical.hpp"
#include "tdl/containment.hpp"
#include "tdl/digraph.hpp"
#include "tdl/rng.hpp"
#include "tdl/verify/naive.hpp"

using namespace tdl;

namespace {

Digraph random_digraph(int n, double p, CounterRng& rng)
{
    Digraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && rng.uniform() < p)
                g.add_arc(u, v);
    return g;
}

}  // namespace

TEST(WeightedSize, EmptyGraphIsZero)
{
    auto w = weighted_size(empty_digraph(5), WeightParam::rational(2));
    EXPECT_EQ(*w.exact, Rational(0));
}

TEST(WeightedSize, BipartiteTuranDigraph)
{
    const auto g = turan_graph_digraph(4, 2);
    EXPECT_EQ(g.double_pairs(), 4);
    EXPECT_EQ(g.single_pairs(), 0);
    EXPECT_EQ(*weighted_size(g, WeightParam::rational(2)).exact, Rational(8));
}

TEST(WeightedSize, DirectedTriangle)
{
    const auto g = directed_cycle(3);
    EXPECT_EQ(g.single_pairs(), 3);
    EXPECT_EQ(*weighted_size(g, WeightParam::rational(2)).exact, Rational(3));
}

TEST(WeightedSize, IrrationalWeightIsFloatOnly)
{
    const auto w = weighted_size(turan_graph_digraph(4, 2), WeightParam::log2_3());
    EXPECT_FALSE(w.exact);
    EXPECT_NEAR(w.approx, 4 * 1.5849625007211562, 1e-12);
}

TEST(WeightParam, RejectsBelowOne)
{
    EXPECT_THROW(WeightParam::rational(1, 2), std::invalid_argument);
    EXPECT_THROW(WeightParam::real(0.9), std::invalid_argument);
    EXPECT_THROW(WeightParam::parse("abc"), std::invalid_argument);
}

TEST(WeightParam, Parse)
{
    EXPECT_EQ(*WeightParam::parse("3/2").exact(), Rational(3, 2));
    EXPECT_EQ(*WeightParam::parse("1.25").exact(), Rational(5, 4));
    EXPECT_EQ(*WeightParam::parse("2").exact(), Rational(2));
    EXPECT_FALSE(WeightParam::parse("log2(3)").is_exact());
}

TEST(TransitiveTournament, SmallCases)
{
    EXPECT_EQ(transitive_tournament(1).order(), 1);
    EXPECT_EQ(transitive_tournament(1).arc_count(), 0);
    const std::vector<Arc> t3{{0, 1}, {0, 2}, {1, 2}};
    EXPECT_EQ(transitive_tournament(3).arcs(), t3);
    const auto t4 = transitive_tournament(4);
    EXPECT_EQ(t4.arc_count(), 6);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v)
            EXPECT_EQ(t4.has_arc(u, v) + t4.has_arc(v, u), 1);
    EXPECT_THROW(transitive_tournament(0), std::invalid_argument);
}

TEST(BlowUp, ArcCounts)
{
    EXPECT_TRUE(are_isomorphic(blow_up(transitive_tournament(3), 1), transitive_tournament(3)));
    const auto t32 = blow_up(transitive_tournament(3), 2);
    EXPECT_EQ(t32.order(), 6);
    EXPECT_EQ(t32.arc_count(), 12);

    const auto t42 = blow_up(transitive_tournament(4), 2);
    EXPECT_EQ(t42.order(), 8);
    EXPECT_EQ(t42.arc_count(), 6 * 2 * 2);
    int max_out = 0;
    for (int v = 0; v < 8; ++v)
        max_out = std::max(max_out, t42.out_degree(v));
    EXPECT_EQ(max_out, 6);
    for (int v = 0; v < 8; v += 2)
        EXPECT_FALSE(t42.has_arc(v, v + 1) || t42.has_arc(v + 1, v));
    EXPECT_THROW(blow_up(t42, 0), std::invalid_argument);
}

TEST(Turan, Numbers)
{
    EXPECT_EQ(turan_number(4, 2), 4);
    EXPECT_EQ(turan_number(7, 3), 16);
    EXPECT_EQ(turan_number(5, 2), 6);
    EXPECT_EQ(turan_number(3, 5), 3);
    EXPECT_THROW(turan_number(3, 0), std::invalid_argument);
}

TEST(Turan, Digraphs)
{
    EXPECT_EQ(turan_graph_digraph(4, 2).double_pairs(), 4);
    const auto g7 = turan_graph_digraph(7, 3);
    EXPECT_EQ(g7.double_pairs(), 16);
    EXPECT_EQ(g7.single_pairs(), 0);
    // Part 0 = {0,1,2} is the large part.
    EXPECT_FALSE(g7.has_arc(0, 2));
    EXPECT_TRUE(g7.has_arc(2, 3));
    EXPECT_FALSE(g7.has_arc(3, 4));
    EXPECT_EQ(turan_graph_digraph(3, 3), complete_digraph(3));
    EXPECT_EQ(turan_part_sizes(7, 3), (std::vector<int>{3, 2, 2}));
    EXPECT_THROW(turan_graph_digraph(3, 0), std::invalid_argument);
}

TEST(Legality, OrientedRejectsTwoCycles)
{
    EXPECT_TRUE(is_legal(directed_cycle(3), GraphKind::Oriented));
    EXPECT_FALSE(is_legal(turan_graph_digraph(4, 2), GraphKind::Oriented));
    EXPECT_TRUE(is_legal(turan_graph_digraph(4, 2), GraphKind::Digraph));
}

TEST(Digraph, RejectsLoops)
{
    Digraph g(3);
    EXPECT_THROW(g.add_arc(1, 1), std::invalid_argument);
    EXPECT_THROW(g.add_arc(0, 3), std::out_of_range);
}

TEST(Digraph, LargeGraphsUseMultiWordRows)
{
    Digraph g(130);
    g.add_arc(0, 129);
    g.add_arc(129, 64);
    g.add_arc(64, 0);
    EXPECT_EQ(g.words_per_row(), 3);
    EXPECT_TRUE(g.has_arc(0, 129));
    EXPECT_EQ(g.arc_count(), 3);
    EXPECT_EQ(g.in_degree(0), 1);
    EXPECT_EQ(parse_hex_line(to_hex_line(g)), g);
    EXPECT_TRUE(find_embedding(g, directed_cycle(3)).has_value());
}

TEST(HexFormat, KnownEncoding)
{
    Digraph g(2);
    g.add_arc(0, 1);
    EXPECT_EQ(to_hex_line(g), "D 2 4");
    EXPECT_EQ(parse_hex_line("D 2 4"), g);
    EXPECT_EQ(to_hex_line(empty_digraph(0)), "D 0");
    EXPECT_EQ(parse_hex_line("D 0"), empty_digraph(0));
    // T_3: rows 011 001 000, three padding zeros -> 0110 0100 0000
    EXPECT_EQ(to_hex_line(transitive_tournament(3)), "D 3 640");
    EXPECT_THROW(parse_hex_line("D 3 6 40"), std::invalid_argument);
}

TEST(HexFormat, RejectsMalformed)
{
    EXPECT_THROW(parse_hex_line("D 2 8"), std::invalid_argument);     // loop at (0,0)
    EXPECT_THROW(parse_hex_line("D 3 601"), std::invalid_argument);   // padding bit
    EXPECT_THROW(parse_hex_line("D 2 44"), std::invalid_argument);    // length
    EXPECT_THROW(parse_hex_line("X 2 4"), std::invalid_argument);
    EXPECT_THROW(parse_hex_line("D 2 g"), std::invalid_argument);
    EXPECT_THROW(parse_hex_line("D -1"), std::invalid_argument);
}

TEST(DigraphProperties, ArcAccountingOnRandomGraphs)
{
    CounterRng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(12));
        const auto g = random_digraph(n, rng.uniform(), rng);
        std::int64_t out = 0, in = 0;
        for (int v = 0; v < n; ++v) {
            out += g.out_degree(v);
            in += g.in_degree(v);
            EXPECT_FALSE(g.has_arc(v, v));
        }
        EXPECT_EQ(out, g.arc_count());
        EXPECT_EQ(in, g.arc_count());
        EXPECT_EQ(g.arc_count(), g.single_pairs() + 2 * g.double_pairs());
        EXPECT_LE(g.single_pairs() + g.double_pairs(), n * (n - 1) / 2);
        EXPECT_EQ(*weighted_size(g, WeightParam::rational(2)).exact, Rational(g.arc_count()));
        EXPECT_EQ(*weighted_size(g, WeightParam::rational(1)).exact, Rational(g.underlying_oriented().arc_count()));
        EXPECT_EQ(parse_hex_line(to_hex_line(g)), g);
    }
}

TEST(DigraphProperties, BlowUpComposes)
{
    CounterRng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(4));
        const auto h = random_digraph(n, 0.5, rng);
        EXPECT_TRUE(are_isomorphic(blow_up(h, 1), h));
        EXPECT_TRUE(are_isomorphic(blow_up(blow_up(h, 2), 2), blow_up(h, 4)));
        EXPECT_TRUE(are_isomorphic(blow_up(blow_up(h, 2), 1), blow_up(h, 2)));
    }
}

TEST(DigraphProperties, TuranDigraphAvoidsLargerTournament)
{
    for (int r = 1; r <= 4; ++r)
        for (int n = r; n <= 10; ++n) {
            const auto g = turan_graph_digraph(n, r);
            EXPECT_FALSE(find_embedding(g, transitive_tournament(r + 1))) << "n=" << n << " r=" << r;
            for (auto a : {WeightParam::rational(2), WeightParam::rational(7, 4), WeightParam::rational(1)})
                EXPECT_EQ(*weighted_size(g, a).exact, *a.exact() * turan_number(n, r));
        }
}

TEST(Canonical, AgreesWithPermutationOracle)
{
    CounterRng rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(6));
        const auto a = random_digraph(n, rng.uniform(), rng);
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            perm[static_cast<std::size_t>(i)] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[static_cast<std::size_t>(i)], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
        const auto b = a.relabelled(perm);
        EXPECT_EQ(canonical_key(a), canonical_key(b));
        const auto c = random_digraph(n, rng.uniform(), rng);
        EXPECT_EQ(are_isomorphic(a, c), naive::isomorphic(a, c));
    }
}

TEST(Canonical, LabellingReproducesForm)
{
    const auto g = blow_up(directed_cycle(3), 3);
    const auto form = canonical_form(g);
    EXPECT_EQ(g.relabelled(form.labelling), form.graph);
}
