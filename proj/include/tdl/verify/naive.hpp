#pragma once

// Brute-force reference implementations. Nothing here shares code with the
// optimised paths beyond the Digraph container: no pruning, no symmetry, no
// incremental checks. They exist to produce expected values for tests.

#include <cstdint>
#include <functional>
#include <vector>

#include "tdl/census.hpp"
#include "tdl/digraph.hpp"

namespace tdl::naive {

// Every graph of the kind on n labelled vertices, pair digits counted from 0.
void for_each_graph(int n, GraphKind kind, const std::function<void(const Digraph&)>& visit);

// Tries every injection V(H) -> V(G).
bool contains(const Digraph& g, const Digraph& h);
std::uint64_t count_maps(const Digraph& g, const Digraph& h);

// Tries every permutation.
bool isomorphic(const Digraph& a, const Digraph& b);

// Minimum non-crossing arcs over all r^n class assignments.
std::int64_t min_non_crossing(const Digraph& g, int r);

struct ExtremalResult {
    std::int64_t best_f2 = 0;
    std::int64_t best_f1 = 0;
    std::vector<Digraph> maximizers;  // labelled
};

// Full enumeration; ties decided with exact rational arithmetic when a is
// rational, else with an absolute tolerance of 1e-9.
ExtremalResult extremal(int n, const Digraph& h, const WeightParam& a, GraphKind kind);

struct CensusCounts {
    BigInt f;
    BigInt t;
};
CensusCounts census(int n, const Digraph& h, int r, GraphKind kind);

// Smallest number of arc deletions making g H-free, over all arc subsets.
std::size_t min_deletions(const Digraph& g, const Digraph& h);

// m(H) and max e/v over all arc subsets of H. e/v counts only non-isolated
// vertices; m may pad a two-vertex subset with an isolated vertex. Absent
// when no subset has two arcs (resp. no such subgraph has three vertices).
struct SubgraphDensities {
    std::optional<Rational> m_value;
    std::optional<Rational> density;
};
SubgraphDensities subgraph_densities(const Digraph& h);

// Over every H-free graph of the kind on n vertices: rows of (a t_r(n) -
// e_a(G), count, max edit distance) cumulative in the deficit, where the
// distance is minimised over all r^n assignments with balanced class sizes.
struct FrontierPoint {
    Rational deficit;
    std::uint64_t count = 0;
    std::int64_t max_distance = 0;
};
std::vector<FrontierPoint> stability_frontier(int n, int r, const Digraph& h, const Rational& a, GraphKind kind);

}  // namespace tdl::naive
