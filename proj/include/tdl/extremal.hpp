#pragma once

#include <cstdint>
#include <vector>

#include "tdl/budget.hpp"
#include "tdl/containment.hpp"
#include "tdl/digraph.hpp"

namespace tdl {

struct ExtremalOptions {
    // Largest n accepted per kind; beyond these the solver refuses with
    // BudgetExceeded instead of running for days.
    int max_n_digraph = 7;
    int max_n_oriented = 8;
    Budget budget;
};

/// Maximum weighted size over all H-free graphs of one kind on n labelled
/// vertices, with every maximiser up to isomorphism.
struct ExtremalCertificate {
    int n = 0;
    Pattern pattern;
    WeightParam weight = WeightParam::rational(2);
    GraphKind kind = GraphKind::Digraph;
    WeightedValue value;
    std::vector<Digraph> witnesses;  // canonical forms, sorted by canonical key
    std::uint64_t labelled_maximizers = 0;
    std::uint64_t nodes = 0;

    bool exact() const { return weight.is_exact(); }
    bool unique_up_to_iso() const { return witnesses.size() == 1; }
};

// Branch and bound over unordered pairs in lexicographic order. Each pair
// tries its states heaviest first; a branch is cut when a copy of H appears
// or when its weight plus the best case for the undecided pairs falls
// strictly below the incumbent (ties are kept so all maximisers are seen).
ExtremalCertificate exact_extremal(int n, const Pattern& h, const WeightParam& a, GraphKind kind,
                                   ExtremalOptions options = {});

struct LowerBound {
    Digraph graph;
    WeightedValue value;
};

// DT_r(n) and a * t_r(n).
LowerBound lower_bound_construction(int n, int r, const WeightParam& a);

struct GapRow {
    int n = 0;
    WeightedValue extremal;
    WeightedValue lower;
    WeightedValue gap;
    std::size_t witness_count = 0;
};

// ex_a(n, H) - a * t_r(n) for every n in [n_min, n_max].
std::vector<GapRow> extremal_gap_scan(int n_min, int n_max, const Pattern& h, int r, const WeightParam& a,
                                      GraphKind kind, ExtremalOptions options = {});

WeightedValue difference(const WeightedValue& lhs, const WeightedValue& rhs);

}  // namespace tdl
