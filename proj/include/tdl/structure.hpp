#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tdl/budget.hpp"
#include "tdl/digraph.hpp"

namespace tdl {

/// Ordered partition of {0..n-1} into r classes; empty classes allowed.
class RPartition {
public:
    static RPartition from_assignment(int r, std::vector<int> assignment);
    static RPartition from_classes(int n, std::vector<std::vector<int>> classes);
    // Classes of DT_r(n): consecutive labels, larger classes first.
    static RPartition turan(int n, int r);

    int r() const { return r_; }
    int order() const { return static_cast<int>(assignment_.size()); }
    int class_of(int v) const { return assignment_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& assignment() const { return assignment_; }
    const std::vector<std::vector<int>>& classes() const { return classes_; }

private:
    RPartition(int r, std::vector<int> assignment);

    int r_ = 0;
    std::vector<int> assignment_;
    std::vector<std::vector<int>> classes_;
};

std::int64_t non_crossing_count(const Digraph& g, const RPartition& q);
std::int64_t crossing_count(const Digraph& g, const RPartition& q);
// Missing arcs between different classes, each direction counted.
std::int64_t crossing_deficit(const Digraph& g, const RPartition& q);
// Arc edits turning g into the complete r-partite digraph on q's classes.
std::int64_t edit_distance(const Digraph& g, const RPartition& q);

struct PartitionReport {
    RPartition partition;
    std::int64_t non_crossing_arcs = 0;
    bool is_optimal = false;
    std::int64_t f2_deficit = 0;
    std::int64_t edit_distance_to_dtr = 0;
};

PartitionReport make_report(const Digraph& g, const RPartition& q, bool is_optimal);

enum class PartitionMode { Exact, LocalSearch };

struct PartitionOptions {
    // Exact mode refuses more than this many canonical assignments.
    std::uint64_t max_assignments = 50'000'000;
    int restarts = 32;
    std::uint64_t seed = 0x5eed;
    Budget budget;
};

/// Partition minimising non-crossing arcs.
///
/// Exact: restricted-growth assignments (vertex 0 in class 0, classes opened
/// in order of their smallest vertex) in lexicographic order with pruning on
/// the running count; the first minimiser found is the lexicographically
/// smallest assignment vector.
///
/// Local search: steepest single-vertex moves (ties to the lowest class
/// index) from `restarts` seeded random starts; is_optimal only when the
/// result has no non-crossing arcs.
PartitionReport optimal_partition(const Digraph& g, int r, PartitionMode mode, PartitionOptions options = {});

// Minimum edit distance to DT_r(n) itself, i.e. over partitions whose class
// sizes are the balanced Turán sizes.
struct TuranDistance {
    std::int64_t distance = 0;
    RPartition partition;
};
TuranDistance distance_to_turan(const Digraph& g, int r, PartitionOptions options = {});

struct PairDensities {
    Rational d2;     // pairs (u, v) in A x B with both arcs
    Rational d1_ab;  // only u -> v
    Rational d1_ba;  // only v -> u
    WeightedValue w_ab;  // a*d2 + d1_ab
    WeightedValue w_ba;  // a*d2 + d1_ba
};

PairDensities pair_densities(const Digraph& g, const std::vector<int>& a_set, const std::vector<int>& b_set,
                             const WeightParam& a);

struct F2Violation {
    int class_i = 0;
    int class_j = 0;
    std::vector<int> u_i;
    std::vector<int> u_j;
    std::int64_t arcs = 0;  // arcs from u_i to u_j, below |U_i||U_j| / 6
};

struct FConditions {
    bool f1 = false;
    bool f2 = false;
    bool f3 = false;
    bool f2_exhaustive = true;         // false: F2 = true is only a sampled pass
    std::uint64_t f2_subset_pairs = 0; // checked (exhaustive) or sampled pairs
    std::int64_t non_crossing = 0;
    std::optional<F2Violation> f2_witness;
    std::vector<int> f3_violations;    // classes with ||V_i| - n/r| > mu n
};

struct FConditionOptions {
    int exhaustive_max_n = 14;
    std::uint64_t samples_per_pair = 100'000;
    std::uint64_t seed = 0xf2;
};

// (F1) non-crossing arcs <= eta n^2; (F2) every U_i, U_j of size >= mu n in
// distinct classes has at least |U_i||U_j|/6 arcs each way; (F3) class sizes
// within mu n of n/r. The density 1/6 is used for both graph kinds.
FConditions f_conditions_check(const Digraph& g, const RPartition& q, double eta, double mu,
                               FConditionOptions options = {});

// In- plus out-degree of each vertex inside its own class.
std::vector<int> internal_degree_profile(const Digraph& g, const RPartition& q);

struct FrontierRow {
    WeightedValue deficit;        // a t_r(n) - e_a(G), upper end of this row
    std::uint64_t count = 0;      // graphs with deficit <= this row's deficit
    std::int64_t max_distance = 0;
    Digraph argmax;               // first graph in enumeration order attaining max_distance
};

struct StabilityOptions {
    int threads = 1;
    int max_pairs_digraph = 10;  // C(n,2) limit, i.e. n <= 5
    int max_pairs_oriented = 15; // n <= 6
    Budget budget;
};

/// Over every T_{r+1}^t-free graph G of the kind on n vertices with
/// e_a(G) >= a t_r(n) - gamma n^2, the largest minimum edit distance to
/// DT_r(n). One row per distinct deficit value, cumulative, sorted by
/// deficit: row d reports the sweep at threshold gamma = d / n^2.
std::vector<FrontierRow> stability_sweep(int n, int r, int t, const WeightParam& a, double gamma, GraphKind kind,
                                         StabilityOptions options = {});

std::string frontier_csv(const std::vector<FrontierRow>& rows);

}  // namespace tdl
