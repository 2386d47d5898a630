#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tdl/budget.hpp"
#include "tdl/containment.hpp"
#include "tdl/digraph.hpp"

namespace tdl {

using BigInt = boost::multiprecision::cpp_int;

struct NearPartiteCount {
    double alpha = 0;
    BigInt count;  // H-free graphs with at most alpha n^2 non-crossing arcs in an optimal r-partition
};

struct CensusRecord {
    int n = 0;
    GraphKind kind = GraphKind::Oriented;
    std::string pattern;
    int r = 0;
    BigInt f_count;  // labelled H-free graphs
    BigInt t_count;  // labelled graphs whose underlying graph is r-colourable
    std::vector<NearPartiteCount> near_partite;

    double ratio() const;  // f / t
};

struct CensusOptions {
    int threads = 1;
    int max_n_oriented = 6;
    int max_n_digraph = 5;
    Budget budget;
};

/// Exact labelled counts at one n.
///
/// f comes from the incremental H-free enumerator. t does not depend on H:
/// it sums, over r-colourable undirected graphs U on [n], the number of
/// graphs of the kind with underlying graph U, i.e. 2^e(U) orientations or
/// 3^e(U) digraphs. r-colourability is decided as an exact optimal
/// r-partition with no non-crossing arcs.
CensusRecord labelled_census(int n, const Pattern& h, int r, GraphKind kind, const std::vector<double>& alphas,
                             CensusOptions options = {});

// ceil(r^n * b^{t_r(n)} / (2 r! n^{r-1})) with b = 3 (oriented) or 4 (digraph).
BigInt rpartite_lower_bound(int n, int r, GraphKind kind);

// Base-2 binary entropy, H(0) = H(1) = 0.
double binary_entropy(double p);

struct TrendRow {
    int n = 0;
    BigInt f;
    BigInt t;
    double ratio = 0;
};

struct RatioTrend {
    std::vector<TrendRow> rows;
    bool nonincreasing = true;  // observed over the rows, not a claim
};

RatioTrend ratio_trend(int n_min, int n_max, const Pattern& h, int r, GraphKind kind, CensusOptions options = {});

std::string census_csv_header(const std::vector<double>& alphas);
std::string census_csv_row(const CensusRecord& record);

}  // namespace tdl
