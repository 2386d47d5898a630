#include "tdl/census.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tdl/enumerate.hpp"
#include "tdl/structure.hpp"

namespace tdl {

namespace {

struct Tally {
    std::uint64_t f = 0;
    std::vector<std::uint64_t> near;
};

std::string format_double(double x)
{
    std::ostringstream os;
    os.precision(10);
    os << x;
    return os.str();
}

}  // namespace

double CensusRecord::ratio() const
{
    if (t_count == 0)
        return std::numeric_limits<double>::infinity();
    return static_cast<double>(f_count) / static_cast<double>(t_count);
}

CensusRecord labelled_census(int n, const Pattern& h, int r, GraphKind kind, const std::vector<double>& alphas,
                             CensusOptions options)
{
    if (n < 0 || r < 1)
        throw std::invalid_argument("census: need n >= 0 and r >= 1");
    const int limit = kind == GraphKind::Oriented ? options.max_n_oriented : options.max_n_digraph;
    if (n > limit)
        throw BudgetExceeded("census: n = " + std::to_string(n) + " is beyond the exhaustive limit for " +
                             to_string(kind) + " mode; largest feasible n is " + std::to_string(limit));

    PartitionOptions popts;
    popts.budget = options.budget;
    const double n2 = static_cast<double>(n) * n;
    Tally init;
    init.near.assign(alphas.size(), 0);
    auto tallies = enumerate_h_free(n, h.graph, kind, options.threads, options.budget, init,
                                    [&](Tally& tally, const Digraph& g) {
                                        ++tally.f;
                                        if (alphas.empty())
                                            return;
                                        const auto nc =
                                            optimal_partition(g, r, PartitionMode::Exact, popts).non_crossing_arcs;
                                        for (std::size_t k = 0; k < alphas.size(); ++k)
                                            if (static_cast<double>(nc) <= alphas[k] * n2 + 1e-12)
                                                ++tally.near[k];
                                    });

    CensusRecord rec;
    rec.n = n;
    rec.kind = kind;
    rec.pattern = h.name;
    rec.r = r;
    std::vector<std::uint64_t> near(alphas.size(), 0);
    for (const auto& tally : tallies) {
        rec.f_count += tally.f;
        for (std::size_t k = 0; k < alphas.size(); ++k)
            near[k] += tally.near[k];
    }
    for (std::size_t k = 0; k < alphas.size(); ++k)
        rec.near_partite.push_back({alphas[k], BigInt(near[k])});

    // Underlying graphs: one bit per pair.
    std::vector<Arc> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    const BigInt per_edge = kind == GraphKind::Oriented ? 2 : 3;
    std::vector<BigInt> weight_by_edges(pairs.size() + 1, 1);
    for (std::size_t e = 1; e <= pairs.size(); ++e)
        weight_by_edges[e] = weight_by_edges[e - 1] * per_edge;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        options.budget.tick("census");
        Digraph u(n);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((mask >> k) & 1U)
                u.add_arc(pairs[k].first, pairs[k].second);
        if (optimal_partition(u, r, PartitionMode::Exact, popts).non_crossing_arcs == 0)
            rec.t_count += weight_by_edges[static_cast<std::size_t>(std::popcount(mask))];
    }
    return rec;
}

BigInt rpartite_lower_bound(int n, int r, GraphKind kind)
{
    if (n < 1 || r < 1)
        throw std::invalid_argument("rpartite_lower_bound: need n >= 1 and r >= 1");
    const BigInt base = kind == GraphKind::Oriented ? 3 : 4;
    BigInt num = boost::multiprecision::pow(BigInt(r), static_cast<unsigned>(n)) *
                 boost::multiprecision::pow(base, static_cast<unsigned>(turan_number(n, r)));
    BigInt factorial = 1;
    for (int k = 2; k <= r; ++k)
        factorial *= k;
    const BigInt den = 2 * factorial * boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(r - 1));
    return (num + den - 1) / den;
}

double binary_entropy(double p)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("binary_entropy: p must lie in [0, 1]");
    if (p == 0.0 || p == 1.0)
        return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

RatioTrend ratio_trend(int n_min, int n_max, const Pattern& h, int r, GraphKind kind, CensusOptions options)
{
    RatioTrend trend;
    for (int n = n_min; n <= n_max; ++n) {
        const auto rec = labelled_census(n, h, r, kind, {}, options);
        trend.rows.push_back({n, rec.f_count, rec.t_count, rec.ratio()});
        if (trend.rows.size() >= 2 && trend.rows.back().ratio > trend.rows[trend.rows.size() - 2].ratio)
            trend.nonincreasing = false;
    }
    return trend;
}

std::string census_csv_header(const std::vector<double>& alphas)
{
    std::string header = "n,kind,pattern,f,t,ratio";
    for (double alpha : alphas)
        header += ",near_partite@" + format_double(alpha);
    return header;
}

std::string census_csv_row(const CensusRecord& record)
{
    std::ostringstream os;
    os << record.n << ',' << to_string(record.kind) << ',' << record.pattern << ',' << record.f_count << ','
       << record.t_count << ',' << format_double(record.ratio());
    for (const auto& near : record.near_partite)
        os << ',' << near.count;
    return os.str();
}

}  // namespace tdl
