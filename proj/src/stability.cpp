#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "tdl/containment.hpp"
#include "tdl/enumerate.hpp"
#include "tdl/structure.hpp"

namespace tdl {

namespace {

struct Cell {
    std::uint64_t count = 0;
    std::int64_t max_distance = -1;
    Digraph argmax;
};

using Cells = std::map<std::pair<std::int64_t, std::int64_t>, Cell>;  // keyed by (f2, f1)

void absorb(Cell& into, const Cell& from)
{
    into.count += from.count;
    if (from.max_distance > into.max_distance) {
        into.max_distance = from.max_distance;
        into.argmax = from.argmax;
    }
}

}  // namespace

std::vector<FrontierRow> stability_sweep(int n, int r, int t, const WeightParam& a, double gamma, GraphKind kind,
                                         StabilityOptions options)
{
    if (n < 1 || r < 1 || t < 1)
        throw std::invalid_argument("stability: need n, r, t >= 1");
    if (gamma < 0)
        throw std::invalid_argument("stability: gamma must be >= 0");
    const int pairs = n * (n - 1) / 2;
    const int limit = kind == GraphKind::Digraph ? options.max_pairs_digraph : options.max_pairs_oriented;
    if (pairs > limit)
        throw BudgetExceeded("stability: " + std::to_string(pairs) + " vertex pairs exceed the exhaustive limit of " +
                             std::to_string(limit) + " for " + to_string(kind) + " mode");

    const Pattern h = blow_up_pattern(r, t);
    const std::int64_t tr = turan_number(n, r);
    const double floor_value = a.value() * static_cast<double>(tr) - gamma * n * n;

    PartitionOptions popts;
    popts.budget = options.budget;
    auto per_task = enumerate_h_free(n, h.graph, kind, options.threads, options.budget, Cells{},
                                     [&](Cells& cells, const Digraph& g) {
                                         const auto f2 = g.double_pairs();
                                         const auto f1 = g.single_pairs();
                                         const double value = a.value() * static_cast<double>(f2) + static_cast<double>(f1);
                                         if (value < floor_value - WeightParam::kFloatTolerance)
                                             return;
                                         Cell& cell = cells[{f2, f1}];
                                         ++cell.count;
                                         const auto d = distance_to_turan(g, r, popts).distance;
                                         if (d > cell.max_distance) {
                                             cell.max_distance = d;
                                             cell.argmax = g;
                                         }
                                     });

    Cells merged;
    for (const auto& cells : per_task)
        for (const auto& [key, cell] : cells) {
            auto [it, fresh] = merged.try_emplace(key, cell);
            if (!fresh)
                absorb(it->second, cell);
        }

    // Heaviest first; (f2, f1) keys with equal weighted size share a row.
    std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, Cell>> ordered(merged.begin(), merged.end());
    std::stable_sort(ordered.begin(), ordered.end(), [&](const auto& x, const auto& y) {
        return a.compare(x.first.first, x.first.second, y.first.first, y.first.second) > 0;
    });

    std::vector<FrontierRow> rows;
    const WeightedValue target = WeightedValue::of(a, tr, 0);
    Cell running;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        absorb(running, ordered[i].second);
        const auto [f2, f1] = ordered[i].first;
        const bool last_of_value =
            i + 1 == ordered.size() ||
            a.compare(f2, f1, ordered[i + 1].first.first, ordered[i + 1].first.second) != 0;
        if (!last_of_value)
            continue;
        WeightedValue deficit;
        const auto size = WeightedValue::of(a, f2, f1);
        if (target.exact && size.exact)
            deficit.exact = *target.exact - *size.exact;
        deficit.approx = target.approx - size.approx;
        rows.push_back({deficit, running.count, running.max_distance, running.argmax});
    }
    return rows;
}

std::string frontier_csv(const std::vector<FrontierRow>& rows)
{
    std::ostringstream os;
    os << "deficit,count,max_distance,argmax_graph_hex\n";
    for (const auto& row : rows)
        os << row.deficit.to_string() << ',' << row.count << ',' << row.max_distance << ',' << to_hex_line(row.argmax)
           << '\n';
    return os.str();
}

}  // namespace tdl
