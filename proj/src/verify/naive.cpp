#include "tdl/verify/naive.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tdl::naive {

void for_each_graph(int n, GraphKind kind, const std::function<void(const Digraph&)>& visit)
{
    std::vector<Arc> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    const int base = kind == GraphKind::Oriented ? 3 : 4;
    std::vector<int> digits(pairs.size(), 0);
    for (;;) {
        Digraph g(n);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (digits[k] == 1 || digits[k] == 3)
                g.add_arc(pairs[k].first, pairs[k].second);
            if (digits[k] == 2 || digits[k] == 3)
                g.add_arc(pairs[k].second, pairs[k].first);
        }
        visit(g);
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == base)
            digits[k++] = 0;
        if (k == digits.size())
            return;
    }
}

namespace {

// Calls visit(map) for every injection [h] -> [n]; stops when visit returns true.
bool for_each_injection(int h, int n, const std::function<bool(const std::vector<int>&)>& visit)
{
    if (h > n)
        return false;
    std::vector<int> map(static_cast<std::size_t>(h));
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::function<bool(int)> rec = [&](int i) {
        if (i == h)
            return visit(map);
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)])
                continue;
            used[static_cast<std::size_t>(v)] = true;
            map[static_cast<std::size_t>(i)] = v;
            const bool stop = rec(i + 1);
            used[static_cast<std::size_t>(v)] = false;
            if (stop)
                return true;
        }
        return false;
    };
    return rec(0);
}

bool preserves_arcs(const Digraph& g, const Digraph& h, const std::vector<int>& map)
{
    for (int x = 0; x < h.order(); ++x)
        for (int y = 0; y < h.order(); ++y)
            if (h.has_arc(x, y) && !g.has_arc(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]))
                return false;
    return true;
}

}  // namespace

bool contains(const Digraph& g, const Digraph& h)
{
    return for_each_injection(h.order(), g.order(), [&](const std::vector<int>& map) {
        return preserves_arcs(g, h, map);
    });
}

std::uint64_t count_maps(const Digraph& g, const Digraph& h)
{
    std::uint64_t count = 0;
    for_each_injection(h.order(), g.order(), [&](const std::vector<int>& map) {
        count += preserves_arcs(g, h, map);
        return false;
    });
    return count;
}

bool isomorphic(const Digraph& a, const Digraph& b)
{
    if (a.order() != b.order())
        return false;
    std::vector<int> perm(static_cast<std::size_t>(a.order()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (a.relabelled(perm) == b)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::int64_t min_non_crossing(const Digraph& g, int r)
{
    const int n = g.order();
    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (;;) {
        std::int64_t nc = 0;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (g.has_arc(u, v) && colour[static_cast<std::size_t>(u)] == colour[static_cast<std::size_t>(v)])
                    ++nc;
        best = std::min(best, nc);
        int k = 0;
        while (k < n && ++colour[static_cast<std::size_t>(k)] == r)
            colour[static_cast<std::size_t>(k++)] = 0;
        if (k == n)
            return best;
    }
}

ExtremalResult extremal(int n, const Digraph& h, const WeightParam& a, GraphKind kind)
{
    ExtremalResult out;
    bool have = false;
    for_each_graph(n, kind, [&](const Digraph& g) {
        if (contains(g, h))
            return;
        const auto f2 = g.double_pairs(), f1 = g.single_pairs();
        int cmp = 1;
        if (have) {
            if (a.exact()) {
                const Rational diff = *a.exact() * (f2 - out.best_f2) + (f1 - out.best_f1);
                cmp = diff > 0 ? 1 : diff < 0 ? -1 : 0;
            } else {
                const double diff = a.value() * static_cast<double>(f2 - out.best_f2) + static_cast<double>(f1 - out.best_f1);
                cmp = diff > 1e-9 ? 1 : diff < -1e-9 ? -1 : 0;
            }
        }
        if (cmp < 0)
            return;
        if (cmp > 0) {
            out.best_f2 = f2;
            out.best_f1 = f1;
            out.maximizers.clear();
            have = true;
        }
        out.maximizers.push_back(g);
    });
    return out;
}

CensusCounts census(int n, const Digraph& h, int r, GraphKind kind)
{
    CensusCounts out;
    for_each_graph(n, kind, [&](const Digraph& g) {
        if (!contains(g, h))
            out.f += 1;
        if (min_non_crossing(g, r) == 0)
            out.t += 1;
    });
    return out;
}

std::size_t min_deletions(const Digraph& g, const Digraph& h)
{
    const auto arcs = g.arcs();
    if (arcs.size() > 20)
        throw std::invalid_argument("naive::min_deletions: too many arcs");
    std::size_t best = arcs.size() + 1;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << arcs.size()); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size >= best)
            continue;
        Digraph reduced = g;
        for (std::size_t k = 0; k < arcs.size(); ++k)
            if ((mask >> k) & 1U)
                reduced.remove_arc(arcs[k].first, arcs[k].second);
        if (!contains(reduced, h))
            best = size;
    }
    return best;
}

SubgraphDensities subgraph_densities(const Digraph& h)
{
    const auto arcs = h.arcs();
    if (arcs.size() > 20)
        throw std::invalid_argument("naive::subgraph_densities: too many arcs");
    SubgraphDensities out;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << arcs.size()); ++mask) {
        const auto e = static_cast<std::int64_t>(std::popcount(mask));
        if (e <= 1)
            continue;
        std::vector<bool> touched(static_cast<std::size_t>(h.order()), false);
        for (std::size_t k = 0; k < arcs.size(); ++k)
            if ((mask >> k) & 1U)
                touched[static_cast<std::size_t>(arcs[k].first)] = touched[static_cast<std::size_t>(arcs[k].second)] = true;
        const auto v = static_cast<std::int64_t>(std::count(touched.begin(), touched.end(), true));
        const Rational density(e, v);
        if (!out.density || density > *out.density)
            out.density = density;
        // Isolated vertices may be added to reach the three needed for m.
        const auto v_m = std::max<std::int64_t>(v, 3);
        if (v_m <= h.order()) {
            const Rational m(e - 1, v_m - 2);
            if (!out.m_value || m > *out.m_value)
                out.m_value = m;
        }
    }
    return out;
}

std::vector<FrontierPoint> stability_frontier(int n, int r, const Digraph& h, const Rational& a, GraphKind kind)
{
    auto sizes = turan_part_sizes(n, r);
    std::sort(sizes.begin(), sizes.end());
    std::vector<std::vector<int>> balanced;
    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    for (;;) {
        std::vector<int> count(static_cast<std::size_t>(r), 0);
        for (int c : assign)
            ++count[static_cast<std::size_t>(c)];
        std::sort(count.begin(), count.end());
        if (count == sizes)
            balanced.push_back(assign);
        std::size_t k = 0;
        while (k < assign.size() && ++assign[k] == r)
            assign[k++] = 0;
        if (k == assign.size())
            break;
    }

    std::map<Rational, std::pair<std::uint64_t, std::int64_t>> by_deficit;
    const Rational target = a * turan_number(n, r);
    for_each_graph(n, kind, [&](const Digraph& g) {
        if (contains(g, h))
            return;
        std::int64_t best = -1;
        for (const auto& q : balanced) {
            std::int64_t d = 0;
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (u != v)
                        d += g.has_arc(u, v) != (q[static_cast<std::size_t>(u)] != q[static_cast<std::size_t>(v)]);
            if (best < 0 || d < best)
                best = d;
        }
        auto& cell = by_deficit[target - a * g.double_pairs() - g.single_pairs()];
        ++cell.first;
        cell.second = std::max(cell.second, best);
    });

    std::vector<FrontierPoint> rows;
    std::uint64_t count = 0;
    std::int64_t max_distance = 0;
    for (const auto& [deficit, cell] : by_deficit) {
        count += cell.first;
        max_distance = std::max(max_distance, cell.second);
        rows.push_back({deficit, count, max_distance});
    }
    return rows;
}

}  // namespace tdl::naive
