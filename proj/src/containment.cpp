#include "tdl/containment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <map>
#include <stdexcept>
#include <thread>

namespace tdl {

EmbeddingSearcher::EmbeddingSearcher(Digraph pattern) : pattern_(std::move(pattern))
{
    const int h = pattern_.order();
    for (int v = 0; v < h; ++v) {
        out_deg_.push_back(pattern_.out_degree(v));
        in_deg_.push_back(pattern_.in_degree(v));
    }
    default_plan_ = make_plan({});
    for (auto arc : pattern_.arcs())
        arc_plans_.emplace_back(arc, make_plan({arc.first, arc.second}));
}

EmbeddingSearcher::Plan EmbeddingSearcher::make_plan(std::vector<int> prefix) const
{
    const int h = pattern_.order();
    Plan plan;
    plan.order = std::move(prefix);
    std::vector<bool> placed(static_cast<std::size_t>(h), false);
    for (int v : plan.order)
        placed[static_cast<std::size_t>(v)] = true;
    while (static_cast<int>(plan.order.size()) < h) {
        int best = -1, best_links = -1, best_degree = -1;
        for (int v = 0; v < h; ++v) {
            if (placed[static_cast<std::size_t>(v)])
                continue;
            int links = 0;
            for (int p : plan.order)
                links += pattern_.has_arc(v, p) + pattern_.has_arc(p, v);
            const int degree = pattern_.total_degree(v);
            if (links > best_links || (links == best_links && degree > best_degree)) {
                best = v;
                best_links = links;
                best_degree = degree;
            }
        }
        plan.order.push_back(best);
        placed[static_cast<std::size_t>(best)] = true;
    }
    plan.constraints.resize(static_cast<std::size_t>(h));
    for (int d = 0; d < h; ++d) {
        const int v = plan.order[static_cast<std::size_t>(d)];
        for (int e = 0; e < d; ++e) {
            const int p = plan.order[static_cast<std::size_t>(e)];
            // p -> v in H: candidate must be an out-neighbour of image(p).
            if (pattern_.has_arc(p, v))
                plan.constraints[static_cast<std::size_t>(d)].emplace_back(e, true);
            if (pattern_.has_arc(v, p))
                plan.constraints[static_cast<std::size_t>(d)].emplace_back(e, false);
        }
    }
    return plan;
}

std::optional<std::vector<int>> EmbeddingSearcher::find(const Digraph& host) const
{
    std::optional<std::vector<int>> found;
    auto visit = [&](const std::vector<int>& map) {
        found = map;
        return true;
    };
    search(default_plan_, host, {}, visit);
    return found;
}

std::uint64_t EmbeddingSearcher::count(const Digraph& host, int threads) const
{
    const int n = host.order();
    if (pattern_.order() > n)
        return 0;
    if (pattern_.order() == 0)
        return 1;
    auto count_from = [&](int first) {
        std::uint64_t total = 0;
        auto visit = [&](const std::vector<int>&) {
            ++total;
            return false;
        };
        const int pinned[] = {first};
        search(default_plan_, host, pinned, visit);
        return total;
    };
    threads = std::clamp(threads, 1, std::max(1, n));
    if (threads == 1) {
        std::uint64_t total = 0;
        for (int v = 0; v < n; ++v)
            total += count_from(v);
        return total;
    }
    std::vector<std::uint64_t> per_vertex(static_cast<std::size_t>(n), 0);
    std::atomic<int> next{0};
    {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (int v = next++; v < n; v = next++)
                    per_vertex[static_cast<std::size_t>(v)] = count_from(v);
            });
    }
    std::uint64_t total = 0;
    for (auto c : per_vertex)
        total += c;
    return total;
}

bool EmbeddingSearcher::contains_through_arc(const Digraph& host, int u, int v) const
{
    bool found = false;
    auto visit = [&](const std::vector<int>&) {
        found = true;
        return true;
    };
    const int pinned[] = {u, v};
    for (const auto& [arc, plan] : arc_plans_) {
        search(plan, host, pinned, visit);
        if (found)
            return true;
    }
    return false;
}

std::optional<std::vector<int>> find_embedding(const Digraph& g, const Digraph& h)
{
    return EmbeddingSearcher(h).find(g);
}

std::uint64_t count_copies(const Digraph& g, const Digraph& h, int threads)
{
    return EmbeddingSearcher(h).count(g, threads);
}

CleanResult greedy_make_h_free(const Digraph& g, const Digraph& h)
{
    const EmbeddingSearcher searcher(h);
    const auto pattern_arcs = h.arcs();
    CleanResult result{g, {}};
    if (pattern_arcs.empty()) {
        // An arcless pattern cannot be destroyed by deleting arcs.
        if (searcher.find(g))
            throw std::invalid_argument("greedy_make_h_free: pattern has no arcs and embeds in G");
        return result;
    }
    for (;;) {
        std::map<Arc, std::uint64_t> load;
        searcher.for_each(result.graph, [&](const std::vector<int>& map) {
            for (auto [x, y] : pattern_arcs)
                ++load[{map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]}];
            return false;
        });
        if (load.empty())
            return result;
        // std::map iterates in lexicographic arc order, so the first maximum wins ties.
        auto best = load.begin();
        for (auto it = load.begin(); it != load.end(); ++it)
            if (it->second > best->second)
                best = it;
        result.graph.remove_arc(best->first.first, best->first.second);
        result.deleted.push_back(best->first);
    }
}

bool Pattern::satisfies_condition_a(const WeightParam& a) const
{
    if (!density_threshold)
        return true;
    if (a.exact())
        return *density_threshold * 2 <= *a.exact();
    return boost::rational_cast<double>(*density_threshold) * 2.0 <= a.value() + WeightParam::kFloatTolerance;
}

Pattern pattern_stats(const Digraph& h, std::string name)
{
    const int k = h.order();
    if (k > 24)
        throw std::invalid_argument("pattern_stats: pattern too large for subset enumeration");
    Pattern p;
    p.name = std::move(name);
    p.graph = h;
    p.max_degree = h.max_total_degree();
    std::vector<int> subset;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
        const int size = std::popcount(mask);
        if (size < 2)
            continue;
        std::int64_t e = 0;
        for (int u = 0; u < k; ++u) {
            if (!((mask >> u) & 1U))
                continue;
            for (int v = 0; v < k; ++v)
                if (((mask >> v) & 1U) && h.has_arc(u, v))
                    ++e;
        }
        if (e <= 1)
            continue;
        const Rational density(e, size);
        if (!p.density_threshold || density > *p.density_threshold)
            p.density_threshold = density;
        if (size == 2) {
            p.has_dense_pair = true;
            continue;
        }
        const Rational m(e - 1, size - 2);
        if (!p.m_value || m > *p.m_value)
            p.m_value = m;
    }
    return p;
}

Pattern blow_up_pattern(int r, int t)
{
    if (r < 1 || t < 1)
        throw std::invalid_argument("pattern: need r >= 1 and t >= 1");
    std::string name = "T_" + std::to_string(r + 1);
    if (t > 1)
        name += "^" + std::to_string(t);
    return pattern_stats(blow_up(transitive_tournament(r + 1), t), name);
}

Pattern parse_pattern_spec(std::string_view spec)
{
    const auto comma = spec.find(',');
    if (comma == std::string_view::npos)
        throw std::invalid_argument("pattern spec '" + std::string(spec) + "' must be 'r,t'");
    auto parse = [&](std::string_view s) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw std::invalid_argument("pattern spec '" + std::string(spec) + "' must be 'r,t' with integers");
        return value;
    };
    return blow_up_pattern(parse(spec.substr(0, comma)), parse(spec.substr(comma + 1)));
}

}  // namespace tdl
