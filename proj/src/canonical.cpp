#include "tdl/canonical.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

namespace tdl {

namespace {

using Colouring = std::vector<int>;

// Renumber colours 0..k-1 by sorted signature order.
template <typename Sig>
int renumber(const std::vector<Sig>& sigs, Colouring& colour)
{
    std::vector<Sig> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t v = 0; v < sigs.size(); ++v)
        colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[v]) - sorted.begin());
    return static_cast<int>(sorted.size());
}

int count_colours(const Colouring& colour)
{
    return colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
}

void refine(const Digraph& g, Colouring& colour)
{
    const int n = g.order();
    using Sig = std::tuple<int, std::vector<int>, std::vector<int>>;
    int classes = count_colours(colour);
    for (;;) {
        std::vector<Sig> sigs(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& [c, outs, ins] = sigs[static_cast<std::size_t>(v)];
            c = colour[static_cast<std::size_t>(v)];
            for (int w = 0; w < n; ++w) {
                if (g.has_arc(v, w))
                    outs.push_back(colour[static_cast<std::size_t>(w)]);
                if (g.has_arc(w, v))
                    ins.push_back(colour[static_cast<std::size_t>(w)]);
            }
            std::sort(outs.begin(), outs.end());
            std::sort(ins.begin(), ins.end());
        }
        const int next = renumber(sigs, colour);
        if (next == classes)
            return;
        classes = next;
    }
}

bool swappable(const Digraph& g, int u, int w)
{
    if (g.has_arc(u, w) != g.has_arc(w, u))
        return false;
    for (int x = 0; x < g.order(); ++x) {
        if (x == u || x == w)
            continue;
        if (g.has_arc(u, x) != g.has_arc(w, x) || g.has_arc(x, u) != g.has_arc(x, w))
            return false;
    }
    return true;
}

struct Search {
    const Digraph& g;
    std::optional<Digraph> best;
    std::vector<int> best_labelling;

    void run(Colouring colour)
    {
        refine(g, colour);
        const int n = g.order();
        if (count_colours(colour) == n) {
            Digraph candidate = g.relabelled(colour);
            if (!best || *best < candidate) {
                best = std::move(candidate);
                best_labelling = colour;
            }
            return;
        }
        // First non-singleton cell in colour order.
        std::vector<int> cell_size(static_cast<std::size_t>(n), 0);
        for (int c : colour)
            ++cell_size[static_cast<std::size_t>(c)];
        int target = 0;
        while (cell_size[static_cast<std::size_t>(target)] < 2)
            ++target;
        std::vector<int> tried;
        for (int v = 0; v < n; ++v) {
            if (colour[static_cast<std::size_t>(v)] != target)
                continue;
            if (std::any_of(tried.begin(), tried.end(), [&](int u) { return swappable(g, u, v); }))
                continue;
            tried.push_back(v);
            std::vector<int> sig(static_cast<std::size_t>(n));
            for (int w = 0; w < n; ++w)
                sig[static_cast<std::size_t>(w)] = 2 * colour[static_cast<std::size_t>(w)] + (w == v ? 0 : 1);
            Colouring next(static_cast<std::size_t>(n));
            renumber(sig, next);
            run(std::move(next));
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Digraph& g)
{
    Search search{g, std::nullopt, {}};
    search.run(Colouring(static_cast<std::size_t>(g.order()), 0));
    if (!search.best)
        return {g, {}};
    return {std::move(*search.best), std::move(search.best_labelling)};
}

std::string canonical_key(const Digraph& g)
{
    return to_hex_line(canonical_form(g).graph);
}

bool are_isomorphic(const Digraph& a, const Digraph& b)
{
    if (a.order() != b.order() || a.arc_count() != b.arc_count())
        return false;
    return canonical_form(a).graph == canonical_form(b).graph;
}

}  // namespace tdl
