#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tdl/digraph.hpp"

namespace tdl {

/// Backtracking search for arc-preserving injections V(H) -> V(G)
/// (non-induced containment). The pattern-side preprocessing (matching order
/// and per-depth adjacency constraints) is done once, so one searcher can be
/// run against many hosts.
///
/// H-vertices are matched most-constrained first: each step picks the vertex
/// with the most arcs to already-matched vertices, ties by total degree.
/// Candidates are the intersection of the relevant out/in rows of the images
/// of matched neighbours, filtered by out- and in-degree.
class EmbeddingSearcher {
public:
    explicit EmbeddingSearcher(Digraph pattern);

    const Digraph& pattern() const { return pattern_; }

    std::optional<std::vector<int>> find(const Digraph& host) const;

    // Number of arc-preserving injections. Work is split over the images of
    // the first matched vertex; the sum does not depend on `threads`.
    std::uint64_t count(const Digraph& host, int threads = 1) const;

    // True iff some embedding maps an arc of H onto u->v. Used for
    // incremental rejection after inserting u->v into an H-free host.
    bool contains_through_arc(const Digraph& host, int u, int v) const;

    // Calls visit(map) on every embedding; stops early when visit returns true.
    template <typename Visit>
    void for_each(const Digraph& host, Visit&& visit) const;

private:
    struct Plan {
        std::vector<int> order;                            // H-vertex at each depth
        std::vector<std::vector<std::pair<int, bool>>> constraints;  // (earlier depth, arc from earlier)
    };

    Plan make_plan(std::vector<int> prefix) const;

    template <typename Visit>
    bool search(const Plan& plan, const Digraph& host, std::span<const int> pinned, Visit& visit) const;

    Digraph pattern_;
    std::vector<int> out_deg_;
    std::vector<int> in_deg_;
    Plan default_plan_;
    std::vector<std::pair<Arc, Plan>> arc_plans_;
};

std::optional<std::vector<int>> find_embedding(const Digraph& g, const Digraph& h);
std::uint64_t count_copies(const Digraph& g, const Digraph& h, int threads = 1);

struct CleanResult {
    Digraph graph;
    std::vector<Arc> deleted;
};

// Deletes, one at a time, the arc lying in the most remaining H-copies
// (ties: lexicographically smallest (u, v)) until G is H-free.
CleanResult greedy_make_h_free(const Digraph& g, const Digraph& h);

/// Forbidden digraph plus its sparsity parameters, all from enumeration of
/// induced subgraphs H[S]:
///   m(H)           = max (e - 1) / (|S| - 2) over |S| >= 3, e(H[S]) > 1
///   density bound  = max e / |S|            over        e(H[S]) > 1
/// Condition A at weight a holds iff density bound <= a / 2.
struct Pattern {
    std::string name;
    Digraph graph;
    int max_degree = 0;
    std::optional<Rational> m_value;
    std::optional<Rational> density_threshold;
    // Some 2-vertex subgraph has more than one arc (a 2-cycle); such
    // subgraphs are excluded from m(H) since |S| - 2 = 0.
    bool has_dense_pair = false;

    bool satisfies_condition_a(const WeightParam& a) const;
};

Pattern pattern_stats(const Digraph& h, std::string name = "H");

// T_{r+1}^t; named "T_{r+1}" for t = 1 and "T_{r+1}^t" otherwise.
Pattern blow_up_pattern(int r, int t);
// "r,t" -> blow_up_pattern(r, t).
Pattern parse_pattern_spec(std::string_view spec);

// Implementation of the templated members.

template <typename Visit>
bool EmbeddingSearcher::search(const Plan& plan, const Digraph& host, std::span<const int> pinned,
                               Visit& visit) const
{
    const int h = pattern_.order();
    const int n = host.order();
    if (h > n)
        return false;
    if (h == 0) {
        std::vector<int> empty;
        return visit(empty);
    }
    const int words = host.words_per_row();
    std::vector<std::uint64_t> cand(static_cast<std::size_t>(h) * words);
    std::vector<std::uint64_t> used(static_cast<std::size_t>(words), 0);
    std::vector<int> image(static_cast<std::size_t>(h), -1);  // by depth
    std::vector<int> map(static_cast<std::size_t>(h), -1);    // by H-vertex
    std::vector<int> host_out(static_cast<std::size_t>(n)), host_in(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        host_out[static_cast<std::size_t>(v)] = host.out_degree(v);
        host_in[static_cast<std::size_t>(v)] = host.in_degree(v);
    }

    auto fill = [&](int depth) {
        std::uint64_t* c = cand.data() + static_cast<std::size_t>(depth) * words;
        for (int w = 0; w < words; ++w)
            c[w] = ~used[static_cast<std::size_t>(w)];
        if (n % 64 != 0)
            c[words - 1] &= (std::uint64_t{1} << (n % 64)) - 1;
        for (auto [earlier, from_earlier] : plan.constraints[static_cast<std::size_t>(depth)]) {
            const int img = image[static_cast<std::size_t>(earlier)];
            auto row = from_earlier ? host.out_row(img) : host.in_row(img);
            for (int w = 0; w < words; ++w)
                c[w] &= row[static_cast<std::size_t>(w)];
        }
        if (depth < static_cast<int>(pinned.size())) {
            const int p = pinned[static_cast<std::size_t>(depth)];
            const bool ok = (c[p >> 6] >> (p & 63)) & 1U;
            for (int w = 0; w < words; ++w)
                c[w] = 0;
            if (ok)
                c[p >> 6] |= std::uint64_t{1} << (p & 63);
        }
    };

    auto recurse = [&](auto&& self, int depth) -> bool {
        fill(depth);
        const int hv = plan.order[static_cast<std::size_t>(depth)];
        const int need_out = out_deg_[static_cast<std::size_t>(hv)];
        const int need_in = in_deg_[static_cast<std::size_t>(hv)];
        std::uint64_t* c = cand.data() + static_cast<std::size_t>(depth) * words;
        for (int w = 0; w < words; ++w) {
            while (c[w]) {
                const int bit = std::countr_zero(c[w]);
                c[w] &= c[w] - 1;
                const int v = w * 64 + bit;
                if (host_out[static_cast<std::size_t>(v)] < need_out || host_in[static_cast<std::size_t>(v)] < need_in)
                    continue;
                image[static_cast<std::size_t>(depth)] = v;
                map[static_cast<std::size_t>(hv)] = v;
                if (depth + 1 == h) {
                    if (visit(std::as_const(map)))
                        return true;
                } else {
                    used[static_cast<std::size_t>(w)] |= std::uint64_t{1} << bit;
                    const bool stop = self(self, depth + 1);
                    used[static_cast<std::size_t>(w)] &= ~(std::uint64_t{1} << bit);
                    if (stop)
                        return true;
                }
            }
        }
        return false;
    };
    return recurse(recurse, 0);
}

template <typename Visit>
void EmbeddingSearcher::for_each(const Digraph& host, Visit&& visit) const
{
    search(default_plan_, host, {}, visit);
}

}  // namespace tdl
