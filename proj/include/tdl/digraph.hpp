#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tdl/weight.hpp"

namespace tdl {

enum class GraphKind { Oriented, Digraph };

std::string to_string(GraphKind kind);
GraphKind parse_graph_kind(std::string_view text);

using Arc = std::pair<int, int>;

/// Loopless digraph on vertices 0..n-1 stored as a dense bit matrix.
///
/// Each vertex owns `words_per_row()` 64-bit words of out-neighbour bits and
/// the same of in-neighbour bits. For n <= 64 a row is a single word and
/// `out_mask`/`in_mask` give direct access; kernels use that fast path and
/// fall back to the span accessors for larger graphs.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);

    static Digraph from_arcs(int n, std::span<const Arc> arcs);

    int order() const { return n_; }
    int words_per_row() const { return words_; }

    bool has_arc(int u, int v) const
    {
        return (out_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
    }
    void add_arc(int u, int v);
    void remove_arc(int u, int v);

    std::span<const std::uint64_t> out_row(int v) const
    {
        return {out_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }
    std::span<const std::uint64_t> in_row(int v) const
    {
        return {in_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }

    // Fast path, n <= 64 only.
    std::uint64_t out_mask(int v) const { return out_[static_cast<std::size_t>(v)]; }
    std::uint64_t in_mask(int v) const { return in_[static_cast<std::size_t>(v)]; }

    int out_degree(int v) const;
    int in_degree(int v) const;
    // d+(v) + d-(v); a 2-cycle contributes 2.
    int total_degree(int v) const { return out_degree(v) + in_degree(v); }
    int max_total_degree() const;

    std::int64_t arc_count() const;
    std::int64_t single_pairs() const;  // f1
    std::int64_t double_pairs() const;  // f2

    std::vector<Arc> arcs() const;
    Digraph relabelled(std::span<const int> perm) const;  // vertex v becomes perm[v]
    Digraph induced(std::span<const int> vertices) const;
    Digraph underlying_oriented() const;  // one arc u->v (u<v) per adjacent pair

    friend bool operator==(const Digraph&, const Digraph&) = default;
    friend bool operator<(const Digraph& a, const Digraph& b);

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> out_;
    std::vector<std::uint64_t> in_;
};

bool is_legal(const Digraph& g, GraphKind kind);

WeightedValue weighted_size(const Digraph& g, const WeightParam& w);

Digraph empty_digraph(int n);
Digraph transitive_tournament(int k);
Digraph directed_cycle(int k);
Digraph complete_digraph(int k);  // all k(k-1) arcs
Digraph blow_up(const Digraph& h, int t);

// Balanced part sizes for r classes, larger parts first.
std::vector<int> turan_part_sizes(int n, int r);
// Complete balanced r-partite digraph; part 0 holds the smallest labels.
Digraph turan_graph_digraph(int n, int r);
std::int64_t turan_number(int n, int r);

// `D <n> <hex>`: n*n adjacency bits, row-major, MSB first, zero padded to a
// nibble boundary.
std::string to_hex_line(const Digraph& g);
Digraph parse_hex_line(std::string_view line);

}  // namespace tdl
