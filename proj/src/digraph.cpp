#include "tdl/digraph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace tdl {

std::string to_string(GraphKind kind)
{
    return kind == GraphKind::Oriented ? "oriented" : "digraph";
}

GraphKind parse_graph_kind(std::string_view text)
{
    if (text == "oriented")
        return GraphKind::Oriented;
    if (text == "digraph")
        return GraphKind::Digraph;
    throw std::invalid_argument("unknown graph kind '" + std::string(text) + "' (expected oriented|digraph)");
}

Digraph::Digraph(int n) : n_(n), words_((n + 63) / 64)
{
    if (n < 0)
        throw std::invalid_argument("digraph: negative vertex count");
    out_.assign(static_cast<std::size_t>(n) * words_, 0);
    in_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Digraph Digraph::from_arcs(int n, std::span<const Arc> arcs)
{
    Digraph g(n);
    for (auto [u, v] : arcs)
        g.add_arc(u, v);
    return g;
}

void Digraph::add_arc(int u, int v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("digraph: arc endpoint out of range");
    if (u == v)
        throw std::invalid_argument("digraph: loops are not allowed");
    out_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    in_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Digraph::remove_arc(int u, int v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("digraph: arc endpoint out of range");
    out_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    in_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

int Digraph::out_degree(int v) const
{
    int d = 0;
    for (auto w : out_row(v))
        d += std::popcount(w);
    return d;
}

int Digraph::in_degree(int v) const
{
    int d = 0;
    for (auto w : in_row(v))
        d += std::popcount(w);
    return d;
}

int Digraph::max_total_degree() const
{
    int best = 0;
    for (int v = 0; v < n_; ++v)
        best = std::max(best, total_degree(v));
    return best;
}

std::int64_t Digraph::arc_count() const
{
    std::int64_t e = 0;
    for (auto w : out_)
        e += std::popcount(w);
    return e;
}

std::int64_t Digraph::double_pairs() const
{
    std::int64_t both = 0;
    for (std::size_t i = 0; i < out_.size(); ++i)
        both += std::popcount(out_[i] & in_[i]);
    return both / 2;
}

std::int64_t Digraph::single_pairs() const
{
    return arc_count() - 2 * double_pairs();
}

std::vector<Arc> Digraph::arcs() const
{
    std::vector<Arc> out;
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (has_arc(u, v))
                out.emplace_back(u, v);
    return out;
}

Digraph Digraph::relabelled(std::span<const int> perm) const
{
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("relabelled: permutation size mismatch");
    Digraph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (has_arc(u, v))
                g.add_arc(perm[u], perm[v]);
    return g;
}

Digraph Digraph::induced(std::span<const int> vertices) const
{
    const int k = static_cast<int>(vertices.size());
    Digraph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && has_arc(vertices[i], vertices[j]))
                g.add_arc(i, j);
    return g;
}

Digraph Digraph::underlying_oriented() const
{
    Digraph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_arc(u, v) || has_arc(v, u))
                g.add_arc(u, v);
    return g;
}

bool operator<(const Digraph& a, const Digraph& b)
{
    if (a.n_ != b.n_)
        return a.n_ < b.n_;
    return a.out_ < b.out_;
}

bool is_legal(const Digraph& g, GraphKind kind)
{
    return kind == GraphKind::Digraph || g.double_pairs() == 0;
}

WeightedValue weighted_size(const Digraph& g, const WeightParam& w)
{
    return WeightedValue::of(w, g.double_pairs(), g.single_pairs());
}

Digraph empty_digraph(int n)
{
    return Digraph(n);
}

Digraph transitive_tournament(int k)
{
    if (k < 1)
        throw std::invalid_argument("transitive_tournament: k must be >= 1");
    Digraph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            g.add_arc(i, j);
    return g;
}

Digraph directed_cycle(int k)
{
    if (k < 2)
        throw std::invalid_argument("directed_cycle: k must be >= 2");
    Digraph g(k);
    for (int i = 0; i < k; ++i)
        g.add_arc(i, (i + 1) % k);
    return g;
}

Digraph complete_digraph(int k)
{
    Digraph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j)
                g.add_arc(i, j);
    return g;
}

Digraph blow_up(const Digraph& h, int t)
{
    if (t < 1)
        throw std::invalid_argument("blow_up: t must be >= 1");
    const int k = h.order();
    // Vertex (i, s) is labelled i*t + s.
    Digraph g(k * t);
    for (auto [i, j] : h.arcs())
        for (int s = 0; s < t; ++s)
            for (int s2 = 0; s2 < t; ++s2)
                g.add_arc(i * t + s, j * t + s2);
    return g;
}

std::vector<int> turan_part_sizes(int n, int r)
{
    if (r < 1)
        throw std::invalid_argument("turan: r must be >= 1");
    if (n < 0)
        throw std::invalid_argument("turan: n must be >= 0");
    std::vector<int> sizes(static_cast<std::size_t>(r), n / r);
    for (int i = 0; i < n % r; ++i)
        ++sizes[static_cast<std::size_t>(i)];
    return sizes;
}

Digraph turan_graph_digraph(int n, int r)
{
    const auto sizes = turan_part_sizes(n, r);
    std::vector<int> part(static_cast<std::size_t>(n));
    int v = 0;
    for (int i = 0; i < r; ++i)
        for (int s = 0; s < sizes[static_cast<std::size_t>(i)]; ++s)
            part[static_cast<std::size_t>(v++)] = i;
    Digraph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (part[a] != part[b])
                g.add_arc(a, b);
    return g;
}

std::int64_t turan_number(int n, int r)
{
    auto pairs = [](std::int64_t m) { return m * (m - 1) / 2; };
    std::int64_t t = pairs(n);
    for (int s : turan_part_sizes(n, r))
        t -= pairs(s);
    return t;
}

std::string to_hex_line(const Digraph& g)
{
    const int n = g.order();
    const std::int64_t bits = static_cast<std::int64_t>(n) * n;
    std::string hex;
    hex.reserve(static_cast<std::size_t>((bits + 3) / 4));
    static constexpr char digits[] = "0123456789abcdef";
    for (std::int64_t base = 0; base < bits; base += 4) {
        int nibble = 0;
        for (int k = 0; k < 4; ++k) {
            nibble <<= 1;
            const std::int64_t idx = base + k;
            if (idx < bits && g.has_arc(static_cast<int>(idx / n), static_cast<int>(idx % n)))
                nibble |= 1;
        }
        hex.push_back(digits[nibble]);
    }
    std::string out = "D " + std::to_string(n);
    if (!hex.empty())
        out += " " + hex;
    return out;
}

Digraph parse_hex_line(std::string_view line)
{
    std::istringstream in{std::string(line)};
    std::string tag, hex;
    long long n = -1;
    if (!(in >> tag) || tag != "D")
        throw std::invalid_argument("graph hex: expected leading 'D'");
    if (!(in >> n) || n < 0 || n > 4096)
        throw std::invalid_argument("graph hex: bad vertex count");
    in >> hex;
    std::string rest;
    if (in >> rest)
        throw std::invalid_argument("graph hex: trailing tokens");
    const std::int64_t bits = n * n;
    if (static_cast<std::int64_t>(hex.size()) != (bits + 3) / 4)
        throw std::invalid_argument("graph hex: expected " + std::to_string((bits + 3) / 4) + " hex digits, got " +
                                    std::to_string(hex.size()));
    Digraph g(static_cast<int>(n));
    for (std::size_t i = 0; i < hex.size(); ++i) {
        int nibble = 0;
        auto [ptr, ec] = std::from_chars(hex.data() + i, hex.data() + i + 1, nibble, 16);
        if (ec != std::errc{} || ptr != hex.data() + i + 1)
            throw std::invalid_argument("graph hex: invalid hex digit");
        for (int k = 0; k < 4; ++k) {
            if (!((nibble >> (3 - k)) & 1))
                continue;
            const std::int64_t idx = static_cast<std::int64_t>(i) * 4 + k;
            if (idx >= bits)
                throw std::invalid_argument("graph hex: nonzero padding bits");
            const int u = static_cast<int>(idx / n), v = static_cast<int>(idx % n);
            if (u == v)
                throw std::invalid_argument("graph hex: nonzero diagonal bit (loop)");
            g.add_arc(u, v);
        }
    }
    return g;
}

}  // namespace tdl
