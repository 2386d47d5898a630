#include "tdl/extremal.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "tdl/canonical.hpp"

namespace tdl {

namespace {

struct Score {
    std::int64_t f2 = 0;
    std::int64_t f1 = 0;
};

class BranchAndBound {
public:
    BranchAndBound(int n, const Pattern& h, const WeightParam& a, GraphKind kind, Budget& budget)
        : n_(n), searcher_(h.graph), weight_(a), kind_(kind), budget_(budget), graph_(n)
    {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                pairs_.emplace_back(i, j);
        if (kind == GraphKind::Digraph)
            states_ = {3, 1, 2, 0};
        else
            states_ = {1, 2, 0};
    }

    void run() { descend(0, Score{}); }

    Score best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }
    std::uint64_t labelled() const { return labelled_; }
    std::map<std::string, Digraph>& witnesses() { return witnesses_; }

private:
    // Best case for the pairs from k on: a 2-cycle each (digraphs) or one arc.
    Score bound(const Score& s, std::size_t k) const
    {
        const auto rest = static_cast<std::int64_t>(pairs_.size() - k);
        if (kind_ == GraphKind::Digraph)
            return {s.f2 + rest, s.f1};
        return {s.f2, s.f1 + rest};
    }

    bool insert(int u, int v)
    {
        graph_.add_arc(u, v);
        return !searcher_.contains_through_arc(graph_, u, v);
    }

    void descend(std::size_t k, Score s)
    {
        ++nodes_;
        budget_.tick("extremal");
        if (have_best_) {
            const Score ub = bound(s, k);
            if (weight_.compare(ub.f2, ub.f1, best_.f2, best_.f1) < 0)
                return;
        }
        if (k == pairs_.size()) {
            leaf(s);
            return;
        }
        const auto [u, v] = pairs_[k];
        for (int state : states_) {
            bool ok = true;
            Score next = s;
            if (state == 1 || state == 3)
                ok = insert(u, v);
            if (ok && (state == 2 || state == 3))
                ok = insert(v, u);
            if (state == 3)
                ++next.f2;
            else if (state != 0)
                ++next.f1;
            if (ok)
                descend(k + 1, next);
            graph_.remove_arc(u, v);
            graph_.remove_arc(v, u);
        }
    }

    void leaf(const Score& s)
    {
        const int cmp = have_best_ ? weight_.compare(s.f2, s.f1, best_.f2, best_.f1) : 1;
        if (cmp < 0)
            return;
        if (cmp > 0) {
            best_ = s;
            have_best_ = true;
            witnesses_.clear();
            labelled_ = 0;
        }
        ++labelled_;
        auto form = canonical_form(graph_);
        witnesses_.try_emplace(to_hex_line(form.graph), std::move(form.graph));
    }

    int n_;
    EmbeddingSearcher searcher_;
    WeightParam weight_;
    GraphKind kind_;
    Budget& budget_;
    Digraph graph_;
    std::vector<Arc> pairs_;
    std::vector<int> states_;
    Score best_;
    bool have_best_ = false;
    std::uint64_t nodes_ = 0;
    std::uint64_t labelled_ = 0;
    std::map<std::string, Digraph> witnesses_;
};

}  // namespace

ExtremalCertificate exact_extremal(int n, const Pattern& h, const WeightParam& a, GraphKind kind,
                                   ExtremalOptions options)
{
    if (n < 0)
        throw std::invalid_argument("extremal: n must be >= 0");
    const int limit = kind == GraphKind::Digraph ? options.max_n_digraph : options.max_n_oriented;
    if (n > limit)
        throw BudgetExceeded("extremal: n = " + std::to_string(n) + " exceeds the exhaustive limit for " +
                             to_string(kind) + " mode; largest feasible n is " + std::to_string(limit));
    if (h.graph.arc_count() == 0 && h.graph.order() <= n)
        throw std::invalid_argument("extremal: an arcless pattern on at most n vertices embeds in every graph");

    BranchAndBound search(n, h, a, kind, options.budget);
    search.run();

    ExtremalCertificate cert;
    cert.n = n;
    cert.pattern = h;
    cert.weight = a;
    cert.kind = kind;
    cert.value = WeightedValue::of(a, search.best().f2, search.best().f1);
    cert.labelled_maximizers = search.labelled();
    cert.nodes = search.nodes();
    for (auto& [key, g] : search.witnesses())
        cert.witnesses.push_back(std::move(g));
    return cert;
}

LowerBound lower_bound_construction(int n, int r, const WeightParam& a)
{
    return {turan_graph_digraph(n, r), WeightedValue::of(a, turan_number(n, r), 0)};
}

WeightedValue difference(const WeightedValue& lhs, const WeightedValue& rhs)
{
    WeightedValue out;
    if (lhs.exact && rhs.exact)
        out.exact = *lhs.exact - *rhs.exact;
    out.approx = lhs.approx - rhs.approx;
    return out;
}

std::vector<GapRow> extremal_gap_scan(int n_min, int n_max, const Pattern& h, int r, const WeightParam& a,
                                      GraphKind kind, ExtremalOptions options)
{
    std::vector<GapRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        auto cert = exact_extremal(n, h, a, kind, options);
        GapRow row;
        row.n = n;
        row.extremal = cert.value;
        row.lower = lower_bound_construction(n, r, a).value;
        row.gap = difference(row.extremal, row.lower);
        row.witness_count = cert.witnesses.size();
        rows.push_back(row);
    }
    return rows;
}

}  // namespace tdl
