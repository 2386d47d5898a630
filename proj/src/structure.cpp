#include "tdl/structure.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tdl/rng.hpp"

namespace tdl {

RPartition::RPartition(int r, std::vector<int> assignment) : r_(r), assignment_(std::move(assignment))
{
    if (r < 1)
        throw std::invalid_argument("partition: r must be >= 1");
    classes_.resize(static_cast<std::size_t>(r));
    for (std::size_t v = 0; v < assignment_.size(); ++v) {
        const int c = assignment_[v];
        if (c < 0 || c >= r)
            throw std::invalid_argument("partition: class index out of range at vertex " + std::to_string(v));
        classes_[static_cast<std::size_t>(c)].push_back(static_cast<int>(v));
    }
}

RPartition RPartition::from_assignment(int r, std::vector<int> assignment)
{
    return RPartition(r, std::move(assignment));
}

RPartition RPartition::from_classes(int n, std::vector<std::vector<int>> classes)
{
    std::vector<int> assignment(static_cast<std::size_t>(n), -1);
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (int v : classes[c]) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("partition: vertex out of range");
            if (assignment[static_cast<std::size_t>(v)] != -1)
                throw std::invalid_argument("partition: classes overlap at vertex " + std::to_string(v));
            assignment[static_cast<std::size_t>(v)] = static_cast<int>(c);
        }
    for (int v = 0; v < n; ++v)
        if (assignment[static_cast<std::size_t>(v)] == -1)
            throw std::invalid_argument("partition: vertex " + std::to_string(v) + " not covered");
    return RPartition(static_cast<int>(classes.size()), std::move(assignment));
}

RPartition RPartition::turan(int n, int r)
{
    std::vector<int> assignment;
    const auto sizes = turan_part_sizes(n, r);
    for (int c = 0; c < r; ++c)
        assignment.insert(assignment.end(), static_cast<std::size_t>(sizes[static_cast<std::size_t>(c)]), c);
    return RPartition(r, std::move(assignment));
}

namespace {

void require_cover(const Digraph& g, const RPartition& q)
{
    if (q.order() != g.order())
        throw std::invalid_argument("partition covers " + std::to_string(q.order()) + " vertices but graph has " +
                                    std::to_string(g.order()));
}

// Number of RGS assignments of n vertices into at most r classes, saturating.
std::uint64_t assignment_count(int n, int r)
{
    constexpr std::uint64_t cap = std::uint64_t{1} << 62;
    // s[k] = Stirling numbers S(m, k) for the current m.
    std::vector<std::uint64_t> s(static_cast<std::size_t>(r) + 1, 0);
    s[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = std::min(m, r); k >= 1; --k) {
            const auto kk = static_cast<std::size_t>(k);
            const std::uint64_t grown = s[kk] > cap / static_cast<std::uint64_t>(k) ? cap : s[kk] * k;
            s[kk] = std::min(cap, grown + s[kk - 1]);
            if (k == 1)
                s[0] = 0;
        }
    std::uint64_t total = 0;
    for (int k = 0; k <= r; ++k)
        total = std::min(cap, total + s[static_cast<std::size_t>(k)]);
    return n == 0 ? 1 : total;
}

// Arcs between v and the members of `members` (both directions).
int links(const Digraph& g, int v, const std::vector<int>& members)
{
    int count = 0;
    for (int u : members)
        count += g.has_arc(v, u) + g.has_arc(u, v);
    return count;
}

// Calls visit(assignment, non_crossing) for every restricted-growth
// assignment into <= r classes, in lexicographic order. visit returns the
// current pruning threshold: branches whose running count reaches it are cut.
template <typename Visit>
void for_each_rgs(const Digraph& g, int r, Budget& budget, Visit&& visit)
{
    const int n = g.order();
    std::vector<int> assignment(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> members(static_cast<std::size_t>(r));
    std::int64_t threshold = std::numeric_limits<std::int64_t>::max();
    auto recurse = [&](auto&& self, int v, int used, std::int64_t nc) -> void {
        budget.tick("partition");
        if (nc >= threshold)
            return;
        if (v == n) {
            threshold = visit(assignment, nc);
            return;
        }
        const int top = std::min(used, r - 1);
        for (int c = 0; c <= top; ++c) {
            auto& cls = members[static_cast<std::size_t>(c)];
            const std::int64_t add = links(g, v, cls);
            assignment[static_cast<std::size_t>(v)] = c;
            cls.push_back(v);
            self(self, v + 1, std::max(used, c + 1), nc + add);
            cls.pop_back();
        }
    };
    recurse(recurse, 0, 0, 0);
}

void check_assignment_budget(int n, int r, const PartitionOptions& options)
{
    const auto count = assignment_count(n, r);
    if (count > options.max_assignments)
        throw BudgetExceeded("partition: " + std::to_string(count) + " canonical assignments for n = " +
                             std::to_string(n) + ", r = " + std::to_string(r) + " exceed the limit of " +
                             std::to_string(options.max_assignments) + "; use local search");
}

}  // namespace

std::int64_t non_crossing_count(const Digraph& g, const RPartition& q)
{
    require_cover(g, q);
    std::int64_t count = 0;
    for (auto [u, v] : g.arcs())
        count += q.class_of(u) == q.class_of(v);
    return count;
}

std::int64_t crossing_count(const Digraph& g, const RPartition& q)
{
    return g.arc_count() - non_crossing_count(g, q);
}

std::int64_t crossing_deficit(const Digraph& g, const RPartition& q)
{
    require_cover(g, q);
    std::int64_t missing = 0;
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (q.class_of(u) != q.class_of(v) && !g.has_arc(u, v))
                ++missing;
    return missing;
}

std::int64_t edit_distance(const Digraph& g, const RPartition& q)
{
    return non_crossing_count(g, q) + crossing_deficit(g, q);
}

PartitionReport make_report(const Digraph& g, const RPartition& q, bool is_optimal)
{
    PartitionReport report{q, non_crossing_count(g, q), is_optimal, crossing_deficit(g, q), 0};
    report.edit_distance_to_dtr = report.non_crossing_arcs + report.f2_deficit;
    return report;
}

PartitionReport optimal_partition(const Digraph& g, int r, PartitionMode mode, PartitionOptions options)
{
    if (r < 1)
        throw std::invalid_argument("partition: r must be >= 1");
    const int n = g.order();

    if (mode == PartitionMode::Exact) {
        check_assignment_budget(n, r, options);
        std::vector<int> best;
        std::int64_t best_nc = std::numeric_limits<std::int64_t>::max();
        for_each_rgs(g, r, options.budget, [&](const std::vector<int>& assignment, std::int64_t nc) {
            if (nc < best_nc) {
                best_nc = nc;
                best = assignment;
            }
            // Later assignments are lexicographically larger, so ties lose.
            return best_nc;
        });
        return make_report(g, RPartition::from_assignment(r, best), true);
    }

    CounterRng rng(options.seed);
    std::vector<int> best;
    std::int64_t best_nc = std::numeric_limits<std::int64_t>::max();
    std::vector<int> assignment(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> toward(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(r)));
    for (int restart = 0; restart < std::max(1, options.restarts); ++restart) {
        for (auto& c : assignment)
            c = static_cast<int>(rng.below(static_cast<std::uint64_t>(r)));
        // toward[v][c]: arcs between v and class c.
        for (auto& row : toward)
            std::fill(row.begin(), row.end(), 0);
        for (auto [u, v] : g.arcs()) {
            ++toward[static_cast<std::size_t>(u)][static_cast<std::size_t>(assignment[static_cast<std::size_t>(v)])];
            ++toward[static_cast<std::size_t>(v)][static_cast<std::size_t>(assignment[static_cast<std::size_t>(u)])];
        }
        for (;;) {
            options.budget.tick("partition");
            int best_gain = 0, move_v = -1, move_c = -1;
            for (int v = 0; v < n; ++v) {
                const auto& row = toward[static_cast<std::size_t>(v)];
                const int here = row[static_cast<std::size_t>(assignment[static_cast<std::size_t>(v)])];
                for (int c = 0; c < r; ++c) {
                    const int gain = here - row[static_cast<std::size_t>(c)];
                    if (gain > best_gain) {
                        best_gain = gain;
                        move_v = v;
                        move_c = c;
                    }
                }
            }
            if (move_v < 0)
                break;
            const int from = assignment[static_cast<std::size_t>(move_v)];
            for (int w = 0; w < n; ++w) {
                const int k = g.has_arc(move_v, w) + g.has_arc(w, move_v);
                if (k == 0)
                    continue;
                toward[static_cast<std::size_t>(w)][static_cast<std::size_t>(from)] -= k;
                toward[static_cast<std::size_t>(w)][static_cast<std::size_t>(move_c)] += k;
            }
            assignment[static_cast<std::size_t>(move_v)] = move_c;
        }
        const auto q = RPartition::from_assignment(r, assignment);
        const auto nc = non_crossing_count(g, q);
        if (nc < best_nc) {
            best_nc = nc;
            best = assignment;
        }
    }
    const auto q = RPartition::from_assignment(r, best);
    return make_report(g, q, best_nc == 0);
}

TuranDistance distance_to_turan(const Digraph& g, int r, PartitionOptions options)
{
    const int n = g.order();
    check_assignment_budget(n, r, options);
    auto target = turan_part_sizes(n, r);
    target.erase(std::remove(target.begin(), target.end(), 0), target.end());
    std::sort(target.begin(), target.end());

    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::vector<int> best_assignment;
    std::vector<int> sizes;
    for_each_rgs(g, r, options.budget, [&](const std::vector<int>& assignment, std::int64_t) {
        sizes.assign(static_cast<std::size_t>(r), 0);
        for (int c : assignment)
            ++sizes[static_cast<std::size_t>(c)];
        sizes.erase(std::remove(sizes.begin(), sizes.end(), 0), sizes.end());
        std::sort(sizes.begin(), sizes.end());
        if (sizes == target) {
            const auto d = edit_distance(g, RPartition::from_assignment(r, assignment));
            if (d < best) {
                best = d;
                best_assignment = assignment;
            }
        }
        return std::numeric_limits<std::int64_t>::max();
    });
    return {best, RPartition::from_assignment(r, best_assignment)};
}

PairDensities pair_densities(const Digraph& g, const std::vector<int>& a_set, const std::vector<int>& b_set,
                             const WeightParam& a)
{
    if (a_set.empty() || b_set.empty())
        throw std::invalid_argument("pair_densities: vertex sets must be nonempty");
    std::vector<char> in_a(static_cast<std::size_t>(g.order()), 0);
    for (int v : a_set) {
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("pair_densities: vertex out of range");
        in_a[static_cast<std::size_t>(v)] = 1;
    }
    for (int v : b_set) {
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("pair_densities: vertex out of range");
        if (in_a[static_cast<std::size_t>(v)])
            throw std::invalid_argument("pair_densities: sets overlap at vertex " + std::to_string(v));
    }
    std::int64_t both = 0, fwd = 0, back = 0;
    for (int u : a_set)
        for (int v : b_set) {
            const bool uv = g.has_arc(u, v), vu = g.has_arc(v, u);
            both += uv && vu;
            fwd += uv && !vu;
            back += vu && !uv;
        }
    const auto total = static_cast<std::int64_t>(a_set.size() * b_set.size());
    PairDensities d{Rational(both, total), Rational(fwd, total), Rational(back, total), {}, {}};
    auto weight = [&](const Rational& single) {
        WeightedValue w;
        if (a.exact())
            w.exact = *a.exact() * d.d2 + single;
        w.approx = a.value() * boost::rational_cast<double>(d.d2) + boost::rational_cast<double>(single);
        return w;
    };
    d.w_ab = weight(d.d1_ab);
    d.w_ba = weight(d.d1_ba);
    return d;
}

namespace {

std::int64_t arcs_between(const Digraph& g, const std::vector<int>& from, const std::vector<int>& to)
{
    std::int64_t count = 0;
    for (int u : from)
        for (int v : to)
            count += g.has_arc(u, v);
    return count;
}

std::vector<int> pick(const std::vector<int>& members, std::uint32_t mask)
{
    std::vector<int> out;
    for (std::size_t k = 0; k < members.size(); ++k)
        if ((mask >> k) & 1U)
            out.push_back(members[k]);
    return out;
}

}  // namespace

FConditions f_conditions_check(const Digraph& g, const RPartition& q, double eta, double mu,
                               FConditionOptions options)
{
    require_cover(g, q);
    const int n = g.order();
    const int r = q.r();
    FConditions out;
    out.non_crossing = non_crossing_count(g, q);
    out.f1 = static_cast<double>(out.non_crossing) <= eta * n * n + 1e-12;

    for (int c = 0; c < r; ++c) {
        const auto size = static_cast<double>(q.classes()[static_cast<std::size_t>(c)].size());
        if (std::abs(size - static_cast<double>(n) / r) > mu * n + 1e-12)
            out.f3_violations.push_back(c);
    }
    out.f3 = out.f3_violations.empty();

    const auto min_size = static_cast<std::size_t>(std::max(1.0, std::ceil(mu * n - 1e-12)));
    auto sparse = [](std::int64_t arcs, std::size_t a, std::size_t b) {
        return 6 * arcs < static_cast<std::int64_t>(a * b);
    };
    auto record = [&](int i, int j, std::vector<int> ui, std::vector<int> uj, std::int64_t arcs) {
        out.f2_witness = F2Violation{i, j, std::move(ui), std::move(uj), arcs};
    };

    out.f2_exhaustive = n <= options.exhaustive_max_n;
    CounterRng rng(options.seed);
    for (int i = 0; i < r && !out.f2_witness; ++i) {
        for (int j = i + 1; j < r && !out.f2_witness; ++j) {
            const auto& vi = q.classes()[static_cast<std::size_t>(i)];
            const auto& vj = q.classes()[static_cast<std::size_t>(j)];
            if (vi.size() < min_size || vj.size() < min_size)
                continue;
            auto test = [&](const std::vector<int>& ui, const std::vector<int>& uj) {
                ++out.f2_subset_pairs;
                if (auto e = arcs_between(g, ui, uj); sparse(e, ui.size(), uj.size())) {
                    record(i, j, ui, uj, e);
                    return true;
                }
                if (auto e = arcs_between(g, uj, ui); sparse(e, ui.size(), uj.size())) {
                    record(j, i, uj, ui, e);
                    return true;
                }
                return false;
            };
            if (out.f2_exhaustive) {
                // Masks count down from the full classes, so larger subsets come first.
                const std::uint32_t full_i = (std::uint32_t{1} << vi.size()) - 1;
                const std::uint32_t full_j = (std::uint32_t{1} << vj.size()) - 1;
                bool done = false;
                for (std::uint32_t mi = full_i; mi > 0 && !done; --mi) {
                    if (static_cast<std::size_t>(std::popcount(mi)) < min_size)
                        continue;
                    const auto ui = pick(vi, mi);
                    for (std::uint32_t mj = full_j; mj > 0 && !done; --mj) {
                        if (static_cast<std::size_t>(std::popcount(mj)) < min_size)
                            continue;
                        done = test(ui, pick(vj, mj));
                    }
                }
            } else {
                auto sample = [&](const std::vector<int>& members) {
                    const std::size_t size = min_size + rng.below(members.size() - min_size + 1);
                    std::vector<int> pool = members;
                    for (std::size_t k = 0; k < size; ++k)
                        std::swap(pool[k], pool[k + rng.below(pool.size() - k)]);
                    pool.resize(size);
                    std::sort(pool.begin(), pool.end());
                    return pool;
                };
                for (std::uint64_t s = 0; s < options.samples_per_pair; ++s)
                    if (test(sample(vi), sample(vj)))
                        break;
            }
        }
    }
    out.f2 = !out.f2_witness.has_value();
    return out;
}

std::vector<int> internal_degree_profile(const Digraph& g, const RPartition& q)
{
    require_cover(g, q);
    std::vector<int> profile(static_cast<std::size_t>(g.order()), 0);
    for (int x = 0; x < g.order(); ++x)
        profile[static_cast<std::size_t>(x)] = links(g, x, q.classes()[static_cast<std::size_t>(q.class_of(x))]);
    return profile;
}

}  // namespace tdl
