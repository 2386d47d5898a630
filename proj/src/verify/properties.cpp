#include "tdl/verify/properties.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "tdl/canonical.hpp"
#include "tdl/census.hpp"
#include "tdl/extremal.hpp"
#include "tdl/rng.hpp"
#include "tdl/sampler.hpp"
#include "tdl/structure.hpp"
#include "tdl/verify/naive.hpp"

namespace tdl::verify {

namespace {

// Collects the first failure of a check; later failures only bump the count.
class Probe {
public:
    void expect(bool ok, const std::function<std::string()>& why)
    {
        ++trials_;
        if (ok)
            return;
        if (failures_++ == 0)
            first_ = why();
    }

    bool pass() const { return failures_ == 0; }

    std::string detail() const
    {
        std::ostringstream os;
        os << trials_ << " checks";
        if (failures_ > 0)
            os << ", " << failures_ << " failed; first: " << first_;
        return os.str();
    }

private:
    std::uint64_t trials_ = 0;
    std::uint64_t failures_ = 0;
    std::string first_;
};

class Runner {
public:
    Runner(const CheckSink& sink) : sink_(sink) {}

    void run(const std::string& suite, const std::string& name, const std::function<void(Probe&)>& body)
    {
        const auto start = std::chrono::steady_clock::now();
        CheckResult result{suite, name, false, "", 0};
        try {
            Probe probe;
            body(probe);
            result.pass = probe.pass();
            result.detail = probe.detail();
        } catch (const std::exception& e) {
            result.detail = std::string("exception: ") + e.what();
        }
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (sink_)
            sink_(result);
        results_.push_back(std::move(result));
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    const CheckSink& sink_;
    std::vector<CheckResult> results_;
};

Digraph random_graph(int n, double p, GraphKind kind, CounterRng& rng)
{
    Digraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const bool forward = rng.uniform() < p;
            const bool backward = rng.uniform() < p;
            if (kind == GraphKind::Oriented && forward && backward) {
                rng.below(2) == 0 ? g.add_arc(u, v) : g.add_arc(v, u);
                continue;
            }
            if (forward)
                g.add_arc(u, v);
            if (backward)
                g.add_arc(v, u);
        }
    return g;
}

Digraph random_graph(int n, double p, CounterRng& rng)
{
    return random_graph(n, p, GraphKind::Digraph, rng);
}

std::string hex(const Digraph& g)
{
    return to_hex_line(g);
}

std::vector<std::uint64_t> state_counts(const std::vector<Digraph>& samples, int n, GraphKind kind, const Digraph& h)
{
    std::map<Digraph, std::uint64_t> seen;
    naive::for_each_graph(n, kind, [&](const Digraph& g) {
        if (!naive::contains(g, h))
            seen[g] = 0;
    });
    for (const auto& g : samples) {
        auto it = seen.find(g);
        if (it == seen.end())
            throw std::runtime_error("sample outside the H-free state space: " + to_hex_line(g));
        ++it->second;
    }
    std::vector<std::uint64_t> counts;
    for (const auto& [g, c] : seen)
        counts.push_back(c);
    return counts;
}

void digraph_suite(Runner& run)
{
    const std::string s = "digraph";
    run.run(s, "arc accounting and weighted size at a = 1, 2", [](Probe& p) {
        CounterRng rng(101);
        for (int trial = 0; trial < 500; ++trial) {
            const int n = 1 + static_cast<int>(rng.below(14));
            const auto g = random_graph(n, rng.uniform(), rng);
            const auto e = g.arc_count();
            std::int64_t adjacent = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    adjacent += g.has_arc(u, v) || g.has_arc(v, u);
            p.expect(e == g.single_pairs() + 2 * g.double_pairs(), [&] { return "e != f1 + 2 f2 for " + hex(g); });
            p.expect(*weighted_size(g, WeightParam::rational(2)).exact == Rational(e),
                     [&] { return "e_2 != e for " + hex(g); });
            p.expect(*weighted_size(g, WeightParam::rational(1)).exact == Rational(adjacent),
                     [&] { return "e_1 != adjacent pairs for " + hex(g); });
        }
    });
    run.run(s, "hex round trip", [](Probe& p) {
        CounterRng rng(102);
        for (int trial = 0; trial < 300; ++trial) {
            const int n = trial < 290 ? static_cast<int>(rng.below(20)) : 60 + static_cast<int>(rng.below(90));
            const auto g = random_graph(n, rng.uniform(), rng);
            p.expect(parse_hex_line(to_hex_line(g)) == g, [&] { return "round trip failed for " + hex(g); });
        }
    });
    run.run(s, "blow-up by 1 and composition of blow-ups", [](Probe& p) {
        CounterRng rng(103);
        for (int trial = 0; trial < 60; ++trial) {
            const int n = 1 + static_cast<int>(rng.below(4));
            const auto h = random_graph(n, 0.5, rng);
            p.expect(are_isomorphic(blow_up(h, 1), h), [&] { return "blow_up(H,1) not ~ H for " + hex(h); });
            const int a = 1 + static_cast<int>(rng.below(2)), b = 1 + static_cast<int>(rng.below(3));
            p.expect(are_isomorphic(blow_up(blow_up(h, a), b), blow_up(h, a * b)),
                     [&] { return "blow-up composition fails for " + hex(h); });
        }
    });
    run.run(s, "Turan digraph avoids T_{r+1} and has weight a t_r(n)", [](Probe& p) {
        const std::vector<WeightParam> weights{WeightParam::rational(2), WeightParam::rational(3, 2),
                                               WeightParam::rational(1), WeightParam::rational(7, 3)};
        for (int r = 1; r <= 4; ++r)
            for (int n = 1; n <= 10; ++n) {
                const auto g = turan_graph_digraph(n, r);
                p.expect(!find_embedding(g, transitive_tournament(r + 1)),
                         [&] { return "DT_" + std::to_string(r) + "(" + std::to_string(n) + ") contains T_r+1"; });
                for (const auto& a : weights)
                    p.expect(*weighted_size(g, a).exact == *a.exact() * turan_number(n, r),
                             [&] { return "weight mismatch at n=" + std::to_string(n); });
            }
    });
}

void containment_suite(Runner& run, int threads)
{
    const std::string s = "containment";
    const std::vector<Digraph> patterns{transitive_tournament(3), transitive_tournament(4),
                                        blow_up(transitive_tournament(3), 2)};
    run.run(s, "find_embedding present iff count_copies > 0", [&](Probe& p) {
        CounterRng rng(201);
        for (int trial = 0; trial < 600; ++trial) {
            const int n = 1 + static_cast<int>(rng.below(6));
            const auto g = random_graph(n, 0.3 + 0.7 * rng.uniform(), rng);
            const auto& h = patterns[rng.below(patterns.size())];
            p.expect(find_embedding(g, h).has_value() == (count_copies(g, h, threads) > 0),
                     [&] { return "disagreement on " + hex(g); });
        }
    });
    run.run(s, "containment is monotone under adding arcs", [&](Probe& p) {
        CounterRng rng(202);
        for (int trial = 0; trial < 400; ++trial) {
            const int n = 3 + static_cast<int>(rng.below(5));
            const auto g = random_graph(n, 0.5, rng);
            const auto& h = patterns[rng.below(2)];
            if (!find_embedding(g, h))
                continue;
            auto bigger = g;
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (u != v && rng.uniform() < 0.3)
                        bigger.add_arc(u, v);
            p.expect(find_embedding(bigger, h).has_value(), [&] { return "lost copy in " + hex(bigger); });
        }
    });
    run.run(s, "blow-up containment transfer (r <= 3, t <= 2, v(R) <= 6)", [&](Probe& p) {
        CounterRng rng(203);
        for (int trial = 0; trial < 600; ++trial) {
            const int r = 1 + static_cast<int>(rng.below(3));
            const int t = 1 + static_cast<int>(rng.below(2));
            const int n = r + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(6 - r)));
            const auto g = random_graph(n, 0.4 + 0.6 * rng.uniform(), rng);
            if (!find_embedding(g, transitive_tournament(r + 1)))
                continue;
            p.expect(find_embedding(blow_up(g, t), blow_up_pattern(r, t).graph).has_value(),
                     [&] { return "blow-up of " + hex(g) + " misses T_r+1^t"; });
        }
    });
    run.run(s, "greedy cleaner output is H-free", [&](Probe& p) {
        CounterRng rng(204);
        for (int trial = 0; trial < 150; ++trial) {
            const int n = 3 + static_cast<int>(rng.below(6));
            const auto g = random_graph(n, 0.6 + 0.4 * rng.uniform(), rng);
            const auto& h = patterns[rng.below(patterns.size())];
            const auto cleaned = greedy_make_h_free(g, h);
            p.expect(!find_embedding(cleaned.graph, h), [&] { return "cleaned graph still contains H: " + hex(g); });
        }
    });
    run.run(s, "copy counts match all-injection oracle (v(H) <= 4, v(G) <= 6)", [&](Probe& p) {
        CounterRng rng(205);
        const std::vector<Digraph> small{transitive_tournament(3), transitive_tournament(4), directed_cycle(3),
                                         directed_cycle(4), complete_digraph(2), complete_digraph(3)};
        for (int trial = 0; trial < 400; ++trial) {
            const int n = 1 + static_cast<int>(rng.below(6));
            const auto g = random_graph(n, rng.uniform(), rng);
            const auto& h = small[rng.below(small.size())];
            p.expect(count_copies(g, h, threads) == naive::count_maps(g, h),
                     [&] { return "count mismatch on " + hex(g); });
        }
    });
}

void extremal_suite(Runner& run)
{
    const std::string s = "extremal";
    const Pattern t3 = blow_up_pattern(2, 1);
    const std::vector<WeightParam> weights{WeightParam::rational(2), WeightParam::rational(3, 2),
                                           WeightParam::log2_3()};
    run.run(s, "witnesses are H-free with the certified value", [&](Probe& p) {
        for (const auto& pattern : {t3, blow_up_pattern(2, 2)})
            for (auto kind : {GraphKind::Digraph, GraphKind::Oriented})
                for (const auto& a : weights)
                    for (int n = 3; n <= 5; ++n) {
                        const auto cert = exact_extremal(n, pattern, a, kind);
                        for (const auto& w : cert.witnesses) {
                            p.expect(!find_embedding(w, pattern.graph), [&] { return "witness contains H: " + hex(w); });
                            p.expect(is_legal(w, kind), [&] { return "illegal witness " + hex(w); });
                            const auto v = weighted_size(w, a);
                            p.expect(a.is_exact() ? *v.exact == *cert.value.exact
                                                  : std::abs(v.approx - cert.value.approx) < 1e-9,
                                     [&] { return "witness weight differs: " + hex(w); });
                        }
                    }
    });
    run.run(s, "value at least a t_r(n), monotone in n, digraph >= oriented", [&](Probe& p) {
        for (const auto& a : weights)
            for (int r : {1, 2}) {
                const auto pattern = blow_up_pattern(r, 1);
                double previous_d = 0;
                for (int n = 1; n <= 6; ++n) {
                    const auto d = exact_extremal(n, pattern, a, GraphKind::Digraph);
                    const auto o = exact_extremal(n, pattern, a, GraphKind::Oriented);
                    const auto lower = lower_bound_construction(n, r, a);
                    p.expect(!find_embedding(lower.graph, pattern.graph), [&] { return "DT_r(n) contains H"; });
                    p.expect(d.value.approx >= lower.value.approx - 1e-9,
                             [&] { return "below a t_r(n) at n=" + std::to_string(n); });
                    p.expect(d.value.approx >= previous_d - 1e-9,
                             [&] { return "not monotone at n=" + std::to_string(n); });
                    p.expect(d.value.approx >= o.value.approx - 1e-9,
                             [&] { return "oriented beats digraph at n=" + std::to_string(n); });
                    previous_d = d.value.approx;
                }
            }
    });
    run.run(s, "agrees with naive enumeration for n <= 4", [&](Probe& p) {
        const std::vector<Digraph> patterns{transitive_tournament(3), directed_cycle(3), complete_digraph(2),
                                            transitive_tournament(4)};
        for (const auto& h : patterns)
            for (auto kind : {GraphKind::Digraph, GraphKind::Oriented})
                for (const auto& a : weights)
                    for (int n = 1; n <= 4; ++n) {
                        const auto cert = exact_extremal(n, pattern_stats(h), a, kind);
                        const auto oracle = naive::extremal(n, h, a, kind);
                        const auto expected = WeightedValue::of(a, oracle.best_f2, oracle.best_f1);
                        p.expect(a.is_exact() ? *cert.value.exact == *expected.exact
                                              : std::abs(cert.value.approx - expected.approx) < 1e-9,
                                 [&] { return "value mismatch for " + hex(h) + " n=" + std::to_string(n); });
                        p.expect(cert.labelled_maximizers == oracle.maximizers.size(),
                                 [&] { return "maximiser count mismatch for " + hex(h); });
                    }
    });
}

void structure_suite(Runner& run, int threads)
{
    const std::string s = "structure";
    run.run(s, "edits reach the complete r-partite digraph", [](Probe& p) {
        CounterRng rng(401);
        for (int trial = 0; trial < 300; ++trial) {
            const int n = 1 + static_cast<int>(rng.below(10));
            const int r = 1 + static_cast<int>(rng.below(4));
            const auto g = random_graph(n, rng.uniform(), rng);
            std::vector<int> assign(static_cast<std::size_t>(n));
            for (auto& c : assign)
                c = static_cast<int>(rng.below(static_cast<std::uint64_t>(r)));
            const auto q = RPartition::from_assignment(r, assign);
            const auto report = make_report(g, q, false);
            Digraph edited(n);
            std::int64_t changes = 0;
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    if (u == v)
                        continue;
                    const bool want = q.class_of(u) != q.class_of(v);
                    if (want)
                        edited.add_arc(u, v);
                    changes += want != g.has_arc(u, v);
                }
            p.expect(changes == report.edit_distance_to_dtr, [&] { return "edit count mismatch on " + hex(g); });
            p.expect(non_crossing_count(edited, q) == 0, [&] { return "edited graph has non-crossing arcs"; });
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) {
                    const auto& a = q.classes()[static_cast<std::size_t>(i)];
                    const auto& b = q.classes()[static_cast<std::size_t>(j)];
                    if (i != j && !a.empty() && !b.empty())
                        p.expect(pair_densities(edited, a, b, WeightParam::rational(2)).d2 == Rational(1),
                                 [&] { return "cross pair not complete"; });
                }
        }
    });
    run.run(s, "exact optimum is minimal and matches brute force", [](Probe& p) {
        CounterRng rng(402);
        for (int trial = 0; trial < 300; ++trial) {
            const int n = 1 + static_cast<int>(rng.below(8));
            const int r = 1 + static_cast<int>(rng.below(3));
            const auto g = random_graph(n, rng.uniform(), rng);
            const auto exact = optimal_partition(g, r, PartitionMode::Exact);
            std::vector<int> assign(static_cast<std::size_t>(n));
            for (auto& c : assign)
                c = static_cast<int>(rng.below(static_cast<std::uint64_t>(r)));
            const auto q = RPartition::from_assignment(r, assign);
            p.expect(exact.non_crossing_arcs <= non_crossing_count(g, q), [&] { return "not minimal on " + hex(g); });
            p.expect(non_crossing_count(g, q) + crossing_count(g, q) == g.arc_count(),
                     [&] { return "arc split mismatch on " + hex(g); });
            if (n <= 7)
                p.expect(exact.non_crossing_arcs == naive::min_non_crossing(g, r),
                         [&] { return "differs from brute force on " + hex(g); });
        }
    });
    run.run(s, "local search never beats exact (n <= 12, r = 2, 3)", [](Probe& p) {
        CounterRng rng(403);
        for (int trial = 0; trial < 80; ++trial) {
            const int n = 2 + static_cast<int>(rng.below(11));
            const int r = 2 + static_cast<int>(rng.below(2));
            const auto g = random_graph(n, rng.uniform(), rng);
            const auto exact = optimal_partition(g, r, PartitionMode::Exact);
            const auto local = optimal_partition(g, r, PartitionMode::LocalSearch);
            p.expect(local.non_crossing_arcs >= exact.non_crossing_arcs, [&] { return "local < exact on " + hex(g); });
        }
    });
    run.run(s, "pair weights sum to the unordered-pair contribution", [](Probe& p) {
        CounterRng rng(404);
        for (int trial = 0; trial < 300; ++trial) {
            const int n = 2 + static_cast<int>(rng.below(10));
            const auto g = random_graph(n, rng.uniform(), rng);
            const int cut = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
            std::vector<int> a, b;
            for (int v = 0; v < n; ++v)
                (v < cut ? a : b).push_back(v);
            const auto den = 1 + static_cast<std::int64_t>(rng.below(3));
            const auto w = WeightParam::rational(den + static_cast<std::int64_t>(rng.below(4)), den);
            const auto d = pair_densities(g, a, b, w);
            p.expect(*d.w_ab.exact + *d.w_ba.exact == 2 * *w.exact() * d.d2 + d.d1_ab + d.d1_ba,
                     [&] { return "weight identity fails on " + hex(g); });
        }
    });
    run.run(s, "stability: max distance nonincreasing as gamma decreases (n = 5)", [&](Probe& p) {
        StabilityOptions opts;
        opts.threads = threads;
        const auto a = WeightParam::rational(2);
        const auto rows = stability_sweep(5, 2, 1, a, 0.5, GraphKind::Digraph, opts);
        for (std::size_t i = 1; i < rows.size(); ++i)
            p.expect(rows[i - 1].max_distance <= rows[i].max_distance,
                     [&] { return "frontier rises at deficit " + rows[i - 1].deficit.to_string(); });
        // Independent sweeps at a few gammas agree with the cumulative rows.
        std::int64_t previous = -1;
        for (double gamma : {0.0, 0.04, 0.12, 0.2, 0.3, 0.5}) {
            const auto at = stability_sweep(5, 2, 1, a, gamma, GraphKind::Digraph, opts);
            const auto d = at.empty() ? 0 : at.back().max_distance;
            p.expect(d >= previous, [&] { return "max distance drops as gamma grows to " + std::to_string(gamma); });
            previous = d;
        }
    });
}

void census_suite(Runner& run, int threads)
{
    const std::string s = "census";
    CensusOptions opts;
    opts.threads = threads;
    const std::vector<double> alphas{0.0, 0.02, 0.05, 0.1, 0.2, 1.0};
    run.run(s, "t <= f, near-partite counts monotone and complete at alpha = 1, lower bound <= t", [&](Probe& p) {
        for (auto [r, t] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 1}})
            for (auto kind : {GraphKind::Oriented, GraphKind::Digraph}) {
                const auto h = blow_up_pattern(r, t);
                const int top = kind == GraphKind::Oriented ? 5 : 4;
                for (int n = 1; n <= top; ++n) {
                    const auto rec = labelled_census(n, h, r, kind, alphas, opts);
                    const auto where = [&] { return h.name + " " + to_string(kind) + " n=" + std::to_string(n); };
                    p.expect(rec.t_count <= rec.f_count, [&] { return "t > f for " + where(); });
                    p.expect(rpartite_lower_bound(n, r, kind) <= rec.t_count, [&] { return "bound > t for " + where(); });
                    for (std::size_t k = 1; k < rec.near_partite.size(); ++k)
                        p.expect(rec.near_partite[k - 1].count <= rec.near_partite[k].count,
                                 [&] { return "near-partite not monotone for " + where(); });
                    p.expect(rec.near_partite.back().count == rec.f_count,
                             [&] { return "alpha = 1 misses graphs for " + where(); });
                }
            }
    });
    run.run(s, "oriented f <= digraph f", [&](Probe& p) {
        for (const auto& h : {blow_up_pattern(2, 1), blow_up_pattern(3, 1), blow_up_pattern(2, 2)})
            for (int n = 1; n <= 5; ++n)
                p.expect(labelled_census(n, h, 2, GraphKind::Oriented, {}, opts).f_count <=
                             labelled_census(n, h, 2, GraphKind::Digraph, {}, opts).f_count,
                         [&] { return h.name + " n=" + std::to_string(n); });
    });
    run.run(s, "dual enumerator agreement for n <= 4", [&](Probe& p) {
        const std::vector<Pattern> patterns{blow_up_pattern(2, 1), blow_up_pattern(2, 2), blow_up_pattern(3, 1),
                                            pattern_stats(directed_cycle(3), "C_3")};
        for (const auto& h : patterns)
            for (auto kind : {GraphKind::Oriented, GraphKind::Digraph})
                for (int r = 1; r <= 3; ++r)
                    for (int n = 1; n <= 4; ++n) {
                        const auto fast = labelled_census(n, h, r, kind, {}, opts);
                        const auto slow = naive::census(n, h.graph, r, kind);
                        p.expect(fast.f_count == slow.f && fast.t_count == slow.t, [&] {
                            return h.name + " " + to_string(kind) + " n=" + std::to_string(n) + " r=" + std::to_string(r);
                        });
                    }
    });
}

void sampler_suite(Runner& run, int threads)
{
    const std::string s = "sampler";
    const Pattern t3 = blow_up_pattern(2, 1);
    run.run(s, "samples are H-free and legal", [&](Probe& p) {
        for (auto kind : {GraphKind::Digraph, GraphKind::Oriented})
            for (const auto& h : {t3, blow_up_pattern(2, 2), blow_up_pattern(3, 1)}) {
                auto cfg = ChainConfig::with_defaults(7, kind, h, 400, 501);
                cfg.chains = 4;
                cfg.threads = threads;
                for (const auto& g : mcmc_sample(cfg).samples) {
                    p.expect(!find_embedding(g, h.graph), [&] { return "sample contains H: " + hex(g); });
                    p.expect(is_legal(g, kind), [&] { return "illegal sample " + hex(g); });
                }
            }
    });
    run.run(s, "proposal is symmetric on 3 vertices", [](Probe& p) {
        for (auto kind : {GraphKind::Digraph, GraphKind::Oriented})
            naive::for_each_graph(3, kind, [&](const Digraph& x) {
                for (const auto& [y, pxy] : proposal_distribution(x, kind)) {
                    double pyx = 0;
                    for (const auto& [z, q] : proposal_distribution(y, kind))
                        if (z == x)
                            pyx = q;
                    p.expect(std::abs(pxy - pyx) < 1e-15, [&] { return "asymmetric at " + hex(x) + " -> " + hex(y); });
                }
            });
    });
    run.run(s, "chi-square uniformity at n = 3 (both kinds) and n = 4 oriented", [&](Probe& p) {
        struct Case {
            int n;
            GraphKind kind;
            std::uint64_t samples;
        };
        for (const auto& c : {Case{3, GraphKind::Digraph, 100'000}, Case{3, GraphKind::Oriented, 100'000},
                              Case{4, GraphKind::Oriented, 200'000}}) {
            auto cfg = ChainConfig::with_defaults(c.n, c.kind, t3, c.samples, 502);
            cfg.chains = 8;
            cfg.threads = threads;
            const auto counts = state_counts(mcmc_sample(cfg).samples, c.n, c.kind, t3.graph);
            const auto census = labelled_census(c.n, t3, 2, c.kind, {});
            p.expect(census.f_count == counts.size(), [&] { return "state count differs from census"; });
            const auto chi = chi_square_uniform(counts);
            p.expect(chi.p_value > 1e-3, [&] {
                std::ostringstream os;
                os << to_string(c.kind) << " n=" << c.n << ": chi2 " << chi.statistic << " on " << chi.dof
                   << " dof, p = " << chi.p_value;
                return os.str();
            });
        }
    });
    run.run(s, "same seed gives identical statistics for any thread count", [&](Probe& p) {
        auto cfg = ChainConfig::with_defaults(6, GraphKind::Oriented, t3, 300, 503);
        cfg.chains = 3;
        const auto a = typicality_experiment(cfg, 2, 0.05);
        cfg.threads = std::max(2, threads);
        const auto b = typicality_experiment(cfg, 2, 0.05);
        p.expect(a.defects == b.defects && a.acceptance_rate == b.acceptance_rate,
                 [] { return "statistics depend on thread count"; });
    });
}

}  // namespace

std::vector<CheckResult> run_property_suites(int threads, const CheckSink& sink)
{
    Runner run(sink);
    digraph_suite(run);
    containment_suite(run, threads);
    extremal_suite(run);
    structure_suite(run, threads);
    census_suite(run, threads);
    sampler_suite(run, threads);
    return run.take();
}

}  // namespace tdl::verify
