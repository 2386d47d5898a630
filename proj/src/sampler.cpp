#include "tdl/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>

#include "tdl/structure.hpp"

namespace tdl {

ChainConfig ChainConfig::with_defaults(int n, GraphKind kind, Pattern pattern, std::uint64_t samples,
                                       std::uint64_t seed)
{
    ChainConfig cfg;
    cfg.n = n;
    cfg.kind = kind;
    cfg.pattern = std::move(pattern);
    const auto n2 = static_cast<std::uint64_t>(std::max(1, n * n));
    cfg.burn_in = 50 * n2;
    cfg.thin = n2;
    cfg.samples = samples;
    cfg.seed = seed;
    return cfg;
}

void ChainConfig::validate() const
{
    if (n < 0)
        throw std::invalid_argument("sampler: n must be >= 0");
    if (burn_in < 1 || thin < 1 || samples < 1)
        throw std::invalid_argument("sampler: burn-in, thin and samples must all be >= 1");
    if (chains < 1)
        throw std::invalid_argument("sampler: need at least one chain");
    if (pattern.graph.arc_count() == 0 && pattern.graph.order() <= n)
        throw std::invalid_argument("sampler: arcless pattern embeds in every graph on n vertices");
}

HFreeChain::HFreeChain(int n, GraphKind kind, const Digraph& pattern, CounterRng rng)
    : kind_(kind), searcher_(pattern), rng_(rng), state_(n)
{
}

bool HFreeChain::step()
{
    const int n = state_.order();
    if (n < 2)
        return true;
    ++proposals_;
    const auto idx = rng_.below(static_cast<std::uint64_t>(n) * (n - 1));
    const int u = static_cast<int>(idx / (n - 1));
    int v = static_cast<int>(idx % (n - 1));
    if (v >= u)
        ++v;

    if (kind_ == GraphKind::Digraph) {
        if (state_.has_arc(u, v)) {
            state_.remove_arc(u, v);
        } else {
            state_.add_arc(u, v);
            if (searcher_.contains_through_arc(state_, u, v)) {
                state_.remove_arc(u, v);
                return false;
            }
        }
        ++accepted_;
        return true;
    }

    const int lo = std::min(u, v), hi = std::max(u, v);
    const int current = state_.has_arc(lo, hi) ? 1 : state_.has_arc(hi, lo) ? 2 : 0;
    int proposed = static_cast<int>(rng_.below(2));
    if (proposed >= current)
        ++proposed;
    state_.remove_arc(lo, hi);
    state_.remove_arc(hi, lo);
    if (proposed != 0) {
        const int from = proposed == 1 ? lo : hi;
        const int to = proposed == 1 ? hi : lo;
        state_.add_arc(from, to);
        if (searcher_.contains_through_arc(state_, from, to)) {
            state_.remove_arc(from, to);
            if (current == 1)
                state_.add_arc(lo, hi);
            else if (current == 2)
                state_.add_arc(hi, lo);
            return false;
        }
    }
    ++accepted_;
    return true;
}

ChainRun mcmc_sample(const ChainConfig& cfg)
{
    cfg.validate();
    const auto chains = static_cast<std::size_t>(cfg.chains);
    std::vector<ChainRun> runs(chains);
    auto run_chain = [&](std::size_t c) {
        std::uint64_t quota = cfg.samples / chains + (c < cfg.samples % chains ? 1 : 0);
        HFreeChain chain(cfg.n, cfg.kind, cfg.pattern.graph, CounterRng(cfg.seed, c));
        auto& run = runs[c];
        for (std::uint64_t s = 0; s < cfg.burn_in; ++s)
            chain.step();
        for (std::uint64_t k = 0; k < quota; ++k) {
            if (k > 0)
                for (std::uint64_t s = 0; s < cfg.thin; ++s)
                    chain.step();
            run.samples.push_back(chain.state());
        }
        run.proposals = chain.proposals();
        run.accepted = chain.accepted();
    };
    const int threads = std::clamp(cfg.threads, 1, cfg.chains);
    if (threads == 1) {
        for (std::size_t c = 0; c < chains; ++c)
            run_chain(c);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t c = next++; c < chains; c = next++)
                    run_chain(c);
            });
    }
    ChainRun merged;
    for (auto& run : runs) {
        merged.proposals += run.proposals;
        merged.accepted += run.accepted;
        for (auto& g : run.samples)
            merged.samples.push_back(std::move(g));
    }
    return merged;
}

std::vector<std::pair<Digraph, double>> proposal_distribution(const Digraph& x, GraphKind kind)
{
    const int n = x.order();
    std::vector<std::pair<Digraph, double>> out;
    if (n < 2)
        return out;
    const double p_pair = 1.0 / (static_cast<double>(n) * (n - 1));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v)
                continue;
            if (kind == GraphKind::Digraph) {
                Digraph y = x;
                if (y.has_arc(u, v))
                    y.remove_arc(u, v);
                else
                    y.add_arc(u, v);
                out.emplace_back(std::move(y), p_pair);
                continue;
            }
            const int lo = std::min(u, v), hi = std::max(u, v);
            const int current = x.has_arc(lo, hi) ? 1 : x.has_arc(hi, lo) ? 2 : 0;
            for (int s = 0; s < 3; ++s) {
                if (s == current)
                    continue;
                Digraph y = x;
                y.remove_arc(lo, hi);
                y.remove_arc(hi, lo);
                if (s == 1)
                    y.add_arc(lo, hi);
                else if (s == 2)
                    y.add_arc(hi, lo);
                out.emplace_back(std::move(y), p_pair / 2.0);
            }
        }
    // Merge duplicates (oriented mode reaches each state via (u,v) and (v,u)).
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Digraph, double>> merged;
    for (auto& [g, p] : out) {
        if (!merged.empty() && merged.back().first == g)
            merged.back().second += p;
        else
            merged.emplace_back(std::move(g), p);
    }
    return merged;
}

SampleStats typicality_experiment(const ChainConfig& cfg, int r, double alpha)
{
    if (r < 1)
        throw std::invalid_argument("typicality: r must be >= 1");
    const auto run = mcmc_sample(cfg);
    SampleStats stats;
    stats.samples = run.samples.size();
    stats.acceptance_rate = run.acceptance_rate();
    stats.burn_in = cfg.burn_in;
    stats.thin = cfg.thin;
    const double n2 = std::max(1.0, static_cast<double>(cfg.n) * cfg.n);
    std::uint64_t partite = 0, within = 0;
    double total = 0;
    PartitionOptions popts;
    popts.seed = cfg.seed;
    for (const auto& g : run.samples) {
        const auto nc = optimal_partition(g, r, PartitionMode::LocalSearch, popts).non_crossing_arcs;
        const double defect = static_cast<double>(nc) / n2;
        stats.defects.push_back(defect);
        partite += nc == 0;
        within += static_cast<double>(nc) <= alpha * n2 + 1e-12;
        total += defect;
        stats.max_defect = std::max(stats.max_defect, defect);
    }
    const auto count = static_cast<double>(stats.samples);
    stats.fraction_r_partite = static_cast<double>(partite) / count;
    stats.fraction_within_alpha = static_cast<double>(within) / count;
    stats.mean_defect = total / count;
    stats.half_width = 1.96 * std::sqrt(stats.fraction_r_partite * (1 - stats.fraction_r_partite) / count);
    return stats;
}

ChiSquare chi_square_uniform(const std::vector<std::uint64_t>& counts)
{
    if (counts.size() < 2)
        throw std::invalid_argument("chi_square: need at least two categories");
    double total = 0;
    for (auto c : counts)
        total += static_cast<double>(c);
    if (total <= 0)
        throw std::invalid_argument("chi_square: no observations");
    const double expected = total / static_cast<double>(counts.size());
    ChiSquare out;
    for (auto c : counts) {
        const double d = static_cast<double>(c) - expected;
        out.statistic += d * d / expected;
    }
    out.dof = static_cast<int>(counts.size()) - 1;
    boost::math::chi_squared dist(out.dof);
    out.p_value = boost::math::cdf(boost::math::complement(dist, out.statistic));
    return out;
}

}  // namespace tdl
