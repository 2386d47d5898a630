#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tdl/containment.hpp"
#include "tdl/digraph.hpp"
#include "tdl/rng.hpp"

namespace tdl {

struct ChainConfig {
    int n = 0;
    GraphKind kind = GraphKind::Digraph;
    Pattern pattern;
    std::uint64_t burn_in = 1;
    std::uint64_t thin = 1;
    std::uint64_t samples = 1;  // total over all chains
    std::uint64_t seed = 0;
    int chains = 1;             // chain i draws from RNG stream i
    int threads = 1;            // scheduling only; never changes output

    // burn-in 50 n^2 and thinning n^2 steps.
    static ChainConfig with_defaults(int n, GraphKind kind, Pattern pattern, std::uint64_t samples,
                                     std::uint64_t seed);
    void validate() const;
};

/// Metropolis chain on H-free graphs with a symmetric proposal and flat
/// target, so its stationary law is uniform.
///
/// Digraph mode: a uniform ordered pair (u, v) and the arc u->v is toggled.
/// Oriented mode: the unordered pair of a uniform ordered pair moves to one
/// of its two other states in {none, u->v, v->u}, uniformly. Any proposal
/// that creates a copy of H is rejected. The chain starts at the empty graph.
class HFreeChain {
public:
    HFreeChain(int n, GraphKind kind, const Digraph& pattern, CounterRng rng);

    // One step; returns whether the proposal was accepted.
    bool step();

    const Digraph& state() const { return state_; }
    std::uint64_t proposals() const { return proposals_; }
    std::uint64_t accepted() const { return accepted_; }

private:
    GraphKind kind_;
    EmbeddingSearcher searcher_;
    CounterRng rng_;
    Digraph state_;
    std::uint64_t proposals_ = 0;
    std::uint64_t accepted_ = 0;
};

struct ChainRun {
    std::vector<Digraph> samples;  // chain 0's samples first, then chain 1's, ...
    std::uint64_t proposals = 0;
    std::uint64_t accepted = 0;

    double acceptance_rate() const
    {
        return proposals == 0 ? 1.0 : static_cast<double>(accepted) / static_cast<double>(proposals);
    }
};

ChainRun mcmc_sample(const ChainConfig& cfg);

// Every state the proposal can produce from x, with its probability, before
// the H-freeness check. Used to verify the proposal is symmetric.
std::vector<std::pair<Digraph, double>> proposal_distribution(const Digraph& x, GraphKind kind);

struct SampleStats {
    std::uint64_t samples = 0;
    double fraction_r_partite = 0;
    double half_width = 0;  // 95% normal-approximation binomial interval
    double fraction_within_alpha = 0;
    double mean_defect = 0;  // local-search non-crossing arcs / n^2
    double max_defect = 0;
    double acceptance_rate = 0;
    std::uint64_t burn_in = 0;
    std::uint64_t thin = 0;
    std::vector<double> defects;  // per sample, in sample order
};

// Defects come from local search, so they bound the true minimum from above
// and fraction_r_partite is a lower bound.
SampleStats typicality_experiment(const ChainConfig& cfg, int r, double alpha);

struct ChiSquare {
    double statistic = 0;
    int dof = 0;
    double p_value = 0;
};

// Goodness of fit of `counts` against the uniform distribution over
// counts.size() categories (zero-count categories included).
ChiSquare chi_square_uniform(const std::vector<std::uint64_t>& counts);

}  // namespace tdl
