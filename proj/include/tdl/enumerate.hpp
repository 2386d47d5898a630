#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

#include "tdl/budget.hpp"
#include "tdl/containment.hpp"
#include "tdl/digraph.hpp"

namespace tdl {

// Number of states of one unordered vertex pair: {none, u->v, v->u} for
// oriented graphs, plus {both} for digraphs.
constexpr int pair_states(GraphKind kind)
{
    return kind == GraphKind::Oriented ? 3 : 4;
}

/// Depth-first enumeration of every H-free graph of one kind on n labelled
/// vertices. Pairs {i < j} are assigned in lexicographic order, one base-3 or
/// base-4 digit each; a branch dies as soon as a newly inserted arc completes
/// a copy of H, since later digits only add arcs.
///
/// The space is cut into tasks by the first few digits. Each task is visited
/// in a fixed order, so per-task results merged in task order do not depend
/// on how tasks are scheduled.
class HFreeEnumerator {
public:
    HFreeEnumerator(int n, const Digraph& h, GraphKind kind, int min_tasks = 1);

    int order() const { return n_; }
    GraphKind kind() const { return kind_; }
    std::size_t task_count() const { return tasks_.size(); }

    void run_task(std::size_t task, const std::function<void(const Digraph&)>& visit, Budget& budget) const;

private:
    bool assign(Digraph& g, std::size_t pair, int state) const;  // false if a copy appeared

    int n_;
    GraphKind kind_;
    EmbeddingSearcher searcher_;
    std::vector<Arc> pairs_;
    std::size_t prefix_len_ = 0;
    std::vector<std::vector<int>> tasks_;
};

// Runs `visit(acc, g)` on every H-free graph, one accumulator per task, and
// returns the accumulators in task order.
template <typename Acc, typename Visit>
std::vector<Acc> enumerate_h_free(int n, const Digraph& h, GraphKind kind, int threads, const Budget& budget,
                                  const Acc& init, Visit visit)
{
    threads = std::max(1, threads);
    const HFreeEnumerator en(n, h, kind, threads * 8);
    std::vector<Acc> results(en.task_count(), init);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        Budget local = budget;
        for (std::size_t t = next++; t < en.task_count() && !failed; t = next++) {
            try {
                Acc& acc = results[t];
                en.run_task(t, [&](const Digraph& g) { visit(acc, g); }, local);
            } catch (...) {
                if (!failed.exchange(true))
                    failure = std::current_exception();
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int i = 0; i < threads; ++i)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);
    return results;
}

}  // namespace tdl
