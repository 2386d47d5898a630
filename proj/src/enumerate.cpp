#include "tdl/enumerate.hpp"

#include <stdexcept>

namespace tdl {

HFreeEnumerator::HFreeEnumerator(int n, const Digraph& h, GraphKind kind, int min_tasks)
    : n_(n), kind_(kind), searcher_(h)
{
    if (n < 0)
        throw std::invalid_argument("enumerate: negative n");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs_.emplace_back(i, j);

    const int base = pair_states(kind);
    std::size_t count = 1;
    while (prefix_len_ < pairs_.size() && count < static_cast<std::size_t>(min_tasks)) {
        ++prefix_len_;
        count *= static_cast<std::size_t>(base);
    }
    std::vector<int> digits(prefix_len_, 0);
    for (std::size_t t = 0; t < count; ++t) {
        tasks_.push_back(digits);
        for (std::size_t k = prefix_len_; k-- > 0;) {
            if (++digits[k] < base)
                break;
            digits[k] = 0;
        }
    }
}

bool HFreeEnumerator::assign(Digraph& g, std::size_t pair, int state) const
{
    const auto [u, v] = pairs_[pair];
    if (state == 1 || state == 3)
        g.add_arc(u, v);
    if (state == 2 || state == 3)
        g.add_arc(v, u);
    if ((state == 1 || state == 3) && searcher_.contains_through_arc(g, u, v))
        return false;
    if ((state == 2 || state == 3) && searcher_.contains_through_arc(g, v, u))
        return false;
    return true;
}

void HFreeEnumerator::run_task(std::size_t task, const std::function<void(const Digraph&)>& visit,
                               Budget& budget) const
{
    Digraph g(n_);
    const auto& prefix = tasks_.at(task);
    for (std::size_t k = 0; k < prefix.size(); ++k)
        if (!assign(g, k, prefix[k]))
            return;
    const int base = pair_states(kind_);
    auto recurse = [&](auto&& self, std::size_t k) -> void {
        budget.tick("enumerate");
        if (k == pairs_.size()) {
            visit(g);
            return;
        }
        const auto [u, v] = pairs_[k];
        for (int s = 0; s < base; ++s) {
            if (assign(g, k, s))
                self(self, k + 1);
            g.remove_arc(u, v);
            g.remove_arc(v, u);
        }
    };
    recurse(recurse, prefix.size());
}

}  // namespace tdl
