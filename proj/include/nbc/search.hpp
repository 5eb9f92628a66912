#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "nbc/coloring.hpp"
#include "nbc/graph.hpp"

namespace nbc {

inline constexpr std::int64_t kUnlimited = std::numeric_limits<std::int64_t>::max();

struct SearchConfig {
    explicit SearchConfig(Palette p) : palette(p) {}

    Palette palette;
    std::int64_t node_budget = 100'000'000;
    std::optional<double> time_budget_seconds;
    std::int64_t enumerate_limit = 1;
    bool symmetry_breaking = true;
};

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

struct SearchOutcome {
    SearchStatus status = SearchStatus::Exhausted;
    std::vector<Coloring> colorings;
    std::int64_t nodes_explored = 0;
};

namespace detail {

// Depth-first search over vertices in descending-degree order (index
// tiebreak). A partial assignment is pruned as soon as some vertex has more
// than deg(v)/q neighbors of one color; any completion of such an assignment
// keeps that excess, so the prune is sound. While every count respects its
// cap, a vertex's per-color deficits sum to exactly its number of uncolored
// neighbors, so the cap is also the complete local feasibility condition.
// With symmetry breaking on, the first vertex (in search order) to use color
// t must come after the first to use t-1, which keeps exactly one
// representative per color permutation class.
class BalanceSearch {
public:
    BalanceSearch(const Graph& g, const SearchConfig& config, std::int64_t limit)
        : g_(g), config_(config), limit_(limit), q_(config.palette.q()) {
        if (config.node_budget < 1) throw Error("node_budget must be positive");
        if (config.time_budget_seconds && *config.time_budget_seconds <= 0)
            throw Error("time_budget_seconds must be positive");
    }

    SearchOutcome run() {
        SearchOutcome outcome;
        const int n = g_.order();

        // Degree divisibility is necessary; fail without exploring.
        for (int v = 0; v < n; ++v)
            if (g_.degree(v) % q_ != 0) return outcome;

        order_.resize(n);
        std::iota(order_.begin(), order_.end(), 0);
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            return g_.degree(a) != g_.degree(b) ? g_.degree(a) > g_.degree(b) : a < b;
        });

        cap_.resize(n);
        for (int v = 0; v < n; ++v) cap_[v] = g_.degree(v) / q_;
        counts_.assign(static_cast<std::size_t>(n) * q_, 0);
        assigned_.assign(n, -1);
        if (config_.time_budget_seconds) deadline_start_ = Clock::now();

        dfs(0, 0, outcome);

        outcome.nodes_explored = nodes_;
        if (exceeded_)
            outcome.status = SearchStatus::BudgetExceeded;
        else
            outcome.status =
                outcome.colorings.empty() ? SearchStatus::Exhausted : SearchStatus::Found;
        return outcome;
    }

private:
    using Clock = std::chrono::steady_clock;

    // Returns true when the search should stop unwinding (limit reached or
    // budget exceeded).
    bool dfs(int pos, int colors_used, SearchOutcome& outcome) {
        if (pos == g_.order()) {
            std::vector<int> colors(assigned_.begin(), assigned_.end());
            outcome.colorings.emplace_back(config_.palette, std::move(colors));
            return static_cast<std::int64_t>(outcome.colorings.size()) >= limit_;
        }
        const int v = order_[pos];
        const int top = config_.symmetry_breaking ? std::min(colors_used, q_ - 1) : q_ - 1;
        for (int t = 0; t <= top; ++t) {
            ++nodes_;
            if (out_of_budget()) {
                exceeded_ = true;
                return true;
            }
            if (place(v, t)) {
                if (dfs(pos + 1, std::max(colors_used, t + 1), outcome)) {
                    unplace(v, t);
                    return true;
                }
                unplace(v, t);
            }
        }
        return false;
    }

    bool out_of_budget() {
        if (nodes_ > config_.node_budget) return true;
        if (config_.time_budget_seconds && (nodes_ & 0xfff) == 0) {
            const std::chrono::duration<double> elapsed = Clock::now() - deadline_start_;
            if (elapsed.count() > *config_.time_budget_seconds) return true;
        }
        return false;
    }

    bool place(int v, int t) {
        int done = 0;
        for (int u : g_.neighbors(v)) {
            ++done;
            if (++counts_[static_cast<std::size_t>(u) * q_ + t] > cap_[u]) {
                for (int w : g_.neighbors(v)) {
                    --counts_[static_cast<std::size_t>(w) * q_ + t];
                    if (--done == 0) break;
                }
                return false;
            }
        }
        assigned_[v] = t;
        return true;
    }

    void unplace(int v, int t) {
        assigned_[v] = -1;
        for (int u : g_.neighbors(v)) --counts_[static_cast<std::size_t>(u) * q_ + t];
    }

    const Graph& g_;
    const SearchConfig& config_;
    std::int64_t limit_;
    int q_;
    std::vector<int> order_;
    std::vector<int> cap_;
    std::vector<int> counts_;
    std::vector<int> assigned_;
    std::int64_t nodes_ = 0;
    bool exceeded_ = false;
    Clock::time_point deadline_start_{};
};

}  // namespace detail

// Decides whether G admits a balanced coloring; on success the first
// coloring found (in deterministic search order) is returned.
inline SearchOutcome decide(const Graph& g, const SearchConfig& config) {
    return detail::BalanceSearch(g, config, 1).run();
}

// Collects up to config.enumerate_limit distinct colorings. With symmetry
// breaking on, the colorings are canonical representatives of the color
// permutation classes.
inline SearchOutcome enumerate(const Graph& g, const SearchConfig& config) {
    if (config.enumerate_limit < 1) throw Error("enumerate_limit must be at least 1");
    return detail::BalanceSearch(g, config, config.enumerate_limit).run();
}

// Plain odometer over all q^n colorings, each checked with verify. No
// pruning and no symmetry breaking; used to cross-validate the backtracking
// search.
inline SearchOutcome brute_force_oracle(const Graph& g, const Palette& palette,
                                        std::int64_t instance_cap = 10'000'000) {
    const int q = palette.q();
    const int n = g.order();
    std::int64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > instance_cap / q)
            throw InstanceTooLarge(std::to_string(q) + "^" + std::to_string(n) + " exceeds " +
                                   std::to_string(instance_cap) + " colorings");
        total *= q;
    }
    SearchOutcome outcome;
    std::vector<int> digits(n, 0);
    for (std::int64_t step = 0; step < total; ++step) {
        Coloring c(palette, digits);
        if (verify(g, c).balanced) outcome.colorings.push_back(std::move(c));
        ++outcome.nodes_explored;
        for (int i = n - 1; i >= 0; --i) {
            if (++digits[i] < q) break;
            digits[i] = 0;
        }
    }
    outcome.status = outcome.colorings.empty() ? SearchStatus::Exhausted : SearchStatus::Found;
    return outcome;
}

}  // namespace nbc
