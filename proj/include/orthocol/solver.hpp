#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orthocol/colouring.hpp"
#include "orthocol/errors.hpp"
#include "orthocol/graph.hpp"

namespace orthocol {

struct SolveBudget {
    std::uint64_t max_nodes = 50'000'000;
    std::optional<double> time_limit_seconds;
};

enum class SolveStatus { Optimal, Feasible, Infeasible, BudgetExhausted };

[[nodiscard]] inline std::string_view to_string(SolveStatus status) noexcept
{
    switch (status) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::Feasible: return "Feasible";
    case SolveStatus::Infeasible: return "Infeasible";
    case SolveStatus::BudgetExhausted: return "BudgetExhausted";
    }
    return "BudgetExhausted";
}

struct SolveResult {
    SolveStatus status = SolveStatus::BudgetExhausted;
    std::optional<std::size_t> value;
    std::optional<KOrthogonalColouring> witness;
    std::uint64_t nodes = 0;
};

namespace detail {

/// Depth-first search over colour tuples for a fixed palette.
///
/// Vertices are taken in descending-degree order (ties by id), tuples in
/// lexicographic order. The first vertex is pinned to (0, ..., 0); any
/// solution can be renamed colourwise to satisfy that.
class OrthogonalSearch {
public:
    enum class Outcome { Found, Exhausted, OutOfBudget };

    OrthogonalSearch(const Graph& g, std::size_t k, std::size_t palette, std::uint64_t node_limit,
                     std::optional<std::chrono::steady_clock::time_point> deadline)
        : g_(g), k_(k), palette_(palette), node_limit_(node_limit), deadline_(deadline),
          order_(g.num_vertices()), colours_(k, std::vector<Colour>(g.num_vertices(), kUnset)),
          used_(k * (k - 1) / 2, std::vector<bool>(palette * palette, false))
    {
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    }

    Outcome run()
    {
        tuples_.assign(order_.size(), std::vector<Colour>(k_, 0));
        return descend(0);
    }

    [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }

    [[nodiscard]] KOrthogonalColouring witness() const { return {palette_, colours_}; }

private:
    static constexpr Colour kUnset = ~Colour{0};

    [[nodiscard]] std::size_t pair_slot(std::size_t r1, std::size_t r2) const noexcept
    {
        // index of (r1, r2), r1 < r2, in row-major upper-triangular order
        return r1 * (2 * k_ - r1 - 1) / 2 + (r2 - r1 - 1);
    }

    [[nodiscard]] bool fits(Vertex v, const std::vector<Colour>& tuple, std::size_t r, Colour c) const
    {
        for (Vertex w : g_.neighbours(v))
            if (colours_[r][w] == c)
                return false;
        for (std::size_t q = 0; q < r; ++q)
            if (used_[pair_slot(q, r)][tuple[q] * palette_ + c])
                return false;
        return true;
    }

    void place(Vertex v, const std::vector<Colour>& tuple)
    {
        for (std::size_t r = 0; r < k_; ++r) {
            colours_[r][v] = tuple[r];
            for (std::size_t q = 0; q < r; ++q)
                used_[pair_slot(q, r)][tuple[q] * palette_ + tuple[r]] = true;
        }
    }

    void unplace(Vertex v)
    {
        for (std::size_t r = 0; r < k_; ++r)
            for (std::size_t q = 0; q < r; ++q)
                used_[pair_slot(q, r)][colours_[q][v] * palette_ + colours_[r][v]] = false;
        for (std::size_t r = 0; r < k_; ++r)
            colours_[r][v] = kUnset;
    }

    bool over_budget()
    {
        if (nodes_ >= node_limit_)
            return true;
        if (deadline_ && (nodes_ & 0x3FF) == 0 && std::chrono::steady_clock::now() > *deadline_)
            return true;
        return false;
    }

    Outcome descend(std::size_t depth)
    {
        if (depth == order_.size())
            return Outcome::Found;
        if (over_budget())
            return Outcome::OutOfBudget;
        ++nodes_;
        const Vertex v = order_[depth];
        if (depth == 0) {
            place(v, tuples_[0]);
            const Outcome out = descend(1);
            if (out != Outcome::Found)
                unplace(v);
            return out;
        }
        return extend(v, depth, 0);
    }

    // Chooses entries r..k-1 of the tuple at `depth`, then recurses to the next vertex.
    Outcome extend(Vertex v, std::size_t depth, std::size_t r)
    {
        auto& tuple = tuples_[depth];
        if (r == k_) {
            place(v, tuple);
            const Outcome out = descend(depth + 1);
            if (out != Outcome::Found)
                unplace(v);
            return out;
        }
        for (Colour c = 0; c < palette_; ++c) {
            if (!fits(v, tuple, r, c))
                continue;
            tuple[r] = c;
            const Outcome out = extend(v, depth, r + 1);
            if (out != Outcome::Exhausted)
                return out;
        }
        return Outcome::Exhausted;
    }

    const Graph& g_;
    std::size_t k_;
    std::size_t palette_;
    std::uint64_t node_limit_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::uint64_t nodes_ = 0;
    std::vector<Vertex> order_;
    std::vector<std::vector<Colour>> tuples_;
    std::vector<std::vector<Colour>> colours_;
    std::vector<std::vector<bool>> used_;
};

inline void check_solve_args(std::size_t k, const SolveBudget& budget)
{
    if (k < 2)
        throw PreconditionError("solver: k must be at least 2, got " + std::to_string(k));
    if (budget.max_nodes < 1)
        throw PreconditionError("solver: max_nodes must be at least 1");
}

[[nodiscard]] inline std::optional<std::chrono::steady_clock::time_point> deadline_for(const SolveBudget& budget)
{
    if (!budget.time_limit_seconds)
        return std::nullopt;
    return std::chrono::steady_clock::now() +
           std::chrono::duration_cast<std::chrono::steady_clock::duration>(
               std::chrono::duration<double>(*budget.time_limit_seconds));
}

[[nodiscard]] inline SolveResult decide_with_deadline(const Graph& g, std::size_t k, std::size_t palette,
                                                      std::uint64_t node_limit,
                                                      std::optional<std::chrono::steady_clock::time_point> deadline)
{
    SolveResult result;
    // |V| vertices need |V| distinct colour pairs out of palette².
    if (palette < sqrt_lower_bound(g)) {
        result.status = SolveStatus::Infeasible;
        return result;
    }
    OrthogonalSearch search(g, k, palette, node_limit, deadline);
    const auto outcome = search.run();
    result.nodes = search.nodes();
    switch (outcome) {
    case OrthogonalSearch::Outcome::Found:
        result.status = SolveStatus::Feasible;
        result.value = palette;
        result.witness = search.witness();
        break;
    case OrthogonalSearch::Outcome::Exhausted: result.status = SolveStatus::Infeasible; break;
    case OrthogonalSearch::Outcome::OutOfBudget: result.status = SolveStatus::BudgetExhausted; break;
    }
    return result;
}

}  // namespace detail

/// Decides whether g has a proper k-orthogonal colouring with `palette` colours.
[[nodiscard]] inline SolveResult decide_k_orthogonal(const Graph& g, std::size_t k, std::size_t palette,
                                                     const SolveBudget& budget = {})
{
    detail::check_solve_args(k, budget);
    if (palette < 1)
        throw PreconditionError("solver: palette must be at least 1");
    return detail::decide_with_deadline(g, k, palette, budget.max_nodes, detail::deadline_for(budget));
}

/// Smallest palette admitting a proper k-orthogonal colouring, searched upward
/// from ⌈√|V|⌉. The node budget is shared across all palettes tried.
[[nodiscard]] inline SolveResult solve_exact(const Graph& g, std::size_t k, const SolveBudget& budget = {})
{
    detail::check_solve_args(k, budget);
    const auto deadline = detail::deadline_for(budget);
    std::uint64_t spent = 0;
    // palette = |V| always succeeds (all colours distinct), so the loop ends.
    for (std::size_t palette = std::max<std::size_t>(1, sqrt_lower_bound(g));; ++palette) {
        auto step = detail::decide_with_deadline(g, k, palette, budget.max_nodes - spent, deadline);
        spent += step.nodes;
        step.nodes = spent;
        if (step.status == SolveStatus::Feasible) {
            step.status = SolveStatus::Optimal;
            return step;
        }
        if (step.status == SolveStatus::BudgetExhausted)
            return step;
    }
}

}  // namespace orthocol
