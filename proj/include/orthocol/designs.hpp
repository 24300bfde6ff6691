#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "orthocol/colouring.hpp"
#include "orthocol/errors.hpp"
#include "orthocol/graph.hpp"

namespace orthocol {

/// A point of a transversal design: colour `colour` of group `group`.
struct Point {
    std::size_t group = 0;
    Colour colour = 0;

    friend auto operator<=>(const Point&, const Point&) = default;
};

using Block = std::vector<Point>;

/// Candidate (n, k, 1)-transversal design. Groups are implicit: group r is
/// {(r, 0), ..., (r, n-1)}. Nothing about the blocks is enforced at
/// construction; verify_design decides validity.
struct TransversalDesign {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<Block> blocks;

    [[nodiscard]] std::vector<std::vector<Point>> groups() const
    {
        std::vector<std::vector<Point>> out(k);
        for (std::size_t r = 0; r < k; ++r)
            for (Colour c = 0; c < n; ++c)
                out[r].push_back({r, c});
        return out;
    }
};

/// True iff there are n² blocks, each holding exactly one point from each of
/// the k groups, and every pair of points from different groups lies in
/// exactly one block.
[[nodiscard]] inline bool verify_design(const TransversalDesign& d)
{
    if (d.blocks.size() != d.n * d.n)
        return false;
    std::vector<Colour> by_group(d.k);
    std::vector<bool> present(d.k);
    std::vector<std::size_t> cover(d.k * d.k * d.n * d.n, 0);
    const auto slot = [&](std::size_t r1, std::size_t r2, Colour c1, Colour c2) {
        return ((r1 * d.k + r2) * d.n + c1) * d.n + c2;
    };
    for (const auto& block : d.blocks) {
        if (block.size() != d.k)
            return false;
        std::fill(present.begin(), present.end(), false);
        for (const Point& pt : block) {
            if (pt.group >= d.k || pt.colour >= d.n || present[pt.group])
                return false;
            present[pt.group] = true;
            by_group[pt.group] = pt.colour;
        }
        for (std::size_t r1 = 0; r1 < d.k; ++r1)
            for (std::size_t r2 = r1 + 1; r2 < d.k; ++r2)
                ++cover[slot(r1, r2, by_group[r1], by_group[r2])];
    }
    for (std::size_t r1 = 0; r1 < d.k; ++r1)
        for (std::size_t r2 = r1 + 1; r2 < d.k; ++r2)
            for (Colour c1 = 0; c1 < d.n; ++c1)
                for (Colour c2 = 0; c2 < d.n; ++c2)
                    if (cover[slot(r1, r2, c1, c2)] != 1)
                        return false;
    return true;
}

/// One block per vertex: the k colours the vertex receives, each tagged with
/// its colouring as the group. Requires a perfect colouring. Blocks come out
/// sorted.
[[nodiscard]] inline TransversalDesign to_transversal_design(const Graph& g, const KOrthogonalColouring& col)
{
    if (col.num_vertices() != g.num_vertices() || !verify(g, col).perfect)
        throw PreconditionError("design: colouring is not perfect");
    TransversalDesign d{col.palette(), col.k(), {}};
    d.blocks.reserve(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        Block block;
        block.reserve(col.k());
        for (std::size_t r = 0; r < col.k(); ++r)
            block.push_back({r, col.colour(r, v)});
        d.blocks.push_back(std::move(block));
    }
    std::sort(d.blocks.begin(), d.blocks.end());
    return d;
}

}  // namespace orthocol
