#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "orthocol/errors.hpp"
#include "orthocol/graph.hpp"

namespace orthocol {

using Colour = std::uint32_t;

/// k vertex colourings over a shared palette 0..palette-1.
///
/// Orthogonality and properness are not invariants of the type; they are
/// properties checked against a graph by is_proper / verify.
class KOrthogonalColouring {
public:
    KOrthogonalColouring() = default;

    KOrthogonalColouring(std::size_t palette, std::vector<std::vector<Colour>> assignments)
        : palette_(palette), assignments_(std::move(assignments))
    {
        if (assignments_.empty())
            throw std::invalid_argument("a k-orthogonal colouring needs k >= 1 colourings");
        if (palette_ == 0)
            throw std::invalid_argument("palette must contain at least one colour");
        const std::size_t n = assignments_.front().size();
        for (std::size_t r = 0; r < assignments_.size(); ++r) {
            if (assignments_[r].size() != n)
                throw std::invalid_argument("colouring " + std::to_string(r) + " covers " +
                                            std::to_string(assignments_[r].size()) + " vertices, expected " +
                                            std::to_string(n));
            for (Colour c : assignments_[r])
                if (c >= palette_)
                    throw std::invalid_argument("colour " + std::to_string(c) + " outside palette of size " +
                                                std::to_string(palette_));
        }
    }

    [[nodiscard]] std::size_t k() const noexcept { return assignments_.size(); }
    [[nodiscard]] std::size_t palette() const noexcept { return palette_; }
    [[nodiscard]] std::size_t num_vertices() const noexcept
    {
        return assignments_.empty() ? 0 : assignments_.front().size();
    }

    [[nodiscard]] Colour colour(std::size_t r, Vertex v) const { return assignments_.at(r).at(v); }
    [[nodiscard]] std::span<const Colour> assignment(std::size_t r) const { return assignments_.at(r); }
    [[nodiscard]] const std::vector<std::vector<Colour>>& assignments() const noexcept { return assignments_; }

    friend bool operator==(const KOrthogonalColouring&, const KOrthogonalColouring&) = default;

private:
    std::size_t palette_ = 0;
    std::vector<std::vector<Colour>> assignments_;
};

struct VerifyFlags {
    bool proper = false;
    bool orthogonal = false;
    bool perfect = false;

    friend bool operator==(const VerifyFlags&, const VerifyFlags&) = default;
};

/// A graph, a colouring of it and the properties claimed for the pair.
struct ColouringCertificate {
    Graph graph;
    KOrthogonalColouring colouring;
    VerifyFlags claims;
};

/// Graph together with a colouring produced for it by a construction.
struct ColouredGraph {
    Graph graph;
    KOrthogonalColouring colouring;
};

namespace detail {

inline void require_defined_on(const Graph& g, const KOrthogonalColouring& col)
{
    if (col.num_vertices() != g.num_vertices())
        throw std::invalid_argument("colouring covers " + std::to_string(col.num_vertices()) +
                                    " vertices but the graph has " + std::to_string(g.num_vertices()));
}

/// ⌈√n⌉ in integer arithmetic.
[[nodiscard]] constexpr std::size_t ceil_sqrt(std::size_t n) noexcept
{
    std::size_t r = 0;
    while (r * r < n)
        ++r;
    return r;
}

[[nodiscard]] inline bool orthogonal_pairs(const KOrthogonalColouring& col)
{
    const std::size_t c = col.palette();
    std::vector<bool> seen(c * c);
    for (std::size_t r1 = 0; r1 < col.k(); ++r1)
        for (std::size_t r2 = r1 + 1; r2 < col.k(); ++r2) {
            std::fill(seen.begin(), seen.end(), false);
            auto a = col.assignment(r1);
            auto b = col.assignment(r2);
            for (std::size_t v = 0; v < a.size(); ++v) {
                const std::size_t cell = a[v] * c + b[v];
                if (seen[cell])
                    return false;
                seen[cell] = true;
            }
        }
    return true;
}

}  // namespace detail

/// True iff no edge is monochromatic in any of the k colourings.
[[nodiscard]] inline bool is_proper(const Graph& g, const KOrthogonalColouring& col)
{
    detail::require_defined_on(g, col);
    for (const auto& colouring : col.assignments())
        for (const auto& [u, v] : g.edges())
            if (colouring[u] == colouring[v])
                return false;
    return true;
}

/// True iff every pair of colourings uses each ordered colour pair at most once.
/// Requires k >= 2.
[[nodiscard]] inline bool is_mutually_orthogonal(const KOrthogonalColouring& col)
{
    if (col.k() < 2)
        throw PreconditionError("mutual orthogonality needs k >= 2 colourings, got " + std::to_string(col.k()));
    return detail::orthogonal_pairs(col);
}

/// Recomputes the proper / orthogonal / perfect flags from scratch.
///
/// For k = 1 orthogonality holds vacuously and a colouring is never perfect.
/// Perfection means |V| = palette² with every colour pair realised exactly
/// once per colouring pair; given at-most-once orthogonality on palette²
/// vertices, exactly-once follows by counting.
[[nodiscard]] inline VerifyFlags verify(const Graph& g, const KOrthogonalColouring& col)
{
    VerifyFlags flags;
    flags.proper = is_proper(g, col);
    flags.orthogonal = detail::orthogonal_pairs(col);
    const std::size_t n = g.num_vertices();
    flags.perfect = flags.proper && flags.orthogonal && col.k() >= 2 && n == col.palette() * col.palette() &&
                    col.palette() == detail::ceil_sqrt(n);
    return flags;
}

[[nodiscard]] inline std::size_t sqrt_lower_bound(const Graph& g) noexcept
{
    return detail::ceil_sqrt(g.num_vertices());
}

/// The colouring restricted to `keep`; vertex keep[i] becomes i.
[[nodiscard]] inline KOrthogonalColouring restrict_colouring(const KOrthogonalColouring& col,
                                                             std::span<const Vertex> keep)
{
    std::vector<std::vector<Colour>> out(col.k(), std::vector<Colour>(keep.size()));
    for (std::size_t r = 0; r < col.k(); ++r)
        for (std::size_t i = 0; i < keep.size(); ++i)
            out[r][i] = col.colour(r, keep[i]);
    return {col.palette(), std::move(out)};
}

}  // namespace orthocol
