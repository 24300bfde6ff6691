#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orthocol/colouring.hpp"
#include "orthocol/errors.hpp"
#include "orthocol/graph.hpp"

namespace orthocol {

[[nodiscard]] constexpr bool is_prime(std::size_t p) noexcept
{
    if (p < 2)
        return false;
    for (std::size_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

namespace detail {

/// Returns s when n == s², otherwise 0 (n == 0 also yields 0).
[[nodiscard]] constexpr std::size_t exact_sqrt(std::size_t n) noexcept
{
    const std::size_t s = ceil_sqrt(n);
    return s * s == n ? s : 0;
}

inline void require_perfect(const Graph& g, const KOrthogonalColouring& col, const char* who)
{
    if (col.num_vertices() != g.num_vertices())
        throw PreconditionError(std::string(who) + ": colouring does not cover the graph's vertices");
    if (!verify(g, col).perfect)
        throw PreconditionError(std::string(who) + ": input colouring must be perfect");
}

inline void require_proper_orthogonal(const Graph& g, const KOrthogonalColouring& col, const char* who)
{
    if (col.num_vertices() != g.num_vertices())
        throw PreconditionError(std::string(who) + ": colouring does not cover the graph's vertices");
    if (col.k() < 2)
        throw PreconditionError(std::string(who) + ": needs k >= 2 colourings");
    const auto flags = verify(g, col);
    if (!flags.proper)
        throw PreconditionError(std::string(who) + ": input colouring must be proper");
    if (!flags.orthogonal)
        throw PreconditionError(std::string(who) + ": input colourings must be mutually orthogonal");
}

}  // namespace detail

/// K_n × K_n with vertex (i, j) coloured i in the first colouring and j in
/// the second. The result is a perfect orthogonal colouring.
[[nodiscard]] inline ColouredGraph knkn_perfect_colouring(std::size_t n)
{
    if (n < 1)
        throw PreconditionError("knkn: n must be at least 1");
    const Graph kn = complete_graph(n);
    std::vector<std::vector<Colour>> colours(2, std::vector<Colour>(n * n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            colours[0][i * n + j] = static_cast<Colour>(i);
            colours[1][i * n + j] = static_cast<Colour>(j);
        }
    return {product(kn, kn, ProductKind::Tensor), KOrthogonalColouring(n, std::move(colours))};
}

/// Sends v to the K_n × K_n vertex (c₀(v), c₁(v)), i.e. c₀(v)·n + c₁(v),
/// where n is the palette. The map is an embedding exactly when the
/// orthogonal colouring is proper.
[[nodiscard]] inline VertexMap embed_into_knkn(const Graph& g, const KOrthogonalColouring& col)
{
    if (col.k() != 2)
        throw PreconditionError("embed: expects a 2-orthogonal colouring, got k = " + std::to_string(col.k()));
    detail::require_proper_orthogonal(g, col, "embed");
    const std::size_t n = col.palette();
    std::vector<Vertex> images(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        images[v] = static_cast<Vertex>(col.colour(0, v) * n + col.colour(1, v));
    return {std::move(images), n * n};
}

/// Perfect orthogonal colouring of G × H from a perfect one of G (palette n)
/// and any H on m² vertices. H's vertex w is read as the pair (w / m, w % m);
/// the product vertex (v, (i, j)) gets colours f₀(v) + i·n and f₁(v) + j·n.
[[nodiscard]] inline ColouredGraph thm2_compose(const Graph& g, const KOrthogonalColouring& f, const Graph& h)
{
    if (detail::exact_sqrt(g.num_vertices()) == 0)
        throw PreconditionError("thm2: |V(g)| must be a perfect square");
    if (f.k() != 2)
        throw PreconditionError("thm2: expects a 2-orthogonal colouring of g");
    detail::require_perfect(g, f, "thm2");
    const std::size_t m = detail::exact_sqrt(h.num_vertices());
    if (m == 0)
        throw PreconditionError("thm2: |V(h)| must be a perfect square");

    const std::size_t n = f.palette();
    const std::size_t hv = h.num_vertices();
    std::vector<std::vector<Colour>> colours(2, std::vector<Colour>(g.num_vertices() * hv));
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (Vertex w = 0; w < hv; ++w) {
            const std::size_t i = w / m;
            const std::size_t j = w % m;
            const Vertex x = pair_index(v, w, hv);
            colours[0][x] = static_cast<Colour>(f.colour(0, v) + i * n);
            colours[1][x] = static_cast<Colour>(f.colour(1, v) + j * n);
        }
    return {product(g, h, ProductKind::Tensor), KOrthogonalColouring(n * m, std::move(colours))};
}

/// Colour classes of the product are products of colour classes: colouring r
/// gives (u, v) the colour cg_r(u)·m + ch_r(v), m being ch's palette.
///
/// Proper and orthogonal for every kind whenever both inputs are; perfect
/// when both inputs are perfect.
[[nodiscard]] inline ColouredGraph product_compose_k(const Graph& g, const KOrthogonalColouring& cg, const Graph& h,
                                                     const KOrthogonalColouring& ch, ProductKind kind)
{
    if (cg.k() != ch.k())
        throw PreconditionError("product-k: colourings have different k (" + std::to_string(cg.k()) + " vs " +
                                std::to_string(ch.k()) + ")");
    detail::require_proper_orthogonal(g, cg, "product-k (g)");
    detail::require_proper_orthogonal(h, ch, "product-k (h)");

    const std::size_t m = ch.palette();
    const std::size_t hv = h.num_vertices();
    std::vector<std::vector<Colour>> colours(cg.k(), std::vector<Colour>(g.num_vertices() * hv));
    for (std::size_t r = 0; r < cg.k(); ++r)
        for (Vertex u = 0; u < g.num_vertices(); ++u)
            for (Vertex v = 0; v < hv; ++v)
                colours[r][pair_index(u, v, hv)] = static_cast<Colour>(cg.colour(r, u) * m + ch.colour(r, v));
    return {product(g, h, kind), KOrthogonalColouring(cg.palette() * m, std::move(colours))};
}

/// Perfect k-orthogonal colouring of G × H for H on p² vertices, p prime,
/// from a perfect k-orthogonal colouring of G with k <= p.
///
/// H's vertex w is the pair (i, j) = (w / p, w % p). In colouring r the
/// vertex (v, (i, j)) lies on the line j ≡ i·r + t (mod p) and receives the
/// colour cg_r(v)·p + t, with t = (j − i·r) mod p.
[[nodiscard]] inline ColouredGraph thm5_compose(const Graph& g, const KOrthogonalColouring& cg, const Graph& h,
                                                std::size_t p)
{
    if (!is_prime(p))
        throw PreconditionError("thm5: p must be prime, got " + std::to_string(p));
    if (cg.k() > p)
        throw PreconditionError("thm5: requires k <= p, got k = " + std::to_string(cg.k()) +
                                ", p = " + std::to_string(p));
    if (h.num_vertices() != p * p)
        throw PreconditionError("thm5: |V(h)| must equal p² = " + std::to_string(p * p));
    detail::require_perfect(g, cg, "thm5");

    const std::size_t hv = h.num_vertices();
    std::vector<std::vector<Colour>> colours(cg.k(), std::vector<Colour>(g.num_vertices() * hv));
    for (std::size_t r = 0; r < cg.k(); ++r)
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            for (Vertex w = 0; w < hv; ++w) {
                const std::size_t i = w / p;
                const std::size_t j = w % p;
                const std::size_t line = (j + p * p - (i * r) % p) % p;
                colours[r][pair_index(v, w, hv)] = static_cast<Colour>(cg.colour(r, v) * p + line);
            }
    return {product(g, h, ProductKind::Tensor), KOrthogonalColouring(cg.palette() * p, std::move(colours))};
}

/// k mutually orthogonal Latin squares of prime order p, read as colourings
/// of the edgeless graph on the p² cells (i, j) ↦ i·p + j: rows, columns,
/// then ((r−1)·i + j) mod p for r = 2..k−1.
[[nodiscard]] inline ColouredGraph mols_colourings(std::size_t p, std::size_t k)
{
    if (!is_prime(p))
        throw PreconditionError("mols: p must be prime, got " + std::to_string(p));
    if (k < 2 || k > p + 1)
        throw PreconditionError("mols: requires 2 <= k <= p + 1, got k = " + std::to_string(k));
    std::vector<std::vector<Colour>> colours(k, std::vector<Colour>(p * p));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            const std::size_t cell = i * p + j;
            colours[0][cell] = static_cast<Colour>(i);
            colours[1][cell] = static_cast<Colour>(j);
            for (std::size_t r = 2; r < k; ++r)
                colours[r][cell] = static_cast<Colour>(((r - 1) * i + j) % p);
        }
    return {edgeless_graph(p * p), KOrthogonalColouring(p, std::move(colours))};
}

/// K_{p²} with the cliques on every colour class of the k MOLS colourings
/// removed. The MOLS colouring stays perfect, and every missing edge lies
/// inside some colour class.
[[nodiscard]] inline ColouredGraph caro_yuster_graph(std::size_t p, std::size_t k)
{
    auto mols = mols_colourings(p, k);
    const auto& col = mols.colouring;
    const std::size_t n = p * p;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            bool share = false;
            for (std::size_t r = 0; r < k && !share; ++r)
                share = col.colour(r, u) == col.colour(r, v);
            if (!share)
                edges.emplace_back(u, v);
        }
    return {Graph(n, std::move(edges)), std::move(mols.colouring)};
}

}  // namespace orthocol
