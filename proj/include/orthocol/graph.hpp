#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orthocol {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..N-1.
///
/// Edges are stored normalized (first < second) and sorted lexicographically;
/// neighbour lists are sorted so adjacency tests are a binary search. The
/// object is immutable once built.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Pairs may be given in either
    /// orientation. Throws std::invalid_argument on self-loops, out-of-range
    /// endpoints or duplicate edges.
    Graph(std::size_t num_vertices, std::vector<Edge> edges)
        : num_vertices_(num_vertices), edges_(std::move(edges)), adjacency_(num_vertices)
    {
        for (auto& [u, v] : edges_) {
            if (u >= num_vertices || v >= num_vertices)
                throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                            "} has an endpoint out of range");
            if (u == v)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            if (u > v)
                std::swap(u, v);
        }
        std::sort(edges_.begin(), edges_.end());
        if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
            throw std::invalid_argument("duplicate edge {" + std::to_string(dup->first) + "," +
                                        std::to_string(dup->second) + "}");
        for (const auto& [u, v] : edges_) {
            adjacency_[u].push_back(v);
            adjacency_[v].push_back(u);
        }
        for (auto& list : adjacency_)
            std::sort(list.begin(), list.end());
    }

    [[nodiscard]] std::size_t num_vertices() const noexcept { return num_vertices_; }
    [[nodiscard]] std::size_t num_edges() const noexcept { return edges_.size(); }
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }

    [[nodiscard]] std::span<const Vertex> neighbours(Vertex v) const { return adjacency_.at(v); }
    [[nodiscard]] std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const
    {
        if (u >= num_vertices_ || v >= num_vertices_)
            return false;
        const auto& list = adjacency_[u];
        return std::binary_search(list.begin(), list.end(), v);
    }

    friend bool operator==(const Graph& a, const Graph& b) noexcept
    {
        return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
    }

private:
    std::size_t num_vertices_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

enum class ProductKind { Tensor, Cartesian, Strong };

[[nodiscard]] inline std::string_view to_string(ProductKind kind) noexcept
{
    switch (kind) {
    case ProductKind::Tensor: return "tensor";
    case ProductKind::Cartesian: return "cartesian";
    case ProductKind::Strong: return "strong";
    }
    return "tensor";
}

/// Parses "tensor", "cartesian" or "strong". Throws std::invalid_argument otherwise.
[[nodiscard]] inline ProductKind product_kind_from_string(std::string_view name)
{
    if (name == "tensor")
        return ProductKind::Tensor;
    if (name == "cartesian")
        return ProductKind::Cartesian;
    if (name == "strong")
        return ProductKind::Strong;
    throw std::invalid_argument("unknown product kind '" + std::string(name) + "'");
}

/// Total function from the vertices of a source graph into 0..target_size-1.
class VertexMap {
public:
    VertexMap(std::vector<Vertex> images, std::size_t target_size)
        : images_(std::move(images)), target_size_(target_size)
    {
        for (Vertex image : images_)
            if (image >= target_size_)
                throw std::invalid_argument("vertex map image " + std::to_string(image) + " out of range");
    }

    [[nodiscard]] Vertex operator()(Vertex v) const { return images_.at(v); }
    [[nodiscard]] std::size_t source_size() const noexcept { return images_.size(); }
    [[nodiscard]] std::size_t target_size() const noexcept { return target_size_; }
    [[nodiscard]] const std::vector<Vertex>& images() const noexcept { return images_; }

private:
    std::vector<Vertex> images_;
    std::size_t target_size_;
};

[[nodiscard]] inline Graph complete_graph(std::size_t n)
{
    std::vector<Edge> edges;
    edges.reserve(n * (n > 0 ? n - 1 : 0) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

[[nodiscard]] inline Graph edgeless_graph(std::size_t n) { return Graph(n, {}); }

/// Cycle 0-1-...-(n-1)-0. Requires n >= 3.
[[nodiscard]] inline Graph cycle_graph(std::size_t n)
{
    if (n < 3)
        throw std::invalid_argument("cycle_graph requires n >= 3, got " + std::to_string(n));
    std::vector<Edge> edges;
    edges.reserve(n);
    for (Vertex i = 0; i < n; ++i)
        edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph(n, std::move(edges));
}

/// Index of the pair (u, v) in a product whose second factor has
/// `second_size` vertices.
[[nodiscard]] constexpr Vertex pair_index(Vertex u, Vertex v, std::size_t second_size) noexcept
{
    return static_cast<Vertex>(u * second_size + v);
}

/// Tensor, Cartesian or strong product. Vertex (u, v) is numbered
/// u * |V(h)| + v.
[[nodiscard]] inline Graph product(const Graph& g, const Graph& h, ProductKind kind)
{
    const std::size_t m = h.num_vertices();
    std::vector<Edge> edges;
    const bool tensor = kind != ProductKind::Cartesian;
    const bool cartesian = kind != ProductKind::Tensor;

    if (tensor) {
        for (const auto& [u1, u2] : g.edges())
            for (const auto& [v1, v2] : h.edges()) {
                edges.emplace_back(pair_index(u1, v1, m), pair_index(u2, v2, m));
                edges.emplace_back(pair_index(u1, v2, m), pair_index(u2, v1, m));
            }
    }
    if (cartesian) {
        for (Vertex u = 0; u < g.num_vertices(); ++u)
            for (const auto& [v1, v2] : h.edges())
                edges.emplace_back(pair_index(u, v1, m), pair_index(u, v2, m));
        for (const auto& [u1, u2] : g.edges())
            for (Vertex v = 0; v < m; ++v)
                edges.emplace_back(pair_index(u1, v, m), pair_index(u2, v, m));
    }
    return Graph(g.num_vertices() * m, std::move(edges));
}

/// True iff `map` is injective and sends every edge of `src` to an edge of `dst`.
[[nodiscard]] inline bool check_embedding(const Graph& src, const Graph& dst, const VertexMap& map)
{
    if (map.source_size() != src.num_vertices() || map.target_size() != dst.num_vertices())
        return false;
    std::vector<bool> hit(dst.num_vertices(), false);
    for (Vertex image : map.images()) {
        if (hit[image])
            return false;
        hit[image] = true;
    }
    return std::all_of(src.edges().begin(), src.edges().end(),
                       [&](const Edge& e) { return dst.adjacent(map(e.first), map(e.second)); });
}

/// Subgraph induced by `keep` (in the given order); vertex keep[i] becomes i.
[[nodiscard]] inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep)
{
    std::vector<std::int64_t> position(g.num_vertices(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= g.num_vertices() || position[keep[i]] != -1)
            throw std::invalid_argument("induced_subgraph: vertex list must be distinct and in range");
        position[keep[i]] = static_cast<std::int64_t>(i);
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (position[u] >= 0 && position[v] >= 0)
            edges.emplace_back(static_cast<Vertex>(position[u]), static_cast<Vertex>(position[v]));
    return Graph(keep.size(), std::move(edges));
}

}  // namespace orthocol
