#pragma once

// JSON interchange formats for graphs, certificates, designs and solver
// results. Output uses insertion-ordered objects so emitted bytes depend
// only on the value.

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "orthocol/colouring.hpp"
#include "orthocol/designs.hpp"
#include "orthocol/errors.hpp"
#include "orthocol/graph.hpp"
#include "orthocol/solver.hpp"

namespace orthocol::io {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& field(const Json& obj, const char* name, const std::string& where)
{
    if (!obj.is_object())
        throw FormatError(where + ": expected a JSON object");
    auto it = obj.find(name);
    if (it == obj.end())
        throw FormatError(where + ": missing field '" + name + "'");
    return *it;
}

inline std::size_t count(const Json& value, const std::string& where)
{
    if (!value.is_number_integer() || value.get<long long>() < 0)
        throw FormatError(where + ": expected a non-negative integer");
    return value.get<std::size_t>();
}

inline bool flag(const Json& value, const std::string& where)
{
    if (!value.is_boolean())
        throw FormatError(where + ": expected true or false");
    return value.get<bool>();
}

inline const Json& array(const Json& value, const std::string& where)
{
    if (!value.is_array())
        throw FormatError(where + ": expected an array");
    return value;
}

}  // namespace detail

[[nodiscard]] inline Json parse_text(const std::string& text, const std::string& where)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(where + ": invalid JSON (" + e.what() + ")");
    }
}

[[nodiscard]] inline Json read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw FormatError(path + ": cannot open file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_text(buffer.str(), path);
}

// ---- graph ---------------------------------------------------------------

[[nodiscard]] inline Json to_json(const Graph& g)
{
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back(Json::array({u, v}));
    return Json{{"num_vertices", g.num_vertices()}, {"edges", std::move(edges)}};
}

[[nodiscard]] inline Graph graph_from_json(const Json& j, const std::string& where = "graph")
{
    const std::size_t n = detail::count(detail::field(j, "num_vertices", where), where + ".num_vertices");
    const Json& list = detail::array(detail::field(j, "edges", where), where + ".edges");
    std::vector<Edge> edges;
    edges.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string at = where + ".edges[" + std::to_string(i) + "]";
        const Json& e = list[i];
        if (!e.is_array() || e.size() != 2)
            throw FormatError(at + ": expected a pair [u, v]");
        const std::size_t u = detail::count(e[0], at);
        const std::size_t v = detail::count(e[1], at);
        if (u >= n || v >= n)
            throw FormatError(at + ": endpoint out of range for num_vertices = " + std::to_string(n));
        if (u == v)
            throw FormatError(at + ": self-loop");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw FormatError(where + ".edges: " + e.what());
    }
}

// ---- certificates ----------------------------------------------------------

[[nodiscard]] inline Json to_json(const VerifyFlags& flags)
{
    return Json{{"proper", flags.proper}, {"orthogonal", flags.orthogonal}, {"perfect", flags.perfect}};
}

[[nodiscard]] inline VerifyFlags flags_from_json(const Json& j, const std::string& where)
{
    return {detail::flag(detail::field(j, "proper", where), where + ".proper"),
            detail::flag(detail::field(j, "orthogonal", where), where + ".orthogonal"),
            detail::flag(detail::field(j, "perfect", where), where + ".perfect")};
}

[[nodiscard]] inline Json to_json(const ColouringCertificate& cert)
{
    Json colourings = Json::array();
    for (const auto& a : cert.colouring.assignments())
        colourings.push_back(a);
    return Json{{"graph", to_json(cert.graph)},
                {"k", cert.colouring.k()},
                {"palette", cert.colouring.palette()},
                {"colourings", std::move(colourings)},
                {"claims", to_json(cert.claims)}};
}

[[nodiscard]] inline ColouringCertificate certificate_from_json(const Json& j, const std::string& where = "certificate")
{
    ColouringCertificate cert;
    cert.graph = graph_from_json(detail::field(j, "graph", where), where + ".graph");
    const std::size_t k = detail::count(detail::field(j, "k", where), where + ".k");
    const std::size_t palette = detail::count(detail::field(j, "palette", where), where + ".palette");
    if (k < 1)
        throw FormatError(where + ".k: must be at least 1");
    if (palette < 1)
        throw FormatError(where + ".palette: must be at least 1");
    const Json& list = detail::array(detail::field(j, "colourings", where), where + ".colourings");
    if (list.size() != k)
        throw FormatError(where + ".colourings: holds " + std::to_string(list.size()) + " colourings but k = " +
                          std::to_string(k));
    std::vector<std::vector<Colour>> assignments(k);
    for (std::size_t r = 0; r < k; ++r) {
        const std::string at = where + ".colourings[" + std::to_string(r) + "]";
        const Json& row = detail::array(list[r], at);
        if (row.size() != cert.graph.num_vertices())
            throw FormatError(at + ": colours " + std::to_string(row.size()) + " vertices, graph has " +
                              std::to_string(cert.graph.num_vertices()));
        assignments[r].reserve(row.size());
        for (std::size_t v = 0; v < row.size(); ++v) {
            const std::size_t c = detail::count(row[v], at + "[" + std::to_string(v) + "]");
            if (c >= palette)
                throw FormatError(at + "[" + std::to_string(v) + "]: colour " + std::to_string(c) +
                                  " outside palette " + std::to_string(palette));
            assignments[r].push_back(static_cast<Colour>(c));
        }
    }
    cert.colouring = KOrthogonalColouring(palette, std::move(assignments));
    cert.claims = flags_from_json(detail::field(j, "claims", where), where + ".claims");
    return cert;
}

/// Certificate whose claims are exactly the recomputed flags.
[[nodiscard]] inline ColouringCertificate certify(Graph g, KOrthogonalColouring col)
{
    const auto flags = verify(g, col);
    return {std::move(g), std::move(col), flags};
}

// ---- designs -----------------------------------------------------------------

[[nodiscard]] inline Json to_json(const TransversalDesign& d)
{
    std::vector<std::vector<Colour>> rows;
    rows.reserve(d.blocks.size());
    for (const auto& block : d.blocks) {
        std::vector<Colour> row(d.k);
        for (const Point& pt : block)
            if (pt.group < d.k)
                row[pt.group] = pt.colour;
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    return Json{{"n", d.n}, {"k", d.k}, {"blocks", rows}};
}

[[nodiscard]] inline TransversalDesign design_from_json(const Json& j, const std::string& where = "design")
{
    TransversalDesign d;
    d.n = detail::count(detail::field(j, "n", where), where + ".n");
    d.k = detail::count(detail::field(j, "k", where), where + ".k");
    const Json& list = detail::array(detail::field(j, "blocks", where), where + ".blocks");
    for (std::size_t b = 0; b < list.size(); ++b) {
        const std::string at = where + ".blocks[" + std::to_string(b) + "]";
        const Json& row = detail::array(list[b], at);
        if (row.size() != d.k)
            throw FormatError(at + ": expected " + std::to_string(d.k) + " colours");
        Block block;
        for (std::size_t r = 0; r < d.k; ++r)
            block.push_back({r, static_cast<Colour>(detail::count(row[r], at + "[" + std::to_string(r) + "]"))});
        d.blocks.push_back(std::move(block));
    }
    return d;
}

// ---- solver ------------------------------------------------------------------

[[nodiscard]] inline Json to_json(const Graph& g, const SolveResult& result)
{
    Json out{{"status", std::string(to_string(result.status))}};
    out["value"] = result.value ? Json(*result.value) : Json(nullptr);
    out["nodes"] = result.nodes;
    out["witness"] = result.witness ? to_json(certify(g, *result.witness)) : Json(nullptr);
    return out;
}

}  // namespace orthocol::io
