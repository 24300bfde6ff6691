#pragma once

// Command-line front end. Exit codes: 0 success, 1 a claimed property was
// refuted, 2 malformed input, 3 precondition violated.

#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "orthocol/orthocol.hpp"

namespace orthocol::cli {

enum ExitCode : int { kOk = 0, kRefuted = 1, kMalformed = 2, kPrecondition = 3 };

namespace detail {

inline void emit(std::ostream& out, const io::Json& j) { out << j.dump() << '\n'; }

inline ColouringCertificate load_certificate(const std::string& path)
{
    return io::certificate_from_json(io::read_file(path), path);
}

inline Graph load_graph(const std::string& path) { return io::graph_from_json(io::read_file(path), path); }

template <typename T>
const T& require(const std::optional<T>& value, const char* flag, const std::string& construction)
{
    if (!value)
        throw FormatError(construction + ": missing required option " + flag);
    return *value;
}

struct ConstructArgs {
    std::string name;
    std::optional<std::size_t> n, p, k;
    std::string kind = "tensor";
    std::optional<std::string> g_cert, h_cert, h_graph;
};

inline int construct(const ConstructArgs& a, std::ostream& out)
{
    ColouredGraph built;
    if (a.name == "knkn") {
        built = knkn_perfect_colouring(require(a.n, "--n", a.name));
    } else if (a.name == "mols") {
        built = mols_colourings(require(a.p, "--p", a.name), require(a.k, "--k", a.name));
    } else if (a.name == "caro-yuster") {
        built = caro_yuster_graph(require(a.p, "--p", a.name), require(a.k, "--k", a.name));
    } else if (a.name == "thm2") {
        const auto g = load_certificate(require(a.g_cert, "--g-cert", a.name));
        const auto h = load_graph(require(a.h_graph, "--h-graph", a.name));
        built = thm2_compose(g.graph, g.colouring, h);
    } else if (a.name == "product-k") {
        const ProductKind kind = product_kind_from_string(a.kind);
        const auto g = load_certificate(require(a.g_cert, "--g-cert", a.name));
        const auto h = load_certificate(require(a.h_cert, "--h-cert", a.name));
        built = product_compose_k(g.graph, g.colouring, h.graph, h.colouring, kind);
    } else if (a.name == "thm5") {
        const std::size_t p = require(a.p, "--p", a.name);
        // primality is reported before any file is touched
        if (!is_prime(p))
            throw PreconditionError("thm5: p must be prime, got " + std::to_string(p));
        const auto g = load_certificate(require(a.g_cert, "--g-cert", a.name));
        const auto h = load_graph(require(a.h_graph, "--h-graph", a.name));
        built = thm5_compose(g.graph, g.colouring, h, p);
    }
    emit(out, io::to_json(io::certify(std::move(built.graph), std::move(built.colouring))));
    return kOk;
}

inline int verify_certificate(const std::string& path, std::ostream& out, std::ostream& err)
{
    const auto cert = load_certificate(path);
    const VerifyFlags got = verify(cert.graph, cert.colouring);
    io::Json refuted = io::Json::array();
    if (cert.claims.proper && !got.proper)
        refuted.push_back("proper");
    if (cert.claims.orthogonal && !got.orthogonal)
        refuted.push_back("orthogonal");
    if (cert.claims.perfect && !got.perfect)
        refuted.push_back("perfect");
    const bool ok = refuted.empty();
    emit(out, io::Json{{"recomputed", io::to_json(got)},
                       {"claimed", io::to_json(cert.claims)},
                       {"refuted", refuted},
                       {"consistent", ok}});
    if (!ok)
        err << path << ": claim refuted: " << refuted.dump() << '\n';
    return ok ? kOk : kRefuted;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Orthogonal colourings: constructions, verification, exact search and transversal designs",
                 "orthocol"};
    app.require_subcommand(1);

    auto* product_cmd = app.add_subcommand("product", "Emit the product of two graphs");
    std::string first_file, second_file, product_kind = "tensor";
    product_cmd->add_option("first", first_file, "Graph JSON file")->required();
    product_cmd->add_option("second", second_file, "Graph JSON file")->required();
    product_cmd->add_option("--kind", product_kind, "tensor | cartesian | strong")
        ->check(CLI::IsMember({"tensor", "cartesian", "strong"}));

    auto* construct_cmd = app.add_subcommand("construct", "Build a coloured graph and emit its certificate");
    detail::ConstructArgs cargs;
    construct_cmd->add_option("construction", cargs.name, "knkn | thm2 | product-k | thm5 | mols | caro-yuster")
        ->required()
        ->check(CLI::IsMember({"knkn", "thm2", "product-k", "thm5", "mols", "caro-yuster"}));
    construct_cmd->add_option("--n", cargs.n, "Order of K_n x K_n (knkn)");
    construct_cmd->add_option("--p", cargs.p, "Prime modulus (thm5, mols, caro-yuster)");
    construct_cmd->add_option("--k", cargs.k, "Number of colourings (mols, caro-yuster)");
    construct_cmd->add_option("--kind", cargs.kind, "Product kind for product-k")
        ->check(CLI::IsMember({"tensor", "cartesian", "strong"}));
    construct_cmd->add_option("--g-cert", cargs.g_cert, "Certificate for the first factor");
    construct_cmd->add_option("--h-cert", cargs.h_cert, "Certificate for the second factor (product-k)");
    construct_cmd->add_option("--h-graph", cargs.h_graph, "Graph file for the second factor (thm2, thm5)");

    auto* verify_cmd = app.add_subcommand("verify", "Recompute a certificate's flags against its claims");
    std::string verify_file;
    verify_cmd->add_option("certificate", verify_file, "Certificate JSON file")->required();

    auto* solve_cmd = app.add_subcommand("solve", "Exact k-orthogonal chromatic number by backtracking");
    std::string solve_file;
    std::size_t solve_k = 2;
    std::optional<std::size_t> solve_palette;
    SolveBudget budget;
    std::optional<double> time_limit;
    solve_cmd->add_option("graph", solve_file, "Graph JSON file")->required();
    solve_cmd->add_option("--k", solve_k, "Number of mutually orthogonal colourings")->capture_default_str();
    solve_cmd->add_option("--max-nodes", budget.max_nodes, "Search node budget")->capture_default_str();
    solve_cmd->add_option("--time-limit", time_limit, "Wall-clock limit in seconds");
    solve_cmd->add_option("--palette", solve_palette, "Only decide this palette size");

    auto* design_cmd = app.add_subcommand("design", "Extract the transversal design of a perfect certificate");
    std::string design_file;
    design_cmd->add_option("certificate", design_file, "Certificate JSON file")->required();

    std::vector<const char*> argv{"orthocol"};
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "orthocol: " << e.what() << '\n';
        return kMalformed;
    }

    try {
        if (product_cmd->parsed()) {
            const Graph g = detail::load_graph(first_file);
            const Graph h = detail::load_graph(second_file);
            detail::emit(out, io::to_json(product(g, h, product_kind_from_string(product_kind))));
            return kOk;
        }
        if (construct_cmd->parsed())
            return detail::construct(cargs, out);
        if (verify_cmd->parsed())
            return detail::verify_certificate(verify_file, out, err);
        if (solve_cmd->parsed()) {
            const Graph g = detail::load_graph(solve_file);
            budget.time_limit_seconds = time_limit;
            const SolveResult result = solve_palette ? decide_k_orthogonal(g, solve_k, *solve_palette, budget)
                                                     : solve_exact(g, solve_k, budget);
            detail::emit(out, io::to_json(g, result));
            return kOk;
        }
        if (design_cmd->parsed()) {
            const auto cert = detail::load_certificate(design_file);
            detail::emit(out, io::to_json(to_transversal_design(cert.graph, cert.colouring)));
            return kOk;
        }
    } catch (const FormatError& e) {
        err << "orthocol: " << e.what() << '\n';
        return kMalformed;
    } catch (const PreconditionError& e) {
        err << "orthocol: " << e.what() << '\n';
        return kPrecondition;
    } catch (const std::exception& e) {
        err << "orthocol: " << e.what() << '\n';
        return kMalformed;
    }
    return kMalformed;
}

}  // namespace orthocol::cli
