// Command-line driver: corpus generation, the semiregular finder, the
// exhaustive oracle, certificate verification, and the quotient/alternet
// inspectors. Exit codes: 0 success, 1 parse error, 2 precondition failure,
// 3 invariant violation.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "semireg/actions.hpp"
#include "semireg/alternets.hpp"
#include "semireg/corpus.hpp"
#include "semireg/errors.hpp"
#include "semireg/finder.hpp"
#include "semireg/io.hpp"
#include "semireg/oracle.hpp"

using namespace semireg;

namespace {

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::Parse:
        case ErrorKind::UnknownFamily:
            return 1;
        case ErrorKind::InvariantViolation:
            return 3;
        default:
            return 2;
    }
}

Graph load_graph(const std::string& path) {
    auto loaded = graph_from_text(read_file(path));
    require(std::holds_alternative<Graph>(loaded), ErrorKind::Parse,
            path + " holds a digraph where an undirected graph was expected");
    return std::get<Graph>(loaded);
}

Digraph load_digraph(const std::string& path) {
    auto loaded = graph_from_text(read_file(path));
    require(std::holds_alternative<Digraph>(loaded), ErrorKind::Parse,
            path + " holds an undirected graph where a digraph was expected");
    return std::get<Digraph>(loaded);
}

std::string sanitize(const std::string& name) {
    std::string out;
    for (char c : name) out += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"semireg: semiregular automorphisms of arc-transitive graphs"};
    app.require_subcommand(1);

    std::string graph_path, group_path, digraph_path, cert_path, out_prefix, family;
    std::uint64_t budget = kDefaultBudget;
    bool as_json = false;
    int vertex = 0;

    auto* gen = app.add_subcommand("gen", "write a graph/group pair for a named family");
    gen->add_option("family", family, "family spec, e.g. paley:17, complete:9, blowup:c5,4")
        ->required();
    gen->add_option("--out", out_prefix, "output path prefix (default: sanitized family name)");

    auto* find = app.add_subcommand("find", "find a semiregular automorphism of an 8-valent graph");
    find->add_option("--graph", graph_path)->required();
    find->add_option("--group", group_path)->required();
    find->add_option("--budget", budget);
    find->add_flag("--json", as_json);
    find->add_option("--out", cert_path, "also write the certificate JSON here");

    auto* oracle = app.add_subcommand("oracle", "exhaustive search for a semiregular element");
    oracle->add_option("--group", group_path)->required();
    oracle->add_option("--budget", budget);
    oracle->add_flag("--json", as_json);

    auto* verify = app.add_subcommand("verify", "re-check a certificate against a graph and group");
    verify->add_option("--cert", cert_path)->required();
    verify->add_option("--graph", graph_path);
    verify->add_option("--digraph", digraph_path);
    verify->add_option("--group", group_path)->required();

    auto* alternets = app.add_subcommand("alternets", "alternet classes of a digraph");
    alternets->add_option("--digraph", digraph_path)->required();
    alternets->add_option("--out", out_prefix, "write the digraph of alternets here");

    auto* quotient = app.add_subcommand("quotient", "quotient of a graph by a normal subgroup");
    quotient->add_option("--graph", graph_path)->required();
    quotient->add_option("--group", group_path)->required();
    quotient->add_option("--normal", cert_path)->required();

    auto* local = app.add_subcommand("local-action", "stabilizer action on a neighborhood");
    local->add_option("--graph", graph_path)->required();
    local->add_option("--group", group_path)->required();
    local->add_option("--vertex", vertex);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            CorpusPair pair = build_family(family);
            require(is_arc_transitive(pair.graph, pair.group), ErrorKind::InvariantViolation,
                    "family group is not arc-transitive on its graph");
            std::string prefix = out_prefix.empty() ? sanitize(family) : out_prefix;
            write_file(prefix + ".g", graph_to_text(pair.graph));
            write_file(prefix + ".json", group_to_json(pair.group));
            std::cout << prefix << ".g\n" << prefix << ".json\n";
        } else if (find->parsed()) {
            Graph graph = load_graph(graph_path);
            PermGroup group = group_from_json(read_file(group_path));
            FinderOptions opts;
            opts.budget = budget;
            Certificate cert = find_semiregular_8valent(graph, group, opts);
            std::string json = certificate_to_json(cert);
            if (!cert_path.empty()) write_file(cert_path, json);
            if (as_json) {
                std::cout << json;
            } else {
                std::cout << "element:      " << cert.element.to_cycle_string() << '\n'
                          << "order:        " << cert.order << '\n'
                          << "cycle length: " << cert.cycle_length << '\n'
                          << "trace:       ";
                for (const auto& s : cert.trace) std::cout << ' ' << s.to_string();
                std::cout << '\n' << "verified:     " << (cert.verified ? "true" : "false") << '\n';
            }
        } else if (oracle->parsed()) {
            PermGroup group = group_from_json(read_file(group_path));
            SearchReport report = brute_force_semiregular(group, budget);
            if (as_json) {
                std::cout << search_report_to_json(report);
            } else {
                std::cout << "found:    "
                          << (report.found ? report.found->to_cycle_string() : std::string("none"))
                          << '\n'
                          << "scanned:  " << report.elements_scanned << '\n'
                          << "budget:   " << report.budget << '\n'
                          << "exhausted: " << (report.exhausted ? "true" : "false") << '\n';
            }
        } else if (verify->parsed()) {
            PermGroup group = group_from_json(read_file(group_path));
            Certificate cert = certificate_from_json(read_file(cert_path), group.degree());
            VerifyResult result;
            if (!graph_path.empty())
                result = verify_certificate(cert, load_graph(graph_path), group);
            else if (!digraph_path.empty())
                result = verify_certificate(cert, load_digraph(digraph_path), group);
            else
                result = verify_certificate(cert, group);
            std::cout << "verified: " << (result.ok ? "true" : "false") << '\n';
            if (!result.ok) {
                std::cout << "reason: " << result.reason << '\n';
                return 2;
            }
        } else if (alternets->parsed()) {
            Digraph digraph = load_digraph(digraph_path);
            AlternetPartition partition = alternet_partition(digraph);
            bool degenerate = has_degenerate_class(partition);
            std::cout << "classes: " << partition.class_count() << '\n';
            for (int c = 0; c < partition.class_count(); ++c) {
                std::cout << "  class " << c << ": " << partition.classes[c].size() << " arcs,"
                          << " sources {";
                for (std::size_t i = 0; i < partition.sources[c].size(); ++i)
                    std::cout << (i ? "," : "") << partition.sources[c][i];
                std::cout << "}, sinks {";
                for (std::size_t i = 0; i < partition.sinks[c].size(); ++i)
                    std::cout << (i ? "," : "") << partition.sinks[c][i];
                std::cout << "}" << (is_degenerate(partition, c) ? " degenerate" : "") << '\n';
            }
            if (!degenerate) {
                std::cout << "loosely attached: "
                          << (is_loosely_attached(partition) ? "true" : "false") << '\n';
                auto [alg, vertex_class] = alternet_digraph(partition);
                if (!out_prefix.empty()) {
                    write_file(out_prefix, digraph_to_text(alg));
                    std::cout << "alternet digraph written to " << out_prefix << '\n';
                }
            } else {
                std::cout << "loosely attached: undefined (degenerate alternet present)\n";
            }
        } else if (quotient->parsed()) {
            Graph graph = load_graph(graph_path);
            PermGroup group = group_from_json(read_file(group_path));
            PermGroup normal = group_from_json(read_file(cert_path));
            QuotientData data = quotient_graph(graph, group, normal);
            std::cout << graph_to_text(data.quotient);
            std::cout << "orbits: " << data.orbits.size() << '\n'
                      << "kernel order: " << data.kernel.order() << '\n'
                      << "induced order: " << data.induced_group.order() << '\n';
        } else if (local->parsed()) {
            Graph graph = load_graph(graph_path);
            PermGroup group = group_from_json(read_file(group_path));
            PermGroup action = local_action(graph, group, vertex);
            std::cout << group_to_json(action);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
