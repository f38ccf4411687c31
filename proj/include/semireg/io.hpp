#pragma once

#include <string>
#include <variant>

#include "semireg/finder.hpp"
#include "semireg/graph.hpp"
#include "semireg/group.hpp"
#include "semireg/oracle.hpp"

namespace semireg {

// Group file: {"degree": n, "generators": ["(1,2,3)(4,5)", ...]} with
// 1-indexed disjoint cycles; "()" is the identity.
std::string group_to_json(const PermGroup& group);
PermGroup group_from_json(const std::string& text);

// Graph file: "graph n m" or "digraph n m", then m lines "u v" (0-indexed);
// undirected files list each edge once.
std::string graph_to_text(const Graph& graph);
std::string digraph_to_text(const Digraph& digraph);
std::variant<Graph, Digraph> graph_from_text(const std::string& text);

// Certificate: {"format": 1, "element": "...", "order": k, "cycle_length": c,
// "branch_trace": [...], "verified": true}.
std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text, int degree);

std::string search_report_to_json(const SearchReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace semireg
