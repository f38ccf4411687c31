#include "semireg/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "semireg/errors.hpp"

namespace semireg {

using nlohmann::json;

std::string group_to_json(const PermGroup& group) {
    json j;
    j["degree"] = group.degree();
    j["generators"] = json::array();
    for (const auto& g : group.generators()) j["generators"].push_back(g.to_cycle_string());
    return j.dump(2) + "\n";
}

PermGroup group_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorKind::Parse, std::string("group file is not valid JSON: ") + e.what());
    }
    require(j.contains("degree") && j["degree"].is_number_integer(), ErrorKind::Parse,
            "group file needs an integer \"degree\"");
    require(j.contains("generators") && j["generators"].is_array(), ErrorKind::Parse,
            "group file needs a \"generators\" array");
    int degree = j["degree"].get<int>();
    require(degree >= 1, ErrorKind::Parse, "degree must be positive");
    std::vector<Permutation> gens;
    for (const auto& entry : j["generators"]) {
        require(entry.is_string(), ErrorKind::Parse, "generators must be cycle strings");
        gens.push_back(Permutation::parse_cycles(entry.get<std::string>(), degree));
    }
    return PermGroup(degree, std::move(gens));
}

std::string graph_to_text(const Graph& graph) {
    std::ostringstream out;
    auto edges = graph.edges();
    out << "graph " << graph.vertex_count() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

std::string digraph_to_text(const Digraph& digraph) {
    std::ostringstream out;
    out << "digraph " << digraph.vertex_count() << ' ' << digraph.arcs().size() << '\n';
    for (auto [u, v] : digraph.arcs()) out << u << ' ' << v << '\n';
    return out.str();
}

std::variant<Graph, Digraph> graph_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string kind;
    long long n = -1, m = -1;
    in >> kind >> n >> m;
    require(!in.fail() && (kind == "graph" || kind == "digraph") && n >= 0 && m >= 0,
            ErrorKind::Parse, "graph file must start with 'graph n m' or 'digraph n m'");
    std::vector<std::pair<int, int>> pairs;
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        in >> u >> v;
        require(!in.fail(), ErrorKind::Parse,
                "graph file ends after " + std::to_string(i) + " of " + std::to_string(m) +
                    " lines");
        require(u >= 0 && u < n && v >= 0 && v < n, ErrorKind::Parse,
                "endpoint out of range in graph file");
        pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (kind == "graph") return Graph::from_edges(static_cast<int>(n), pairs);
    return Digraph::from_arcs(static_cast<int>(n), std::move(pairs));
}

std::string certificate_to_json(const Certificate& cert) {
    json j;
    j["format"] = 1;
    j["element"] = cert.element.to_cycle_string();
    j["order"] = cert.order;
    j["cycle_length"] = cert.cycle_length;
    j["branch_trace"] = json::array();
    for (const auto& step : cert.trace) j["branch_trace"].push_back(step.to_string());
    j["verified"] = cert.verified;
    return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text, int degree) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorKind::Parse, std::string("certificate is not valid JSON: ") + e.what());
    }
    require(j.value("format", 0) == 1, ErrorKind::Parse, "unsupported certificate format");
    Certificate cert;
    require(j.contains("element") && j["element"].is_string(), ErrorKind::Parse,
            "certificate needs an \"element\" cycle string");
    cert.element = Permutation::parse_cycles(j["element"].get<std::string>(), degree);
    cert.order = j.value("order", std::uint64_t{0});
    cert.cycle_length = j.value("cycle_length", 0);
    if (j.contains("branch_trace"))
        for (const auto& entry : j["branch_trace"])
            cert.trace.push_back(Step::parse(entry.get<std::string>()));
    cert.verified = j.value("verified", false);
    return cert;
}

std::string search_report_to_json(const SearchReport& report) {
    json j;
    j["format"] = 1;
    if (report.found)
        j["found"] = report.found->to_cycle_string();
    else
        j["found"] = nullptr;
    j["elements_scanned"] = report.elements_scanned;
    j["budget"] = report.budget;
    j["exhausted"] = report.exhausted;
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), ErrorKind::Parse, "cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), ErrorKind::Parse, "cannot write file: " + path);
    out << content;
}

} // namespace semireg
