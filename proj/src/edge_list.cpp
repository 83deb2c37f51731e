#include "soltes/edge_list.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace soltes {

namespace {

constexpr std::string_view kConstructPrefix = "# construct: ";

[[noreturn]] void bad_line(std::size_t lineno, const std::string& line, const char* why) {
    std::ostringstream msg;
    msg << "edge list line " << lineno << ": " << why << " (\"" << line << "\")";
    throw std::invalid_argument(msg.str());
}

}  // namespace

EdgeListData read_edge_list(std::istream& in) {
    EdgeListData data;
    std::vector<std::pair<Vertex, Vertex>> edges;
    long long order = -1, declared_edges = -1;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.starts_with(kConstructPrefix))
                data.construct_selector = line.substr(kConstructPrefix.size());
            continue;
        }
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag == "p") {
            if (order >= 0) bad_line(lineno, line, "duplicate header");
            if (!(fields >> order >> declared_edges) || order < 0 || declared_edges < 0)
                bad_line(lineno, line, "malformed header");
        } else if (tag == "e") {
            if (order < 0) bad_line(lineno, line, "edge before header");
            long long u, v;
            if (!(fields >> u >> v)) bad_line(lineno, line, "malformed edge");
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        } else if (tag == "c") {
            if (order < 0) bad_line(lineno, line, "role line before header");
            long long id;
            if (!(fields >> id) || id < 0 || id >= order)
                bad_line(lineno, line, "role id out of range");
            data.cycle_marks.push_back(static_cast<Vertex>(id));
        } else {
            bad_line(lineno, line, "unknown line type");
        }
        std::string rest;
        if (fields >> rest) bad_line(lineno, line, "trailing tokens");
    }
    if (order < 0) throw std::invalid_argument("edge list is missing the `p <V> <E>` header");
    data.graph = Graph::from_edges(static_cast<int>(order), edges);
    if (data.graph.edge_count() != declared_edges) {
        std::ostringstream msg;
        msg << "edge list header declares " << declared_edges << " edges but the body has "
            << data.graph.edge_count() << " distinct edges";
        throw std::invalid_argument(msg.str());
    }
    std::sort(data.cycle_marks.begin(), data.cycle_marks.end());
    data.cycle_marks.erase(std::unique(data.cycle_marks.begin(), data.cycle_marks.end()),
                           data.cycle_marks.end());
    return data;
}

EdgeListData load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, std::span<const Vertex> cycle_marks,
                     std::string_view construct_selector) {
    if (!construct_selector.empty())
        out << kConstructPrefix << construct_selector << "\n";
    out << "p " << g.order() << " " << g.edge_count() << "\n";
    std::vector<Vertex> marks(cycle_marks.begin(), cycle_marks.end());
    std::sort(marks.begin(), marks.end());
    for (Vertex v : marks) out << "c " << v << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

std::string to_edge_list_string(const Graph& g, std::span<const Vertex> cycle_marks,
                                std::string_view construct_selector) {
    std::ostringstream out;
    write_edge_list(out, g, cycle_marks, construct_selector);
    return out.str();
}

void save_edge_list(const std::string& path, const Graph& g,
                    std::span<const Vertex> cycle_marks, std::string_view construct_selector) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write graph file: " + path);
    write_edge_list(out, g, cycle_marks, construct_selector);
}

}  // namespace soltes
