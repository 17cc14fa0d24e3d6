#include "hyperchain/dot_export.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace hyperchain {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string export_dot(const ChainAnalysis& analysis,
                       const std::vector<std::string>& vertex_labels,
                       const std::string& graph_name) {
    const int n = analysis.graph.n;
    if (static_cast<int>(vertex_labels.size()) != n)
        throw std::invalid_argument("export_dot: label count mismatch");

    // condensation unit per vertex: recurrent component id, or a
    // transient unit keyed by vertex
    const int m = static_cast<int>(analysis.components.size());
    std::vector<int> unit(n, -1);
    std::vector<int> transients;
    for (int v = 0; v < n; ++v) {
        if (analysis.component_of[v] != -1) {
            unit[v] = analysis.component_of[v];
        } else {
            unit[v] = m + static_cast<int>(transients.size());
            transients.push_back(v);
        }
    }

    std::ostringstream out;
    out << "digraph " << graph_name << " {\n";
    out << "  rankdir=LR;\n";
    for (int c = 0; c < m; ++c) {
        out << "  comp" << c << " [shape=box, label=\"component " << c << " (size "
            << analysis.components[c].size() << ")\\n{";
        for (size_t i = 0; i < analysis.components[c].size(); ++i) {
            if (i) out << ",";
            out << escape(vertex_labels[analysis.components[c][i]]);
        }
        out << "}\"];\n";
    }
    for (size_t t = 0; t < transients.size(); ++t) {
        out << "  trans" << t << " [shape=ellipse, style=dashed, label=\""
            << escape(vertex_labels[transients[t]]) << "\"];\n";
    }

    auto node_name = [&](int u) {
        if (u < m) return "comp" + std::to_string(u);
        return "trans" + std::to_string(u - m);
    };
    std::set<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int w : analysis.graph.adj[v])
            if (unit[v] != unit[w]) edges.insert({unit[v], unit[w]});
    for (const auto& [from, to] : edges)
        out << "  " << node_name(from) << " -> " << node_name(to) << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace hyperchain
