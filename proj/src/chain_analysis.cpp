#include "hyperchain/chain_analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperchain {

ChainAnalysis analyze_graph(Digraph g, Semantics sem) {
    ChainAnalysis out;
    out.semantics = sem;
    out.graph = std::move(g);
    out.sccs = strongly_connected_components(out.graph);

    const int n = out.graph.n;
    out.recurrent_mask.assign(n, false);
    for (const auto& comp : out.sccs.comps) {
        if (comp.size() > 1) {
            for (int v : comp) out.recurrent_mask[v] = true;
        } else {
            const int v = comp[0];
            const auto& a = out.graph.adj[v];
            if (std::find(a.begin(), a.end(), v) != a.end())
                out.recurrent_mask[v] = true;
        }
    }
    for (int v = 0; v < n; ++v)
        if (out.recurrent_mask[v]) out.recurrent.push_back(v);

    out.component_of.assign(n, -1);
    for (const auto& comp : out.sccs.comps) {
        if (!out.recurrent_mask[comp[0]]) continue;
        const int id = static_cast<int>(out.components.size());
        for (int v : comp) out.component_of[v] = id;
        out.components.push_back(comp);
    }

    const int m = static_cast<int>(out.components.size());
    out.component_order = Digraph(m);
    for (int c = 0; c < m; ++c) {
        std::vector<bool> hits(m, false);
        for (int w : reachable_from(out.graph, out.components[c][0])) {
            const int d = out.component_of[w];
            if (d != -1 && d != c) hits[d] = true;
        }
        for (int d = 0; d < m; ++d)
            if (hits[d]) out.component_order.add_arc(c, d);
    }
    return out;
}

bool exists_chain_within(const ChainAnalysis& analysis, int x, int y,
                         const IndexSet& within) {
    const int n = analysis.graph.n;
    if (x < 0 || x >= n || y < 0 || y >= n)
        throw std::invalid_argument("exists_chain_within: bad index");
    if (!set_contains(within, x) || !set_contains(within, y))
        throw std::invalid_argument("exists_chain_within: endpoints must lie in the set");
    std::vector<bool> allowed(n, false);
    for (int v : within) allowed[v] = true;
    const std::vector<int> r = reachable_from(analysis.graph, x, &allowed);
    return std::binary_search(r.begin(), r.end(), y);
}

} // namespace hyperchain
