#pragma once

#include <vector>

namespace hyperchain {

struct Digraph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    explicit Digraph(int vertices = 0) : n(vertices), adj(vertices) {}
    void add_arc(int u, int v) { adj[u].push_back(v); }
    int arc_count() const {
        int m = 0;
        for (const auto& a : adj) m += static_cast<int>(a.size());
        return m;
    }
};

/// Strongly connected components, iterative Tarjan. `comps` lists each
/// component's vertices sorted ascending; components are ordered by
/// their smallest vertex so results are reproducible.
struct SccPartition {
    std::vector<int> comp_of;             // vertex -> component id
    std::vector<std::vector<int>> comps;  // component id -> sorted vertices
};

SccPartition strongly_connected_components(const Digraph& g);

/// Vertices reachable from `start` by paths of length >= 1, optionally
/// restricted to arcs whose endpoints satisfy `allowed` (nullptr = all).
std::vector<int> reachable_from(const Digraph& g, int start,
                               const std::vector<bool>* allowed = nullptr);

/// Reachability closure as bitsets: reach[u][v] iff a path u -> v of
/// length >= 1 exists. Quadratic memory; meant for moderate n.
std::vector<std::vector<bool>> reachability_matrix(const Digraph& g);

} // namespace hyperchain
