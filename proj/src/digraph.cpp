#include "hyperchain/digraph.hpp"

#include <algorithm>
#include <numeric>

namespace hyperchain {

SccPartition strongly_connected_components(const Digraph& g) {
    const int n = g.n;
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    std::vector<std::vector<int>> comps;
    int next_index = 0;

    // explicit call stack of (vertex, next adjacency position)
    std::vector<std::pair<int, size_t>> call;
    for (int s = 0; s < n; ++s) {
        if (index[s] != -1) continue;
        call.emplace_back(s, 0);
        while (!call.empty()) {
            auto [v, pos] = call.back();
            call.pop_back();
            if (pos == 0) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            bool descended = false;
            const auto& out = g.adj[v];
            for (size_t k = pos; k < out.size(); ++k) {
                const int w = out[k];
                if (index[w] == -1) {
                    call.emplace_back(v, k + 1);
                    call.emplace_back(w, 0);
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], index[w]);
            }
            if (descended) continue;
            if (low[v] == index[v]) {
                std::vector<int> members;
                while (true) {
                    const int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = static_cast<int>(comps.size());
                    members.push_back(w);
                    if (w == v) break;
                }
                std::sort(members.begin(), members.end());
                comps.push_back(std::move(members));
            }
            if (!call.empty()) {
                const int parent = call.back().first;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }

    // renumber so components are ordered by smallest vertex
    std::vector<int> order(comps.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return comps[a][0] < comps[b][0]; });
    std::vector<int> rank(comps.size());
    for (size_t r = 0; r < order.size(); ++r) rank[order[r]] = static_cast<int>(r);

    SccPartition out;
    out.comps.resize(comps.size());
    for (size_t c = 0; c < comps.size(); ++c) out.comps[rank[c]] = std::move(comps[c]);
    out.comp_of.resize(n);
    for (int v = 0; v < n; ++v) out.comp_of[v] = rank[comp[v]];
    return out;
}

std::vector<int> reachable_from(const Digraph& g, int start,
                               const std::vector<bool>* allowed) {
    std::vector<bool> seen(g.n, false);
    std::vector<int> work;
    auto push = [&](int v) {
        if (!seen[v] && (allowed == nullptr || (*allowed)[v])) {
            seen[v] = true;
            work.push_back(v);
        }
    };
    if (allowed == nullptr || (*allowed)[start])
        for (int w : g.adj[start]) push(w);
    for (size_t i = 0; i < work.size(); ++i)
        for (int w : g.adj[work[i]]) push(w);
    std::sort(work.begin(), work.end());
    return work;
}

std::vector<std::vector<bool>> reachability_matrix(const Digraph& g) {
    std::vector<std::vector<bool>> reach(g.n, std::vector<bool>(g.n, false));
    for (int s = 0; s < g.n; ++s)
        for (int v : reachable_from(g, s)) reach[s][v] = true;
    return reach;
}

} // namespace hyperchain
