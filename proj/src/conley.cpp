#include "hyperchain/conley.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace hyperchain {

namespace {

std::optional<std::pair<int, int>> violating_arc(const ChainAnalysis& analysis,
                                                 const std::vector<bool>& in_u) {
    for (int v = 0; v < analysis.graph.n; ++v) {
        if (!in_u[v]) continue;
        for (int w : analysis.graph.adj[v])
            if (!in_u[w]) return std::make_pair(v, w);
    }
    return std::nullopt;
}

std::vector<bool> membership(const IndexSet& s, int n) {
    std::vector<bool> in(n, false);
    for (int v : s) in[v] = true;
    return in;
}

/// Per-vertex bitset of recurrent component ids reachable by chains of
/// length >= 1 (a recurrent vertex always reaches its own class).
struct ReachContext {
    int words = 0;
    std::vector<std::vector<std::uint64_t>> vertex_reach;
};

ReachContext build_reach_context(const ChainAnalysis& analysis) {
    const int n = analysis.graph.n;
    const int num_sccs = static_cast<int>(analysis.sccs.comps.size());
    const int m = static_cast<int>(analysis.components.size());
    ReachContext ctx;
    ctx.words = (m + 63) / 64;

    // condensation arcs between distinct SCCs
    std::vector<std::set<int>> succ(num_sccs);
    for (int v = 0; v < n; ++v)
        for (int w : analysis.graph.adj[v])
            if (analysis.sccs.comp_of[v] != analysis.sccs.comp_of[w])
                succ[analysis.sccs.comp_of[v]].insert(analysis.sccs.comp_of[w]);

    // Kahn topological order of the condensation
    std::vector<int> indeg(num_sccs, 0);
    for (int c = 0; c < num_sccs; ++c)
        for (int d : succ[c]) ++indeg[d];
    std::vector<int> topo;
    topo.reserve(num_sccs);
    for (int c = 0; c < num_sccs; ++c)
        if (indeg[c] == 0) topo.push_back(c);
    for (size_t i = 0; i < topo.size(); ++i)
        for (int d : succ[topo[i]])
            if (--indeg[d] == 0) topo.push_back(d);

    std::vector<std::vector<std::uint64_t>> scc_reach(
        num_sccs, std::vector<std::uint64_t>(ctx.words, 0));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        const int c = *it;
        auto& bits = scc_reach[c];
        const int rep = analysis.sccs.comps[c][0];
        const int rc = analysis.component_of[rep];
        if (rc != -1) bits[rc / 64] |= std::uint64_t{1} << (rc % 64);
        for (int d : succ[c])
            for (int w = 0; w < ctx.words; ++w) bits[w] |= scc_reach[d][w];
    }

    ctx.vertex_reach.resize(n);
    for (int v = 0; v < n; ++v) ctx.vertex_reach[v] = scc_reach[analysis.sccs.comp_of[v]];
    return ctx;
}

IndexSet basin_from_context(const ChainAnalysis& analysis, const ReachContext& ctx,
                            const std::vector<std::uint64_t>& class_mask) {
    IndexSet basin;
    for (int v = 0; v < analysis.graph.n; ++v) {
        bool inside = true;
        for (int w = 0; w < ctx.words; ++w)
            if (ctx.vertex_reach[v][w] & ~class_mask[w]) {
                inside = false;
                break;
            }
        if (inside) basin.push_back(v);
    }
    return basin;
}

std::vector<std::uint64_t> class_mask_of_attractor(const ChainAnalysis& analysis,
                                                   const IndexSet& attractor, int words) {
    std::vector<std::uint64_t> mask(std::max(words, 1), 0);
    for (int v : attractor) {
        const int rc = analysis.component_of[v];
        if (rc != -1) mask[rc / 64] |= std::uint64_t{1} << (rc % 64);
    }
    return mask;
}

IndexSet complement(const IndexSet& s, int n) {
    IndexSet out;
    out.reserve(n - s.size());
    size_t p = 0;
    for (int v = 0; v < n; ++v) {
        if (p < s.size() && s[p] == v)
            ++p;
        else
            out.push_back(v);
    }
    return out;
}

void sort_records(std::vector<AttractorRecord>& records) {
    std::sort(records.begin(), records.end(),
              [](const AttractorRecord& a, const AttractorRecord& b) {
                  if (a.attractor.size() != b.attractor.size())
                      return a.attractor.size() < b.attractor.size();
                  return a.attractor < b.attractor;
              });
}

} // namespace

bool is_trapping(const ChainAnalysis& analysis, const IndexSet& u) {
    if (u.empty()) throw std::invalid_argument("is_trapping: set must be nonempty");
    if (!is_canonical_index_set(u, analysis.graph.n))
        throw std::invalid_argument("is_trapping: bad index set");
    return !violating_arc(analysis, membership(u, analysis.graph.n)).has_value();
}

IndexSet basin_of(const ChainAnalysis& analysis, const IndexSet& attractor) {
    const ReachContext ctx = build_reach_context(analysis);
    return basin_from_context(analysis, ctx,
                              class_mask_of_attractor(analysis, attractor, ctx.words));
}

AttractorRecord attractor_of(const ChainAnalysis& analysis, const IndexSet& u) {
    if (u.empty()) throw std::invalid_argument("attractor_of: set must be nonempty");
    if (!is_canonical_index_set(u, analysis.graph.n))
        throw std::invalid_argument("attractor_of: bad index set");
    const auto in_u = membership(u, analysis.graph.n);
    if (auto arc = violating_arc(analysis, in_u))
        throw std::invalid_argument("attractor_of: not a trapping region, arc " +
                                    std::to_string(arc->first) + " -> " +
                                    std::to_string(arc->second) + " leaves the set");
    AttractorRecord rec;
    rec.trap = u;
    for (int v : u)
        if (analysis.recurrent_mask[v]) rec.attractor.push_back(v);
    rec.dual = complement(basin_of(analysis, rec.attractor), analysis.graph.n);
    return rec;
}

IndexSet repellor_dual(const ChainAnalysis& analysis, const IndexSet& trap) {
    return attractor_of(analysis, trap).dual;
}

std::vector<AttractorRecord> enumerate_attractors(const ChainAnalysis& analysis,
                                                  EnumerationMode mode,
                                                  const EnumerationLimits& limits) {
    const int n = analysis.graph.n;
    std::vector<AttractorRecord> records;

    if (mode == EnumerationMode::Brute) {
        if (n > limits.brute_max_points)
            throw ResourceError("brute attractor enumeration capped at " +
                                std::to_string(limits.brute_max_points) +
                                " points; use condensation mode");
        std::vector<std::uint64_t> out_mask(n, 0);
        for (int v = 0; v < n; ++v)
            for (int w : analysis.graph.adj[v]) out_mask[v] |= std::uint64_t{1} << w;
        std::uint64_t recurrent_bits = 0;
        for (int v : analysis.recurrent) recurrent_bits |= std::uint64_t{1} << v;

        // attractor mask -> largest trap mask seen
        std::map<std::uint64_t, std::uint64_t> best_trap;
        const std::uint64_t top = (n == 64) ? ~std::uint64_t{0}
                                            : (std::uint64_t{1} << n) - 1;
        for (std::uint64_t mask = 1; mask <= top; ++mask) {
            bool trapping = true;
            for (std::uint64_t bits = mask; bits;) {
                const int v = std::countr_zero(bits);
                bits &= bits - 1;
                if (out_mask[v] & ~mask) {
                    trapping = false;
                    break;
                }
            }
            if (!trapping) continue;
            const std::uint64_t attractor = mask & recurrent_bits;
            auto [it, fresh] = best_trap.emplace(attractor, mask);
            if (!fresh && std::popcount(mask) > std::popcount(it->second))
                it->second = mask;
        }
        for (const auto& [attractor_bits, trap_bits] : best_trap) {
            AttractorRecord rec;
            for (int v = 0; v < n; ++v) {
                if (attractor_bits >> v & 1) rec.attractor.push_back(v);
                if (trap_bits >> v & 1) rec.trap.push_back(v);
            }
            rec.dual = complement(rec.trap, n);
            records.push_back(std::move(rec));
        }
        sort_records(records);
        return records;
    }

    // condensation mode: lower sets of the component reachability order
    const ReachContext ctx = build_reach_context(analysis);
    const int m = static_cast<int>(analysis.components.size());
    const int words = std::max(ctx.words, 1);
    std::vector<std::vector<std::uint64_t>> succ(m, std::vector<std::uint64_t>(words, 0));
    for (int c = 0; c < m; ++c)
        for (int d : analysis.component_order.adj[c])
            succ[c][d / 64] |= std::uint64_t{1} << (d % 64);

    std::set<std::vector<std::uint64_t>> seen;
    std::vector<std::vector<std::uint64_t>> frontier;
    seen.insert(std::vector<std::uint64_t>(words, 0));
    frontier.push_back(std::vector<std::uint64_t>(words, 0));
    std::vector<std::vector<std::uint64_t>> lower_sets;
    while (!frontier.empty()) {
        auto low = std::move(frontier.back());
        frontier.pop_back();
        lower_sets.push_back(low);
        if (lower_sets.size() > limits.max_lower_sets)
            throw ResourceError("lower-set enumeration exceeded cap of " +
                                std::to_string(limits.max_lower_sets));
        for (int c = 0; c < m; ++c) {
            if (low[c / 64] >> (c % 64) & 1) continue;
            bool closed = true;
            for (int w = 0; w < words; ++w)
                if (succ[c][w] & ~low[w]) {
                    closed = false;
                    break;
                }
            if (!closed) continue;
            auto next = low;
            next[c / 64] |= std::uint64_t{1} << (c % 64);
            if (seen.insert(next).second) frontier.push_back(std::move(next));
        }
    }

    for (const auto& low : lower_sets) {
        bool empty = true;
        for (int w = 0; w < words; ++w)
            if (low[w]) empty = false;
        if (empty) continue;
        AttractorRecord rec;
        for (int c = 0; c < m; ++c)
            if (low[c / 64] >> (c % 64) & 1)
                rec.attractor = set_union(rec.attractor, analysis.components[c]);
        rec.trap = basin_from_context(analysis, ctx, low);
        rec.dual = complement(rec.trap, n);
        records.push_back(std::move(rec));
    }
    sort_records(records);
    return records;
}

IndexSet conley_intersection(const ChainAnalysis& analysis,
                             const EnumerationLimits& limits) {
    const auto records =
        enumerate_attractors(analysis, EnumerationMode::Condensation, limits);
    IndexSet result;
    for (int v = 0; v < analysis.graph.n; ++v) result.push_back(v);
    for (const auto& rec : records)
        result = set_intersection(result, set_union(rec.attractor, rec.dual));
    return result;
}

} // namespace hyperchain
