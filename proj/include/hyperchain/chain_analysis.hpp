#pragma once

#include "hyperchain/digraph.hpp"
#include "hyperchain/discrete_system.hpp"
#include "hyperchain/semantics.hpp"

#include <concepts>

namespace hyperchain {

/// Anything that looks like a discrete system: a point count, a total
/// self-map by index, and pairwise distances. DiscreteSystem and
/// HyperSystem both qualify; the hyperspace computes its distances
/// lazily, so chain-graph construction never materializes a full
/// Hausdorff matrix.
template <class S>
concept SystemLike = requires(const S& s, int i, int j) {
    { s.size() } -> std::convertible_to<int>;
    { s.image_of(i) } -> std::convertible_to<int>;
    { s.distance(i, j) } -> std::convertible_to<double>;
};

/// Arc i -> j iff dist(f(x_i), x_j) < eps (strict); EXACT gives the
/// functional graph i -> image[i].
template <SystemLike S>
Digraph chain_graph(const S& sys, Semantics sem) {
    const int n = sys.size();
    Digraph g(n);
    if (sem.is_exact()) {
        for (int i = 0; i < n; ++i) g.add_arc(i, sys.image_of(i));
        return g;
    }
    const double eps = sem.epsilon();
    for (int i = 0; i < n; ++i) {
        const int fi = sys.image_of(i);
        for (int j = 0; j < n; ++j)
            if (sys.distance(fi, j) < eps) g.add_arc(i, j);
    }
    return g;
}

/// Chain structure of one system under one semantics: the chain digraph,
/// the recurrent vertices (those on a cycle), the chain components
/// (strongly connected classes of recurrent vertices), and the
/// reachability order among components. Immutable once built.
struct ChainAnalysis {
    Semantics semantics = Semantics::exact();
    Digraph graph;
    SccPartition sccs;                   // all SCCs, including transient singletons
    std::vector<bool> recurrent_mask;
    IndexSet recurrent;
    std::vector<IndexSet> components;    // ordered by smallest member
    std::vector<int> component_of;       // vertex -> component id, -1 if transient
    /// Arc P -> Q iff some chain of length >= 1 leads from P-points to
    /// Q-points (transitively closed, flow direction). Lower sets of
    /// this order parametrize attractors.
    Digraph component_order;
};

/// Shared post-processing once the chain graph is known.
ChainAnalysis analyze_graph(Digraph g, Semantics sem);

template <SystemLike S>
ChainAnalysis analyze(const S& sys, Semantics sem) {
    return analyze_graph(chain_graph(sys, sem), sem);
}

/// C_eps(x, f): ends of chains of length >= 1 starting at x.
template <SystemLike S>
IndexSet chain_reachable(const S& sys, Semantics sem, int x) {
    if (x < 0 || x >= sys.size()) throw std::invalid_argument("chain_reachable: bad index");
    const Digraph g = chain_graph(sys, sem);
    return reachable_from(g, x);
}

/// { x : x is reachable from itself by a chain of length >= 1 }.
template <SystemLike S>
IndexSet chain_recurrent_set(const S& sys, Semantics sem) {
    return analyze(sys, sem).recurrent;
}

template <SystemLike S>
ChainAnalysis chain_components(const S& sys, Semantics sem) {
    return analyze(sys, sem);
}

/// True iff a path of length >= 1 from x to y exists in the chain graph
/// restricted to the vertices of `within`.
bool exists_chain_within(const ChainAnalysis& analysis, int x, int y,
                         const IndexSet& within);

template <SystemLike S>
bool exists_chain_within(const S& sys, Semantics sem, int x, int y,
                         const IndexSet& within) {
    return exists_chain_within(analyze(sys, sem), x, y, within);
}

} // namespace hyperchain
