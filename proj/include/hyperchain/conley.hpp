#pragma once

#include "hyperchain/chain_analysis.hpp"

#include <cstdint>
#include <optional>

namespace hyperchain {

/// A trapping region with its attractor and repellor dual.
///
/// The dual is the complement of the attractor's basin: the points from
/// which no chain ever reaches a recurrent class of the attractor. On
/// EXACT semantics this coincides with the orbit-avoidance set
/// { x : O(x, f) does not meet the trap } for every trap generating the
/// attractor; on EPS semantics the chain relation branches and only the
/// basin-complement form keeps the Conley intersection identity.
struct AttractorRecord {
    IndexSet trap;
    IndexSet attractor;
    IndexSet dual; // may be empty

    bool operator==(const AttractorRecord&) const = default;
};

enum class EnumerationMode { Brute, Condensation };

struct EnumerationLimits {
    int brute_max_points = 16;
    std::size_t max_lower_sets = std::size_t{1} << 20;
};

/// Trapping under either semantics: every chain-graph arc leaving U
/// lands inside U. On EXACT graphs this is f(U) within U.
bool is_trapping(const ChainAnalysis& analysis, const IndexSet& u);

/// The attractor generated by a trapping region: its recurrent part
/// (equivalently, under EXACT, the omega-limit of the trap). Throws
/// std::invalid_argument naming a violating arc when U is not trapping.
AttractorRecord attractor_of(const ChainAnalysis& analysis, const IndexSet& u);

/// Largest trapping region generating the same attractor as `attractor`'s
/// recurrent classes: every point whose reachable recurrent classes all
/// lie inside the attractor.
IndexSet basin_of(const ChainAnalysis& analysis, const IndexSet& attractor);

IndexSet repellor_dual(const ChainAnalysis& analysis, const IndexSet& trap);

/// All attractors, deduplicated by attractor set and carrying the basin
/// as the canonical trap. Brute mode scans every nonempty subset
/// (requires n <= brute_max_points); condensation mode enumerates lower
/// sets of the component reachability order (aborts past max_lower_sets).
/// Records are sorted by attractor set (cardinality, then lexicographic).
std::vector<AttractorRecord> enumerate_attractors(const ChainAnalysis& analysis,
                                                  EnumerationMode mode,
                                                  const EnumerationLimits& limits = {});

/// Intersection over all attractors of (attractor plus dual); equals the
/// chain recurrent set.
IndexSet conley_intersection(const ChainAnalysis& analysis,
                             const EnumerationLimits& limits = {});

// Convenience wrappers constructing the analysis from a system.

template <SystemLike S>
bool is_trapping(const S& sys, Semantics sem, const IndexSet& u) {
    return is_trapping(analyze(sys, sem), u);
}

template <SystemLike S>
AttractorRecord attractor_of(const S& sys, Semantics sem, const IndexSet& u) {
    return attractor_of(analyze(sys, sem), u);
}

template <SystemLike S>
IndexSet repellor_dual(const S& sys, Semantics sem, const IndexSet& trap) {
    return repellor_dual(analyze(sys, sem), trap);
}

template <SystemLike S>
std::vector<AttractorRecord> enumerate_attractors(const S& sys, Semantics sem,
                                                  EnumerationMode mode,
                                                  const EnumerationLimits& limits = {}) {
    return enumerate_attractors(analyze(sys, sem), mode, limits);
}

template <SystemLike S>
IndexSet conley_intersection(const S& sys, Semantics sem,
                             const EnumerationLimits& limits = {}) {
    return conley_intersection(analyze(sys, sem), limits);
}

} // namespace hyperchain
