#pragma once

#include "hyperchain/check.hpp"
#include "hyperchain/conley.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>

namespace hyperchain {

using SubsetMask = std::uint64_t;

/// Reads HYPERCHAIN_MAX_LIFT when set, otherwise 12: the largest base
/// size for which the full hyperspace (all nonempty subsets) is built.
int default_lift_cap();

inline constexpr int kLiftAll = -1;

/// The lifted system: one point per nonempty subset of the base space
/// (up to max_card), distances by the Hausdorff metric, map A -> f(A).
/// Subsets are ordered by cardinality then lexicographically on their
/// sorted index lists, so every run enumerates identically. Hausdorff
/// distances are evaluated per query; no full matrix is stored.
class HyperSystem {
public:
    int size() const { return static_cast<int>(masks_.size()); }
    int image_of(int i) const { return image_.at(i); }
    double distance(int i, int j) const;
    double min_positive_distance() const;

    const DiscreteSystem& base() const { return base_; }
    int max_card() const { return max_card_; }
    const std::vector<SubsetMask>& masks() const { return masks_; }
    SubsetMask mask_of(int i) const { return masks_.at(i); }
    int index_of_mask(SubsetMask m) const; // -1 when absent
    IndexSet set_of(int i) const;
    std::string label_of(int i) const; // e.g. "{a,b}"

    /// All hyper indices whose subset lies inside `base_points`.
    std::vector<int> indices_within(const IndexSet& base_points) const;

    friend HyperSystem lift(const DiscreteSystem& sys, int max_card,
                            std::optional<int> all_cap);

private:
    DiscreteSystem base_;
    int max_card_ = 0;
    std::vector<SubsetMask> masks_;
    std::unordered_map<SubsetMask, int> index_;
    std::vector<int> image_;

    explicit HyperSystem(DiscreteSystem base) : base_(std::move(base)) {}
};

/// Builds the hyperspace. max_card = kLiftAll lifts every nonempty
/// subset and requires base size <= all_cap (default_lift_cap() when
/// unset). Throws ResourceError past the caps.
HyperSystem lift(const DiscreteSystem& sys, int max_card = kLiftAll,
                 std::optional<int> all_cap = std::nullopt);

/// Union of the member subsets of a collection of hyper points.
IndexSet project(const HyperSystem& hyper, const std::vector<int>& collection);
IndexSet project_masks(const std::vector<SubsetMask>& masks);

/// Verifies the hyperspace set identities on a family of base subsets:
/// the intersection identity (holds), the union and complement
/// identities (one-sided; equality counterexamples are produced as
/// expected-fail witnesses whenever they exist), and the image
/// inclusion f(K(U)) within K(f(U)).
CheckReport set_identity_check(const DiscreteSystem& sys,
                               const std::vector<IndexSet>& family);

/// Chain transitivity of a collection of hyper points: the chain graph
/// restricted to the collection connects every ordered pair by a path
/// of length >= 1. The collection must be invariant under the induced
/// map (std::domain_error otherwise).
bool is_chain_transitive(const HyperSystem& hyper, const std::vector<int>& collection,
                         Semantics sem);

/// The class of subsets spanning exactly the base chain components in
/// `component_ids`: contained in their union and meeting each of them.
std::vector<int> spanning_class(const HyperSystem& hyper,
                                const ChainAnalysis& base_analysis,
                                const std::vector<int>& component_ids);

struct SpanningClassTable {
    std::vector<std::vector<int>> class_components; // J, as base component ids
    std::vector<std::vector<int>> class_members;    // hyper indices per class
};

/// One class per nonempty subset of base components (requires the full
/// lift and at most 20 base components).
SpanningClassTable spanning_classes(const HyperSystem& hyper,
                                    const ChainAnalysis& base_analysis);

struct MainTheoremReport {
    IndexSet base_recurrent;
    std::vector<int> lifted_of_base;   // hyper indices of subsets of base_recurrent
    std::vector<int> hyper_recurrent;  // hyper indices
    std::vector<int> missing_in_hyper; // lifted_of_base \ hyper_recurrent
    std::vector<int> extra_in_hyper;   // hyper_recurrent \ lifted_of_base
    CheckReport report;
};

/// EXACT: checks the set equality {B : B within C} = C-bar.
/// EPS: checks the one-sided inclusion and reports the difference.
MainTheoremReport main_theorem_check(const DiscreteSystem& sys, Semantics sem,
                                     std::optional<int> all_cap = std::nullopt);

struct PartitionReport {
    SpanningClassTable table;
    CheckReport report;
};

/// Verifies that the spanning classes are pairwise disjoint, invariant
/// under the induced map, nonempty (each contains the union of its
/// components, a fixed point under EXACT), and cover the hyper
/// recurrent set.
PartitionReport partition_check(const HyperSystem& hyper,
                                const ChainAnalysis& base_analysis);

struct AttractorLiftReport {
    std::vector<AttractorRecord> base_records;
    CheckReport report;
};

/// For every base attractor (U = basin, A, A*): K(U) traps the lifted
/// system, its hyper attractor equals {B : B within A}, and the hyper
/// dual is compared against the stated form {B : B within A*}
/// (expected-fail with a straddling witness whenever A* is nonempty)
/// and the corrected form {B : B meets A*}. Also checks that every
/// hyper attractor projects onto a base attractor.
AttractorLiftReport attractor_lift_check(const DiscreteSystem& sys, Semantics sem,
                                         std::optional<int> all_cap = std::nullopt);

/// Per-J structure: (i) every hyper chain component lies inside exactly
/// one spanning class; (ii) when every component P of J has K(P) chain
/// transitive, the class is exactly one hyper component; (iii) when all
/// base components qualify, the hyper component count is 2^|B| - 1.
CheckReport component_structure_check(const HyperSystem& hyper,
                                      const ChainAnalysis& base_analysis);

} // namespace hyperchain
