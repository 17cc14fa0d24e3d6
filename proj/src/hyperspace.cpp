#include "hyperchain/hyperspace.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace hyperchain {

namespace {

SubsetMask mask_of_set(const IndexSet& s) {
    SubsetMask m = 0;
    for (int v : s) m |= SubsetMask{1} << v;
    return m;
}

IndexSet set_of_mask(SubsetMask m) {
    IndexSet out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

/// Nonempty subsets of {0..n-1} with at most max_card elements, ordered
/// by cardinality then lexicographically on the sorted index lists.
std::vector<SubsetMask> enumerate_subsets_canonical(int n, int max_card) {
    std::vector<SubsetMask> out;
    for (int card = 1; card <= max_card; ++card) {
        std::vector<int> combo(card);
        for (int i = 0; i < card; ++i) combo[i] = i;
        while (true) {
            SubsetMask m = 0;
            for (int v : combo) m |= SubsetMask{1} << v;
            out.push_back(m);
            int pos = card - 1;
            while (pos >= 0 && combo[pos] == n - card + pos) --pos;
            if (pos < 0) break;
            ++combo[pos];
            for (int i = pos + 1; i < card; ++i) combo[i] = combo[i - 1] + 1;
        }
    }
    return out;
}

std::string label_of_mask(const FiniteMetricSpace& space, SubsetMask m) {
    std::string out = "{";
    bool first = true;
    for (int v : set_of_mask(m)) {
        if (!first) out += ",";
        out += space.label(v);
        first = false;
    }
    out += "}";
    return out;
}

double hausdorff_of_masks(const FiniteMetricSpace& space, SubsetMask a, SubsetMask b) {
    double worst = 0.0;
    for (SubsetMask bits = a; bits;) {
        const int x = std::countr_zero(bits);
        bits &= bits - 1;
        double best = std::numeric_limits<double>::infinity();
        for (SubsetMask other = b; other;) {
            const int y = std::countr_zero(other);
            other &= other - 1;
            best = std::min(best, space.distance(x, y));
        }
        worst = std::max(worst, best);
    }
    for (SubsetMask bits = b; bits;) {
        const int y = std::countr_zero(bits);
        bits &= bits - 1;
        double best = std::numeric_limits<double>::infinity();
        for (SubsetMask other = a; other;) {
            const int x = std::countr_zero(other);
            other &= other - 1;
            best = std::min(best, space.distance(x, y));
        }
        worst = std::max(worst, best);
    }
    return worst;
}

std::vector<int> sorted_indices(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

int default_lift_cap() {
    if (const char* env = std::getenv("HYPERCHAIN_MAX_LIFT")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 62) return static_cast<int>(v);
        throw std::invalid_argument("HYPERCHAIN_MAX_LIFT must be an integer in [1, 62]");
    }
    return 12;
}

double HyperSystem::distance(int i, int j) const {
    return hausdorff_of_masks(base_.space(), masks_.at(i), masks_.at(j));
}

double HyperSystem::min_positive_distance() const {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j) {
            const double d = distance(i, j);
            if (d > 0.0) best = std::min(best, d);
        }
    return best;
}

int HyperSystem::index_of_mask(SubsetMask m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

IndexSet HyperSystem::set_of(int i) const { return set_of_mask(masks_.at(i)); }

std::string HyperSystem::label_of(int i) const {
    return label_of_mask(base_.space(), masks_.at(i));
}

std::vector<int> HyperSystem::indices_within(const IndexSet& base_points) const {
    const SubsetMask allowed = mask_of_set(base_points);
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if ((masks_[i] & ~allowed) == 0) out.push_back(i);
    return out;
}

HyperSystem lift(const DiscreteSystem& sys, int max_card, std::optional<int> all_cap) {
    const int n = sys.size();
    if (n > 62)
        throw ResourceError("hyperspace lift supports at most 62 base points");
    int card = max_card;
    if (max_card == kLiftAll) {
        const int cap = all_cap.value_or(default_lift_cap());
        if (n > cap)
            throw ResourceError("full lift capped at " + std::to_string(cap) +
                                " base points (" + std::to_string(n) +
                                " given); pass a max cardinality instead");
        card = n;
    }
    if (card < 1) throw std::invalid_argument("lift: max_card must be >= 1");
    card = std::min(card, n);

    HyperSystem hyper(sys);
    hyper.max_card_ = card;
    hyper.masks_ = enumerate_subsets_canonical(n, card);
    if (hyper.masks_.size() > (std::size_t{1} << 22))
        throw ResourceError("hyperspace would have " +
                            std::to_string(hyper.masks_.size()) + " points");
    hyper.index_.reserve(hyper.masks_.size() * 2);
    for (int i = 0; i < static_cast<int>(hyper.masks_.size()); ++i)
        hyper.index_.emplace(hyper.masks_[i], i);

    std::vector<SubsetMask> point_image(n);
    for (int v = 0; v < n; ++v) point_image[v] = SubsetMask{1} << sys.image_of(v);
    hyper.image_.resize(hyper.masks_.size());
    for (int i = 0; i < static_cast<int>(hyper.masks_.size()); ++i) {
        SubsetMask img = 0;
        for (SubsetMask bits = hyper.masks_[i]; bits;) {
            img |= point_image[std::countr_zero(bits)];
            bits &= bits - 1;
        }
        const int target = hyper.index_of_mask(img);
        if (target == -1)
            throw std::logic_error("lift: image subset missing from enumeration");
        hyper.image_[i] = target;
    }
    return hyper;
}

IndexSet project_masks(const std::vector<SubsetMask>& masks) {
    SubsetMask u = 0;
    for (SubsetMask m : masks) u |= m;
    return set_of_mask(u);
}

IndexSet project(const HyperSystem& hyper, const std::vector<int>& collection) {
    if (collection.empty()) throw std::invalid_argument("project: empty collection");
    SubsetMask u = 0;
    for (int i : collection) u |= hyper.mask_of(i);
    return set_of_mask(u);
}

CheckReport set_identity_check(const DiscreteSystem& sys,
                               const std::vector<IndexSet>& family) {
    const int n = sys.size();
    if (n > 16)
        throw ResourceError("set_identity_check enumerates all subsets; space too large");
    CheckReport report;
    const FiniteMetricSpace& space = sys.space();

    std::vector<SubsetMask> fam;
    fam.reserve(family.size());
    for (const auto& s : family) fam.push_back(mask_of_set(s));

    const SubsetMask top = (SubsetMask{1} << n) - 1;
    if (!fam.empty()) {
        SubsetMask inter = top, uni = 0;
        for (SubsetMask a : fam) {
            inter &= a;
            uni |= a;
        }

        bool intersection_ok = true;
        SubsetMask intersection_witness = 0;
        for (SubsetMask b = 1; b <= top; ++b) {
            const bool lhs = (b & ~inter) == 0;
            bool rhs = true;
            for (SubsetMask a : fam)
                if (b & ~a) { rhs = false; break; }
            if (lhs != rhs) {
                intersection_ok = false;
                intersection_witness = b;
                break;
            }
        }
        report.add("intersection-identity", intersection_ok,
                   intersection_ok ? "" : label_of_mask(space, intersection_witness));

        bool inclusion_ok = true;
        SubsetMask equality_witness = 0;
        for (SubsetMask b = 1; b <= top; ++b) {
            bool in_some = false;
            for (SubsetMask a : fam)
                if ((b & ~a) == 0) { in_some = true; break; }
            const bool in_union_k = (b & ~uni) == 0;
            if (in_some && !in_union_k) inclusion_ok = false;
            if (in_union_k && !in_some && equality_witness == 0) equality_witness = b;
        }
        report.add("union-inclusion", inclusion_ok);
        if (equality_witness == 0)
            report.add("union-equality", true, "family is effectively nested");
        else
            report.add_status("union-equality", CheckStatus::ExpectedFail,
                              "witness " + label_of_mask(space, equality_witness) +
                                  " lies in K(union) but in no single K(A)");
    }

    for (size_t j = 0; j < fam.size(); ++j) {
        const SubsetMask u = fam[j];
        const std::string suffix = "[" + std::to_string(j) + "]";

        bool inclusion_ok = true;
        SubsetMask equality_witness = 0;
        for (SubsetMask b = 1; b <= top; ++b) {
            const bool in_complement_k = (b & u) == 0;
            const bool in_k_minus = (b & ~u) != 0; // not a subset of U
            if (in_complement_k && !in_k_minus) inclusion_ok = false;
            if (in_k_minus && !in_complement_k && equality_witness == 0)
                equality_witness = b;
        }
        report.add("complement-inclusion" + suffix, inclusion_ok);
        if (equality_witness == 0)
            report.add("complement-equality" + suffix, true);
        else
            report.add_status("complement-equality" + suffix, CheckStatus::ExpectedFail,
                              "witness " + label_of_mask(space, equality_witness) +
                                  " straddles the set and its complement");

        // induced image inclusion: f(K(U)) within K(f(U))
        SubsetMask fu = 0;
        for (SubsetMask bits = u; bits;) {
            fu |= SubsetMask{1} << sys.image_of(std::countr_zero(bits));
            bits &= bits - 1;
        }
        bool image_ok = true;
        SubsetMask image_witness = 0;
        for (SubsetMask b = 1; b <= top; ++b) {
            if (b & ~u) continue;
            SubsetMask fb = 0;
            for (SubsetMask bits = b; bits;) {
                fb |= SubsetMask{1} << sys.image_of(std::countr_zero(bits));
                bits &= bits - 1;
            }
            if (fb & ~fu) {
                image_ok = false;
                image_witness = b;
                break;
            }
        }
        report.add("image-inclusion" + suffix, image_ok,
                   image_ok ? "" : label_of_mask(space, image_witness));
    }
    return report;
}

bool is_chain_transitive(const HyperSystem& hyper, const std::vector<int>& collection,
                         Semantics sem) {
    if (collection.empty())
        throw std::invalid_argument("is_chain_transitive: empty collection");
    const std::vector<int> sorted = sorted_indices(collection);
    for (int i : sorted)
        if (!std::binary_search(sorted.begin(), sorted.end(), hyper.image_of(i)))
            throw std::domain_error(
                "is_chain_transitive: collection is not invariant under the induced map");

    const int m = static_cast<int>(sorted.size());
    Digraph g(m);
    std::vector<int> position(hyper.size(), -1);
    for (int p = 0; p < m; ++p) position[sorted[p]] = p;
    for (int p = 0; p < m; ++p) {
        const int img = hyper.image_of(sorted[p]);
        if (sem.is_exact()) {
            g.add_arc(p, position[img]);
        } else {
            for (int q = 0; q < m; ++q)
                if (hyper.distance(img, sorted[q]) < sem.epsilon()) g.add_arc(p, q);
        }
    }
    const SccPartition sccs = strongly_connected_components(g);
    if (sccs.comps.size() != 1) return false;
    if (m > 1) return true;
    const auto& arcs = g.adj[0];
    return std::find(arcs.begin(), arcs.end(), 0) != arcs.end();
}

std::vector<int> spanning_class(const HyperSystem& hyper,
                                const ChainAnalysis& base_analysis,
                                const std::vector<int>& component_ids) {
    if (component_ids.empty())
        throw std::invalid_argument("spanning_class: empty component selection");
    const int m = static_cast<int>(base_analysis.components.size());
    std::vector<SubsetMask> comp_masks;
    SubsetMask union_mask = 0;
    for (int id : component_ids) {
        if (id < 0 || id >= m)
            throw std::domain_error("spanning_class: unknown component id " +
                                    std::to_string(id));
        const SubsetMask cm = mask_of_set(base_analysis.components[id]);
        comp_masks.push_back(cm);
        union_mask |= cm;
    }
    std::vector<int> out;
    for (int i = 0; i < hyper.size(); ++i) {
        const SubsetMask b = hyper.mask_of(i);
        if (b & ~union_mask) continue;
        bool meets_all = true;
        for (SubsetMask cm : comp_masks)
            if ((b & cm) == 0) { meets_all = false; break; }
        if (meets_all) out.push_back(i);
    }
    return out;
}

SpanningClassTable spanning_classes(const HyperSystem& hyper,
                                    const ChainAnalysis& base_analysis) {
    if (hyper.max_card() < hyper.base().size())
        throw std::invalid_argument("spanning_classes requires the full lift");
    const int m = static_cast<int>(base_analysis.components.size());
    if (m > 20)
        throw ResourceError("spanning_classes: too many base components (" +
                            std::to_string(m) + ")");
    SpanningClassTable table;
    for (SubsetMask jm : enumerate_subsets_canonical(m, m)) {
        std::vector<int> ids = set_of_mask(jm);
        table.class_members.push_back(spanning_class(hyper, base_analysis, ids));
        table.class_components.push_back(std::move(ids));
    }
    return table;
}

MainTheoremReport main_theorem_check(const DiscreteSystem& sys, Semantics sem,
                                     std::optional<int> all_cap) {
    MainTheoremReport out;
    const ChainAnalysis base_analysis = analyze(sys, sem);
    out.base_recurrent = base_analysis.recurrent;

    const HyperSystem hyper = lift(sys, kLiftAll, all_cap);
    const ChainAnalysis hyper_analysis = analyze(hyper, sem);
    out.hyper_recurrent = hyper_analysis.recurrent;
    out.lifted_of_base = hyper.indices_within(base_analysis.recurrent);

    IndexSet lifted(out.lifted_of_base.begin(), out.lifted_of_base.end());
    IndexSet recurrent(out.hyper_recurrent.begin(), out.hyper_recurrent.end());
    const IndexSet missing = set_difference(lifted, recurrent);
    const IndexSet extra = set_difference(recurrent, lifted);
    out.missing_in_hyper.assign(missing.begin(), missing.end());
    out.extra_in_hyper.assign(extra.begin(), extra.end());

    auto describe = [&](const std::vector<int>& ids) {
        std::string s;
        for (size_t i = 0; i < ids.size() && i < 4; ++i) {
            if (i) s += ", ";
            s += hyper.label_of(ids[i]);
        }
        if (ids.size() > 4) s += ", ...";
        return s;
    };

    if (sem.is_exact()) {
        const bool equal = missing.empty() && extra.empty();
        out.report.add("main-theorem-equality", equal,
                       equal ? ""
                             : "missing: [" + describe(out.missing_in_hyper) +
                                   "] extra: [" + describe(out.extra_in_hyper) + "]");
    } else {
        out.report.add("main-theorem-inclusion", missing.empty(),
                       missing.empty()
                           ? "difference (hyper recurrent beyond lifted): " +
                                 std::to_string(extra.size()) + " subsets"
                           : "lifted sets not hyper recurrent: [" +
                                 describe(out.missing_in_hyper) + "]");
    }
    return out;
}

PartitionReport partition_check(const HyperSystem& hyper,
                                const ChainAnalysis& base_analysis) {
    PartitionReport out;
    out.table = spanning_classes(hyper, base_analysis);
    const Semantics sem = base_analysis.semantics;
    const ChainAnalysis hyper_analysis = analyze(hyper, sem);

    const auto& classes = out.table.class_members;
    std::vector<int> class_of(hyper.size(), -1);
    bool disjoint = true;
    std::string overlap_witness;
    for (size_t c = 0; c < classes.size(); ++c) {
        for (int i : classes[c]) {
            if (class_of[i] != -1) {
                disjoint = false;
                if (overlap_witness.empty()) overlap_witness = hyper.label_of(i);
            }
            class_of[i] = static_cast<int>(c);
        }
    }
    out.report.add("classes-disjoint", disjoint, overlap_witness);

    bool invariant = true;
    std::string invariance_witness;
    for (size_t c = 0; c < classes.size() && invariant; ++c)
        for (int i : classes[c])
            if (class_of[hyper.image_of(i)] != static_cast<int>(c)) {
                invariant = false;
                invariance_witness = hyper.label_of(i);
                break;
            }
    out.report.add("classes-invariant", invariant, invariance_witness);

    bool nonempty = true;
    bool anchors = true;
    std::string anchor_witness;
    for (size_t c = 0; c < classes.size(); ++c) {
        if (classes[c].empty()) nonempty = false;
        IndexSet union_set;
        for (int id : out.table.class_components[c])
            union_set = set_union(union_set, base_analysis.components[id]);
        SubsetMask um = mask_of_set(union_set);
        const int anchor = hyper.index_of_mask(um);
        const bool present =
            anchor != -1 &&
            std::binary_search(classes[c].begin(), classes[c].end(), anchor);
        bool fixed = true;
        if (sem.is_exact() && anchor != -1) fixed = hyper.image_of(anchor) == anchor;
        if (!present || !fixed) {
            anchors = false;
            if (anchor_witness.empty() && anchor != -1)
                anchor_witness = hyper.label_of(anchor);
        }
    }
    out.report.add("classes-nonempty", nonempty);
    out.report.add("class-anchor-fixed-point", anchors, anchor_witness);

    IndexSet covered;
    for (const auto& members : classes)
        covered = set_union(covered, IndexSet(members.begin(), members.end()));
    IndexSet recurrent(hyper_analysis.recurrent.begin(), hyper_analysis.recurrent.end());
    const IndexSet missing = set_difference(recurrent, covered);
    const IndexSet extra = set_difference(covered, recurrent);
    const bool cover = missing.empty() && extra.empty();
    std::string cover_witness;
    if (!cover) {
        const int w = missing.empty() ? extra.front() : missing.front();
        cover_witness = hyper.label_of(w) + (missing.empty() ? " (class member not hyper recurrent)"
                                                             : " (hyper recurrent, in no class)");
    }
    out.report.add("classes-cover-recurrent", cover, cover_witness);
    return out;
}

AttractorLiftReport attractor_lift_check(const DiscreteSystem& sys, Semantics sem,
                                         std::optional<int> all_cap) {
    AttractorLiftReport out;
    const ChainAnalysis base_analysis = analyze(sys, sem);
    out.base_records =
        enumerate_attractors(base_analysis, EnumerationMode::Condensation);
    const HyperSystem hyper = lift(sys, kLiftAll, all_cap);
    const ChainAnalysis hyper_analysis = analyze(hyper, sem);

    auto as_index_set = [](const std::vector<int>& v) {
        return IndexSet(v.begin(), v.end());
    };

    for (size_t r = 0; r < out.base_records.size(); ++r) {
        const AttractorRecord& rec = out.base_records[r];
        const std::string suffix = "[" + std::to_string(r) + "]";

        const IndexSet trap_lift = as_index_set(hyper.indices_within(rec.trap));
        const bool traps = is_trapping(hyper_analysis, trap_lift);
        out.report.add("trap-lift" + suffix, traps);
        if (!traps) continue;

        const AttractorRecord hyper_rec = attractor_of(hyper_analysis, trap_lift);
        const IndexSet expected_attractor =
            as_index_set(hyper.indices_within(rec.attractor));
        const bool attractor_ok = hyper_rec.attractor == expected_attractor;
        std::string attractor_witness;
        if (!attractor_ok) {
            const IndexSet d1 = set_difference(hyper_rec.attractor, expected_attractor);
            const IndexSet d2 = set_difference(expected_attractor, hyper_rec.attractor);
            attractor_witness = hyper.label_of(d1.empty() ? d2.front() : d1.front());
        }
        out.report.add("attractor-lift" + suffix, attractor_ok, attractor_witness);

        const IndexSet stated_dual = as_index_set(hyper.indices_within(rec.dual));
        IndexSet hit_dual;
        if (!rec.dual.empty()) {
            const SubsetMask dual_mask = [&] {
                SubsetMask m = 0;
                for (int v : rec.dual) m |= SubsetMask{1} << v;
                return m;
            }();
            for (int i = 0; i < hyper.size(); ++i)
                if (hyper.mask_of(i) & dual_mask) hit_dual.push_back(i);
        }
        if (hyper_rec.dual == stated_dual) {
            out.report.add("dual-stated" + suffix, true);
        } else {
            const IndexSet beyond = set_difference(hyper_rec.dual, stated_dual);
            out.report.add_status(
                "dual-stated" + suffix, CheckStatus::ExpectedFail,
                "hyper dual exceeds K(A*); witness " +
                    (beyond.empty() ? std::string("?") : hyper.label_of(beyond.front())) +
                    " meets A* without lying inside it");
        }
        const bool corrected_ok = hyper_rec.dual == hit_dual;
        out.report.add("dual-corrected" + suffix, corrected_ok);
    }

    // reciprocal direction: every hyper attractor projects onto a base attractor
    std::vector<IndexSet> base_attractor_sets;
    for (const auto& rec : out.base_records) base_attractor_sets.push_back(rec.attractor);
    std::sort(base_attractor_sets.begin(), base_attractor_sets.end());
    try {
        const auto hyper_records =
            enumerate_attractors(hyper_analysis, EnumerationMode::Condensation);
        bool ok = true;
        std::string witness;
        for (const auto& hrec : hyper_records) {
            std::vector<SubsetMask> masks;
            for (int i : hrec.attractor) masks.push_back(hyper.mask_of(i));
            const IndexSet projected = project_masks(masks);
            if (!std::binary_search(base_attractor_sets.begin(),
                                    base_attractor_sets.end(), projected)) {
                ok = false;
                witness = "projection of a hyper attractor (" +
                          std::to_string(hrec.attractor.size()) +
                          " subsets) is not a base attractor";
                break;
            }
        }
        out.report.add("projection-of-hyper-attractors", ok, witness);
    } catch (const ResourceError&) {
        // too many hyper attractors to list; check per hyper component
        bool ok = true;
        std::string witness;
        for (const auto& comp : hyper_analysis.components) {
            std::vector<SubsetMask> masks;
            for (int i : comp) masks.push_back(hyper.mask_of(i));
            const IndexSet projected = project_masks(masks);
            IndexSet rebuilt;
            for (int v : projected) {
                const int c = base_analysis.component_of[v];
                if (c == -1) {
                    ok = false;
                    break;
                }
                rebuilt = set_union(rebuilt, base_analysis.components[c]);
            }
            if (!ok || rebuilt != projected) {
                ok = false;
                witness = "hyper component projects onto " +
                          std::to_string(projected.size()) +
                          " points, not a union of base components";
                break;
            }
        }
        out.report.add("projection-of-hyper-attractors", ok,
                       ok ? "via component projections (attractor family too large to list)"
                          : witness);
    }
    return out;
}

CheckReport component_structure_check(const HyperSystem& hyper,
                                      const ChainAnalysis& base_analysis) {
    CheckReport report;
    const Semantics sem = base_analysis.semantics;
    const ChainAnalysis hyper_analysis = analyze(hyper, sem);
    const SpanningClassTable table = spanning_classes(hyper, base_analysis);

    std::vector<int> class_of(hyper.size(), -1);
    for (size_t c = 0; c < table.class_members.size(); ++c)
        for (int i : table.class_members[c]) class_of[i] = static_cast<int>(c);

    bool containment = true;
    std::string containment_witness;
    for (const auto& comp : hyper_analysis.components) {
        int cls = class_of[comp[0]];
        bool uniform = cls != -1;
        for (int i : comp)
            if (class_of[i] != cls) uniform = false;
        if (!uniform) {
            containment = false;
            containment_witness = hyper.label_of(comp[0]);
            break;
        }
    }
    report.add("components-within-one-class", containment, containment_witness);

    const int m = static_cast<int>(base_analysis.components.size());
    std::vector<bool> transitive(m, false);
    for (int p = 0; p < m; ++p) {
        const std::vector<int> kp = hyper.indices_within(base_analysis.components[p]);
        transitive[p] = is_chain_transitive(hyper, kp, sem);
    }

    for (size_t c = 0; c < table.class_members.size(); ++c) {
        std::string jname = "{";
        for (size_t k = 0; k < table.class_components[c].size(); ++k) {
            if (k) jname += ",";
            jname += std::to_string(table.class_components[c][k]);
        }
        jname += "}";
        const bool all_transitive =
            std::all_of(table.class_components[c].begin(), table.class_components[c].end(),
                        [&](int p) { return transitive[p]; });
        if (!all_transitive) {
            report.add_status("class-is-component" + jname, CheckStatus::Skipped,
                              "some K(P) not chain transitive");
            continue;
        }
        const auto& members = table.class_members[c];
        bool exact_component = !members.empty();
        if (exact_component) {
            const int comp_id = hyper_analysis.component_of[members[0]];
            exact_component =
                comp_id != -1 &&
                hyper_analysis.components[comp_id] ==
                    IndexSet(members.begin(), members.end());
        }
        report.add("class-is-component" + jname, exact_component);
    }

    if (std::all_of(transitive.begin(), transitive.end(), [](bool b) { return b; })) {
        const std::size_t expected = (std::size_t{1} << m) - 1;
        const bool count_ok = hyper_analysis.components.size() == expected;
        report.add("component-count", count_ok,
                   "components: " + std::to_string(hyper_analysis.components.size()) +
                       ", expected 2^" + std::to_string(m) + "-1 = " +
                       std::to_string(expected));
    } else {
        report.add_status("component-count", CheckStatus::Skipped,
                          "not all K(P) chain transitive");
    }
    return report;
}

} // namespace hyperchain
