// Acceptance suite: one timed pass/fail line per criterion.
// Exit code 0 iff every criterion holds within its budget.

#include "hyperchain/chain_analysis.hpp"
#include "hyperchain/conley.hpp"
#include "hyperchain/discretizer.hpp"
#include "hyperchain/hyperspace.hpp"
#include "hyperchain/system_document.hpp"
#include "hyperchain/verification.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace hyperchain;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& note) {
        if (!ok && pass) {
            pass = false;
            detail = note;
        }
    }
    void note(const std::string& text) {
        if (!detail.empty()) detail += "; ";
        detail += text;
    }
};

int failures = 0;

void run_criterion(const std::string& name, double budget_seconds,
                   const std::function<void(Outcome&)>& body) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(outcome);
    } catch (const std::exception& e) {
        outcome.require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > budget_seconds)
        outcome.require(false, "exceeded the " + std::to_string(budget_seconds) +
                                   " s budget");
    std::printf("[%s] %s (%.1f ms)%s%s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(),
                seconds * 1e3, outcome.detail.empty() ? "" : ": ",
                outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
}

std::vector<DiscreteSystem> seeded_systems(int count, int max_points) {
    std::vector<DiscreteSystem> out;
    for (const auto& doc : random_suite(count, 7, max_points))
        out.push_back(to_system(doc));
    return out;
}

std::string label_set(const FiniteMetricSpace& space, const IndexSet& s) {
    std::string text = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) text += ",";
        text += space.label(s[i]);
    }
    return text + "}";
}

// ---------------------------------------------------------------------------

void criterion1_example1(Outcome& o) {
    const DiscreteSystem sys = oracles::example1_system();
    const ChainAnalysis base = analyze(sys, Semantics::exact());
    o.require(base.recurrent == IndexSet{0, 1}, "C != {a,b}");

    const HyperSystem hyper = lift(sys);
    const ChainAnalysis lifted = analyze(hyper, Semantics::exact());
    const std::vector<int> expected_cbar = {hyper.index_of_mask(0b001),
                                            hyper.index_of_mask(0b010),
                                            hyper.index_of_mask(0b011)};
    o.require(IndexSet(lifted.recurrent.begin(), lifted.recurrent.end()) ==
                  IndexSet(expected_cbar.begin(), expected_cbar.end()),
              "C-bar != {{a},{b},{a,b}}");

    const SpanningClassTable table = spanning_classes(hyper, base);
    int classes_equal_to_cbar = 0;
    for (const auto& members : table.class_members)
        if (IndexSet(members.begin(), members.end()) ==
            IndexSet(lifted.recurrent.begin(), lifted.recurrent.end()))
            ++classes_equal_to_cbar;
    o.require(table.class_members.size() == 1 && classes_equal_to_cbar == 1,
              "expected exactly one class, equal to C-bar");

    o.require(lifted.components.size() == 2, "expected two hyper components");
    if (lifted.components.size() == 2) {
        o.require(lifted.components[0] ==
                          IndexSet{hyper.index_of_mask(0b001), hyper.index_of_mask(0b010)} &&
                      lifted.components[1] == IndexSet{hyper.index_of_mask(0b011)},
                  "hyper components are not {{a},{b}} and {{a,b}}");
    }
    o.require(!is_chain_transitive(hyper, hyper.indices_within({0, 1}),
                                   Semantics::exact()),
              "K({a,b}) was reported chain transitive");
}

void criterion2_main_theorem(Outcome& o) {
    const auto systems = seeded_systems(100, 6);
    for (size_t si = 0; si < systems.size(); ++si) {
        const DiscreteSystem& sys = systems[si];
        const IndexSet base_recurrent = chain_recurrent_set(sys, Semantics::exact());
        const HyperSystem hyper = lift(sys);
        const IndexSet hyper_recurrent =
            chain_recurrent_set(hyper, Semantics::exact());

        // oracle: a subset is f-bar-periodic iff the plain set map returns
        IndexSet oracle_recurrent, lifted;
        for (int i = 0; i < hyper.size(); ++i) {
            if (oracles::brute_set_periodic(sys, hyper.set_of(i)))
                oracle_recurrent.push_back(i);
            if (set_subset(hyper.set_of(i), base_recurrent)) lifted.push_back(i);
        }
        o.require(hyper_recurrent == oracle_recurrent,
                  "hyper recurrence disagrees with the periodicity oracle (system " +
                      std::to_string(si) + ")");
        o.require(hyper_recurrent == lifted,
                  "K(C) != C-bar (system " + std::to_string(si) + ")");
        if (!o.pass) return;
    }
}

void criterion3_conley_formula(Outcome& o) {
    const auto systems = seeded_systems(100, 10);
    for (size_t si = 0; si < systems.size(); ++si) {
        const ChainAnalysis analysis = analyze(systems[si], Semantics::exact());
        const auto brute = enumerate_attractors(analysis, EnumerationMode::Brute);
        const auto cond = enumerate_attractors(analysis, EnumerationMode::Condensation);
        o.require(brute == cond, "enumeration modes disagree (system " +
                                     std::to_string(si) + ")");

        IndexSet inter;
        for (int v = 0; v < analysis.graph.n; ++v) inter.push_back(v);
        for (const auto& rec : brute)
            inter = set_intersection(inter, set_union(rec.attractor, rec.dual));
        o.require(inter == analysis.recurrent,
                  "Conley intersection misses the recurrent set (system " +
                      std::to_string(si) + ")");
        if (!o.pass) return;
    }
}

void criterion4_attractor_lift(Outcome& o) {
    const auto systems = seeded_systems(100, 6);
    for (size_t si = 0; si < systems.size(); ++si) {
        const AttractorLiftReport report =
            attractor_lift_check(systems[si], Semantics::exact());
        for (const auto& c : report.report.checks) {
            // the stated dual equality K(A)* = K(A*) is part of the
            // criterion; an expected-fail therefore fails the criterion
            const bool ok = c.status == CheckStatus::Pass;
            o.require(ok, c.id + " on system " + std::to_string(si) +
                              (c.detail.empty() ? "" : " (" + c.detail + ")"));
        }
        if (!o.pass) {
            o.note("the corrected dual identity K(A)* = {B : B meets A*} holds; "
                   "see the decisions ledger");
            return;
        }
    }
}

void criterion5_partition_structure(Outcome& o) {
    auto systems = seeded_systems(100, 6);
    systems.push_back(oracles::identity_system(2));
    systems.push_back(oracles::identity_system(3));
    systems.push_back(oracles::identity_system(4));

    for (size_t si = 0; si < systems.size(); ++si) {
        const DiscreteSystem& sys = systems[si];
        const ChainAnalysis base = analyze(sys, Semantics::exact());
        const HyperSystem hyper = lift(sys);

        const PartitionReport partition = partition_check(hyper, base);
        for (const auto& c : partition.report.checks)
            o.require(c.status != CheckStatus::Fail,
                      "partition: " + c.id + " (system " + std::to_string(si) + ")");

        const CheckReport structure = component_structure_check(hyper, base);
        for (const auto& c : structure.checks)
            o.require(c.status != CheckStatus::Fail,
                      "structure: " + c.id + " (system " + std::to_string(si) + ")");
        if (!o.pass) return;
    }

    for (int n : {2, 3, 4}) {
        const DiscreteSystem id = oracles::identity_system(n);
        const ChainAnalysis lifted = analyze(lift(id), Semantics::exact());
        o.require(lifted.components.size() == (std::size_t{1} << n) - 1,
                  "identity on " + std::to_string(n) +
                      " points: hyper component count != 2^n - 1");
    }
}

void criterion6_desk_scale(Outcome& o) {
    const IntervalMapSpec spec = IntervalMapSpec::sinpi();
    const GridSystem grid = discretize(spec, 1000);
    const double eps = 2.0 * grid.step;
    const ChainAnalysis analysis = analyze(grid.system, Semantics::eps(eps));

    // (i) nearest grid point of every oracle fixed point 2/(2k+1), k <= 20
    std::string failing_k;
    for (int k = 1; k <= 20; ++k) {
        const double p = 2.0 / (2 * k + 1);
        const int j = static_cast<int>(std::llround(p / grid.step));
        if (!analysis.recurrent_mask[j]) {
            if (!failing_k.empty()) failing_k += ",";
            failing_k += std::to_string(k);
        }
    }
    o.require(failing_k.empty(),
              "fixed points not chain recurrent on the n=1000 grid at k in {" +
                  failing_k + "}");

    // (ii) strongly descending points are never chain recurrent
    for (int j = 0; j <= grid.n; ++j) {
        const double drop = grid.grid[j] - spec.value_at(grid.grid[j]);
        if (drop > 10 * eps && analysis.recurrent_mask[j]) {
            o.require(false, "descending grid point " + std::to_string(j) +
                                 " is chain recurrent");
            break;
        }
    }

    // (iii) every grid prefix traps the grid map, and the Conley
    // intersection identity holds on the eps-chain graph
    const ChainAnalysis exact_analysis = analyze(grid.system, Semantics::exact());
    for (int c = 0; c <= grid.n; ++c) {
        IndexSet prefix(c + 1);
        for (int i = 0; i <= c; ++i) prefix[i] = i;
        if (!is_trapping(exact_analysis, prefix)) {
            o.require(false, "grid prefix [0, " + std::to_string(c) + "] is not trapping");
            break;
        }
    }
    o.require(conley_intersection(analysis) == analysis.recurrent,
              "Conley intersection fails on the eps-chain graph");

    // the fixed set is sometimes quoted as {1/(2k+1)}; the oracle finds
    // {0} and {2/(2k+1)} instead, so the report records the discrepancy
    const FixedPointScan scan = fixed_point_oracle(spec, 1e-10);
    bool quoted_formula_holds = true;
    for (int k = 1; k <= 5; ++k) {
        const double claimed = 1.0 / (2 * k + 1);
        if (std::abs(spec.value_at(claimed) - claimed) > 1e-6)
            quoted_formula_holds = false;
    }
    if (!quoted_formula_holds)
        o.note("note: the quoted fixed-point formula 1/(2k+1) is not fixed; the oracle"
               " confirms 2/(2k+1) (" + std::to_string(scan.roots.size()) +
               " roots found)");
}

void criterion7_lemma_checks(Outcome& o) {
    const auto systems = seeded_systems(100, 10);
    for (size_t si = 0; si < systems.size(); ++si) {
        const DiscreteSystem& sys = systems[si];
        const IndexSet recurrent = chain_recurrent_set(sys, Semantics::exact());
        const auto quartiles = epsilon_quartiles(sys.space());
        for (double eps : quartiles) {
            const ChainAnalysis analysis = analyze(sys, Semantics::eps(eps));
            for (int x : recurrent)
                for (int y : recurrent) {
                    if (x == y) continue;
                    if (exists_chain_within(analysis, x, y, recurrent) !=
                        exists_chain_within(analysis, y, x, recurrent)) {
                        o.require(false,
                                  "chain symmetry broke at " +
                                      label_set(sys.space(), {x, y}) + ", eps " +
                                      std::to_string(eps) + " (system " +
                                      std::to_string(si) + ")");
                        return;
                    }
                }
        }

        const CheckReport identities =
            set_identity_check(sys, {IndexSet{0}, IndexSet{1}});
        bool union_witness = false, complement_witness = false;
        for (const auto& c : identities.checks) {
            if (c.status == CheckStatus::Fail) {
                o.require(false, "identity check " + c.id + " failed (system " +
                                     std::to_string(si) + ")");
                return;
            }
            if (c.id == "union-equality" && c.status == CheckStatus::ExpectedFail &&
                !c.detail.empty())
                union_witness = true;
            if (c.id.rfind("complement-equality", 0) == 0 &&
                c.status == CheckStatus::ExpectedFail && !c.detail.empty())
                complement_witness = true;
        }
        o.require(union_witness,
                  "no union counterexample witness (system " + std::to_string(si) + ")");
        o.require(complement_witness, "no complement counterexample witness (system " +
                                          std::to_string(si) + ")");
        if (!o.pass) return;
    }
}

void criterion8_hausdorff(Outcome& o) {
    Rng rng(7);
    int pairs = 0;
    for (int space_index = 0; space_index < 20; ++space_index) {
        const int n = 3 + space_index % 10;
        const DiscreteSystem sys = to_system(random_system_document(n, rng));
        const FiniteMetricSpace& space = sys.space();
        for (int t = 0; t < 50; ++t) {
            IndexSet a, b;
            while (a.empty())
                for (int v = 0; v < n; ++v)
                    if (rng.next() % 2) a.push_back(v);
            while (b.empty())
                for (int v = 0; v < n; ++v)
                    if (rng.next() % 2) b.push_back(v);
            ++pairs;

            IndexSet c;
            while (c.empty())
                for (int v = 0; v < n; ++v)
                    if (rng.next() % 2) c.push_back(v);

            const PointSet pa(space, a), pb(space, b), pc(space, c);
            const double d = hausdorff_distance(pa, pb);
            o.require(std::abs(d - hausdorff_distance(pb, pa)) <= 1e-12, "symmetry");
            o.require((d <= 1e-12) == (a == b), "zero iff equal");
            o.require(hausdorff_distance(pa, pc) <=
                          d + hausdorff_distance(pb, pc) + 1e-12,
                      "triangle");

            // inf-definition agreement at every candidate eps
            for (int i = 0; i < n && o.pass; ++i)
                for (int j = i + 1; j < n; ++j) {
                    const double eps = space.distance(i, j);
                    if (!(eps > 0)) continue;
                    const bool included =
                        set_subset(a, eps_neighborhood(pb, eps).members) &&
                        set_subset(b, eps_neighborhood(pa, eps).members);
                    if (included != (eps > d)) {
                        o.require(false, "inf-definition disagreement");
                        break;
                    }
                }
            if (!o.pass) return;
        }
    }
    o.require(pairs == 1000, "expected 1000 pairs");
}

} // namespace

int main() {
    std::printf("acceptance suite (seeded, deterministic)\n");
    run_criterion("C1 example-1-reproduction", 1.0, criterion1_example1);
    run_criterion("C2 main-theorem-K(C)=C-bar", 10.0, criterion2_main_theorem);
    run_criterion("C3 conley-formula", 30.0, criterion3_conley_formula);
    run_criterion("C4 attractor-lift-and-duality", 30.0, criterion4_attractor_lift);
    run_criterion("C5 partition-and-component-structure", 60.0,
                  criterion5_partition_structure);
    run_criterion("C6 example-2-desk-scale", 60.0, criterion6_desk_scale);
    run_criterion("C7 lemma-checks", 60.0, criterion7_lemma_checks);
    run_criterion("C8 hausdorff-metric-axioms", 5.0, criterion8_hausdorff);
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
