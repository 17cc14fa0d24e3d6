#include "hyperchain/verification.hpp"

#include "hyperchain/chain_analysis.hpp"
#include "hyperchain/conley.hpp"
#include "hyperchain/hyperspace.hpp"
#include "hyperchain/system_document.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>

namespace hyperchain {

namespace {

using Clock = std::chrono::steady_clock;

/// Aggregates one named check across many systems: first failure wins
/// the witness slot, passes count silently.
class Aggregator {
public:
    void record(const std::string& id, CheckStatus status, const std::string& detail,
                double ms) {
        auto it = index_.find(id);
        if (it == index_.end()) {
            index_[id] = checks_.size();
            checks_.push_back({id, status, annotate(status, detail), ms});
            counts_.push_back(1);
            return;
        }
        TimedCheck& c = checks_[it->second];
        c.ms += ms;
        ++counts_[it->second];
        if (rank(status) > rank(c.status)) {
            c.status = status;
            c.detail = annotate(status, detail);
        }
    }

    void record(const std::string& prefix, const CheckReport& report, double ms) {
        for (const auto& c : report.checks)
            record(prefix + c.id, c.status, c.detail, ms / report.checks.size());
    }

    std::vector<TimedCheck> finish() {
        for (size_t i = 0; i < checks_.size(); ++i) {
            if (checks_[i].status == CheckStatus::Pass && checks_[i].detail.empty())
                checks_[i].detail = "ok on " + std::to_string(counts_[i]) + " instances";
        }
        return std::move(checks_);
    }

private:
    static int rank(CheckStatus s) {
        switch (s) {
        case CheckStatus::Fail: return 3;
        case CheckStatus::ExpectedFail: return 2;
        case CheckStatus::Skipped: return 1;
        case CheckStatus::Pass: return 0;
        }
        return 0;
    }
    static std::string annotate(CheckStatus, const std::string& detail) {
        return detail;
    }

    std::map<std::string, size_t> index_;
    std::vector<TimedCheck> checks_;
    std::vector<int> counts_;
};

struct Timer {
    Clock::time_point start = Clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
};

std::string describe_set(const FiniteMetricSpace& space, const IndexSet& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += space.label(s[i]);
    }
    return out + "}";
}

std::vector<double> eps_values(const DiscreteSystem& sys, const SuiteOptions& options) {
    if (options.epsilon) return {*options.epsilon};
    return epsilon_quartiles(sys.space());
}

IndexSet random_subset(Rng& rng, int n) {
    IndexSet s;
    while (s.empty())
        for (int v = 0; v < n; ++v)
            if (rng.next() % 2) s.push_back(v);
    return s;
}

// -------------------------------------------------------------------------
// metric suite

void metric_suite(Aggregator& agg, const std::vector<DiscreteSystem>& systems,
                  const SuiteOptions& options) {
    Rng rng(options.seed ^ 0xa5a5a5a5ULL);
    for (size_t si = 0; si < systems.size(); ++si) {
        const FiniteMetricSpace& space = systems[si].space();
        const int n = space.size();
        if (n < 2) continue;
        const std::string at = " (system " + std::to_string(si) + ")";
        Timer t;

        const int trials = n <= 64 ? 50 : 10;
        const std::vector<double> quartiles = epsilon_quartiles(space);
        for (int trial = 0; trial < trials; ++trial) {
            const PointSet a(space, random_subset(rng, n));
            const PointSet b(space, random_subset(rng, n));
            const PointSet c(space, random_subset(rng, n));
            const double dab = hausdorff_distance(a, b);
            const double dba = hausdorff_distance(b, a);
            const double dac = hausdorff_distance(a, c);
            const double dbc = hausdorff_distance(b, c);

            agg.record("hausdorff-symmetry", std::abs(dab - dba) <= 1e-12
                           ? CheckStatus::Pass : CheckStatus::Fail,
                       "asymmetry" + at, 0.0);
            const bool zero_iff_equal = (dab <= 1e-12) == (a.members == b.members);
            agg.record("hausdorff-zero-iff-equal",
                       zero_iff_equal ? CheckStatus::Pass : CheckStatus::Fail,
                       describe_set(space, a.members) + " vs " +
                           describe_set(space, b.members) + at,
                       0.0);
            agg.record("hausdorff-triangle", dac <= dab + dbc + 1e-12
                           ? CheckStatus::Pass : CheckStatus::Fail,
                       "triangle excess" + at, 0.0);

            // agreement of max-min with the infimum definition; on large
            // spaces scan the quartiles instead of every distance
            std::set<double> candidates;
            if (n <= 64) {
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        candidates.insert(space.distance(i, j));
            } else {
                candidates.insert(quartiles.begin(), quartiles.end());
            }
            candidates.insert(dab);
            candidates.insert(dab + 0.5 * (space.diameter() - dab) + 1.0);
            bool agreement = true;
            for (double eps : candidates) {
                if (!(eps > 0)) continue;
                const auto na = eps_neighborhood(a, eps).members;
                const auto nb = eps_neighborhood(b, eps).members;
                const bool included =
                    set_subset(a.members, nb) && set_subset(b.members, na);
                if (included != (eps > dab)) agreement = false;
            }
            agg.record("hausdorff-inf-agreement",
                       agreement ? CheckStatus::Pass : CheckStatus::Fail,
                       describe_set(space, a.members) + " vs " +
                           describe_set(space, b.members) + at,
                       0.0);

            // eps-neighborhood monotonicity in eps and in the set
            const double e1 = space.min_gap() * 0.5 + rng.uniform01() * space.diameter();
            const double e2 = e1 + 0.25 * space.diameter() + 1e-9;
            const auto small = eps_neighborhood(a, e1).members;
            const auto large = eps_neighborhood(a, e2).members;
            const auto super = eps_neighborhood(PointSet(space, set_union(a.members, b.members)), e1).members;
            agg.record("neighborhood-monotone",
                       set_subset(small, large) && set_subset(small, super)
                           ? CheckStatus::Pass : CheckStatus::Fail,
                       "monotonicity" + at, 0.0);
        }
        agg.record("metric-suite-timing", CheckStatus::Pass, "", t.ms());
    }
}

// -------------------------------------------------------------------------
// conley suite

void conley_one(Aggregator& agg, const DiscreteSystem& sys, Semantics sem,
                const std::string& at) {
    Timer t;
    const std::string tag = sem.is_exact() ? " (exact)" : " (eps)";
    const ChainAnalysis analysis = analyze(sys, sem);
    std::vector<AttractorRecord> records;
    try {
        records = enumerate_attractors(analysis, EnumerationMode::Condensation);
    } catch (const ResourceError& e) {
        agg.record("conley-intersection-equals-recurrent" + tag, CheckStatus::Skipped,
                   std::string(e.what()) + at, t.ms());
        return;
    }

    IndexSet inter;
    for (int v = 0; v < analysis.graph.n; ++v) inter.push_back(v);
    for (const auto& rec : records)
        inter = set_intersection(inter, set_union(rec.attractor, rec.dual));
    agg.record("conley-intersection-equals-recurrent" + tag,
               inter == analysis.recurrent ? CheckStatus::Pass : CheckStatus::Fail,
               "difference at" + at, t.ms());

    if (sys.size() <= 16) {
        const auto brute = enumerate_attractors(analysis, EnumerationMode::Brute);
        agg.record("brute-matches-condensation" + tag,
                   brute == records ? CheckStatus::Pass : CheckStatus::Fail,
                   std::to_string(brute.size()) + " vs " + std::to_string(records.size()) +
                       " attractors" + at,
                   0.0);
    }

    bool recurrent_in_trap = true;
    bool disjoint = true;
    for (const auto& rec : records) {
        for (int v : rec.trap)
            if (analysis.recurrent_mask[v] && !set_contains(rec.attractor, v))
                recurrent_in_trap = false;
        if (!set_intersection(rec.attractor, rec.dual).empty()) disjoint = false;
    }
    agg.record("recurrent-in-trap-lies-in-attractor" + tag,
               recurrent_in_trap ? CheckStatus::Pass : CheckStatus::Fail, "at" + at, 0.0);
    agg.record("attractor-dual-disjoint" + tag,
               disjoint ? CheckStatus::Pass : CheckStatus::Fail, "at" + at, 0.0);

    if (sem.is_exact()) {
        // the dual coincides with the orbit-avoidance formulation
        bool orbit_form = true;
        for (const auto& rec : records) {
            for (int x = 0; x < sys.size(); ++x) {
                const OrbitRecord orbit = forward_orbit(sys, x);
                bool meets = false;
                for (int v : orbit.tail)
                    if (set_contains(rec.trap, v)) meets = true;
                for (int v : orbit.cycle)
                    if (set_contains(rec.trap, v)) meets = true;
                if (!meets != set_contains(rec.dual, x)) orbit_form = false;
            }
        }
        agg.record("dual-equals-orbit-avoidance (exact)",
                   orbit_form ? CheckStatus::Pass : CheckStatus::Fail, "at" + at, 0.0);

        // no arc leaves the dual (it is itself a trapping region)
        bool closed = true;
        for (const auto& rec : records) {
            if (rec.dual.empty()) continue;
            for (int v : rec.dual)
                for (int w : analysis.graph.adj[v])
                    if (!set_contains(rec.dual, w)) closed = false;
        }
        agg.record("dual-forward-closed (exact)",
                   closed ? CheckStatus::Pass : CheckStatus::Fail, "at" + at, 0.0);

        // attractor_of via omega_limit agrees with the graph route
        for (const auto& rec : records) {
            const IndexSet omega = omega_limit(sys, rec.trap);
            agg.record("attractor-equals-omega-limit (exact)",
                       omega == rec.attractor ? CheckStatus::Pass : CheckStatus::Fail,
                       "at" + at, 0.0);
        }
    }
}

void conley_suite(Aggregator& agg, const std::vector<DiscreteSystem>& systems,
                  const SuiteOptions& options) {
    for (size_t si = 0; si < systems.size(); ++si) {
        const std::string at = " system " + std::to_string(si);
        conley_one(agg, systems[si], Semantics::exact(), at);
        for (double eps : eps_values(systems[si], options))
            conley_one(agg, systems[si], Semantics::eps(eps), at);
    }
}

// -------------------------------------------------------------------------
// lift suite

void lift_suite(Aggregator& agg, const std::vector<DiscreteSystem>& systems,
                const SuiteOptions& options) {
    const int cap = options.lift_cap.value_or(default_lift_cap());
    for (size_t si = 0; si < systems.size(); ++si) {
        const DiscreteSystem& sys = systems[si];
        const std::string at = " system " + std::to_string(si);
        if (sys.size() > cap) {
            agg.record("main-theorem-equality", CheckStatus::Skipped,
                       "lift cap exceeded" + at, 0.0);
            continue;
        }
        Timer t;
        const HyperSystem hyper = lift(sys, kLiftAll, cap);

        bool isometric = true;
        for (int x = 0; x < sys.size(); ++x)
            for (int y = 0; y < sys.size(); ++y) {
                const int ix = hyper.index_of_mask(SubsetMask{1} << x);
                const int iy = hyper.index_of_mask(SubsetMask{1} << y);
                if (std::abs(hyper.distance(ix, iy) - sys.distance(x, y)) > 1e-12)
                    isometric = false;
            }
        agg.record("singleton-embedding-isometric",
                   isometric ? CheckStatus::Pass : CheckStatus::Fail, "at" + at, 0.0);

        bool projection_commutes = true;
        for (int i = 0; i < hyper.size(); ++i) {
            const IndexSet lhs = image_of_set(sys, project(hyper, {i}));
            const IndexSet rhs = project(hyper, {hyper.image_of(i)});
            if (lhs != rhs) projection_commutes = false;
        }
        agg.record("projection-commutes-with-map",
                   projection_commutes ? CheckStatus::Pass : CheckStatus::Fail,
                   "at" + at, 0.0);

        const MainTheoremReport main = main_theorem_check(sys, Semantics::exact(), cap);
        agg.record("", main.report, t.ms());

        const bool base_everywhere =
            static_cast<int>(main.base_recurrent.size()) == sys.size();
        const bool hyper_everywhere =
            static_cast<int>(main.hyper_recurrent.size()) == hyper.size();
        agg.record("chain-recurrence-equivalence",
                   base_everywhere == hyper_everywhere ? CheckStatus::Pass
                                                       : CheckStatus::Fail,
                   "at" + at, 0.0);

        for (double eps : eps_values(sys, options)) {
            const MainTheoremReport inc = main_theorem_check(sys, Semantics::eps(eps), cap);
            agg.record("", inc.report, 0.0);
        }
    }
}

// -------------------------------------------------------------------------
// partition and components suites

void partition_suite(Aggregator& agg, const std::vector<DiscreteSystem>& systems,
                     const SuiteOptions& options) {
    const int cap = options.lift_cap.value_or(default_lift_cap());
    for (size_t si = 0; si < systems.size(); ++si) {
        const DiscreteSystem& sys = systems[si];
        if (sys.size() > cap) {
            agg.record("classes-cover-recurrent", CheckStatus::Skipped,
                       "lift cap exceeded (system " + std::to_string(si) + ")", 0.0);
            continue;
        }
        Timer t;
        const HyperSystem hyper = lift(sys, kLiftAll, cap);
        const ChainAnalysis base_analysis = analyze(sys, Semantics::exact());
        const PartitionReport report = partition_check(hyper, base_analysis);
        agg.record("", report.report, t.ms());
    }
}

void components_suite(Aggregator& agg, const std::vector<DiscreteSystem>& systems,
                      const SuiteOptions& options) {
    const int cap = options.lift_cap.value_or(default_lift_cap());
    for (size_t si = 0; si < systems.size(); ++si) {
        const DiscreteSystem& sys = systems[si];
        if (sys.size() > cap) continue;
        Timer t;
        const HyperSystem hyper = lift(sys, kLiftAll, cap);
        const ChainAnalysis base_analysis = analyze(sys, Semantics::exact());
        CheckReport report = component_structure_check(hyper, base_analysis);
        // collapse the per-J ids so 100 systems aggregate cleanly
        for (auto& c : report.checks) {
            if (c.id.rfind("class-is-component", 0) == 0) c.id = "class-is-component";
        }
        agg.record("", report, t.ms());
        const AttractorLiftReport duality =
            attractor_lift_check(sys, Semantics::exact(), cap);
        CheckReport flattened;
        for (auto c : duality.report.checks) {
            const auto bracket = c.id.find('[');
            if (bracket != std::string::npos) c.id = c.id.substr(0, bracket);
            flattened.checks.push_back(std::move(c));
        }
        agg.record("", flattened, 0.0);
    }
}

// -------------------------------------------------------------------------
// lemmas suite

void lemmas_suite(Aggregator& agg, const std::vector<DiscreteSystem>& systems,
                  const SuiteOptions& options) {
    for (size_t si = 0; si < systems.size(); ++si) {
        const DiscreteSystem& sys = systems[si];
        const std::string at = " system " + std::to_string(si);
        Timer t;

        // chain symmetry inside the recurrent set C(f), at several eps
        const IndexSet recurrent = chain_recurrent_set(sys, Semantics::exact());
        for (double eps : eps_values(sys, options)) {
            const ChainAnalysis analysis = analyze(sys, Semantics::eps(eps));
            bool symmetric = true;
            std::string witness;
            for (int x : recurrent) {
                for (int y : recurrent) {
                    if (x == y) continue;
                    const bool xy = exists_chain_within(analysis, x, y, recurrent);
                    const bool yx = exists_chain_within(analysis, y, x, recurrent);
                    if (xy != yx) {
                        symmetric = false;
                        witness = sys.space().label(x) + " vs " + sys.space().label(y) +
                                  " at eps " + std::to_string(eps) + at;
                    }
                }
            }
            agg.record("chain-symmetry-in-recurrent-set",
                       symmetric ? CheckStatus::Pass : CheckStatus::Fail, witness,
                       0.0);
        }

        if (sys.size() >= 2 && sys.size() <= 16) {
            // non-nested pair: union and complement equalities must produce
            // counterexample witnesses
            const CheckReport split =
                set_identity_check(sys, {IndexSet{0}, IndexSet{1}});
            agg.record("", split, 0.0);
            bool witnessed = false;
            for (const auto& c : split.checks)
                if (c.id == "union-equality" && c.status == CheckStatus::ExpectedFail &&
                    !c.detail.empty())
                    witnessed = true;
            agg.record("union-counterexample-witnessed",
                       witnessed ? CheckStatus::Pass : CheckStatus::Fail, "at" + at, 0.0);

            // nested family: the union identity holds
            const CheckReport nested =
                set_identity_check(sys, {IndexSet{0}, IndexSet{0, 1}});
            bool nested_pass = false;
            for (const auto& c : nested.checks)
                if (c.id == "union-equality" && c.status == CheckStatus::Pass)
                    nested_pass = true;
            agg.record("union-equality-nested",
                       nested_pass ? CheckStatus::Pass : CheckStatus::Fail, "at" + at,
                       0.0);
        }
        agg.record("lemma-suite-timing", CheckStatus::Pass, "", t.ms());
    }
}

} // namespace

std::vector<double> epsilon_quartiles(const FiniteMetricSpace& space) {
    std::set<double> distinct;
    for (int i = 0; i < space.size(); ++i)
        for (int j = i + 1; j < space.size(); ++j) distinct.insert(space.distance(i, j));
    std::vector<double> values(distinct.begin(), distinct.end());
    if (values.empty()) return {};
    std::vector<double> out;
    for (double q : {0.25, 0.5, 0.75}) {
        const size_t idx = static_cast<size_t>(q * (values.size() - 1));
        out.push_back(values[idx]);
    }
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_known_suite(const std::string& name) {
    static const std::set<std::string> known = {
        "metric", "conley", "lift", "partition", "components", "lemmas", "all"};
    return known.count(name) > 0;
}

std::vector<TimedCheck> run_suite(const std::string& name,
                                  const std::vector<DiscreteSystem>& systems,
                                  const SuiteOptions& options) {
    if (!is_known_suite(name))
        throw std::invalid_argument("unknown suite: " + name +
                                    " (expected metric, conley, lift, partition, "
                                    "components, lemmas, or all)");
    Aggregator agg;
    if (name == "metric" || name == "all") metric_suite(agg, systems, options);
    if (name == "conley" || name == "all") conley_suite(agg, systems, options);
    if (name == "lift" || name == "all") lift_suite(agg, systems, options);
    if (name == "partition" || name == "all") partition_suite(agg, systems, options);
    if (name == "components" || name == "all") components_suite(agg, systems, options);
    if (name == "lemmas" || name == "all") lemmas_suite(agg, systems, options);
    return agg.finish();
}

} // namespace hyperchain
