#include "hyperchain/cli.hpp"

#include "hyperchain/chain_analysis.hpp"
#include "hyperchain/conley.hpp"
#include "hyperchain/discretizer.hpp"
#include "hyperchain/dot_export.hpp"
#include "hyperchain/hyperspace.hpp"
#include "hyperchain/reports.hpp"
#include "hyperchain/system_document.hpp"
#include "hyperchain/verification.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace hyperchain {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceCap = 3;

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw DocumentError("cannot write to " + out_path);
    file << text;
}

Semantics semantics_from(bool exact_flag, std::optional<double> epsilon) {
    if (epsilon && exact_flag)
        throw std::invalid_argument("choose either --exact or --epsilon, not both");
    if (epsilon) return Semantics::eps(*epsilon);
    return Semantics::exact();
}

int suite_max_points(const std::string& suite) {
    if (suite == "metric") return 12;
    if (suite == "conley" || suite == "lemmas") return 10;
    return 6; // lift-bound suites
}

struct VerifySource {
    std::string kind;
    std::string path;
    int random_count = 0;
    std::uint64_t seed = 7;
    std::string builtin;
    int builtin_n = 0;
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"chain recurrence, attractors, and hyperspace lifts on finite metric spaces"};
    app.require_subcommand(1);

    // ---- analyze ----
    auto* analyze_cmd = app.add_subcommand(
        "analyze", "chain recurrent set, components, condensation, attractors");
    std::string analyze_file, analyze_out;
    bool analyze_exact = false;
    std::optional<double> analyze_eps;
    std::string analyze_csv;
    analyze_cmd->add_option("file", analyze_file, "system document (JSON)")->required();
    analyze_cmd->add_flag("--exact", analyze_exact, "exact semantics (default)");
    analyze_cmd->add_option("--epsilon", analyze_eps, "eps-chain semantics");
    analyze_cmd->add_option("--out", analyze_out, "write the report here");
    analyze_cmd->add_option("--components-csv", analyze_csv,
                            "also write the component table as CSV");

    // ---- lift ----
    auto* lift_cmd =
        app.add_subcommand("lift", "analyze the induced system on the hyperspace");
    std::string lift_file, lift_out;
    bool lift_exact = false, lift_all = false;
    std::optional<double> lift_eps;
    int lift_max_card = 0;
    std::string lift_csv;
    lift_cmd->add_option("file", lift_file, "system document (JSON)")->required();
    lift_cmd->add_flag("--all", lift_all, "lift every nonempty subset (default)");
    lift_cmd->add_option("--max-card", lift_max_card, "lift subsets up to this size");
    lift_cmd->add_flag("--exact", lift_exact, "exact semantics (default)");
    lift_cmd->add_option("--epsilon", lift_eps, "eps-chain semantics");
    lift_cmd->add_option("--out", lift_out, "write the report here");
    lift_cmd->add_option("--components-csv", lift_csv,
                         "also write the hyper component table as CSV");

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "run an invariant suite");
    std::string verify_file, verify_out, verify_suite = "all", verify_builtin;
    int verify_random = 0, verify_n = 0;
    std::uint64_t verify_seed = 7;
    std::optional<double> verify_eps;
    verify_cmd->add_option("file", verify_file, "system document (JSON)");
    verify_cmd->add_option("--suite", verify_suite,
                           "metric | conley | lift | partition | components | lemmas | all");
    verify_cmd->add_option("--random", verify_random, "verify this many seeded random systems");
    verify_cmd->add_option("--seed", verify_seed, "seed for random systems");
    verify_cmd->add_option("--builtin", verify_builtin, "verify a builtin map (e.g. sinpi)");
    verify_cmd->add_option("--n", verify_n, "grid cells for --builtin");
    verify_cmd->add_option("--epsilon", verify_eps, "fix the eps used by eps-checks");
    bool verify_timings = false;
    verify_cmd->add_flag("--timings", verify_timings,
                         "include wall-clock timings (breaks byte-identical output)");
    verify_cmd->add_option("--out", verify_out, "write the report here");

    // ---- export-dot ----
    auto* dot_cmd = app.add_subcommand("export-dot", "condensation digraph in DOT form");
    std::string dot_file, dot_out, dot_level = "base";
    bool dot_exact = false;
    std::optional<double> dot_eps;
    dot_cmd->add_option("file", dot_file, "system document (JSON)")->required();
    dot_cmd->add_option("--level", dot_level, "base | hyper");
    dot_cmd->add_flag("--exact", dot_exact, "exact semantics (default)");
    dot_cmd->add_option("--epsilon", dot_eps, "eps-chain semantics");
    dot_cmd->add_option("--out", dot_out, "write the DOT text here");

    // ---- discretize ----
    auto* disc_cmd = app.add_subcommand(
        "discretize", "write a system document for a builtin interval map");
    std::string disc_builtin, disc_out;
    int disc_n = 0;
    disc_cmd->add_option("--builtin", disc_builtin, "sinpi | tent(s) | logistic(r)")
        ->required();
    disc_cmd->add_option("--n", disc_n, "grid cells")->required();
    disc_cmd->add_option("--out", disc_out, "write the document here");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (analyze_cmd->parsed()) {
            const DiscreteSystem sys = to_system(load_document(analyze_file));
            const Semantics sem = semantics_from(analyze_exact, analyze_eps);
            const ChainAnalysis analysis = analyze(sys, sem);
            const auto attractors =
                enumerate_attractors(analysis, EnumerationMode::Condensation);
            emit(analyze_report(sys, analysis, attractors).dump(2) + "\n", analyze_out,
                 out);
            if (!analyze_csv.empty()) {
                std::ofstream csv(analyze_csv);
                if (!csv) throw DocumentError("cannot write to " + analyze_csv);
                csv << components_csv(analysis, sys.space().labels());
            }
            return kExitPass;
        }

        if (lift_cmd->parsed()) {
            if (lift_all && lift_max_card > 0)
                throw std::invalid_argument("choose either --all or --max-card");
            const DiscreteSystem sys = to_system(load_document(lift_file));
            const Semantics sem = semantics_from(lift_exact, lift_eps);
            const int card = lift_max_card > 0 ? lift_max_card : kLiftAll;
            const HyperSystem hyper = lift(sys, card);
            const ChainAnalysis base_analysis = analyze(sys, sem);
            const ChainAnalysis hyper_analysis = analyze(hyper, sem);
            emit(lift_report(hyper, base_analysis, hyper_analysis).dump(2) + "\n",
                 lift_out, out);
            if (!lift_csv.empty()) {
                std::vector<std::string> labels(hyper.size());
                for (int i = 0; i < hyper.size(); ++i) labels[i] = hyper.label_of(i);
                std::ofstream csv(lift_csv);
                if (!csv) throw DocumentError("cannot write to " + lift_csv);
                csv << components_csv(hyper_analysis, labels);
            }
            return kExitPass;
        }

        if (verify_cmd->parsed()) {
            if (!is_known_suite(verify_suite))
                throw std::invalid_argument("unknown suite: " + verify_suite);
            std::vector<DiscreteSystem> systems;
            Json source;
            SuiteOptions options;
            options.seed = verify_seed;
            options.epsilon = verify_eps;
            if (!verify_file.empty()) {
                systems.push_back(to_system(load_document(verify_file)));
                source = {{"kind", "file"}, {"path", verify_file}};
            } else if (verify_random > 0) {
                const int max_points = suite_max_points(verify_suite);
                for (const auto& doc :
                     random_suite(verify_random, verify_seed, max_points))
                    systems.push_back(to_system(doc));
                source = {{"kind", "random"},
                          {"count", verify_random},
                          {"seed", verify_seed},
                          {"max_points", max_points},
                          {"generator",
                           "uniform self-map; zero-one or random 1-D coords per draw"}};
            } else if (!verify_builtin.empty()) {
                if (verify_n < 2)
                    throw std::invalid_argument("--builtin requires --n >= 2");
                const GridSystem grid =
                    discretize(IntervalMapSpec::parse(verify_builtin), verify_n);
                if (!options.epsilon) options.epsilon = 2.0 * grid.step;
                systems.push_back(grid.system);
                source = {{"kind", "builtin"},
                          {"map", verify_builtin},
                          {"n", verify_n},
                          {"epsilon", *options.epsilon}};
            } else {
                throw std::invalid_argument(
                    "verify needs a file, --random N, or --builtin NAME --n N");
            }
            const auto checks = run_suite(verify_suite, systems, options);
            emit(verify_report(verify_suite, source, checks, verify_timings).dump(2) +
                     "\n",
                 verify_out, out);
            return verify_passed(checks) ? kExitPass : kExitCheckFailure;
        }

        if (dot_cmd->parsed()) {
            const DiscreteSystem sys = to_system(load_document(dot_file));
            const Semantics sem = semantics_from(dot_exact, dot_eps);
            std::string text;
            if (dot_level == "base") {
                text = export_dot(analyze(sys, sem), sys.space().labels(), "base");
            } else if (dot_level == "hyper") {
                const HyperSystem hyper = lift(sys);
                std::vector<std::string> labels(hyper.size());
                for (int i = 0; i < hyper.size(); ++i) labels[i] = hyper.label_of(i);
                text = export_dot(analyze(hyper, sem), labels, "hyper");
            } else {
                throw std::invalid_argument("--level must be base or hyper");
            }
            emit(text, dot_out, out);
            return kExitPass;
        }

        if (disc_cmd->parsed()) {
            const GridSystem grid = discretize(IntervalMapSpec::parse(disc_builtin), disc_n);
            emit(print_document(grid_document(grid)), disc_out, out);
            return kExitPass;
        }
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const DocumentError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

} // namespace hyperchain
