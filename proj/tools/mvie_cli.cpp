// mvie: command-line front end for single runs, multi-run experiments,
// ablations and parameter sweeps.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mvie/engine.hpp"
#include "mvie/harness.hpp"
#include "mvie/problem.hpp"
#include "mvie/report_io.hpp"

namespace {

using namespace mvie;

const std::vector<std::string> kQuickProblems{"g04", "g06", "g08", "g12", "g24"};
const std::vector<std::string> kFullProblems{"g01", "g02", "g04", "g06", "g07", "g08", "g09",
                                             "g10", "g12", "g16", "g18", "g19", "g24"};
constexpr std::uint64_t kQuickAblationBudget = 50000;

struct Options {
    std::vector<std::string> problems;
    std::size_t runs = 25;
    std::uint64_t seed = 1;
    std::uint64_t max_nfes = 0;
    double accuracy = 1e-4;
    std::string mode = "full";
    std::string trace;
    std::string format = "text";
    std::string out = "-";
    std::string config;
    std::string preset;
    std::string reference;
    std::size_t repetitions = 2;
    unsigned threads = 0;
    bool checkpoints = false;
    std::vector<double> c_alpha, beta_R, L, F, CR;
    std::vector<std::size_t> pop_size;
};

// Options shared by several subcommands; each returns the created option so
// that "was it given" can be asked later.
struct Flags {
    CLI::Option* problem = nullptr;
    CLI::Option* runs = nullptr;
    CLI::Option* seed = nullptr;
    CLI::Option* max_nfes = nullptr;
    CLI::Option* accuracy = nullptr;
    CLI::Option* mode = nullptr;
    CLI::Option* checkpoints = nullptr;
};

bool given(const CLI::Option* o) { return o && o->count() > 0; }

void add_common(CLI::App* app, Options& o, Flags& f, bool many_problems) {
    if (many_problems)
        f.problem = app->add_option("--problem", o.problems, "Problem names (repeatable)")->delimiter(',');
    else
        f.problem = app->add_option("--problem", o.problems, "Problem name")->expected(1);
    f.seed = app->add_option("--seed", o.seed, "Seed (first seed for multi-run commands)");
    f.max_nfes = app->add_option("--max-nfes", o.max_nfes, "Evaluation budget per run");
    f.accuracy = app->add_option("--accuracy", o.accuracy, "Target accuracy f - f*");
    app->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app->add_option("--out", o.out, "Output path, - for stdout");
    app->add_option("--config", o.config, "JSON config file; flags override it");
}

void add_multi_run(CLI::App* app, Options& o, Flags& f) {
    f.runs = app->add_option("--runs", o.runs, "Runs per problem");
    app->add_option("--preset", o.preset, "Problem set and run count")->check(CLI::IsMember({"quick", "full"}));
    app->add_option("--threads", o.threads, "Worker threads, 0 for all cores");
}

struct Resolved {
    RunConfig run;
    std::vector<std::string> problems;
    std::size_t runs = 25;
    ConfigFile file;
};

Resolved resolve(const Options& o, const Flags& f) {
    Resolved r;
    if (!o.config.empty()) {
        r.file = load_config(o.config);
        r.run = r.file.run;
        r.problems = r.file.problems;
        if (!r.run.problem.empty() && r.problems.empty()) r.problems = {r.run.problem};
        if (r.file.runs) r.runs = *r.file.runs;
    }
    if (o.preset == "quick") {
        r.problems = kQuickProblems;
        r.runs = 5;
    } else if (o.preset == "full") {
        r.problems = kFullProblems;
        r.runs = 25;
    }
    if (given(f.problem)) r.problems = o.problems;
    if (given(f.runs)) r.runs = o.runs;
    if (given(f.seed)) r.run.seed = o.seed;
    if (given(f.max_nfes)) r.run.max_nfes = o.max_nfes;
    if (given(f.accuracy)) r.run.target_accuracy = o.accuracy;
    if (given(f.mode)) r.run.mode = parse_mode(o.mode);
    if (given(f.checkpoints)) r.run.capture_checkpoints = o.checkpoints;
    if (!r.problems.empty()) r.run.problem = r.problems.front();
    return r;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw std::runtime_error("cannot write " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

int cmd_run(const Options& o, const Flags& f) {
    Resolved r = resolve(o, f);
    if (r.run.problem.empty()) throw InvalidConfig("--problem is required");
    if (!o.trace.empty()) r.run.trace_enabled = true;
    const RunResult result = run(r.run);
    if (!o.trace.empty()) {
        std::ofstream t(o.trace);
        if (!t) throw std::runtime_error("cannot write " + o.trace);
        write_trace_csv(*result.trace, t);
    }
    Output out(o.out);
    emit(result, parse_format(o.format), out.stream());
    return 0;
}

int cmd_experiment(const Options& o, const Flags& f) {
    Resolved r = resolve(o, f);
    if (r.problems.empty()) throw InvalidConfig("no problems given (use --problem or --preset)");
    std::vector<ExperimentReport> reports;
    for (const auto& p : r.problems) {
        RunConfig c = r.run;
        c.problem = p;
        reports.push_back(run_experiment(c, r.runs, r.run.seed, o.threads));
        std::cerr << p << ": SR " << reports.back().success_rate * 100.0 << "%\n";
    }
    Output out(o.out);
    emit(reports, parse_format(o.format), out.stream());
    return 0;
}

int cmd_ablation(const Options& o, const Flags& f) {
    Resolved r = resolve(o, f);
    if (r.problems.empty()) throw InvalidConfig("no problems given (use --problem or --preset)");
    if (o.preset == "quick" && !given(f.max_nfes) && !r.run.max_nfes) r.run.max_nfes = kQuickAblationBudget;
    const AblationReport rep = ablation_report(r.problems, r.runs, r.run.seed, r.run, o.threads);
    Output out(o.out);
    emit(rep, parse_format(o.format), out.stream());
    return 0;
}

int cmd_sweep(const Options& o, const Flags& f) {
    Resolved r = resolve(o, f);
    if (r.problems.empty()) throw InvalidConfig("no problems given (use --problem or --preset)");
    SweepGrid grid = r.file.grid;
    if (!o.c_alpha.empty()) grid.c_alpha = o.c_alpha;
    if (!o.beta_R.empty()) grid.beta_R = o.beta_R;
    if (!o.L.empty()) grid.L = o.L;
    if (!o.F.empty()) grid.F = o.F;
    if (!o.CR.empty()) grid.CR = o.CR;
    if (!o.pop_size.empty()) grid.pop_size = o.pop_size;
    ReferenceTable reference = r.file.reference.value_or(default_reference_table());
    if (!o.reference.empty()) reference = load_reference_table(o.reference);
    const std::size_t reps = r.file.repetitions.value_or(o.repetitions);
    const SweepReport rep = parameter_sweep(grid, r.problems, r.runs, reps, reference, r.run, r.run.seed, o.threads);
    for (const auto& w : rep.warnings) std::cerr << "warning: " << w << '\n';
    Output out(o.out);
    emit(rep, parse_format(o.format), out.stream());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Memetic viability evolution for constrained optimization"};
    app.require_subcommand(1);
    Options o;

    Flags run_flags, exp_flags, abl_flags, sweep_flags;

    auto* run_cmd = app.add_subcommand("run", "Single run on one problem");
    add_common(run_cmd, o, run_flags, false);
    run_flags.mode = run_cmd->add_option("--mode", o.mode, "full, local-only, global-only or random-scheduler");
    run_cmd->add_option("--trace", o.trace, "Write the per-step trace CSV here");
    run_flags.checkpoints = run_cmd->add_flag("--checkpoints", o.checkpoints, "Run to budget and record errors");

    auto* exp_cmd = app.add_subcommand("experiment", "Repeated runs with summary statistics");
    add_common(exp_cmd, o, exp_flags, true);
    add_multi_run(exp_cmd, o, exp_flags);
    exp_flags.mode = exp_cmd->add_option("--mode", o.mode, "full, local-only, global-only or random-scheduler");
    exp_flags.checkpoints = exp_cmd->add_flag("--checkpoints", o.checkpoints, "Run to budget and record errors");

    auto* abl_cmd = app.add_subcommand("ablation", "Compare the full method with its single-branch variants");
    add_common(abl_cmd, o, abl_flags, true);
    add_multi_run(abl_cmd, o, abl_flags);

    auto* sweep_cmd = app.add_subcommand("sweep", "Rank parameter combinations by SR and NFES factor");
    add_common(sweep_cmd, o, sweep_flags, true);
    add_multi_run(sweep_cmd, o, sweep_flags);
    sweep_cmd->add_option("--repetitions", o.repetitions, "Independent repetitions of the whole sweep");
    sweep_cmd->add_option("--reference", o.reference, "JSON object problem -> reference median NFES");
    sweep_cmd->add_option("--c-alpha", o.c_alpha)->delimiter(',');
    sweep_cmd->add_option("--beta-r", o.beta_R)->delimiter(',');
    sweep_cmd->add_option("--L", o.L)->delimiter(',');
    sweep_cmd->add_option("--F", o.F)->delimiter(',');
    sweep_cmd->add_option("--CR", o.CR)->delimiter(',');
    sweep_cmd->add_option("--pop-size", o.pop_size)->delimiter(',');

    auto* list_cmd = app.add_subcommand("list-problems", "Print the bundled problems");
    list_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "text"}));
    list_cmd->add_option("--out", o.out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) return cmd_run(o, run_flags);
        if (*exp_cmd) return cmd_experiment(o, exp_flags);
        if (*abl_cmd) return cmd_ablation(o, abl_flags);
        if (*sweep_cmd) return cmd_sweep(o, sweep_flags);
        if (*list_cmd) {
            Output out(o.out);
            emit_problems(registry(), parse_format(o.format), out.stream());
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
