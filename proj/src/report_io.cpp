#include "mvie/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace mvie {

using nlohmann::json;

namespace {

// JSON has no infinities; they are written as null.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }
double read_number(const json& j) {
    return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

json summary_json(const Summary& s) {
    return {{"best", number(s.best)}, {"median", number(s.median)}, {"worst", number(s.worst)},
            {"mean", number(s.mean)}, {"std", number(s.std)},       {"std_defined", s.std_defined}};
}

Summary summary_from(const json& j) {
    Summary s;
    s.best = read_number(j.at("best"));
    s.median = read_number(j.at("median"));
    s.worst = read_number(j.at("worst"));
    s.mean = read_number(j.at("mean"));
    s.std = read_number(j.at("std"));
    s.std_defined = j.at("std_defined").get<bool>();
    return s;
}

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::Local: return "local";
        case Branch::Global: return "global";
        case Branch::Both: return "both";
    }
    return "local";
}

Branch parse_branch(const std::string& s) {
    if (s == "global") return Branch::Global;
    if (s == "both") return Branch::Both;
    return Branch::Local;
}

json config_json(const RunConfig& c) {
    json j{{"problem", c.problem},
           {"pop_size", c.pop_size},
           {"target_accuracy", c.target_accuracy},
           {"seed", c.seed},
           {"mode", to_string(c.mode)},
           {"F", c.de_params.F},
           {"CR", c.de_params.CR},
           {"c_alpha", c.scheduler.c_alpha},
           {"beta_R", c.scheduler.beta_R},
           {"L", c.scheduler.L},
           {"trace", c.trace_enabled},
           {"capture_checkpoints", c.capture_checkpoints},
           {"checkpoints", c.checkpoints}};
    j["max_nfes"] = c.max_nfes ? json(*c.max_nfes) : json(nullptr);
    return j;
}

void apply_run_key(RunConfig& c, const std::string& key, const json& v) {
    if (key == "problem") c.problem = v.get<std::string>();
    else if (key == "pop_size") c.pop_size = v.get<std::size_t>();
    else if (key == "max_nfes") c.max_nfes = v.is_null() ? std::nullopt : std::optional(v.get<std::uint64_t>());
    else if (key == "target_accuracy") c.target_accuracy = v.get<double>();
    else if (key == "seed") c.seed = v.get<std::uint64_t>();
    else if (key == "mode") c.mode = parse_mode(v.get<std::string>());
    else if (key == "F") c.de_params.F = v.get<double>();
    else if (key == "CR") c.de_params.CR = v.get<double>();
    else if (key == "c_alpha") c.scheduler.c_alpha = v.get<double>();
    else if (key == "beta_R") c.scheduler.beta_R = v.get<double>();
    else if (key == "L") c.scheduler.L = v.get<double>();
    else if (key == "trace") c.trace_enabled = v.get<bool>();
    else if (key == "capture_checkpoints") c.capture_checkpoints = v.get<bool>();
    else if (key == "checkpoints") c.checkpoints = v.get<std::vector<std::uint64_t>>();
    else throw InvalidConfig("unknown config key: " + key);
}

RunConfig config_from(const json& j) {
    RunConfig c;
    for (auto it = j.begin(); it != j.end(); ++it) apply_run_key(c, it.key(), it.value());
    return c;
}

json checkpoint_json(const CheckpointRecord& c) {
    return {{"nfes", c.nfes},
            {"error", number(c.error)},
            {"violated_counts", c.violated_counts},
            {"mean_violation", number(c.mean_violation)}};
}

json run_json(const RunResult& r) {
    json j{{"problem", r.problem},
           {"seed", r.seed},
           {"mode", to_string(r.mode)},
           {"best_x", r.best_x},
           {"best_f", number(r.best.f)},
           {"best_violation", number(r.best.violation)},
           {"nfes_used", r.nfes_used},
           {"max_nfes", r.max_nfes},
           {"success", r.success},
           {"restarts", r.restarts},
           {"local_steps", r.local_steps},
           {"global_steps", r.global_steps},
           {"skipped_downdates", r.skipped_downdates}};
    j["nfes_to_success"] = r.nfes_to_success ? json(*r.nfes_to_success) : json(nullptr);
    j["checkpoints"] = json::array();
    for (const auto& c : r.checkpoints) j["checkpoints"].push_back(checkpoint_json(c));
    if (r.trace) {
        j["trace"] = json::array();
        for (const auto& t : *r.trace)
            j["trace"].push_back({t.nfes, branch_name(t.branch), number(t.f_best), number(t.violation_best),
                                  t.p_succ_local, t.p_succ_global, t.freq_local});
    }
    return j;
}

RunResult run_from(const json& j) {
    RunResult r;
    r.problem = j.at("problem").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.mode = parse_mode(j.at("mode").get<std::string>());
    r.best_x = j.at("best_x").get<Vector>();
    r.best = {read_number(j.at("best_f")), read_number(j.at("best_violation"))};
    r.nfes_used = j.at("nfes_used").get<std::uint64_t>();
    r.max_nfes = j.at("max_nfes").get<std::uint64_t>();
    r.success = j.at("success").get<bool>();
    r.restarts = j.at("restarts").get<std::uint64_t>();
    r.local_steps = j.at("local_steps").get<std::uint64_t>();
    r.global_steps = j.at("global_steps").get<std::uint64_t>();
    r.skipped_downdates = j.at("skipped_downdates").get<std::uint64_t>();
    if (!j.at("nfes_to_success").is_null()) r.nfes_to_success = j.at("nfes_to_success").get<std::uint64_t>();
    for (const auto& c : j.at("checkpoints")) {
        CheckpointRecord rec;
        rec.nfes = c.at("nfes").get<std::uint64_t>();
        rec.error = read_number(c.at("error"));
        rec.violated_counts = c.at("violated_counts").get<std::array<int, 3>>();
        rec.mean_violation = read_number(c.at("mean_violation"));
        r.checkpoints.push_back(rec);
    }
    if (j.contains("trace")) {
        r.trace.emplace();
        for (const auto& t : j.at("trace"))
            r.trace->push_back({t[0].get<std::uint64_t>(), parse_branch(t[1].get<std::string>()), read_number(t[2]),
                                read_number(t[3]), t[4].get<double>(), t[5].get<double>(), t[6].get<double>()});
    }
    return r;
}

json experiment_json(const ExperimentReport& r) {
    json j{{"schema_version", kSchemaVersion},
           {"kind", "experiment"},
           {"problem", r.problem},
           {"mode", to_string(r.mode)},
           {"runs", r.runs},
           {"seed0", r.seed0},
           {"success_rate", r.success_rate},
           {"best_f", number(r.best.f)},
           {"best_violation", number(r.best.violation)},
           {"best_x", r.best_x},
           {"config", config_json(r.config)}};
    j["nfes_stats"] = r.nfes_stats ? summary_json(*r.nfes_stats) : json(nullptr);
    j["error_table"] = json::array();
    for (const auto& c : r.error_table)
        j["error_table"].push_back({{"nfes", c.nfes},
                                    {"error", summary_json(c.error)},
                                    {"median_violated_counts", c.median_violated_counts},
                                    {"median_mean_violation", number(c.median_mean_violation)},
                                    {"runs", c.runs}});
    j["per_run"] = json::array();
    for (const auto& run : r.per_run) j["per_run"].push_back(run_json(run));
    return j;
}

std::string fmt(double v, int precision = 6) {
    std::ostringstream os;
    os << std::setprecision(precision) << v;
    return os.str();
}

std::string fixed(double v, int decimals) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(decimals) << v;
    return os.str();
}

void write_json(const json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

void nfes_table_header(std::ostream& out) {
    out << std::left << std::setw(16) << "Prob." << std::right << std::setw(10) << "Best" << std::setw(10) << "Median"
        << std::setw(10) << "Worst" << std::setw(12) << "Mean" << std::setw(12) << "Std" << std::setw(7) << "SR"
        << '\n';
}

void nfes_table_row(const ExperimentReport& r, std::ostream& out) {
    out << std::left << std::setw(16) << r.problem << std::right;
    if (r.nfes_stats) {
        const Summary& s = *r.nfes_stats;
        out << std::setw(10) << fixed(s.best, 0) << std::setw(10) << fmt(s.median, 8) << std::setw(10)
            << fixed(s.worst, 0) << std::setw(12) << fmt(s.mean, 7) << std::setw(12)
            << (s.std_defined ? fmt(s.std, 6) : std::string("n/a"));
    } else {
        out << std::setw(10) << "-" << std::setw(10) << "-" << std::setw(10) << "-" << std::setw(12) << "-"
            << std::setw(12) << "-";
    }
    out << std::setw(6) << fixed(100.0 * r.success_rate, 0) << "%\n";
}

void error_table_text(const ExperimentReport& r, std::ostream& out) {
    if (r.error_table.empty()) return;
    out << "\nErrors for " << r.problem << " (f - f*, c = constraints violated by >1, >0.01, >1e-4, v = mean violation)\n";
    out << std::left << std::setw(10) << "NFES" << std::right << std::setw(14) << "Best" << std::setw(14) << "Median"
        << std::setw(14) << "Worst" << std::setw(12) << "c" << std::setw(12) << "v" << std::setw(14) << "Mean"
        << std::setw(14) << "Std" << '\n';
    for (const auto& c : r.error_table) {
        const auto& k = c.median_violated_counts;
        out << std::left << std::setw(10) << c.nfes << std::right << std::setw(14) << fmt(c.error.best)
            << std::setw(14) << fmt(c.error.median) << std::setw(14) << fmt(c.error.worst) << std::setw(12)
            << (std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2])) << std::setw(12)
            << fmt(c.median_mean_violation, 4) << std::setw(14) << fmt(c.error.mean) << std::setw(14)
            << (c.error.std_defined ? fmt(c.error.std) : std::string("n/a")) << '\n';
    }
}

void runs_csv(const std::vector<RunResult>& runs, std::ostream& out, bool header) {
    if (header)
        out << "problem,mode,seed,success,nfes_to_success,nfes_used,best_f,best_violation,restarts,local_steps,"
               "global_steps\n";
    for (const auto& r : runs) {
        out << r.problem << ',' << to_string(r.mode) << ',' << r.seed << ',' << (r.success ? 1 : 0) << ','
            << (r.nfes_to_success ? std::to_string(*r.nfes_to_success) : std::string()) << ',' << r.nfes_used << ','
            << fmt(r.best.f, 17) << ',' << fmt(r.best.violation, 17) << ',' << r.restarts << ',' << r.local_steps
            << ',' << r.global_steps << '\n';
    }
}

}  // namespace

Format parse_format(const std::string& text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    if (text == "text") return Format::Text;
    throw InvalidConfig("unknown format: " + text);
}

std::string run_to_json(const RunResult& result) {
    json j = run_json(result);
    j["schema_version"] = kSchemaVersion;
    return j.dump(2);
}

std::string experiment_to_json(const ExperimentReport& report) { return experiment_json(report).dump(2); }

ExperimentReport experiment_from_json(const std::string& text) {
    const json j = json::parse(text);
    if (j.at("schema_version").get<int>() != kSchemaVersion) throw std::runtime_error("unsupported schema_version");
    ExperimentReport r;
    r.problem = j.at("problem").get<std::string>();
    r.mode = parse_mode(j.at("mode").get<std::string>());
    r.runs = j.at("runs").get<std::size_t>();
    r.seed0 = j.at("seed0").get<std::uint64_t>();
    r.success_rate = j.at("success_rate").get<double>();
    r.best = {read_number(j.at("best_f")), read_number(j.at("best_violation"))};
    r.best_x = j.at("best_x").get<Vector>();
    r.config = config_from(j.at("config"));
    if (!j.at("nfes_stats").is_null()) r.nfes_stats = summary_from(j.at("nfes_stats"));
    for (const auto& c : j.at("error_table")) {
        CheckpointSummary cs;
        cs.nfes = c.at("nfes").get<std::uint64_t>();
        cs.error = summary_from(c.at("error"));
        cs.median_violated_counts = c.at("median_violated_counts").get<std::array<int, 3>>();
        cs.median_mean_violation = read_number(c.at("median_mean_violation"));
        cs.runs = c.at("runs").get<std::size_t>();
        r.error_table.push_back(cs);
    }
    for (const auto& run : j.at("per_run")) r.per_run.push_back(run_from(run));
    return r;
}

std::string ablation_to_json(const AblationReport& report) {
    json j{{"schema_version", kSchemaVersion},
           {"kind", "ablation"},
           {"problems", report.problems},
           {"runs", report.runs},
           {"seed0", report.seed0}};
    j["modes"] = json::array();
    for (const auto& row : report.rows) {
        json m{{"mode", to_string(row.mode)},
               {"total_nfes", row.total_nfes},
               {"mean_success_rate", row.mean_success_rate},
               {"scaled_nfes", row.scaled_nfes}};
        m["per_problem"] = json::array();
        for (const auto& e : row.per_problem) {
            json p{{"problem", e.problem}, {"success_rate", e.success_rate}, {"charged_median_nfes", charged_median_nfes(e)}};
            p["nfes_stats"] = e.nfes_stats ? summary_json(*e.nfes_stats) : json(nullptr);
            m["per_problem"].push_back(p);
        }
        j["modes"].push_back(m);
    }
    return j.dump(2);
}

std::string sweep_to_json(const SweepReport& report) {
    json j{{"schema_version", kSchemaVersion},
           {"kind", "sweep"},
           {"problems", report.problems},
           {"runs", report.runs},
           {"repetitions", report.repetitions},
           {"warnings", report.warnings}};
    j["rows"] = json::array();
    for (const auto& row : report.rows) {
        const auto& s = row.setting;
        j["rows"].push_back({{"c_alpha", s.c_alpha},
                             {"beta_R", s.beta_R},
                             {"L", s.L},
                             {"F", s.F},
                             {"CR", s.CR},
                             {"pop_size", s.pop_size},
                             {"mean_success_rate", row.mean_success_rate},
                             {"mean_nfes_factor", row.mean_nfes_factor},
                             {"rank_sums", row.rank_sums},
                             {"rank_sum", row.rank_sum},
                             {"rank_sum_std", row.rank_sum_std}});
    }
    return j.dump(2);
}

std::string problems_to_json(const std::vector<ProblemSpec>& problems) {
    json j{{"schema_version", kSchemaVersion}, {"kind", "problems"}};
    j["problems"] = json::array();
    for (const auto& p : problems) {
        json e{{"name", p.name},
               {"family", p.family == ProblemFamily::Engineering ? "engineering" : "cec2006"},
               {"n", p.n},
               {"m", p.m},
               {"linear_constraints", p.linear_constraints},
               {"nonlinear_constraints", p.nonlinear_constraints},
               {"active_at_optimum", p.active_at_optimum},
               {"f_star", p.f_star},
               {"default_budget", default_budget(p)},
               {"lower", p.lower},
               {"upper", p.upper}};
        e["x_star"] = p.x_star ? json(*p.x_star) : json(nullptr);
        j["problems"].push_back(e);
    }
    return j.dump(2);
}

void write_trace_csv(const std::vector<TraceRecord>& trace, std::ostream& out) {
    out << "nfes,branch,f_best,violation_best,P_succ_local,P_succ_global,freq_local\n";
    for (const auto& t : trace)
        out << t.nfes << ',' << branch_name(t.branch) << ',' << fmt(t.f_best, 17) << ',' << fmt(t.violation_best, 17)
            << ',' << fmt(t.p_succ_local, 17) << ',' << fmt(t.p_succ_global, 17) << ',' << fmt(t.freq_local, 17)
            << '\n';
}

void emit(const RunResult& result, Format format, std::ostream& out) {
    switch (format) {
        case Format::Json:
            out << run_to_json(result) << '\n';
            return;
        case Format::Csv:
            runs_csv({result}, out, true);
            return;
        case Format::Text:
            out << result.problem << " seed=" << result.seed << " mode=" << to_string(result.mode) << '\n'
                << "  best f         " << fmt(result.best.f, 12) << '\n'
                << "  violation      " << fmt(result.best.violation, 6) << '\n'
                << "  success        " << (result.success ? "yes" : "no");
            if (result.nfes_to_success) out << " at NFES " << *result.nfes_to_success;
            out << '\n'
                << "  NFES used      " << result.nfes_used << " of " << result.max_nfes << '\n'
                << "  local/global   " << result.local_steps << '/' << result.global_steps << '\n'
                << "  restarts       " << result.restarts << '\n'
                << "  x              [";
            for (std::size_t i = 0; i < result.best_x.size(); ++i)
                out << (i ? ", " : "") << fmt(result.best_x[i], 12);
            out << "]\n";
            return;
    }
}

void emit(const ExperimentReport& report, Format format, std::ostream& out) {
    emit(std::vector<ExperimentReport>{report}, format, out);
}

void emit(const std::vector<ExperimentReport>& reports, Format format, std::ostream& out) {
    switch (format) {
        case Format::Json: {
            if (reports.size() == 1) {
                write_json(experiment_json(reports.front()), out);
            } else {
                json j{{"schema_version", kSchemaVersion}, {"kind", "experiments"}, {"reports", json::array()}};
                for (const auto& r : reports) j["reports"].push_back(experiment_json(r));
                write_json(j, out);
            }
            return;
        }
        case Format::Csv: {
            bool header = true;
            for (const auto& r : reports) {
                runs_csv(r.per_run, out, header);
                header = false;
            }
            return;
        }
        case Format::Text:
            nfes_table_header(out);
            for (const auto& r : reports) nfes_table_row(r, out);
            out << "\nBest solutions\n";
            for (const auto& r : reports)
                out << std::left << std::setw(16) << r.problem << std::right << " f = " << fmt(r.best.f, 12)
                    << "  violation = " << fmt(r.best.violation, 4) << '\n';
            for (const auto& r : reports) error_table_text(r, out);
            return;
    }
}

void emit(const AblationReport& report, Format format, std::ostream& out) {
    switch (format) {
        case Format::Json:
            out << ablation_to_json(report) << '\n';
            return;
        case Format::Csv:
            out << "mode,problem,success_rate,charged_median_nfes\n";
            for (const auto& row : report.rows)
                for (const auto& e : row.per_problem)
                    out << to_string(row.mode) << ',' << e.problem << ',' << fmt(e.success_rate, 17) << ','
                        << fmt(charged_median_nfes(e), 17) << '\n';
            return;
        case Format::Text:
            out << "Ablation over " << report.problems.size() << " problems, " << report.runs << " runs each\n";
            out << std::left << std::setw(18) << "mode" << std::right << std::setw(14) << "total NFES" << std::setw(10)
                << "mean SR" << std::setw(14) << "scaled NFES" << '\n';
            for (const auto& row : report.rows)
                out << std::left << std::setw(18) << to_string(row.mode) << std::right << std::setw(14)
                    << fixed(row.total_nfes, 0) << std::setw(9) << fixed(100.0 * row.mean_success_rate, 1) << '%'
                    << std::setw(14) << fixed(row.scaled_nfes, 3) << '\n';
            return;
    }
}

void emit(const SweepReport& report, Format format, std::ostream& out) {
    switch (format) {
        case Format::Json:
            out << sweep_to_json(report) << '\n';
            return;
        case Format::Csv:
            out << "c_alpha,beta_R,L,F,CR,pop_size,mean_success_rate,mean_nfes_factor,rank_sum,rank_sum_std\n";
            for (const auto& row : report.rows) {
                const auto& s = row.setting;
                out << fmt(s.c_alpha) << ',' << fmt(s.beta_R) << ',' << fmt(s.L) << ',' << fmt(s.F) << ','
                    << fmt(s.CR) << ',' << s.pop_size << ',' << fmt(row.mean_success_rate, 17) << ','
                    << fmt(row.mean_nfes_factor, 17) << ',' << fmt(row.rank_sum, 17) << ','
                    << fmt(row.rank_sum_std, 17) << '\n';
            }
            return;
        case Format::Text:
            for (const auto& w : report.warnings) out << "warning: " << w << '\n';
            out << std::right << std::setw(8) << "c_alpha" << std::setw(8) << "beta_R" << std::setw(7) << "L"
                << std::setw(6) << "F" << std::setw(6) << "CR" << std::setw(6) << "pop" << std::setw(9) << "SR"
                << std::setw(12) << "NFES fac." << std::setw(10) << "rank sum" << std::setw(8) << "std" << '\n';
            for (const auto& row : report.rows) {
                const auto& s = row.setting;
                out << std::setw(8) << fmt(s.c_alpha) << std::setw(8) << fmt(s.beta_R) << std::setw(7) << fmt(s.L)
                    << std::setw(6) << fmt(s.F) << std::setw(6) << fmt(s.CR) << std::setw(6) << s.pop_size
                    << std::setw(8) << fixed(100.0 * row.mean_success_rate, 1) << '%' << std::setw(12)
                    << fixed(row.mean_nfes_factor, 3) << std::setw(10) << fixed(row.rank_sum, 2) << std::setw(8)
                    << fixed(row.rank_sum_std, 2) << '\n';
            }
            return;
    }
}

void emit_problems(const std::vector<ProblemSpec>& problems, Format format, std::ostream& out) {
    switch (format) {
        case Format::Json:
            out << problems_to_json(problems) << '\n';
            return;
        case Format::Csv:
            out << "name,family,n,m,linear,nonlinear,active,f_star,has_x_star\n";
            for (const auto& p : problems)
                out << p.name << ',' << (p.family == ProblemFamily::Engineering ? "engineering" : "cec2006") << ','
                    << p.n << ',' << p.m << ',' << p.linear_constraints << ',' << p.nonlinear_constraints << ','
                    << p.active_at_optimum << ',' << fmt(p.f_star, 17) << ',' << (p.x_star ? 1 : 0) << '\n';
            return;
        case Format::Text:
            out << std::left << std::setw(16) << "name" << std::right << std::setw(4) << "n" << std::setw(5) << "m"
                << std::setw(5) << "LI" << std::setw(5) << "NI" << std::setw(4) << "a" << std::setw(22) << "f*"
                << '\n';
            for (const auto& p : problems)
                out << std::left << std::setw(16) << p.name << std::right << std::setw(4) << p.n << std::setw(5) << p.m
                    << std::setw(5) << p.linear_constraints << std::setw(5) << p.nonlinear_constraints << std::setw(4)
                    << p.active_at_optimum << std::setw(22) << fmt(p.f_star, 12) << '\n';
            return;
    }
}

ConfigFile parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InvalidConfig(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InvalidConfig("config must be a JSON object");
    ConfigFile cf;
    try {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string& key = it.key();
            const json& v = it.value();
            if (key == "runs") cf.runs = v.get<std::size_t>();
            else if (key == "problems") cf.problems = v.get<std::vector<std::string>>();
            else if (key == "repetitions") cf.repetitions = v.get<std::size_t>();
            else if (key == "reference") cf.reference = v.get<ReferenceTable>();
            else if (key == "grid") {
                for (auto g = v.begin(); g != v.end(); ++g) {
                    if (g.key() == "c_alpha") cf.grid.c_alpha = g->get<std::vector<double>>();
                    else if (g.key() == "beta_R") cf.grid.beta_R = g->get<std::vector<double>>();
                    else if (g.key() == "L") cf.grid.L = g->get<std::vector<double>>();
                    else if (g.key() == "F") cf.grid.F = g->get<std::vector<double>>();
                    else if (g.key() == "CR") cf.grid.CR = g->get<std::vector<double>>();
                    else if (g.key() == "pop_size") cf.grid.pop_size = g->get<std::vector<std::size_t>>();
                    else throw InvalidConfig("unknown grid axis: " + g.key());
                }
            } else {
                apply_run_key(cf.run, key, v);
            }
        }
    } catch (const json::exception& e) {
        throw InvalidConfig(std::string("bad config value: ") + e.what());
    }
    return cf;
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidConfig("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

ConfigFile load_config(const std::string& path) { return parse_config(slurp(path)); }

ReferenceTable load_reference_table(const std::string& path) {
    try {
        return json::parse(slurp(path)).get<ReferenceTable>();
    } catch (const json::exception& e) {
        throw InvalidConfig(path + ": " + e.what());
    }
}

}  // namespace mvie
