#pragma once

// Serialization of runs and reports (JSON, CSV, text tables) and loading of
// JSON config files.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mvie/engine.hpp"
#include "mvie/harness.hpp"

namespace mvie {

inline constexpr int kSchemaVersion = 1;

enum class Format { Json, Csv, Text };
Format parse_format(const std::string& text);

std::string run_to_json(const RunResult& result);
std::string experiment_to_json(const ExperimentReport& report);
ExperimentReport experiment_from_json(const std::string& text);
std::string ablation_to_json(const AblationReport& report);
std::string sweep_to_json(const SweepReport& report);
std::string problems_to_json(const std::vector<ProblemSpec>& problems);

// nfes,branch,f_best,violation_best,P_succ_local,P_succ_global,freq_local
void write_trace_csv(const std::vector<TraceRecord>& trace, std::ostream& out);

void emit(const RunResult& result, Format format, std::ostream& out);
// CSV is one row per run; text mirrors the NFES table and, when checkpoints
// were captured, the error table.
void emit(const ExperimentReport& report, Format format, std::ostream& out);
void emit(const std::vector<ExperimentReport>& reports, Format format, std::ostream& out);
void emit(const AblationReport& report, Format format, std::ostream& out);
void emit(const SweepReport& report, Format format, std::ostream& out);
void emit_problems(const std::vector<ProblemSpec>& problems, Format format, std::ostream& out);

struct ConfigFile {
    RunConfig run;
    std::optional<std::size_t> runs;
    std::vector<std::string> problems;
    SweepGrid grid;
    std::optional<std::size_t> repetitions;
    std::optional<ReferenceTable> reference;
};

// Keys mirror RunConfig ("problem", "pop_size", "max_nfes", "target_accuracy",
// "seed", "mode", "F", "CR", "c_alpha", "beta_R", "L", "trace",
// "capture_checkpoints", "checkpoints") plus "runs", "problems",
// "repetitions", "reference" (problem -> median NFES) and "grid" (axis name ->
// list). Unknown keys are rejected.
ConfigFile parse_config(const std::string& json_text);
ConfigFile load_config(const std::string& path);
ReferenceTable load_reference_table(const std::string& path);

}  // namespace mvie
