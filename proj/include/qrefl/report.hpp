#pragma once
// Run configuration, check scheduling, JSON reports, and concurrent sweeps.
//
// A RunConfig names a grading, an optional boundary family (Identity means
// K = I), and a list of checks. run() validates, executes the checks in
// dependency order, and assembles a Report. Reports serialize to JSON with a
// fixed key set; wall-clock fields are null unless timings are requested, so
// a re-run with the same config and seed is byte-identical.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qrefl/algebra.hpp"
#include "qrefl/verify.hpp"

namespace qrefl {

inline constexpr const char* kLibraryVersion = "0.1.0";

enum class RunMode { Exact, Numeric, Both };

std::string run_mode_name(RunMode m);

// Inverse name maps; throw ConfigInvalid on unknown names.
DiagramKind diagram_from_name(const std::string& s);
Family family_from_name(const std::string& s);
RunMode run_mode_from_name(const std::string& s);

struct RunConfig {
    int m = 0, n = 0;
    DiagramKind diagram = DiagramKind::Distinguished;
    Family family = Family::Identity; // Identity: K = I, no boundary element
    int L = 1;
    int sites = 1;
    std::vector<std::string> checks{"all"};
    RunMode mode = RunMode::Exact;
    std::uint64_t seed = 1;
    double tolerance = 1e-9;
    int numeric_points = 20;
    std::string output_path; // empty: no file, stdout only
    std::map<int, GaussRational> c_values; // pin couplings for faster numerics
    // Distinguished-diagram mixed regression: the quartic boundary relation
    // must FAIL, and failing as expected counts as a pass.
    bool expect_mixed_failure = false;
    bool timings = false; // emit real wall-clock values instead of null
};

struct Report {
    RunConfig config;
    std::string version = kLibraryVersion;
    std::vector<CheckResult> results;
    bool overall = false;
    long total_ms = 0;
};

// Canonical check names, in dependency order (unitarity before transfer;
// charges before exchange/centrality). "all" expands to the subset that
// applies to the config.
const std::vector<std::string>& known_checks();

// Throws ConfigInvalid with the violated rule named; boundary admissibility
// is delegated to validate_spec so the two layers cannot drift.
void validate_config(const RunConfig& cfg);

// Executes the configured checks. Checker errors are rethrown as Error with
// the check name prefixed to the message.
Report run(const RunConfig& cfg);

std::string report_to_json(const Report& rep);

// Atomic write (temp file + rename) to cfg.output_path; no-op when empty.
void write_report(const Report& rep);

// JSON parsing; field names match RunConfig. A single object or an array.
RunConfig config_from_json(const std::string& text);
std::vector<RunConfig> configs_from_json(const std::string& text);

// One sweep entry: either a finished report or the error that stopped it.
struct SweepEntry {
    std::size_t index = 0;
    std::optional<Report> report;
    std::string error; // "Code: message" when the entry failed
};

// Independent configs, run concurrently; per-entry failures do not stop the
// sweep. Reports with an output_path are written as they finish.
std::vector<SweepEntry> sweep(const std::vector<RunConfig>& configs);

// Summary table: one row per entry with the pass flag and residual metrics.
std::string sweep_summary_json(const std::vector<SweepEntry>& entries);

} // namespace qrefl
