#pragma once

#include "fraclab/bounds.hpp"
#include "fraclab/subordinators.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace fraclab {

// Run configuration (key = value with [sections]); relative paths resolve
// against the directory of the config file.
//
//   [fractal]     path
//   [levels]      M, n, refinement_n, window (auto or an integer M' > M)
//   [processes]   stable = 0.5, 0.3        relativistic = 0.5:1
//   [grids]       points_per_regime, t_min, flat_span, kernel_times, table_pairs,
//                 max_pairs, plot_pairs
//   [thresholds]  spread, bm_flat_spread, refinement, domination, truncation,
//                 free_max_time, sandwich_c1, sandwich_c2, sandwich_c3
//   [run]         output, cache, threads, seed
struct RunConfig {
    std::filesystem::path source;  // the config file itself
    std::string source_text;
    std::filesystem::path fractal_path;
    int M = 1;
    int n = 5;
    int refinement_n = 4;  // 0 disables the refinement pass
    int window = -1;       // -1 = auto
    std::vector<SubordinatorSpec> stable;
    std::vector<SubordinatorSpec> relativistic;

    int points_per_regime = 12;
    double t_min = 0.1;
    double flat_span = 100.0;
    std::vector<double> kernel_times{0.1, 1.0, 10.0};
    int table_pairs = 200;
    int max_pairs = 2000;
    int max_all_pairs_level = 5;  // all vertex pairs up to this n, max_pairs sampled above
    int plot_pairs = 50;

    double spread_threshold = 10.0;
    double bm_flat_spread = 3.0;
    double refinement_tolerance = 0.5;
    double domination_tolerance = 1e-8;
    double truncation_tolerance = 1e-6;
    double free_max_time = 0.1;
    double sandwich_c1 = 0.5;
    double sandwich_c2 = 2.0;
    double sandwich_c3 = 1.0;

    std::filesystem::path output;
    std::filesystem::path cache;  // empty = no eigenpair cache
    int threads = 1;
    unsigned seed = 1;

    static constexpr int max_level = 7;

    /// Throws ConfigError. Does not touch the filesystem beyond reading.
    void validate() const;
};

RunConfig parse_run_config(const std::string& text, const std::filesystem::path& origin);
RunConfig load_run_config(const std::filesystem::path& path);

enum class Stage { geometry, labeling, spectral, subordination, verification };
const char* stage_name(Stage s);
Stage parse_stage(const std::string& name);

struct ManifestEntry {
    std::string path;  // relative to the output directory
    std::string sha256;
    std::uintmax_t bytes = 0;
};

struct RunManifest {
    std::string config_hash;
    std::string version;
    Stage last_stage = Stage::verification;
    std::vector<std::pair<std::string, double>> timings;  // stage -> seconds
    std::vector<ManifestEntry> files;
    int cache_hits = 0;
    int cache_misses = 0;
    int claims = 0;
    int claims_failed = 0;
    bool all_pass = true;

    nlohmann::ordered_json to_json() const;
};

extern const char* const kArtifactVersion;

/// Error raised by a pipeline stage; what() is prefixed with "[stage] ".
class StageError : public std::runtime_error {
public:
    StageError(Stage stage, const std::string& message, bool configuration);
    Stage stage() const { return stage_; }
    bool configuration() const { return configuration_; }

private:
    Stage stage_;
    bool configuration_;
};

/// Runs geometry -> labeling -> spectral -> subordination -> verification up
/// to `last`, writing into a staging directory that replaces config.output on
/// success and is removed on failure.
RunManifest run_pipeline(const RunConfig& config, Stage last = Stage::verification);

nlohmann::ordered_json report_to_json(const BoundReport& report);

/// Per-claim CSVs (t, r, kernel, form, ratio) for reports with plot rows, and
/// a gnuplot script when at least one CSV was written. Returns the file names
/// written, relative to outdir.
std::vector<std::string> emit_plot_data(const std::vector<BoundReport>& reports, const std::filesystem::path& outdir);

/// File-safe name for a claim at a level, e.g. "stable-short_stable(0.5)_n5" -> "stable-short_stable_0.5_n5".
std::string sanitize_file_name(const std::string& name);

}  // namespace fraclab
