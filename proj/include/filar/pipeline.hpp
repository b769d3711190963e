#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "filar/graph.hpp"

namespace filar {

struct RunConfig {
    enum class Source { enumerate, graph6_file, construction };
    enum class Variance { unbiased, biased };

    int degree = 3;
    std::vector<int> vertex_counts;            // for Source::enumerate
    Source source = Source::enumerate;
    std::string graph6_path;                   // for Source::graph6_file
    std::vector<std::string> constructions;    // for Source::construction
    int cutoff = 0;                            // geodesic cutoff; 0 = auto
    std::vector<double> t_values = {1.0 / 3.0, 2.0 / 3.0};
    Variance variance = Variance::unbiased;
    std::string out_dir = ".";
    int jobs = 1;
    bool allow_long_runs = false;
    double residual_tolerance = 1e-9;
    std::string cache_dir; // empty: $FILAR_CACHE_DIR, falling back to out_dir/cache
};

struct FilarRecord {
    std::string graph_id;  // 64-bit hash of the canonical form, hex
    std::string canonical; // canonical graph6 line (sort key, cache line)
    int n = 0;
    int d = 0;
    double mu = 0;
    double sigma = 0; // variance in the configured convention
    std::int64_t m3 = 0;
    std::int64_t m4 = 0;
    std::int64_t m5 = 0;
    double residual = 0; // worst trace-formula residual over the configured t values
    double mu_pred = 0;
    double sigma_pred = 0;
    bool flagged = false; // residual above the configured tolerance
};

struct ExperimentResult {
    std::vector<FilarRecord> records; // sorted by canonical form
    bool all_residuals_ok = true;
};

/// enumerate/load -> spectra -> geodesics -> trace check -> predictions.
/// Enumerated families are cached as graph6 files keyed by (n, d) and
/// reused; a corrupt cache file is recomputed and rewritten.
ExperimentResult run_experiment(const RunConfig& config);

/// Graphs for a config, with caching (exposed for the CLI's enumerate command).
std::vector<Graph> resolve_graphs(const RunConfig& config);

/// Named construction: "k4", "petersen", or "diamond-string:<n>".
Graph construction_by_name(const std::string& name);

struct FilarGroup {
    std::vector<std::int64_t> key; // (m3) at level 3, (m3, m4) at level 4
    std::vector<std::size_t> members;
    double centroid_mu = 0;
    double centroid_sigma = 0;
    bool has_fit = false; // needs >= 2 members
    double fitted_slope = 0;
    double fitted_intercept = 0;
    double predicted_slope = 0;
};

/// Groups records by m3 (level 3) or (m3, m4) (level 4) and fits
/// least-squares lines sigma-on-mu per group.
std::vector<FilarGroup> cluster_filars(const std::vector<FilarRecord>& records,
                                       int level, int q);

/// CSV with a fixed header, 17 significant digits, LF endings.
void export_csv(const std::vector<FilarRecord>& records, const std::string& path);

struct SvgOptions {
    int width = 900;
    int height = 600;
    struct Window {
        double min_mu, max_mu, min_sigma, max_sigma;
    };
    std::optional<Window> zoom; // restrict to a window (pre-rendered inset)
};

/// Scatter of (mu, sigma) colored by m3.
void export_svg_scatter(const std::vector<FilarRecord>& records,
                        const std::string& path, const SvgOptions& options = {});

} // namespace filar
