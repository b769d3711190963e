#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "filar/canonical.hpp"
#include "filar/enumerate.hpp"
#include "filar/filar_geometry.hpp"
#include "filar/graph6.hpp"
#include "filar/pipeline.hpp"
#include "filar/trace_formula.hpp"

namespace {

struct CommonArgs {
    int degree = 3;
    std::vector<int> vertices;
    std::string input_graph6;
    std::vector<std::string> constructions;
    std::string cutoff = "auto";
    std::string variance = "unbiased";
    std::string out_dir = ".";
    int jobs = 1;
    bool allow_long_runs = false;
    std::vector<double> t_values = {1.0 / 3.0, 2.0 / 3.0};
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_source = true) {
    cmd->add_option("--degree", args.degree, "graph degree d")->capture_default_str();
    if (with_source) {
        cmd->add_option("--vertices", args.vertices,
                        "vertex counts to enumerate (comma separated)")
            ->delimiter(',');
        cmd->add_option("--input-graph6", args.input_graph6,
                        "read graphs from a graph6 file instead of enumerating");
        cmd->add_option("--construction", args.constructions,
                        "named graphs: k4, petersen, diamond-string:<n>")
            ->delimiter(',');
    }
    cmd->add_option("--cutoff", args.cutoff, "geodesic cutoff L, or 'auto'")
        ->capture_default_str();
    cmd->add_option("--variance", args.variance, "variance convention")
        ->check(CLI::IsMember({"unbiased", "biased"}))
        ->capture_default_str();
    cmd->add_option("--t", args.t_values, "trace-formula evaluation points")
        ->delimiter(',');
    cmd->add_option("--out-dir", args.out_dir, "output directory")->capture_default_str();
    cmd->add_option("--jobs", args.jobs, "worker threads")->capture_default_str();
    cmd->add_flag("--allow-long-runs", args.allow_long_runs,
                  "permit the large enumerations (d=3 n=16, d=4 n=10)");
}

filar::RunConfig to_config(const CommonArgs& args) {
    filar::RunConfig config;
    config.degree = args.degree;
    config.vertex_counts = args.vertices;
    if (!args.input_graph6.empty()) {
        config.source = filar::RunConfig::Source::graph6_file;
        config.graph6_path = args.input_graph6;
    } else if (!args.constructions.empty()) {
        config.source = filar::RunConfig::Source::construction;
        config.constructions = args.constructions;
    } else {
        config.source = filar::RunConfig::Source::enumerate;
    }
    config.cutoff = (args.cutoff == "auto") ? 0 : std::stoi(args.cutoff);
    config.variance = args.variance == "biased" ? filar::RunConfig::Variance::biased
                                                : filar::RunConfig::Variance::unbiased;
    config.t_values = args.t_values;
    config.out_dir = args.out_dir;
    config.jobs = args.jobs;
    config.allow_long_runs = args.allow_long_runs;
    return config;
}

int cmd_enumerate(const CommonArgs& args) {
    filar::RunConfig config = to_config(args);
    if (config.source != filar::RunConfig::Source::enumerate) {
        std::cerr << "enumerate expects --vertices\n";
        return 2;
    }
    std::filesystem::create_directories(args.out_dir);
    for (int n : args.vertices) {
        filar::RunConfig one = config;
        one.vertex_counts = {n};
        const auto graphs = filar::resolve_graphs(one);
        const std::string path = args.out_dir + "/reg_d" + std::to_string(args.degree) +
                                 "_n" + std::to_string(n) + ".g6";
        std::ofstream out(path, std::ios::binary);
        for (const auto& g : graphs)
            out << filar::graph6_encode(g) << '\n';
        std::printf("n=%d d=%d: %zu connected regular graphs -> %s\n", n, args.degree,
                    graphs.size(), path.c_str());
    }
    return 0;
}

int cmd_analyze(const CommonArgs& args, bool plot, const std::string& zoom,
                int plot_level) {
    filar::RunConfig config = to_config(args);
    const filar::ExperimentResult result = filar::run_experiment(config);

    std::filesystem::create_directories(args.out_dir);
    const std::string csv_path = args.out_dir + "/records.csv";
    filar::export_csv(result.records, csv_path);

    const int q = config.degree - 1;
    const auto groups = filar::cluster_filars(result.records, 3, q);
    std::printf("%zu graphs, %zu filar groups (by m3) -> %s\n", result.records.size(),
                groups.size(), csv_path.c_str());
    for (const auto& group : groups) {
        std::printf("  m3=%lld: %zu graphs, centroid mu=%.6f",
                    static_cast<long long>(group.key[0]), group.members.size(),
                    group.centroid_mu);
        if (group.has_fit)
            std::printf(", fitted slope %.3f (predicted %.3f)", group.fitted_slope,
                        group.predicted_slope);
        std::printf("\n");
    }

    if (plot) {
        filar::SvgOptions options;
        if (!zoom.empty()) {
            filar::SvgOptions::Window window{};
            if (std::sscanf(zoom.c_str(), "%lf:%lf:%lf:%lf", &window.min_mu,
                            &window.max_mu, &window.min_sigma,
                            &window.max_sigma) != 4) {
                std::cerr << "bad --zoom, expected min_mu:max_mu:min_sigma:max_sigma\n";
                return 2;
            }
            options.zoom = window;
        }
        (void)plot_level;
        const std::string svg_path = args.out_dir + "/scatter.svg";
        filar::export_svg_scatter(result.records, svg_path, options);
        std::printf("scatter -> %s\n", svg_path.c_str());
    }

    if (!result.all_residuals_ok) {
        std::fprintf(stderr, "trace-formula residual above tolerance for some graphs\n");
        return 1;
    }
    return 0;
}

int cmd_verify(const CommonArgs& args) {
    filar::RunConfig config = to_config(args);
    const auto graphs = filar::resolve_graphs(config);
    bool ok = true;
    for (const auto& g : graphs) {
        const std::string id = filar::canonical_form(g);
        for (double t : config.t_values) {
            const auto report = filar::verify_trace_formula(g, t, config.cutoff);
            const bool pass = report.residual < 1e-9;
            ok = ok && pass;
            std::printf("%-20s n=%2d t=%.6f L=%2d lhs=%.12f rhs=%.12f residual=%.3e %s\n",
                        id.c_str(), g.order(), t, report.cutoff, report.lhs, report.rhs,
                        report.residual, pass ? "ok" : "FAIL");
        }
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral filar structure of regular graphs: enumeration, "
                 "trace-formula verification, and cluster geometry"};
    app.require_subcommand(1);

    CommonArgs enum_args, analyze_args, verify_args, plot_args;
    std::string zoom;
    int plot_level = 3;

    CLI::App* enumerate = app.add_subcommand("enumerate",
                                             "enumerate connected regular graphs to graph6 files");
    add_common(enumerate, enum_args);

    CLI::App* analyze = app.add_subcommand("analyze",
                                           "run the full pipeline and export records.csv");
    add_common(analyze, analyze_args);

    CLI::App* verify = app.add_subcommand("verify",
                                          "check the trace formula graph by graph");
    add_common(verify, verify_args);

    CLI::App* plot = app.add_subcommand("plot", "analyze and render an SVG scatter");
    add_common(plot, plot_args);
    plot->add_option("--zoom", zoom, "window min_mu:max_mu:min_sigma:max_sigma");
    plot->add_option("--level", plot_level, "filar level for group coloring");

    CLI11_PARSE(app, argc, argv);

    try {
        if (enumerate->parsed())
            return cmd_enumerate(enum_args);
        if (analyze->parsed())
            return cmd_analyze(analyze_args, false, "", 3);
        if (verify->parsed())
            return cmd_verify(verify_args);
        if (plot->parsed())
            return cmd_analyze(plot_args, true, zoom, plot_level);
    } catch (const filar::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
