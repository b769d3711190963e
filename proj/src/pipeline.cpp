#include "filar/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "filar/canonical.hpp"
#include "filar/enumerate.hpp"
#include "filar/filar_geometry.hpp"
#include "filar/geodesics.hpp"
#include "filar/graph6.hpp"
#include "filar/spectral.hpp"
#include "filar/trace_formula.hpp"

namespace filar {

namespace {

namespace fs = std::filesystem;

std::string hash_hex(const std::string& bytes) {
    // FNV-1a, 64 bit.
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

fs::path cache_root(const RunConfig& config) {
    if (!config.cache_dir.empty())
        return config.cache_dir;
    if (const char* env = std::getenv("FILAR_CACHE_DIR"); env && *env)
        return env;
    return fs::path(config.out_dir) / "cache";
}

fs::path cache_file(const RunConfig& config, int n) {
    return cache_root(config) / ("reg_d" + std::to_string(config.degree) + "_n" +
                                 std::to_string(n) + ".g6");
}

std::vector<Graph> read_family_cache(const fs::path& path, int n, int d) {
    std::ifstream in(path);
    if (!in)
        throw CacheCorrupt("cannot open " + path.string());
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            throw CacheCorrupt("blank line in " + path.string());
        Graph g = graph6_decode(line); // malformed lines throw
        if (g.order() != n || g.degree() != d)
            throw CacheCorrupt("graph with wrong (n, d) in " + path.string());
        graphs.push_back(std::move(g));
    }
    if (graphs.empty())
        throw CacheCorrupt("empty cache file " + path.string());
    return graphs;
}

void write_family_cache(const fs::path& path, const std::vector<Graph>& graphs) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary);
    if (!out)
        return; // cache is an optimization; failure to persist is not fatal
    for (const Graph& g : graphs)
        out << graph6_encode(g) << '\n';
}

std::vector<Graph> enumerate_with_cache(const RunConfig& config, int n) {
    const fs::path path = cache_file(config, n);
    if (fs::exists(path)) {
        try {
            return read_family_cache(path, n, config.degree);
        } catch (const Error&) {
            // fall through and recompute
        }
    }
    GraphFamily family = enumerate_regular(n, config.degree, config.allow_long_runs);
    write_family_cache(path, family.graphs);
    return std::move(family.graphs);
}

FilarRecord make_record(const Graph& g, const RunConfig& config) {
    FilarRecord record;
    record.canonical = canonical_form(g);
    record.graph_id = hash_hex(record.canonical);
    record.n = g.order();
    record.d = g.degree();
    const int q = g.degree() - 1;

    const SpectralSummary summary = summarize(g);
    record.mu = summary.mu;
    record.sigma = config.variance == RunConfig::Variance::unbiased
                       ? summary.sigma_unbiased
                       : summary.sigma_biased;

    int cutoff = config.cutoff;
    if (cutoff <= 0) {
        cutoff = auto_cutoff(2.0 / 3.0, q, g.degree()); // predictions use t = 1/3, 2/3
        for (double t : config.t_values)
            cutoff = std::max(cutoff, auto_cutoff(t, q, g.degree()));
    }
    const GeodesicSpectrum spectrum = length_spectrum(g, std::max(cutoff, 5));
    record.m3 = spectrum.multiplicity(3);
    record.m4 = spectrum.multiplicity(4);
    record.m5 = spectrum.multiplicity(5);

    double worst = 0;
    for (double t : config.t_values)
        worst = std::max(worst, verify_trace_formula(g, t, cutoff).residual);
    record.residual = worst;
    record.flagged = worst >= config.residual_tolerance;

    const PredictedPoint predicted = predict_point(spectrum.multiplicities, g.order(), q);
    record.mu_pred = predicted.mu;
    record.sigma_pred = predicted.sigma_exact;
    return record;
}

} // namespace

Graph construction_by_name(const std::string& name) {
    if (name == "k4")
        return complete_graph(4);
    if (name == "petersen")
        return petersen_graph();
    if (name.rfind("diamond-string:", 0) == 0) {
        const std::string arg = name.substr(std::string("diamond-string:").size());
        int n = 0;
        try {
            n = std::stoi(arg);
        } catch (const std::exception&) {
            throw SourceUnavailable("bad diamond-string size: " + arg);
        }
        return string_of_diamonds(n);
    }
    throw SourceUnavailable("unknown construction: " + name);
}

std::vector<Graph> resolve_graphs(const RunConfig& config) {
    std::vector<Graph> graphs;
    switch (config.source) {
    case RunConfig::Source::enumerate: {
        if (config.vertex_counts.empty())
            throw SourceUnavailable("no vertex counts configured");
        for (int n : config.vertex_counts) {
            // feasibility (n >= d+1, n*d even) is checked by the enumerator
            auto family = enumerate_with_cache(config, n);
            for (auto& g : family)
                graphs.push_back(std::move(g));
        }
        break;
    }
    case RunConfig::Source::graph6_file: {
        std::ifstream in(config.graph6_path);
        if (!in)
            throw SourceUnavailable("cannot open " + config.graph6_path);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty())
                continue;
            graphs.push_back(graph6_decode(line));
        }
        if (graphs.empty())
            throw SourceUnavailable("no graphs in " + config.graph6_path);
        break;
    }
    case RunConfig::Source::construction: {
        if (config.constructions.empty())
            throw SourceUnavailable("no constructions configured");
        for (const std::string& name : config.constructions)
            graphs.push_back(construction_by_name(name));
        break;
    }
    }
    return graphs;
}

ExperimentResult run_experiment(const RunConfig& config) {
    for (double t : config.t_values)
        if (t < 0 || t > 1)
            throw DomainError("t values must lie in [0, 1]");

    const std::vector<Graph> graphs = resolve_graphs(config);
    std::vector<FilarRecord> records(graphs.size());

    const int jobs = std::max(1, config.jobs);
    if (jobs == 1 || graphs.size() < 2) {
        for (std::size_t i = 0; i < graphs.size(); ++i)
            records[i] = make_record(graphs[i], config);
    } else {
        // Per-graph work is pure; spread indices round-robin over workers.
        std::vector<std::thread> workers;
        std::exception_ptr first_error;
        std::mutex error_mutex;
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < graphs.size(); i += jobs)
                        records[i] = make_record(graphs[i], config);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error)
                        first_error = std::current_exception();
                }
            });
        }
        for (auto& worker : workers)
            worker.join();
        if (first_error)
            std::rethrow_exception(first_error);
    }

    std::sort(records.begin(), records.end(),
              [](const FilarRecord& a, const FilarRecord& b) {
                  if (a.n != b.n)
                      return a.n < b.n;
                  return a.canonical < b.canonical;
              });

    ExperimentResult result;
    result.all_residuals_ok =
        std::none_of(records.begin(), records.end(),
                     [](const FilarRecord& r) { return r.flagged; });
    result.records = std::move(records);
    return result;
}

std::vector<FilarGroup> cluster_filars(const std::vector<FilarRecord>& records,
                                       int level, int q) {
    if (level != 3 && level != 4)
        throw DomainError("clustering supports levels 3 and 4");

    std::map<std::vector<std::int64_t>, FilarGroup> groups;
    for (std::size_t i = 0; i < records.size(); ++i) {
        std::vector<std::int64_t> key{records[i].m3};
        if (level == 4)
            key.push_back(records[i].m4);
        auto& group = groups[key];
        group.key = key;
        group.members.push_back(i);
    }

    std::vector<FilarGroup> out;
    out.reserve(groups.size());
    const double predicted = filar_line_slope(level + 1, q);
    for (auto& [key, group] : groups) {
        double sum_mu = 0, sum_sigma = 0;
        for (std::size_t i : group.members) {
            sum_mu += records[i].mu;
            sum_sigma += records[i].sigma;
        }
        const double k = static_cast<double>(group.members.size());
        group.centroid_mu = sum_mu / k;
        group.centroid_sigma = sum_sigma / k;
        group.predicted_slope = predicted;

        if (group.members.size() >= 2) {
            double sxx = 0, sxy = 0;
            for (std::size_t i : group.members) {
                const double dx = records[i].mu - group.centroid_mu;
                sxx += dx * dx;
                sxy += dx * (records[i].sigma - group.centroid_sigma);
            }
            if (sxx > 0) {
                group.has_fit = true;
                group.fitted_slope = sxy / sxx;
                group.fitted_intercept =
                    group.centroid_sigma - group.fitted_slope * group.centroid_mu;
            }
        }
        out.push_back(std::move(group));
    }
    return out;
}

void export_csv(const std::vector<FilarRecord>& records, const std::string& path) {
    if (records.empty())
        throw IoFailure("refusing to write an empty record set");
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoFailure("cannot open " + path);
    out << "graph_id,n,d,mu,sigma,m3,m4,m5,residual,mu_pred,sigma_pred\n";
    char buf[512];
    for (const FilarRecord& r : records) {
        std::snprintf(buf, sizeof buf,
                      "%s,%d,%d,%.17g,%.17g,%lld,%lld,%lld,%.17g,%.17g,%.17g\n",
                      r.graph_id.c_str(), r.n, r.d, r.mu, r.sigma,
                      static_cast<long long>(r.m3), static_cast<long long>(r.m4),
                      static_cast<long long>(r.m5), r.residual, r.mu_pred,
                      r.sigma_pred);
        out << buf;
    }
    if (!out)
        throw IoFailure("write failed for " + path);
}

namespace {

const char* palette_color(std::int64_t m3) {
    static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                   "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                   "#bcbd22", "#17becf"};
    return colors[m3 % 10];
}

std::string format_tick(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

void export_svg_scatter(const std::vector<FilarRecord>& records,
                        const std::string& path, const SvgOptions& options) {
    if (records.empty())
        throw IoFailure("refusing to plot an empty record set");

    std::vector<const FilarRecord*> points;
    for (const FilarRecord& r : records) {
        if (options.zoom) {
            const auto& w = *options.zoom;
            if (r.mu < w.min_mu || r.mu > w.max_mu || r.sigma < w.min_sigma ||
                r.sigma > w.max_sigma)
                continue;
        }
        points.push_back(&r);
    }
    if (points.empty())
        throw IoFailure("zoom window contains no points");

    double min_mu = points[0]->mu, max_mu = points[0]->mu;
    double min_sigma = points[0]->sigma, max_sigma = points[0]->sigma;
    for (const FilarRecord* r : points) {
        min_mu = std::min(min_mu, r->mu);
        max_mu = std::max(max_mu, r->mu);
        min_sigma = std::min(min_sigma, r->sigma);
        max_sigma = std::max(max_sigma, r->sigma);
    }
    if (options.zoom) {
        min_mu = options.zoom->min_mu;
        max_mu = options.zoom->max_mu;
        min_sigma = options.zoom->min_sigma;
        max_sigma = options.zoom->max_sigma;
    }
    const double pad_mu = (max_mu - min_mu) * 0.05 + 1e-12;
    const double pad_sigma = (max_sigma - min_sigma) * 0.05 + 1e-12;
    min_mu -= pad_mu;
    max_mu += pad_mu;
    min_sigma -= pad_sigma;
    max_sigma += pad_sigma;

    const int width = options.width, height = options.height;
    const int margin = 60;
    auto sx = [&](double mu) {
        return margin + (mu - min_mu) / (max_mu - min_mu) * (width - 2 * margin);
    };
    auto sy = [&](double sigma) {
        return height - margin -
               (sigma - min_sigma) / (max_sigma - min_sigma) * (height - 2 * margin);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    svg << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
        << width - margin << "\" y2=\"" << height - margin
        << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin
        << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double mu = min_mu + (max_mu - min_mu) * i / 5;
        const double sigma = min_sigma + (max_sigma - min_sigma) * i / 5;
        svg << "<text x=\"" << sx(mu) << "\" y=\"" << height - margin + 20
            << "\" font-size=\"11\" text-anchor=\"middle\">" << format_tick(mu)
            << "</text>\n";
        svg << "<text x=\"" << margin - 8 << "\" y=\"" << sy(sigma) + 4
            << "\" font-size=\"11\" text-anchor=\"end\">" << format_tick(sigma)
            << "</text>\n";
    }
    svg << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
        << "\" font-size=\"14\" text-anchor=\"middle\">mean of exp(lambda/d)</text>\n";
    svg << "<text x=\"16\" y=\"" << height / 2
        << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << height / 2 << ")\">variance</text>\n";

    for (const FilarRecord* r : points)
        svg << "<circle cx=\"" << sx(r->mu) << "\" cy=\"" << sy(r->sigma)
            << "\" r=\"2.5\" fill=\"" << palette_color(r->m3) << "\"/>\n";
    svg << "</svg>\n";

    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoFailure("cannot open " + path);
    out << svg.str();
    if (!out)
        throw IoFailure("write failed for " + path);
}

} // namespace filar
