#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cgrminer/analyzer.hpp"
#include "cgrminer/errors.hpp"
#include "cgrminer/report_io.hpp"
#include "cgrminer/repository.hpp"
#include "cgrminer/svg_plot.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRepository = 3;

struct CommonOptions {
    std::string repo_dir;
    std::string script_path;
    double threshold = 0.5;
    std::string extension = ".java";
    int jobs = 0;
};

int default_jobs() {
    if (const char* env = std::getenv("CGRMINER_JOBS")) {
        char* end = nullptr;
        long parsed = std::strtol(env, &end, 10);
        if (end && *end == '\0' && parsed >= 1)
            return static_cast<int>(parsed);
        throw cgrminer::Error("CGRMINER_JOBS must be a positive integer, got '" +
                              std::string(env) + "'");
    }
    return 1;
}

void add_common_options(CLI::App* cmd, CommonOptions& opts) {
    auto* repo = cmd->add_option("--repo", opts.repo_dir, "Path to a git working directory");
    auto* script =
        cmd->add_option("--script", opts.script_path, "Path to a history script file");
    repo->excludes(script);
    script->excludes(repo);
    cmd->add_option("--threshold", opts.threshold,
                    "Entity matching similarity threshold in (0, 1]")
        ->capture_default_str();
    cmd->add_option("--ext", opts.extension, "Source file extension to analyze")
        ->capture_default_str();
    cmd->add_option("--jobs", opts.jobs,
                    "Worker threads for snapshot comparison (default: CGRMINER_JOBS or 1)")
        ->check(CLI::PositiveNumber);
}

cgrminer::RepositorySource source_of(const CommonOptions& opts) {
    if (!opts.repo_dir.empty())
        return {cgrminer::SourceKind::GitDirectory, opts.repo_dir};
    if (!opts.script_path.empty())
        return {cgrminer::SourceKind::Script, opts.script_path};
    throw CLI::ValidationError("source", "one of --repo or --script is required");
}

cgrminer::AnalysisReport analyze_source(const CommonOptions& opts,
                                        const std::vector<int>& levels) {
    cgrminer::Repository repo = cgrminer::open_repository(source_of(opts), opts.extension);
    cgrminer::AnalyzerOptions analyzer_opts;
    analyzer_opts.threshold = opts.threshold;
    analyzer_opts.jobs = opts.jobs > 0 ? opts.jobs : default_jobs();
    analyzer_opts.extension = opts.extension;
    analyzer_opts.source_label = source_of(opts).location;
    cgrminer::Analyzer analyzer(repo.graph(), repo, analyzer_opts);
    std::cerr << "analyzing " << analyzer_opts.source_label << " at levels";
    for (int level : levels)
        std::cerr << " " << level;
    std::cerr << " with " << analyzer_opts.jobs << " job(s)\n";
    return analyzer.run(levels);
}

std::string location_list(const std::vector<cgrminer::CodeLocation>& locations) {
    std::string out;
    for (const auto& loc : locations) {
        if (!out.empty())
            out += "; ";
        out += std::string(cgrminer::to_string(loc.entity_kind)) + " " +
               loc.qualified_entity_name + " @ " + loc.file_path;
    }
    return out;
}

int run_analyze(const CommonOptions& opts, const std::vector<int>& levels,
                const std::string& out_dir, const std::string& format_name) {
    cgrminer::ReportFormat format = cgrminer::ReportFormat::Both;
    if (format_name == "structured")
        format = cgrminer::ReportFormat::Structured;
    else if (format_name == "tabular")
        format = cgrminer::ReportFormat::Tabular;
    cgrminer::AnalysisReport report = analyze_source(opts, levels);
    auto written = cgrminer::emit_report(report, format, out_dir);
    for (const auto& path : written)
        std::cerr << "wrote " << path << "\n";
    for (const auto& f : report.frequencies) {
        std::cerr << "level " << f.level << ": " << f.effective << "/" << f.units
                  << " effective units";
        if (f.frequency)
            std::cerr << " (frequency " << cgrminer::format6(*f.frequency) << ")";
        std::cerr << "\n";
    }
    return 0;
}

int run_detect(const CommonOptions& opts, const std::string& before_id,
               const std::string& after_id) {
    cgrminer::Repository repo = cgrminer::open_repository(source_of(opts), opts.extension);
    cgrminer::Snapshot before = repo.snapshot(before_id);
    cgrminer::Snapshot after = repo.snapshot(after_id);
    cgrminer::DetectionSet detections = cgrminer::detect(before, after, opts.threshold);
    for (const auto& r : detections) {
        std::cout << r.type << "\t" << r.description << "\t"
                  << location_list(r.before_locations) << "\t"
                  << location_list(r.after_locations) << "\n";
    }
    std::cerr << detections.size() << " refactoring(s) between " << before_id << " and "
              << after_id << "\n";
    return 0;
}

int run_plot(const std::string& report_path, const std::string& out_path) {
    std::ifstream in(report_path, std::ios::binary);
    if (!in)
        throw cgrminer::IoError("cannot read " + report_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    cgrminer::AnalysisReport report = cgrminer::parse_report(buffer.str());
    std::string svg = cgrminer::box_plot_svg(report);
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw cgrminer::IoError("cannot write " + out_path);
    out << svg;
    std::cerr << "wrote " << out_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cgrminer: mines refactorings that only appear when commit "
                 "sequences are squashed"};
    app.require_subcommand(1);

    CommonOptions analyze_opts;
    std::vector<int> analyze_levels{2, 3, 4};
    std::string out_dir = "cgrminer-out";
    std::string format_name = "both";
    CLI::App* analyze = app.add_subcommand("analyze", "Analyze a history at several levels");
    add_common_options(analyze, analyze_opts);
    analyze->add_option("--levels", analyze_levels, "Squash window lengths to analyze")
        ->delimiter(',')
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    analyze->add_option("--out", out_dir, "Output directory for report artifacts")
        ->capture_default_str();
    analyze->add_option("--format", format_name, "Report style")
        ->check(CLI::IsMember({"structured", "tabular", "both"}))
        ->capture_default_str();

    CommonOptions detect_opts;
    std::string before_id, after_id;
    CLI::App* detect_cmd =
        app.add_subcommand("detect", "Detect refactorings between two snapshots");
    add_common_options(detect_cmd, detect_opts);
    detect_cmd->add_option("--before", before_id, "Commit id of the before snapshot")
        ->required();
    detect_cmd->add_option("--after", after_id, "Commit id of the after snapshot")->required();

    std::string report_path;
    std::string plot_path = "frequency_boxplot.svg";
    CLI::App* plot =
        app.add_subcommand("plot", "Render a report's per-sequence frequencies as box plots");
    plot->add_option("--report", report_path, "Structured report file produced by analyze")
        ->required();
    plot->add_option("--out", plot_path, "Output SVG path")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitConfig;
    }

    try {
        if (analyze->parsed())
            return run_analyze(analyze_opts, analyze_levels, out_dir, format_name);
        if (detect_cmd->parsed())
            return run_detect(detect_opts, before_id, after_id);
        if (plot->parsed())
            return run_plot(report_path, plot_path);
    } catch (const cgrminer::NotARepositoryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRepository;
    } catch (const cgrminer::UnknownCommitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRepository;
    } catch (const cgrminer::SnapshotUnavailableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRepository;
    } catch (const cgrminer::ScriptParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRepository;
    } catch (const cgrminer::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return 0;
}
