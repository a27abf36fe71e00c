#pragma once

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "cgrminer/commit_graph.hpp"
#include "cgrminer/detector.hpp"
#include "cgrminer/errors.hpp"
#include "cgrminer/squash.hpp"

namespace cgrminer {

/// Resolves a commit id to the parsed snapshot of its tree.
class SnapshotSource {
  public:
    virtual ~SnapshotSource() = default;
    virtual Snapshot snapshot(const CommitId& id) const = 0;
};

using FineDetections = std::map<CommitId, DetectionSet>;

/// Set of refactoring type names seen by fine-grained detection across the
/// unit's commits. Every commit of the unit must be present in `fine`.
inline std::set<std::string> ref_types(const SquashUnit& unit, const FineDetections& fine) {
    std::set<std::string> types;
    for (const CommitId& id : unit.commits) {
        auto it = fine.find(id);
        if (it == fine.end())
            throw MissingDetectionError(id);
        for (const RefactoringInstance& inst : it->second)
            types.insert(inst.type);
    }
    return types;
}

/// The coarse-grained refactorings of a unit: instances detected on the
/// squashed pair whose type never shows up in the unit's own commits.
inline DetectionSet compute_cgr(const DetectionSet& coarse, const SquashUnit& unit,
                                const FineDetections& fine) {
    std::set<std::string> seen = ref_types(unit, fine);
    DetectionSet cgr;
    for (const RefactoringInstance& inst : coarse)
        if (!seen.count(inst.type))
            cgr.push_back(inst);
    return cgr;
}

inline bool is_effective(const DetectionSet& cgr) { return !cgr.empty(); }

inline bool is_effective(const DetectionSet& coarse, const SquashUnit& unit,
                         const FineDetections& fine) {
    return is_effective(compute_cgr(coarse, unit, fine));
}

enum class Classification { Generation, Combination, Unclassified };

inline const char* to_string(Classification c) {
    switch (c) {
    case Classification::Generation: return "Generation";
    case Classification::Combination: return "Combination";
    default: return "Unclassified";
    }
}

inline std::optional<Classification> classification_from_string(const std::string& s) {
    if (s == "Generation")
        return Classification::Generation;
    if (s == "Combination")
        return Classification::Combination;
    if (s == "Unclassified")
        return Classification::Unclassified;
    return std::nullopt;
}

/// Heuristic split of coarse-grained refactorings: Combination when some
/// fine-grained instance inside the unit touches one of the record's files
/// (the coarse result plausibly combines detected steps), Generation when
/// none does, Unclassified when the record carries no file paths to compare.
inline Classification classify_cgr(const RefactoringInstance& record, const SquashUnit& unit,
                                   const FineDetections& fine) {
    std::set<std::string> record_files;
    for (const CodeLocation& loc : record.before_locations)
        if (!loc.file_path.empty())
            record_files.insert(loc.file_path);
    for (const CodeLocation& loc : record.after_locations)
        if (!loc.file_path.empty())
            record_files.insert(loc.file_path);
    if (record_files.empty())
        return Classification::Unclassified;
    for (const CommitId& id : unit.commits) {
        auto it = fine.find(id);
        if (it == fine.end())
            throw MissingDetectionError(id);
        for (const RefactoringInstance& inst : it->second) {
            for (const CodeLocation& loc : inst.before_locations)
                if (record_files.count(loc.file_path))
                    return Classification::Combination;
            for (const CodeLocation& loc : inst.after_locations)
                if (record_files.count(loc.file_path))
                    return Classification::Combination;
        }
    }
    return Classification::Generation;
}

/// Rounds to the 6 significant digits every report consumer sees, so stored
/// values and printed values never drift apart.
inline std::string format6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline double quantize6(double v) { return std::strtod(format6(v).c_str(), nullptr); }

struct ReportConfig {
    double threshold = 0.5;
    std::vector<int> levels;
    std::string extension = ".java";
    std::string source;
    std::string classification_method = "file-overlap heuristic";

    bool operator==(const ReportConfig&) const = default;
};

struct LevelFrequency {
    int level = 0;
    long long units = 0;
    long long effective = 0;
    std::optional<double> frequency; // empty when the level has no units

    bool operator==(const LevelFrequency&) const = default;
};

struct TypeRatio {
    std::string type;
    long long cgr_count = 0;
    long long effective_count = 0;
    std::optional<double> ratio; // empty when no effective unit exists

    bool operator==(const TypeRatio&) const = default;
};

struct CgrRecordRow {
    int level = 0;
    int offset = 0;
    std::string sequence_id;
    std::string first_commit;
    std::string last_commit;
    std::string type;
    std::string classification;
    std::string description;
    std::vector<CodeLocation> before_locations;
    std::vector<CodeLocation> after_locations;

    bool operator==(const CgrRecordRow&) const = default;
};

struct UnitSummary {
    int level = 0;
    int offset = 0;
    std::string sequence_id;
    std::string first_commit;
    std::string last_commit;
    long long coarse_count = 0;
    std::vector<std::string> fine_types;
    long long cgr_count = 0;
    bool effective = false;

    bool operator==(const UnitSummary&) const = default;
};

struct SequenceFrequency {
    int level = 0;
    std::string sequence_id;
    long long units = 0;
    long long effective = 0;
    double frequency = 0.0;

    bool operator==(const SequenceFrequency&) const = default;
};

struct AnalysisReport {
    ReportConfig config;
    std::vector<LevelFrequency> frequencies;
    std::vector<TypeRatio> ratios;
    std::vector<CgrRecordRow> cgrs;
    std::vector<UnitSummary> units;
    std::vector<SequenceFrequency> sequence_frequencies;

    bool operator==(const AnalysisReport&) const = default;
};

struct AnalyzerOptions {
    double threshold = 0.5;
    int jobs = 1;
    std::string extension = ".java"; // echoed into reports
    std::string source_label;        // echoed into reports
};

/// Orchestrates detection over a commit graph. Detection runs once per
/// distinct snapshot pair and is cached; all aggregation is a sequential
/// fold over sorted units, so reports do not depend on worker scheduling.
class Analyzer {
  public:
    Analyzer(const CommitGraph& graph, const SnapshotSource& source, AnalyzerOptions options = {})
        : graph_(graph), source_(source), options_(options) {
        if (options_.jobs < 1)
            options_.jobs = 1;
    }

    using PairKey = std::pair<std::optional<CommitId>, CommitId>;

    /// Fine-grained detections of one commit (parent tree vs own tree).
    DetectionSet fine(const CommitId& id) {
        return detect_pair(fine_key(id));
    }

    /// Detections on the squashed stand-in of a unit.
    DetectionSet coarse(const SquashUnit& unit) {
        return detect_pair(coarse_key(unit));
    }

    FineDetections fine_for_unit(const SquashUnit& unit) {
        FineDetections map;
        for (const CommitId& id : unit.commits)
            map[id] = fine(id);
        return map;
    }

    DetectionSet cgr(const SquashUnit& unit) {
        return compute_cgr(coarse(unit), unit, fine_for_unit(unit));
    }

    bool effective(const SquashUnit& unit) { return is_effective(cgr(unit)); }

    /// Share of effective units among all units at `level`.
    double frequency(int level) {
        std::vector<SquashUnit> units = units_at_level(graph_, level);
        if (units.empty())
            throw NoUnitsError(level);
        long long hits = 0;
        for (const SquashUnit& unit : units)
            if (effective(unit))
                ++hits;
        return static_cast<double>(hits) / static_cast<double>(units.size());
    }

    /// CGR instances of `type` per effective unit, summed over `levels`.
    /// Empty optional when no effective unit exists at those levels.
    std::optional<double> ratio(const std::string& type,
                                const std::vector<int>& levels = {2, 3, 4}) {
        if (levels.empty())
            throw std::invalid_argument("ratio needs at least one level");
        for (int level : levels)
            if (level < 2)
                throw std::invalid_argument("ratio levels must be >= 2");
        long long count = 0, eff = 0;
        for (int level : levels) {
            for (const SquashUnit& unit : units_at_level(graph_, level)) {
                DetectionSet set = cgr(unit);
                if (is_effective(set))
                    ++eff;
                for (const RefactoringInstance& inst : set)
                    if (inst.type == type)
                        ++count;
            }
        }
        if (eff == 0)
            return std::nullopt;
        return static_cast<double>(count) / static_cast<double>(eff);
    }

    std::optional<double> ratio(RefactoringType type, const std::vector<int>& levels = {2, 3, 4}) {
        return ratio(std::string(to_string(type)), levels);
    }

    /// Full pipeline over the requested levels.
    AnalysisReport run(const std::vector<int>& levels) {
        if (levels.empty())
            throw std::invalid_argument("analysis needs at least one level");
        std::vector<int> sorted_levels = levels;
        std::sort(sorted_levels.begin(), sorted_levels.end());
        sorted_levels.erase(std::unique(sorted_levels.begin(), sorted_levels.end()),
                            sorted_levels.end());

        std::map<int, std::vector<SquashUnit>> units_by_level;
        std::set<PairKey> wanted;
        for (int level : sorted_levels) {
            auto units = units_at_level(graph_, level);
            for (const SquashUnit& unit : units) {
                wanted.insert(coarse_key(unit));
                for (const CommitId& id : unit.commits)
                    wanted.insert(fine_key(id));
            }
            units_by_level[level] = std::move(units);
        }
        prime_cache({wanted.begin(), wanted.end()});

        AnalysisReport report;
        report.config.threshold = quantize6(options_.threshold);
        report.config.levels = sorted_levels;
        report.config.extension = options_.extension;
        report.config.source = options_.source_label;

        std::map<std::string, std::pair<long long, long long>> type_tallies;
        long long ratio_effective = 0;
        std::map<std::pair<int, std::string>, std::pair<long long, long long>> seq_tallies;

        for (int level : sorted_levels) {
            long long unit_count = 0, effective_count = 0;
            for (const SquashUnit& unit : units_by_level[level]) {
                DetectionSet coarse_set = detect_pair(coarse_key(unit));
                FineDetections fine_map = fine_for_unit(unit);
                DetectionSet cgr_set = compute_cgr(coarse_set, unit, fine_map);
                bool eff = is_effective(cgr_set);

                UnitSummary summary;
                summary.level = level;
                summary.offset = unit.strategy.offset;
                summary.sequence_id = unit.sequence_id;
                summary.first_commit = unit.first();
                summary.last_commit = unit.last();
                summary.coarse_count = static_cast<long long>(coarse_set.size());
                for (const std::string& t : ref_types(unit, fine_map))
                    summary.fine_types.push_back(t);
                summary.cgr_count = static_cast<long long>(cgr_set.size());
                summary.effective = eff;
                report.units.push_back(std::move(summary));

                for (const RefactoringInstance& inst : cgr_set) {
                    CgrRecordRow row;
                    row.level = level;
                    row.offset = unit.strategy.offset;
                    row.sequence_id = unit.sequence_id;
                    row.first_commit = unit.first();
                    row.last_commit = unit.last();
                    row.type = inst.type;
                    row.classification = to_string(classify_cgr(inst, unit, fine_map));
                    row.description = inst.description;
                    row.before_locations = inst.before_locations;
                    row.after_locations = inst.after_locations;
                    report.cgrs.push_back(std::move(row));
                }

                ++unit_count;
                if (eff)
                    ++effective_count;
                auto& seq = seq_tallies[{level, unit.sequence_id}];
                ++seq.first;
                if (eff)
                    ++seq.second;
                if (level >= 2) {
                    if (eff)
                        ++ratio_effective;
                    for (const RefactoringInstance& inst : cgr_set)
                        ++type_tallies[inst.type].first;
                }
            }
            LevelFrequency freq;
            freq.level = level;
            freq.units = unit_count;
            freq.effective = effective_count;
            if (unit_count > 0)
                freq.frequency = quantize6(static_cast<double>(effective_count) /
                                           static_cast<double>(unit_count));
            report.frequencies.push_back(freq);
        }

        for (RefactoringType t : kRefactoringCatalog)
            type_tallies.emplace(to_string(t), std::make_pair(0LL, 0LL));
        for (auto& [type, tally] : type_tallies) {
            TypeRatio row;
            row.type = type;
            row.cgr_count = tally.first;
            row.effective_count = ratio_effective;
            if (ratio_effective > 0)
                row.ratio = quantize6(static_cast<double>(tally.first) /
                                      static_cast<double>(ratio_effective));
            report.ratios.push_back(std::move(row));
        }

        for (const auto& [key, tally] : seq_tallies) {
            SequenceFrequency sf;
            sf.level = key.first;
            sf.sequence_id = key.second;
            sf.units = tally.first;
            sf.effective = tally.second;
            sf.frequency = quantize6(static_cast<double>(tally.second) /
                                     static_cast<double>(tally.first));
            report.sequence_frequencies.push_back(std::move(sf));
        }
        return report;
    }

  private:
    const CommitGraph& graph_;
    const SnapshotSource& source_;
    AnalyzerOptions options_;

    std::mutex cache_mutex_;
    std::map<PairKey, DetectionSet> detections_;
    std::map<std::optional<CommitId>, std::shared_ptr<const Snapshot>> snapshots_;

    PairKey fine_key(const CommitId& id) const {
        const Commit& commit = graph_.at(id);
        std::optional<CommitId> before;
        if (!commit.parents.empty())
            before = commit.parents.front();
        return {before, id};
    }

    PairKey coarse_key(const SquashUnit& unit) const {
        CoarseCommit coarse = squash(graph_, unit);
        return {coarse.before_ref, coarse.after_ref};
    }

    std::shared_ptr<const Snapshot> snapshot_of(const std::optional<CommitId>& ref) {
        {
            std::lock_guard<std::mutex> lock(cache_mutex_);
            auto it = snapshots_.find(ref);
            if (it != snapshots_.end())
                return it->second;
        }
        auto snap = std::make_shared<const Snapshot>(ref ? source_.snapshot(*ref) : Snapshot{});
        std::lock_guard<std::mutex> lock(cache_mutex_);
        return snapshots_.try_emplace(ref, std::move(snap)).first->second;
    }

    DetectionSet compute_pair(const PairKey& key) {
        auto before = snapshot_of(key.first);
        auto after = snapshot_of(key.second);
        return detect(*before, *after, options_.threshold);
    }

    DetectionSet detect_pair(const PairKey& key) {
        {
            std::lock_guard<std::mutex> lock(cache_mutex_);
            auto it = detections_.find(key);
            if (it != detections_.end())
                return it->second;
        }
        DetectionSet result = compute_pair(key);
        std::lock_guard<std::mutex> lock(cache_mutex_);
        return detections_.try_emplace(key, std::move(result)).first->second;
    }

    /// Detects every pair in `keys`, spreading the work over options_.jobs
    /// threads. Results land in the cache; the order of computation cannot
    /// influence anything observable.
    void prime_cache(const std::vector<PairKey>& keys) {
        std::vector<PairKey> todo;
        {
            std::lock_guard<std::mutex> lock(cache_mutex_);
            for (const PairKey& key : keys)
                if (!detections_.count(key))
                    todo.push_back(key);
        }
        if (todo.empty())
            return;
        int jobs = std::min<int>(options_.jobs, static_cast<int>(todo.size()));
        if (jobs <= 1) {
            for (const PairKey& key : todo)
                detect_pair(key);
            return;
        }
        std::vector<DetectionSet> results(todo.size());
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= todo.size())
                    return;
                try {
                    results[i] = compute_pair(todo[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> threads;
        for (int i = 0; i < jobs; ++i)
            threads.emplace_back(worker);
        for (std::thread& t : threads)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
        std::lock_guard<std::mutex> lock(cache_mutex_);
        for (std::size_t i = 0; i < todo.size(); ++i)
            detections_.try_emplace(todo[i], std::move(results[i]));
    }
};

} // namespace cgrminer
