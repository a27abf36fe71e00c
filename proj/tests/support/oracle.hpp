#pragma once

// Brute-force reference evaluators used as test oracles. These deliberately
// reimplement the pipeline's set definitions with naive loops so that the
// production code and the oracle share nothing but the raw detection output.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cgrminer/analyzer.hpp"
#include "cgrminer/commit_graph.hpp"
#include "cgrminer/detector.hpp"
#include "cgrminer/refactoring.hpp"

namespace oracle {

// Straight sequences recomputed from scratch: qualification is decided per
// commit by scanning the whole graph, then maximal runs are grown greedily.
inline std::vector<std::vector<cgrminer::CommitId>>
naive_straight_sequences(const cgrminer::CommitGraph& graph) {
    std::map<cgrminer::CommitId, int> child_counts;
    for (const auto& [id, commit] : graph.commits)
        child_counts[id] = 0;
    for (const auto& [id, commit] : graph.commits)
        for (const auto& parent : commit.parents)
            ++child_counts[parent];

    auto qualifies = [&](const cgrminer::CommitId& id) {
        const cgrminer::Commit& c = graph.commits.at(id);
        return c.parents.size() <= 1 && child_counts.at(id) <= 1;
    };

    std::vector<std::vector<cgrminer::CommitId>> sequences;
    for (const auto& [id, commit] : graph.commits) {
        if (!qualifies(id))
            continue;
        bool parent_qualifies =
            commit.parents.size() == 1 && qualifies(commit.parents.front());
        if (parent_qualifies)
            continue; // not the oldest member of its run
        std::vector<cgrminer::CommitId> run{id};
        for (;;) {
            const cgrminer::CommitId& tail = run.back();
            std::optional<cgrminer::CommitId> next;
            for (const auto& [cid, candidate] : graph.commits) {
                if (candidate.parents.size() == 1 && candidate.parents.front() == tail &&
                    qualifies(cid)) {
                    next = cid;
                    break;
                }
            }
            // a qualifying commit has at most one child, so `next` is unique
            if (!next)
                break;
            run.push_back(*next);
        }
        sequences.push_back(std::move(run));
    }
    std::sort(sequences.begin(), sequences.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return sequences;
}

// One squash unit as the oracle sees it: the commit run plus where it came
// from, enough to identify the unit and to pick its snapshot pair.
struct Unit {
    std::vector<cgrminer::CommitId> commits;
    std::string sequence_first;
    int level = 0;
    int offset = 0;

    bool operator<(const Unit& other) const {
        return std::tie(sequence_first, commits) <
               std::tie(other.sequence_first, other.commits);
    }
};

// Literal strategy application: skip `offset` commits, then chop consecutive
// windows of exactly `level`, discarding the remainder; union over offsets.
inline std::vector<Unit> literal_units(const cgrminer::CommitGraph& graph, int level) {
    std::set<Unit> units;
    for (const auto& sequence : naive_straight_sequences(graph)) {
        for (int offset = 0; offset < level; ++offset) {
            std::size_t pos = static_cast<std::size_t>(offset);
            while (pos + static_cast<std::size_t>(level) <= sequence.size()) {
                Unit unit;
                unit.commits.assign(sequence.begin() + pos,
                                    sequence.begin() + pos + level);
                unit.sequence_first = sequence.front();
                unit.level = level;
                unit.offset = offset;
                units.insert(std::move(unit));
                pos += static_cast<std::size_t>(level);
            }
        }
    }
    return {units.begin(), units.end()};
}

inline long long window_count_formula(const cgrminer::CommitGraph& graph, int level) {
    long long total = 0;
    for (const auto& sequence : naive_straight_sequences(graph)) {
        long long len = static_cast<long long>(sequence.size());
        for (int offset = 0; offset < level; ++offset)
            total += (len - offset) / level;
    }
    return total;
}

// Raw detections for the oracle: same detect() as production, but the oracle
// chooses the snapshot pairs itself and applies Eq.-style set definitions
// with plain loops.
class Evaluator {
  public:
    Evaluator(const cgrminer::CommitGraph& graph, const cgrminer::SnapshotSource& source,
              double threshold = 0.5)
        : graph_(graph), source_(source), threshold_(threshold) {}

    cgrminer::DetectionSet fine(const cgrminer::CommitId& id) const {
        const cgrminer::Commit& commit = graph_.commits.at(id);
        std::optional<cgrminer::CommitId> before;
        if (!commit.parents.empty())
            before = commit.parents.front();
        return raw_detections(before, id);
    }

    cgrminer::DetectionSet coarse(const Unit& unit) const {
        const cgrminer::Commit& first = graph_.commits.at(unit.commits.front());
        std::optional<cgrminer::CommitId> before;
        if (!first.parents.empty())
            before = first.parents.front();
        return raw_detections(before, unit.commits.back());
    }

    std::set<std::string> types_of_unit(const Unit& unit) const {
        std::set<std::string> types;
        for (const auto& id : unit.commits)
            for (const auto& instance : fine(id))
                types.insert(instance.type);
        return types;
    }

    cgrminer::DetectionSet cgr(const Unit& unit) const {
        std::set<std::string> fine_types = types_of_unit(unit);
        cgrminer::DetectionSet kept;
        for (const auto& instance : coarse(unit))
            if (fine_types.find(instance.type) == fine_types.end())
                kept.push_back(instance);
        return kept;
    }

    bool effective(const Unit& unit) const { return !cgr(unit).empty(); }

    std::optional<double> frequency(int level) const {
        std::vector<Unit> units = literal_units(graph_, level);
        if (units.empty())
            return std::nullopt;
        long long hits = 0;
        for (const Unit& unit : units)
            if (effective(unit))
                ++hits;
        return static_cast<double>(hits) / static_cast<double>(units.size());
    }

    std::optional<double> ratio(const std::string& type,
                                const std::vector<int>& levels) const {
        long long count = 0, eff = 0;
        for (int level : levels) {
            for (const Unit& unit : literal_units(graph_, level)) {
                cgrminer::DetectionSet set = cgr(unit);
                if (!set.empty())
                    ++eff;
                for (const auto& instance : set)
                    if (instance.type == type)
                        ++count;
            }
        }
        if (eff == 0)
            return std::nullopt;
        return static_cast<double>(count) / static_cast<double>(eff);
    }

  private:
    const cgrminer::CommitGraph& graph_;
    const cgrminer::SnapshotSource& source_;
    double threshold_;
    // detect() is pure, so memoizing its raw output changes nothing.
    mutable std::map<std::pair<std::optional<cgrminer::CommitId>, cgrminer::CommitId>,
                     cgrminer::DetectionSet>
        memo_;

    const cgrminer::DetectionSet& raw_detections(const std::optional<cgrminer::CommitId>& before,
                                                 const cgrminer::CommitId& after) const {
        auto key = std::make_pair(before, after);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
        cgrminer::Snapshot before_snapshot;
        if (before)
            before_snapshot = source_.snapshot(*before);
        return memo_
            .emplace(key, cgrminer::detect(before_snapshot, source_.snapshot(after), threshold_))
            .first->second;
    }
};

// Exhaustive optimal assignment over a similarity table, for checking the
// greedy matcher's similarity sum. Rows/columns beyond ~6 become factorial,
// which is fine for fixture-sized inputs.
inline double optimal_assignment_sum(const std::vector<std::vector<double>>& table,
                                     double threshold) {
    if (table.empty())
        return 0.0;
    std::size_t rows = table.size();
    std::size_t cols = table.front().size();
    std::vector<int> choice(rows, -1);
    std::vector<bool> used(cols, false);
    double best = 0.0;
    auto recurse = [&](auto&& self, std::size_t row, double sum) -> void {
        if (row == rows) {
            best = std::max(best, sum);
            return;
        }
        self(self, row + 1, sum); // leave this row unmatched
        for (std::size_t col = 0; col < cols; ++col) {
            if (used[col] || table[row][col] < threshold)
                continue;
            used[col] = true;
            self(self, row + 1, sum + table[row][col]);
            used[col] = false;
        }
    };
    recurse(recurse, 0, 0.0);
    return best;
}

} // namespace oracle
