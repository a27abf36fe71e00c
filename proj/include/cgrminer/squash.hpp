#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cgrminer/commit_graph.hpp"
#include "cgrminer/errors.hpp"

namespace cgrminer {

/// Window recipe over a straight sequence: skip the first `offset` commits,
/// then group the rest into consecutive non-overlapping windows of exactly
/// `level` commits, dropping any shorter remainder. level 1, offset 0
/// reproduces the original commits one by one.
struct Strategy {
    int level = 1;
    int offset = 0;

    Strategy() = default;
    Strategy(int level_, int offset_) : level(level_), offset(offset_) {
        if (level < 1)
            throw InvalidStrategyError("granularity level must be >= 1, got " +
                                       std::to_string(level));
        if (offset < 0 || offset >= level)
            throw InvalidStrategyError("offset must be in [0, level-1], got " +
                                       std::to_string(offset) + " at level " +
                                       std::to_string(level));
    }

    bool operator==(const Strategy&) const = default;
};

struct SquashUnit {
    std::string sequence_id;
    std::vector<CommitId> commits; // exactly strategy.level commits, oldest first
    Strategy strategy;

    const CommitId& first() const { return commits.front(); }
    const CommitId& last() const { return commits.back(); }

    bool operator==(const SquashUnit&) const = default;
};

/// The squashed stand-in for a unit: a snapshot pair, not a rewritten
/// history. `before_ref` is the parent of the unit's first commit and is
/// empty when that commit is a root (empty tree).
struct CoarseCommit {
    SquashUnit unit;
    std::optional<CommitId> before_ref;
    CommitId after_ref;

    bool operator==(const CoarseCommit&) const = default;
};

inline std::vector<SquashUnit> extract_units(const StraightSequence& seq,
                                             const Strategy& strategy) {
    Strategy checked(strategy.level, strategy.offset); // revalidate aggregate-initialized input
    std::vector<SquashUnit> units;
    std::size_t level = static_cast<std::size_t>(checked.level);
    for (std::size_t start = static_cast<std::size_t>(checked.offset);
         start + level <= seq.commits.size(); start += level) {
        SquashUnit unit;
        unit.sequence_id = seq.id;
        unit.strategy = checked;
        unit.commits.assign(seq.commits.begin() + static_cast<std::ptrdiff_t>(start),
                            seq.commits.begin() + static_cast<std::ptrdiff_t>(start + level));
        units.push_back(std::move(unit));
    }
    return units;
}

/// Union of the units of every offset 0..level-1 over every straight
/// sequence, deduplicated and sorted by (sequence id, first commit id).
inline std::vector<SquashUnit> units_at_level(const CommitGraph& graph, int level) {
    if (level < 1)
        throw InvalidStrategyError("granularity level must be >= 1, got " +
                                   std::to_string(level));
    std::vector<SquashUnit> all;
    std::set<std::pair<std::string, CommitId>> seen;
    for (const StraightSequence& seq : extract_straight_sequences(graph)) {
        for (int offset = 0; offset < level; ++offset) {
            for (SquashUnit& unit : extract_units(seq, Strategy(level, offset))) {
                if (seen.insert({unit.sequence_id, unit.first()}).second)
                    all.push_back(std::move(unit));
            }
        }
    }
    std::sort(all.begin(), all.end(), [](const SquashUnit& a, const SquashUnit& b) {
        if (a.sequence_id != b.sequence_id)
            return a.sequence_id < b.sequence_id;
        return a.first() < b.first();
    });
    return all;
}

/// Realizes squashing as snapshot-pair selection over the original history.
inline CoarseCommit squash(const CommitGraph& graph, const SquashUnit& unit) {
    const Commit& first = graph.at(unit.first());
    CoarseCommit coarse;
    coarse.unit = unit;
    if (!first.parents.empty())
        coarse.before_ref = first.parents.front();
    coarse.after_ref = unit.last();
    return coarse;
}

} // namespace cgrminer
