#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cgrminer/errors.hpp"

namespace cgrminer {

using CommitId = std::string;

struct Commit {
    CommitId id;
    std::vector<CommitId> parents;
    std::string message;
    /// Handle used by a repository backend to resolve this commit's tree.
    /// Defaults to the commit id itself.
    std::string snapshot_ref;

    bool operator==(const Commit&) const = default;
};

/// Immutable DAG of commits, parent edges pointing into the past.
struct CommitGraph {
    std::map<CommitId, Commit> commits;
    std::set<CommitId> roots;
    std::map<CommitId, std::vector<CommitId>> children;

    bool contains(const CommitId& id) const { return commits.count(id) != 0; }

    const Commit& at(const CommitId& id) const {
        auto it = commits.find(id);
        if (it == commits.end())
            throw UnknownCommitError(id);
        return it->second;
    }

    std::size_t child_count(const CommitId& id) const {
        auto it = children.find(id);
        return it == children.end() ? 0 : it->second.size();
    }
};

/// A maximal run of consecutive commits none of which is a merge commit
/// (more than one parent) or a branch source (more than one child).
/// Commits are ordered oldest first; `id` is the first commit's id.
struct StraightSequence {
    std::string id;
    std::vector<CommitId> commits;

    bool operator==(const StraightSequence&) const = default;
};

/// Builds a validated graph from a commit list. Every parent reference must
/// resolve within the list and the parent relation must be acyclic.
inline CommitGraph build_graph(const std::vector<Commit>& commits) {
    CommitGraph graph;
    for (Commit c : commits) {
        if (c.snapshot_ref.empty())
            c.snapshot_ref = c.id;
        graph.commits[c.id] = std::move(c);
    }
    for (const auto& [id, commit] : graph.commits) {
        for (const CommitId& parent : commit.parents) {
            if (!graph.contains(parent))
                throw UnresolvedParentError(id, parent);
            graph.children[parent].push_back(id);
        }
        if (commit.parents.empty())
            graph.roots.insert(id);
    }
    for (auto& [id, kids] : graph.children)
        std::sort(kids.begin(), kids.end());

    // Kahn's algorithm over child edges; leftovers mean a parent cycle.
    std::map<CommitId, std::size_t> pending;
    std::vector<CommitId> ready;
    for (const auto& [id, commit] : graph.commits) {
        pending[id] = commit.parents.size();
        if (commit.parents.empty())
            ready.push_back(id);
    }
    std::size_t seen = 0;
    while (!ready.empty()) {
        CommitId id = ready.back();
        ready.pop_back();
        ++seen;
        auto it = graph.children.find(id);
        if (it == graph.children.end())
            continue;
        for (const CommitId& child : it->second)
            if (--pending[child] == 0)
                ready.push_back(child);
    }
    if (seen != graph.commits.size()) {
        for (const auto& [id, count] : pending)
            if (count != 0)
                throw CycleError(id);
    }
    return graph;
}

namespace detail {

inline bool in_sequence(const CommitGraph& graph, const Commit& commit) {
    return commit.parents.size() <= 1 && graph.child_count(commit.id) <= 1;
}

} // namespace detail

/// Partitions the non-merge, non-branch-source commits into maximal straight
/// runs. A root commit may head a sequence; an excluded commit terminates
/// sequences on both sides. Result is sorted by first commit id and every
/// qualifying commit appears in exactly one sequence.
inline std::vector<StraightSequence> extract_straight_sequences(const CommitGraph& graph) {
    std::vector<StraightSequence> sequences;
    for (const auto& [id, commit] : graph.commits) {
        if (!detail::in_sequence(graph, commit))
            continue;
        bool starts_run = commit.parents.empty() ||
                          !detail::in_sequence(graph, graph.at(commit.parents.front()));
        if (!starts_run)
            continue;
        StraightSequence seq;
        seq.commits.push_back(id);
        const Commit* current = &commit;
        while (graph.child_count(current->id) == 1) {
            const Commit& child = graph.at(graph.children.at(current->id).front());
            if (!detail::in_sequence(graph, child))
                break;
            seq.commits.push_back(child.id);
            current = &child;
        }
        seq.id = seq.commits.front();
        sequences.push_back(std::move(seq));
    }
    std::sort(sequences.begin(), sequences.end(),
              [](const StraightSequence& a, const StraightSequence& b) { return a.id < b.id; });
    return sequences;
}

} // namespace cgrminer
