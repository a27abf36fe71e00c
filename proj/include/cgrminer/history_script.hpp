#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cgrminer/commit_graph.hpp"
#include "cgrminer/errors.hpp"

namespace cgrminer {

/// Plain-text description of a small repository history, line oriented:
///
///   # comment (only at line start, outside content fences)
///   commit <id>
///   parent <id>          zero or more; defaults to the previous block
///   file <path>
///   <<<
///   ...file content...
///   >>>
///   delete <path>
///
/// A block ends at the next `commit` line or at end of input. The first
/// block defaults to no parents (a root commit).
struct ScriptOp {
    enum class Kind { WriteFile, DeleteFile };
    Kind kind = Kind::WriteFile;
    std::string path;
    std::string content; // empty for DeleteFile

    bool operator==(const ScriptOp&) const = default;
};

struct ScriptCommit {
    CommitId id;
    std::vector<CommitId> parents;
    std::vector<ScriptOp> ops;

    bool operator==(const ScriptCommit&) const = default;
};

struct HistoryScript {
    std::vector<ScriptCommit> commits;

    bool operator==(const HistoryScript&) const = default;
};

namespace detail {

inline std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size())
                lines.emplace_back(text.substr(start));
            break;
        }
        std::string line(text.substr(start, end - start));
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(std::move(line));
        start = end + 1;
    }
    return lines;
}

inline std::pair<std::string, std::string> split_directive(const std::string& line) {
    std::size_t space = line.find(' ');
    if (space == std::string::npos)
        return {line, ""};
    std::size_t arg = line.find_first_not_of(' ', space);
    return {line.substr(0, space), arg == std::string::npos ? "" : line.substr(arg)};
}

} // namespace detail

inline HistoryScript parse_history_script(std::string_view text) {
    HistoryScript script;
    std::map<CommitId, std::size_t> known; // id -> block index
    std::vector<std::string> lines = detail::split_lines(text);
    ScriptCommit* current = nullptr;
    bool current_has_explicit_parents = false;

    auto finish_block = [&]() {
        if (current && !current_has_explicit_parents && script.commits.size() >= 2)
            current->parents.push_back(script.commits[script.commits.size() - 2].id);
    };

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (line.empty() || line[0] == '#')
            continue;
        auto [directive, arg] = detail::split_directive(line);
        std::size_t line_no = i + 1;
        if (directive == "commit") {
            if (arg.empty())
                throw ScriptParseError("commit directive without an id", line_no);
            if (known.count(arg))
                throw ScriptParseError("duplicate commit id " + arg, line_no);
            finish_block();
            known[arg] = script.commits.size();
            script.commits.push_back({arg, {}, {}});
            current = &script.commits.back();
            current_has_explicit_parents = false;
            continue;
        }
        if (current == nullptr)
            throw ScriptParseError("'" + directive + "' before any commit", line_no);
        if (directive == "parent") {
            if (arg.empty())
                throw ScriptParseError("parent directive without an id", line_no);
            auto it = known.find(arg);
            if (it == known.end() || it->second + 1 == script.commits.size())
                throw ScriptParseError("parent " + arg + " does not name an earlier commit",
                                       line_no);
            current->parents.push_back(arg);
            current_has_explicit_parents = true;
            continue;
        }
        if (directive == "file") {
            if (arg.empty())
                throw ScriptParseError("file directive without a path", line_no);
            if (i + 1 >= lines.size() || lines[i + 1] != "<<<")
                throw ScriptParseError("file " + arg + " is not followed by a <<< fence",
                                       line_no);
            std::string content;
            std::size_t j = i + 2;
            for (;; ++j) {
                if (j >= lines.size())
                    throw ScriptParseError("unterminated content fence for " + arg, line_no);
                if (lines[j] == ">>>")
                    break;
                content += lines[j];
                content += '\n';
            }
            current->ops.push_back({ScriptOp::Kind::WriteFile, arg, std::move(content)});
            i = j;
            continue;
        }
        if (directive == "delete") {
            if (arg.empty())
                throw ScriptParseError("delete directive without a path", line_no);
            current->ops.push_back({ScriptOp::Kind::DeleteFile, arg, ""});
            continue;
        }
        throw ScriptParseError("unknown directive '" + directive + "'", line_no);
    }
    finish_block();
    return script;
}

/// Canonical text for a script; parsing it back yields an equal structure.
/// Parents are always written out, including ones that were defaulted.
inline std::string emit_history_script(const HistoryScript& script) {
    std::string out;
    for (std::size_t b = 0; b < script.commits.size(); ++b) {
        const ScriptCommit& commit = script.commits[b];
        out += "commit " + commit.id + "\n";
        bool is_default_parent = b > 0 && commit.parents.size() == 1 &&
                                 commit.parents[0] == script.commits[b - 1].id;
        if (!is_default_parent || b == 0)
            for (const CommitId& p : commit.parents)
                out += "parent " + p + "\n";
        for (const ScriptOp& op : commit.ops) {
            if (op.kind == ScriptOp::Kind::DeleteFile) {
                out += "delete " + op.path + "\n";
                continue;
            }
            out += "file " + op.path + "\n<<<\n";
            std::string_view content = op.content;
            std::size_t start = 0;
            while (start < content.size()) {
                std::size_t end = content.find('\n', start);
                std::string_view line = content.substr(
                    start, end == std::string_view::npos ? std::string_view::npos : end - start);
                if (line == ">>>" || line == "<<<")
                    throw IoError("content of " + op.path + " collides with a fence line");
                if (end == std::string_view::npos)
                    break;
                start = end + 1;
            }
            out += op.content;
            if (!op.content.empty() && op.content.back() != '\n')
                out += '\n';
            out += ">>>\n";
        }
    }
    return out;
}

inline CommitGraph script_graph(const HistoryScript& script) {
    std::vector<Commit> commits;
    for (const ScriptCommit& sc : script.commits)
        commits.push_back({sc.id, sc.parents, "", sc.id});
    return build_graph(commits);
}

/// File state at `id`, replayed from the root along first parents.
inline std::map<std::string, std::string> replay_files(const HistoryScript& script,
                                                       const CommitId& id) {
    std::map<CommitId, std::size_t> index;
    for (std::size_t i = 0; i < script.commits.size(); ++i)
        index[script.commits[i].id] = i;
    auto it = index.find(id);
    if (it == index.end())
        throw UnknownCommitError(id);
    std::vector<std::size_t> chain;
    std::size_t at = it->second;
    while (true) {
        chain.push_back(at);
        const ScriptCommit& commit = script.commits[at];
        if (commit.parents.empty())
            break;
        at = index.at(commit.parents.front());
    }
    std::map<std::string, std::string> files;
    for (auto rit = chain.rbegin(); rit != chain.rend(); ++rit) {
        for (const ScriptOp& op : script.commits[*rit].ops) {
            if (op.kind == ScriptOp::Kind::WriteFile)
                files[op.path] = op.content;
            else
                files.erase(op.path);
        }
    }
    return files;
}

} // namespace cgrminer
