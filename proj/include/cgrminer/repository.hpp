#pragma once

#include <array>
#include <cerrno>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

#include "cgrminer/analyzer.hpp"
#include "cgrminer/commit_graph.hpp"
#include "cgrminer/errors.hpp"
#include "cgrminer/history_script.hpp"
#include "cgrminer/source_parser.hpp"

namespace cgrminer {

enum class SourceKind { GitDirectory, Script };

struct RepositorySource {
    SourceKind kind = SourceKind::Script;
    std::string location;
};

namespace detail {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

/// Runs a command without a shell, capturing stdout. stderr is dropped.
inline CommandResult run_command(const std::vector<std::string>& argv) {
    int fds[2];
    if (pipe(fds) != 0)
        throw IoError(std::string("pipe failed: ") + std::strerror(errno));
    pid_t pid = fork();
    if (pid < 0) {
        close(fds[0]);
        close(fds[1]);
        throw IoError(std::string("fork failed: ") + std::strerror(errno));
    }
    if (pid == 0) {
        close(fds[0]);
        dup2(fds[1], STDOUT_FILENO);
        close(fds[1]);
        int devnull = open("/dev/null", O_WRONLY);
        if (devnull >= 0) {
            dup2(devnull, STDERR_FILENO);
            close(devnull);
        }
        std::vector<char*> args;
        for (const std::string& a : argv)
            args.push_back(const_cast<char*>(a.c_str()));
        args.push_back(nullptr);
        execvp(args[0], args.data());
        _exit(127);
    }
    close(fds[1]);
    CommandResult result;
    std::array<char, 4096> buf;
    ssize_t n;
    while ((n = read(fds[0], buf.data(), buf.size())) > 0)
        result.output.append(buf.data(), static_cast<std::size_t>(n));
    close(fds[0]);
    int status = 0;
    waitpid(pid, &status, 0);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace detail

/// A loaded repository: the commit graph plus on-demand snapshot parsing.
/// Backed either by a history script or by a git work tree / .git directory.
class Repository : public SnapshotSource {
  public:
    static Repository open(const RepositorySource& source, std::string extension = ".java") {
        Repository repo;
        repo.extension_ = std::move(extension);
        if (source.kind == SourceKind::Script)
            repo.open_script(source.location);
        else
            repo.open_git(source.location);
        return repo;
    }

    const CommitGraph& graph() const { return graph_; }
    const std::string& extension() const { return extension_; }

    Snapshot snapshot(const CommitId& id) const override {
        if (!graph_.contains(id))
            throw UnknownCommitError(id);
        if (script_)
            return build_snapshot(replay_files(*script_, id), extension_);
        return build_snapshot(git_files(id), extension_);
    }

  private:
    CommitGraph graph_;
    std::string extension_;
    std::shared_ptr<const HistoryScript> script_; // empty for the git backend
    std::string git_dir_;

    void open_script(const std::string& path) {
        if (!std::filesystem::is_regular_file(path))
            throw NotARepositoryError(path);
        HistoryScript script = parse_history_script(detail::read_text_file(path));
        graph_ = script_graph(script);
        script_ = std::make_shared<const HistoryScript>(std::move(script));
    }

    void open_git(const std::string& dir) {
        if (!std::filesystem::is_directory(dir))
            throw NotARepositoryError(dir);
        auto probe = detail::run_command({"git", "-C", dir, "rev-parse", "--git-dir"});
        if (probe.exit_code != 0)
            throw NotARepositoryError(dir);
        git_dir_ = dir;

        auto listing = detail::run_command({"git", "-C", dir, "rev-list", "--all", "--parents"});
        if (listing.exit_code != 0)
            throw NotARepositoryError(dir);
        std::vector<Commit> commits;
        std::istringstream lines(listing.output);
        std::string line;
        while (std::getline(lines, line)) {
            if (line.empty())
                continue;
            std::istringstream fields(line);
            Commit commit;
            fields >> commit.id;
            CommitId parent;
            while (fields >> parent)
                commit.parents.push_back(parent);
            commit.snapshot_ref = commit.id;
            commits.push_back(std::move(commit));
        }
        auto subjects = detail::run_command(
            {"git", "-C", dir, "log", "--all", "--format=%H%x1f%s%x1e"});
        if (subjects.exit_code == 0) {
            std::map<std::string, std::string> message_of;
            std::size_t start = 0;
            while (start < subjects.output.size()) {
                std::size_t end = subjects.output.find('\x1e', start);
                if (end == std::string::npos)
                    break;
                std::string record = subjects.output.substr(start, end - start);
                start = end + 1;
                while (!record.empty() && (record.front() == '\n' || record.front() == '\r'))
                    record.erase(record.begin());
                std::size_t sep = record.find('\x1f');
                if (sep != std::string::npos)
                    message_of[record.substr(0, sep)] = record.substr(sep + 1);
            }
            for (Commit& c : commits) {
                auto it = message_of.find(c.id);
                if (it != message_of.end())
                    c.message = it->second;
            }
        }
        graph_ = build_graph(commits);
    }

    std::map<std::string, std::string> git_files(const CommitId& id) const {
        auto listing = detail::run_command(
            {"git", "-C", git_dir_, "ls-tree", "-r", "-z", "--name-only", id});
        if (listing.exit_code != 0)
            throw SnapshotUnavailableError(id);
        std::map<std::string, std::string> files;
        std::size_t start = 0;
        while (start < listing.output.size()) {
            std::size_t end = listing.output.find('\0', start);
            if (end == std::string::npos)
                end = listing.output.size();
            std::string path = listing.output.substr(start, end - start);
            start = end + 1;
            if (path.size() < extension_.size() ||
                path.compare(path.size() - extension_.size(), extension_.size(), extension_) != 0)
                continue;
            auto blob = detail::run_command({"git", "-C", git_dir_, "show", id + ":" + path});
            if (blob.exit_code != 0)
                throw SnapshotUnavailableError(id + ":" + path);
            files[path] = std::move(blob.output);
        }
        return files;
    }
};

inline Repository open_repository(const RepositorySource& source,
                                  std::string extension = ".java") {
    return Repository::open(source, std::move(extension));
}

} // namespace cgrminer
