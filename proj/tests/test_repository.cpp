#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "cgrminer/repository.hpp"
#include "support/script_source.hpp"

using namespace cgrminer;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;

    TempDir() {
        std::string tmpl = (fs::temp_directory_path() / "cgrminer-test-XXXXXX").string();
        REQUIRE(mkdtemp(tmpl.data()) != nullptr);
        path = tmpl;
    }

    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

void run_in(const fs::path& dir, const std::string& command) {
    std::string full = "cd '" + dir.string() + "' && " + command;
    INFO(full);
    REQUIRE(std::system(full.c_str()) == 0);
}

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
}

std::string git_stdout(const fs::path& dir, std::vector<std::string> args) {
    std::vector<std::string> argv = {"git", "-C", dir.string()};
    argv.insert(argv.end(), args.begin(), args.end());
    auto result = detail::run_command(argv);
    REQUIRE(result.exit_code == 0);
    while (!result.output.empty() &&
           (result.output.back() == '\n' || result.output.back() == '\r'))
        result.output.pop_back();
    return result.output;
}

constexpr const char* kCommit = "git -c user.name=tester -c user.email=tester@example.com "
                                "commit -q";

} // namespace

TEST_CASE("a history script file opens as a repository") {
    Repository repo = open_repository(
        {SourceKind::Script, support::fixture_path("fig1_move_class.script")});

    REQUIRE(repo.graph().commits.size() == 3);
    REQUIRE(repo.graph().roots == std::set<CommitId>{"c0"});

    Snapshot head = repo.snapshot("c2");
    REQUIRE(head.find_class("bus.Mbassador") != nullptr);
    REQUIRE(head.find_class("bus.FilteredAsynchronousSubscription") != nullptr);

    REQUIRE_THROWS_AS(repo.snapshot("missing"), UnknownCommitError);
}

TEST_CASE("paths that are not repositories are rejected") {
    REQUIRE_THROWS_AS(
        Repository::open({SourceKind::Script, "/nonexistent/history.script"}),
        NotARepositoryError);

    TempDir dir;
    REQUIRE_THROWS_AS(Repository::open({SourceKind::Script, dir.path.string()}),
                      NotARepositoryError);
    REQUIRE_THROWS_AS(Repository::open({SourceKind::GitDirectory, dir.path.string()}),
                      NotARepositoryError);
    REQUIRE_THROWS_AS(
        Repository::open({SourceKind::GitDirectory, (dir.path / "missing").string()}),
        NotARepositoryError);
}

TEST_CASE("a real git work tree loads its graph and snapshots") {
    TempDir dir;
    run_in(dir.path, "git init -q");

    write_file(dir.path / "src/a/Widget.java",
               "package a;\n\npublic class Widget {\n    public int poke() {\n"
               "        return 7;\n    }\n}\n");
    write_file(dir.path / "notes.txt", "not java\n");
    run_in(dir.path, "git add -A && " + std::string(kCommit) + " -m 'add widget'");

    run_in(dir.path, "git mv src/a/Widget.java src/a/Gadget.java");
    write_file(dir.path / "src/a/Gadget.java",
               "package a;\n\npublic class Gadget {\n    public int poke() {\n"
               "        return 7;\n    }\n}\n");
    run_in(dir.path, "git add -A && " + std::string(kCommit) + " -m 'rename widget'");

    std::string head = git_stdout(dir.path, {"rev-parse", "HEAD"});
    std::string root = git_stdout(dir.path, {"rev-parse", "HEAD~1"});

    Repository repo = open_repository({SourceKind::GitDirectory, dir.path.string()});
    REQUIRE(repo.graph().commits.size() == 2);
    REQUIRE(repo.graph().roots == std::set<CommitId>{root});
    REQUIRE(repo.graph().at(head).parents == std::vector<CommitId>{root});
    REQUIRE(repo.graph().at(head).message == "rename widget");

    Snapshot before = repo.snapshot(root);
    REQUIRE(before.classes.size() == 1);
    REQUIRE(before.find_class("a.Widget") != nullptr);
    REQUIRE_FALSE(before.has_file("notes.txt"));

    Snapshot after = repo.snapshot(head);
    REQUIRE(after.find_class("a.Gadget") != nullptr);
    REQUIRE(after.find_class("a.Gadget")->file_path == "src/a/Gadget.java");

    DetectionSet changes = detect(before, after);
    REQUIRE(changes.size() == 1);
    REQUIRE(changes.front().type == "RenameClass");
}

TEST_CASE("the extension filter applies to git trees") {
    TempDir dir;
    run_in(dir.path, "git init -q");
    write_file(dir.path / "Only.jav", "package p;\n\npublic class Only {\n}\n");
    write_file(dir.path / "Skipped.java", "package p;\n\npublic class Skipped {\n}\n");
    run_in(dir.path, "git add -A && " + std::string(kCommit) + " -m 'two files'");

    std::string head = git_stdout(dir.path, {"rev-parse", "HEAD"});
    Repository repo = open_repository({SourceKind::GitDirectory, dir.path.string()}, ".jav");
    Snapshot snap = repo.snapshot(head);
    REQUIRE(snap.classes.size() == 1);
    REQUIRE(snap.find_class("p.Only") != nullptr);
}
