#pragma once

#include <stdexcept>
#include <string>

namespace cgrminer {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class UnresolvedParentError : public Error {
  public:
    explicit UnresolvedParentError(const std::string& commit, const std::string& parent)
        : Error("commit " + commit + " references unknown parent " + parent),
          commit_id(commit), parent_id(parent) {}
    std::string commit_id;
    std::string parent_id;
};

class CycleError : public Error {
  public:
    explicit CycleError(const std::string& commit)
        : Error("commit graph contains a cycle through " + commit), commit_id(commit) {}
    std::string commit_id;
};

class TokenizeError : public Error {
  public:
    TokenizeError(const std::string& what, std::size_t line)
        : Error(what + " at line " + std::to_string(line)), line(line) {}
    std::size_t line;
};

class UnterminatedCommentError : public TokenizeError {
  public:
    explicit UnterminatedCommentError(std::size_t line)
        : TokenizeError("unterminated block comment", line) {}
};

class UnterminatedStringError : public TokenizeError {
  public:
    explicit UnterminatedStringError(std::size_t line)
        : TokenizeError("unterminated string literal", line) {}
};

class InvalidStrategyError : public Error {
  public:
    using Error::Error;
};

class NoUnitsError : public Error {
  public:
    explicit NoUnitsError(int level)
        : Error("no squash units exist at level " + std::to_string(level)), level(level) {}
    int level;
};

class MissingDetectionError : public Error {
  public:
    explicit MissingDetectionError(const std::string& commit)
        : Error("no fine-grained detection recorded for commit " + commit), commit_id(commit) {}
    std::string commit_id;
};

class ScriptParseError : public Error {
  public:
    ScriptParseError(const std::string& what, std::size_t line)
        : Error("script line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

class NotARepositoryError : public Error {
  public:
    explicit NotARepositoryError(const std::string& path)
        : Error(path + " is not a recognized repository or history script"), path(path) {}
    std::string path;
};

class UnknownCommitError : public Error {
  public:
    explicit UnknownCommitError(const std::string& commit)
        : Error("unknown commit " + commit), commit_id(commit) {}
    std::string commit_id;
};

class SnapshotUnavailableError : public Error {
  public:
    explicit SnapshotUnavailableError(const std::string& ref)
        : Error("snapshot unavailable for " + ref), ref(ref) {}
    std::string ref;
};

class SchemaError : public Error {
  public:
    using Error::Error;
};

class IoError : public Error {
  public:
    using Error::Error;
};

} // namespace cgrminer
