#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cgrminer {

/// Multiset of source tokens, kept sorted for deterministic iteration.
using TokenBag = std::map<std::string, int>;

inline TokenBag make_bag(const std::vector<std::string>& tokens) {
    TokenBag bag;
    for (const auto& t : tokens)
        ++bag[t];
    return bag;
}

inline std::size_t bag_size(const TokenBag& bag) {
    std::size_t n = 0;
    for (const auto& [token, count] : bag)
        n += static_cast<std::size_t>(count);
    return n;
}

enum class AccessModifier { Public, Protected, Private, PackagePrivate };

inline const char* to_string(AccessModifier m) {
    switch (m) {
    case AccessModifier::Public: return "public";
    case AccessModifier::Protected: return "protected";
    case AccessModifier::Private: return "private";
    default: return "package-private";
    }
}

struct AttributeDecl {
    std::string name;
    std::string type_name;
    AccessModifier access = AccessModifier::PackagePrivate;
    TokenBag initializer_tokens;

    bool operator==(const AttributeDecl&) const = default;
};

struct MethodDecl {
    std::string name;
    std::vector<std::string> parameter_types;
    std::string return_type;
    AccessModifier access = AccessModifier::PackagePrivate;
    TokenBag body_tokens;

    /// "name(T1,T2)" -- identifies the method within its class.
    std::string signature() const {
        std::string s = name + "(";
        for (std::size_t i = 0; i < parameter_types.size(); ++i) {
            if (i)
                s += ",";
            s += parameter_types[i];
        }
        return s + ")";
    }

    bool operator==(const MethodDecl&) const = default;
};

struct ClassDecl {
    std::string name;
    std::string qualified_name;
    AccessModifier access = AccessModifier::PackagePrivate;
    std::optional<std::string> superclass_name;
    std::vector<AttributeDecl> attributes;
    std::vector<MethodDecl> methods;

    bool operator==(const ClassDecl&) const = default;
};

struct SourceFile {
    std::string path;
    std::string package_name; // empty for the default package
    std::vector<ClassDecl> classes;

    bool operator==(const SourceFile&) const = default;
};

/// One entry per class kept in a snapshot after duplicate resolution.
/// Owns its declaration so a Snapshot stays safely copyable.
struct ClassEntry {
    ClassDecl decl;
    std::string file_path;
    std::string package_name;
};

/// Parsed view of one version of the code base. `classes` indexes the kept
/// declaration of every qualified class name; when two files declare the same
/// qualified name the lexicographically smallest path wins and a warning is
/// recorded.
struct Snapshot {
    std::map<std::string, SourceFile> files;
    std::map<std::string, ClassEntry> classes;
    std::vector<std::string> warnings;

    bool has_file(const std::string& path) const { return files.count(path) != 0; }

    const ClassEntry* find_class(const std::string& qualified_name) const {
        auto it = classes.find(qualified_name);
        return it == classes.end() ? nullptr : &it->second;
    }

    /// Packages that contain at least one kept class.
    std::map<std::string, std::vector<const ClassEntry*>> packages() const {
        std::map<std::string, std::vector<const ClassEntry*>> out;
        for (const auto& [name, entry] : classes)
            out[entry.package_name].push_back(&entry);
        return out;
    }
};

namespace detail {

inline void index_snapshot(Snapshot& snap) {
    snap.classes.clear();
    for (const auto& [path, file] : snap.files) {
        for (const ClassDecl& decl : file.classes) {
            auto [it, inserted] = snap.classes.try_emplace(
                decl.qualified_name, ClassEntry{decl, path, file.package_name});
            if (!inserted) {
                // files map iterates in path order, so the first hit wins
                snap.warnings.push_back(path + ": duplicate class " + decl.qualified_name +
                                        " ignored (kept " + it->second.file_path + ")");
            }
        }
    }
}

} // namespace detail

} // namespace cgrminer
