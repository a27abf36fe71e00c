#pragma once

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace cgrminer {

/// Catalog of class-, method-, attribute- and package-level refactorings the
/// built-in detector can report. Externally ingested results may carry type
/// names outside this catalog; those are compared by string equality.
enum class RefactoringType {
    MoveClass,
    RenameClass,
    MoveAndRenameClass,
    ChangeClassAccessModifier,
    MovePackage,
    SplitPackage,
    MergePackage,
    MoveMethod,
    RenameMethod,
    PushDownMethod,
    PullUpMethod,
    AddParameter,
    RemoveParameter,
    ChangeMethodAccessModifier,
    MoveAttribute,
    RenameAttribute,
    ChangeAttributeAccessModifier,
};

inline constexpr std::array<RefactoringType, 17> kRefactoringCatalog = {
    RefactoringType::MoveClass,
    RefactoringType::RenameClass,
    RefactoringType::MoveAndRenameClass,
    RefactoringType::ChangeClassAccessModifier,
    RefactoringType::MovePackage,
    RefactoringType::SplitPackage,
    RefactoringType::MergePackage,
    RefactoringType::MoveMethod,
    RefactoringType::RenameMethod,
    RefactoringType::PushDownMethod,
    RefactoringType::PullUpMethod,
    RefactoringType::AddParameter,
    RefactoringType::RemoveParameter,
    RefactoringType::ChangeMethodAccessModifier,
    RefactoringType::MoveAttribute,
    RefactoringType::RenameAttribute,
    RefactoringType::ChangeAttributeAccessModifier,
};

inline const char* to_string(RefactoringType t) {
    switch (t) {
    case RefactoringType::MoveClass: return "MoveClass";
    case RefactoringType::RenameClass: return "RenameClass";
    case RefactoringType::MoveAndRenameClass: return "MoveAndRenameClass";
    case RefactoringType::ChangeClassAccessModifier: return "ChangeClassAccessModifier";
    case RefactoringType::MovePackage: return "MovePackage";
    case RefactoringType::SplitPackage: return "SplitPackage";
    case RefactoringType::MergePackage: return "MergePackage";
    case RefactoringType::MoveMethod: return "MoveMethod";
    case RefactoringType::RenameMethod: return "RenameMethod";
    case RefactoringType::PushDownMethod: return "PushDownMethod";
    case RefactoringType::PullUpMethod: return "PullUpMethod";
    case RefactoringType::AddParameter: return "AddParameter";
    case RefactoringType::RemoveParameter: return "RemoveParameter";
    case RefactoringType::ChangeMethodAccessModifier: return "ChangeMethodAccessModifier";
    case RefactoringType::MoveAttribute: return "MoveAttribute";
    case RefactoringType::RenameAttribute: return "RenameAttribute";
    default: return "ChangeAttributeAccessModifier";
    }
}

inline std::optional<RefactoringType> refactoring_type_from_string(const std::string& name) {
    for (RefactoringType t : kRefactoringCatalog)
        if (name == to_string(t))
            return t;
    return std::nullopt;
}

enum class EntityKind { Package, Class, Method, Attribute };

inline const char* to_string(EntityKind k) {
    switch (k) {
    case EntityKind::Package: return "package";
    case EntityKind::Class: return "class";
    case EntityKind::Method: return "method";
    default: return "attribute";
    }
}

inline std::optional<EntityKind> entity_kind_from_string(const std::string& name) {
    if (name == "package")
        return EntityKind::Package;
    if (name == "class")
        return EntityKind::Class;
    if (name == "method")
        return EntityKind::Method;
    if (name == "attribute")
        return EntityKind::Attribute;
    return std::nullopt;
}

/// Name used in locations and descriptions when a class sits in the default
/// (unnamed) package.
inline constexpr const char* kDefaultPackageName = "(default)";

inline std::string display_package(const std::string& package_name) {
    return package_name.empty() ? kDefaultPackageName : package_name;
}

struct CodeLocation {
    std::string file_path;
    EntityKind entity_kind = EntityKind::Class;
    std::string qualified_entity_name;

    bool operator==(const CodeLocation&) const = default;
    auto operator<=>(const CodeLocation&) const = default;
};

/// One detected refactoring. `type` is the stable serialized name; catalog
/// instances use to_string(RefactoringType).
struct RefactoringInstance {
    std::string type;
    std::string description;
    std::vector<CodeLocation> before_locations;
    std::vector<CodeLocation> after_locations;

    bool operator==(const RefactoringInstance&) const = default;
    auto operator<=>(const RefactoringInstance&) const = default;
};

using DetectionSet = std::vector<RefactoringInstance>; // kept sorted

inline CodeLocation class_location(const std::string& file, const std::string& qualified_name) {
    return CodeLocation{file, EntityKind::Class, qualified_name};
}

inline CodeLocation package_location(const std::string& file, const std::string& package_name) {
    return CodeLocation{file, EntityKind::Package, display_package(package_name)};
}

} // namespace cgrminer
