#pragma once

#include <algorithm>
#include <string>

#include <json.hpp>

#include "cgrminer/errors.hpp"
#include "cgrminer/refactoring.hpp"

namespace cgrminer {

namespace detail {

inline CodeLocation location_from_json(const nlohmann::json& node, const char* side,
                                       std::size_t record, std::size_t index) {
    auto context = [&](const std::string& what) {
        return SchemaError("detection " + std::to_string(record) + ", " + side + "[" +
                           std::to_string(index) + "]: " + what);
    };
    if (!node.is_object())
        throw context("location must be an object");
    for (const char* field : {"file", "kind", "name"}) {
        if (!node.contains(field))
            throw context(std::string("missing field '") + field + "'");
        if (!node.at(field).is_string())
            throw context(std::string("field '") + field + "' must be a string");
    }
    CodeLocation loc;
    loc.file_path = node.at("file").get<std::string>();
    auto kind = entity_kind_from_string(node.at("kind").get<std::string>());
    if (!kind)
        throw context("unknown entity kind '" + node.at("kind").get<std::string>() + "'");
    loc.entity_kind = *kind;
    loc.qualified_entity_name = node.at("name").get<std::string>();
    if (loc.qualified_entity_name.empty())
        throw context("field 'name' must not be empty");
    return loc;
}

} // namespace detail

/// Reads refactorings produced by an external tool from a JSON document of
/// the form [{"type", "description", "before": [...], "after": [...]}, ...].
/// Type names outside the built-in catalog are kept verbatim; they take part
/// in type-set comparisons by string equality.
inline DetectionSet ingest_external_detections(const std::string& json_text) {
    nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, false);
    if (doc.is_discarded())
        throw SchemaError("external detections document is not valid JSON");
    if (!doc.is_array())
        throw SchemaError("external detections document must be a JSON array");
    DetectionSet out;
    for (std::size_t r = 0; r < doc.size(); ++r) {
        const nlohmann::json& node = doc[r];
        auto context = [&](const std::string& what) {
            return SchemaError("detection " + std::to_string(r) + ": " + what);
        };
        if (!node.is_object())
            throw context("must be an object");
        for (const char* field : {"type", "description"}) {
            if (!node.contains(field) || !node.at(field).is_string())
                throw context(std::string("missing string field '") + field + "'");
        }
        RefactoringInstance inst;
        inst.type = node.at("type").get<std::string>();
        if (inst.type.empty())
            throw context("field 'type' must not be empty");
        inst.description = node.at("description").get<std::string>();
        for (const char* side : {"before", "after"}) {
            if (!node.contains(side) || !node.at(side).is_array())
                throw context(std::string("missing array field '") + side + "'");
            const nlohmann::json& locs = node.at(side);
            if (locs.empty())
                throw context(std::string("field '") + side + "' must not be empty");
            for (std::size_t i = 0; i < locs.size(); ++i) {
                CodeLocation loc = detail::location_from_json(locs[i], side, r, i);
                if (side[0] == 'b')
                    inst.before_locations.push_back(std::move(loc));
                else
                    inst.after_locations.push_back(std::move(loc));
            }
        }
        out.push_back(std::move(inst));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace cgrminer
