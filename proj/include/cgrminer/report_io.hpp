#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cgrminer/analyzer.hpp"
#include "cgrminer/errors.hpp"

namespace cgrminer {

enum class ReportFormat { Structured, Tabular, Both };

namespace detail {

using ordered_json = nlohmann::ordered_json;

inline ordered_json location_to_json(const CodeLocation& loc) {
    return ordered_json{{"file", loc.file_path},
                        {"kind", to_string(loc.entity_kind)},
                        {"name", loc.qualified_entity_name}};
}

inline CodeLocation location_from_report(const ordered_json& node) {
    if (!node.is_object() || !node.contains("file") || !node.contains("kind") ||
        !node.contains("name"))
        throw SchemaError("location must be an object with file/kind/name");
    CodeLocation loc;
    loc.file_path = node.at("file").get<std::string>();
    auto kind = entity_kind_from_string(node.at("kind").get<std::string>());
    if (!kind)
        throw SchemaError("unknown entity kind '" + node.at("kind").get<std::string>() + "'");
    loc.entity_kind = *kind;
    loc.qualified_entity_name = node.at("name").get<std::string>();
    return loc;
}

template <typename T>
T require(const ordered_json& node, const char* field) {
    if (!node.is_object() || !node.contains(field))
        throw SchemaError(std::string("report is missing field '") + field + "'");
    try {
        return node.at(field).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw SchemaError(std::string("report field '") + field + "' has the wrong type");
    }
}

inline std::optional<double> optional_number(const ordered_json& node, const char* field) {
    if (!node.is_object() || !node.contains(field))
        throw SchemaError(std::string("report is missing field '") + field + "'");
    if (node.at(field).is_null())
        return std::nullopt;
    if (!node.at(field).is_number())
        throw SchemaError(std::string("report field '") + field + "' must be a number or null");
    return node.at(field).get<double>();
}

/// RFC 4180 style: quote when the value contains a comma, quote or newline.
inline std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n\r") == std::string::npos)
        return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

} // namespace detail

inline nlohmann::ordered_json report_to_json(const AnalysisReport& report) {
    using detail::ordered_json;
    ordered_json doc;
    doc["tool"] = "cgrminer";
    doc["config"] = ordered_json{{"threshold", report.config.threshold},
                                 {"levels", report.config.levels},
                                 {"extension", report.config.extension},
                                 {"source", report.config.source},
                                 {"classification_method", report.config.classification_method}};
    doc["frequencies"] = ordered_json::array();
    for (const LevelFrequency& f : report.frequencies) {
        ordered_json row{{"level", f.level}, {"units", f.units}, {"effective", f.effective}};
        if (f.frequency)
            row["frequency"] = *f.frequency;
        else
            row["frequency"] = nullptr;
        doc["frequencies"].push_back(std::move(row));
    }
    doc["ratios"] = ordered_json::array();
    for (const TypeRatio& r : report.ratios) {
        ordered_json row{{"type", r.type},
                         {"cgr_count", r.cgr_count},
                         {"effective_count", r.effective_count}};
        if (r.ratio)
            row["ratio"] = *r.ratio;
        else
            row["ratio"] = nullptr;
        doc["ratios"].push_back(std::move(row));
    }
    doc["cgrs"] = ordered_json::array();
    for (const CgrRecordRow& c : report.cgrs) {
        ordered_json row{{"level", c.level},
                         {"offset", c.offset},
                         {"sequence", c.sequence_id},
                         {"first_commit", c.first_commit},
                         {"last_commit", c.last_commit},
                         {"type", c.type},
                         {"classification", c.classification},
                         {"description", c.description}};
        row["before"] = ordered_json::array();
        for (const CodeLocation& loc : c.before_locations)
            row["before"].push_back(detail::location_to_json(loc));
        row["after"] = ordered_json::array();
        for (const CodeLocation& loc : c.after_locations)
            row["after"].push_back(detail::location_to_json(loc));
        doc["cgrs"].push_back(std::move(row));
    }
    doc["units"] = ordered_json::array();
    for (const UnitSummary& u : report.units) {
        doc["units"].push_back(ordered_json{{"level", u.level},
                                            {"offset", u.offset},
                                            {"sequence", u.sequence_id},
                                            {"first_commit", u.first_commit},
                                            {"last_commit", u.last_commit},
                                            {"coarse_count", u.coarse_count},
                                            {"fine_types", u.fine_types},
                                            {"cgr_count", u.cgr_count},
                                            {"effective", u.effective}});
    }
    doc["sequence_frequencies"] = ordered_json::array();
    for (const SequenceFrequency& s : report.sequence_frequencies) {
        doc["sequence_frequencies"].push_back(ordered_json{{"level", s.level},
                                                           {"sequence", s.sequence_id},
                                                           {"units", s.units},
                                                           {"effective", s.effective},
                                                           {"frequency", s.frequency}});
    }
    return doc;
}

inline AnalysisReport report_from_json(const nlohmann::ordered_json& doc) {
    using detail::optional_number;
    using detail::require;
    AnalysisReport report;
    if (!doc.is_object() || !doc.contains("config"))
        throw SchemaError("report document has no config object");
    const auto& config = doc.at("config");
    report.config.threshold = require<double>(config, "threshold");
    report.config.levels = require<std::vector<int>>(config, "levels");
    report.config.extension = require<std::string>(config, "extension");
    report.config.source = require<std::string>(config, "source");
    report.config.classification_method = require<std::string>(config, "classification_method");
    for (const auto& node : require<std::vector<detail::ordered_json>>(doc, "frequencies")) {
        LevelFrequency f;
        f.level = require<int>(node, "level");
        f.units = require<long long>(node, "units");
        f.effective = require<long long>(node, "effective");
        f.frequency = optional_number(node, "frequency");
        report.frequencies.push_back(std::move(f));
    }
    for (const auto& node : require<std::vector<detail::ordered_json>>(doc, "ratios")) {
        TypeRatio r;
        r.type = require<std::string>(node, "type");
        r.cgr_count = require<long long>(node, "cgr_count");
        r.effective_count = require<long long>(node, "effective_count");
        r.ratio = optional_number(node, "ratio");
        report.ratios.push_back(std::move(r));
    }
    for (const auto& node : require<std::vector<detail::ordered_json>>(doc, "cgrs")) {
        CgrRecordRow c;
        c.level = require<int>(node, "level");
        c.offset = require<int>(node, "offset");
        c.sequence_id = require<std::string>(node, "sequence");
        c.first_commit = require<std::string>(node, "first_commit");
        c.last_commit = require<std::string>(node, "last_commit");
        c.type = require<std::string>(node, "type");
        c.classification = require<std::string>(node, "classification");
        if (!classification_from_string(c.classification))
            throw SchemaError("unknown classification '" + c.classification + "'");
        c.description = require<std::string>(node, "description");
        for (const auto& loc : require<std::vector<detail::ordered_json>>(node, "before"))
            c.before_locations.push_back(detail::location_from_report(loc));
        for (const auto& loc : require<std::vector<detail::ordered_json>>(node, "after"))
            c.after_locations.push_back(detail::location_from_report(loc));
        report.cgrs.push_back(std::move(c));
    }
    for (const auto& node : require<std::vector<detail::ordered_json>>(doc, "units")) {
        UnitSummary u;
        u.level = require<int>(node, "level");
        u.offset = require<int>(node, "offset");
        u.sequence_id = require<std::string>(node, "sequence");
        u.first_commit = require<std::string>(node, "first_commit");
        u.last_commit = require<std::string>(node, "last_commit");
        u.coarse_count = require<long long>(node, "coarse_count");
        u.fine_types = require<std::vector<std::string>>(node, "fine_types");
        u.cgr_count = require<long long>(node, "cgr_count");
        u.effective = require<bool>(node, "effective");
        report.units.push_back(std::move(u));
    }
    for (const auto& node :
         require<std::vector<detail::ordered_json>>(doc, "sequence_frequencies")) {
        SequenceFrequency s;
        s.level = require<int>(node, "level");
        s.sequence_id = require<std::string>(node, "sequence");
        s.units = require<long long>(node, "units");
        s.effective = require<long long>(node, "effective");
        s.frequency = require<double>(node, "frequency");
        report.sequence_frequencies.push_back(std::move(s));
    }
    return report;
}

inline AnalysisReport parse_report(const std::string& json_text) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::parse(json_text, nullptr, false);
    if (doc.is_discarded())
        throw SchemaError("report document is not valid JSON");
    return report_from_json(doc);
}

inline std::string structured_report_text(const AnalysisReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

inline std::string frequency_csv(const AnalysisReport& report) {
    std::string out = "level,units,effective,frequency\n";
    for (const LevelFrequency& f : report.frequencies) {
        out += std::to_string(f.level) + "," + std::to_string(f.units) + "," +
               std::to_string(f.effective) + "," +
               (f.frequency ? format6(*f.frequency) : "NA") + "\n";
    }
    return out;
}

inline std::string ratio_csv(const AnalysisReport& report) {
    std::string out = "type,cgr_count,effective_count,ratio\n";
    for (const TypeRatio& r : report.ratios) {
        out += detail::csv_field(r.type) + "," + std::to_string(r.cgr_count) + "," +
               std::to_string(r.effective_count) + "," + (r.ratio ? format6(*r.ratio) : "NA") +
               "\n";
    }
    return out;
}

inline std::string cgrs_csv(const AnalysisReport& report) {
    std::string out = "level,unit_first_commit,type,classification,description\n";
    for (const CgrRecordRow& c : report.cgrs) {
        out += std::to_string(c.level) + "," + detail::csv_field(c.first_commit) + "," +
               detail::csv_field(c.type) + "," + detail::csv_field(c.classification) + "," +
               detail::csv_field(c.description) + "\n";
    }
    return out;
}

/// Writes the selected report artifacts into `out_dir` and returns the paths
/// written. Structured: report.json; tabular: frequency.csv, ratio.csv,
/// cgrs.csv.
inline std::vector<std::string> emit_report(const AnalysisReport& report, ReportFormat format,
                                            const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec)
        throw IoError("cannot create output directory " + out_dir + ": " + ec.message());
    std::vector<std::pair<std::string, std::string>> artifacts;
    if (format == ReportFormat::Structured || format == ReportFormat::Both)
        artifacts.emplace_back("report.json", structured_report_text(report));
    if (format == ReportFormat::Tabular || format == ReportFormat::Both) {
        artifacts.emplace_back("frequency.csv", frequency_csv(report));
        artifacts.emplace_back("ratio.csv", ratio_csv(report));
        artifacts.emplace_back("cgrs.csv", cgrs_csv(report));
    }
    std::vector<std::string> written;
    for (const auto& [name, text] : artifacts) {
        fs::path path = fs::path(out_dir) / name;
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw IoError("cannot write " + path.string());
        out << text;
        written.push_back(path.string());
    }
    return written;
}

} // namespace cgrminer
