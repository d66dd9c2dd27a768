#pragma once

// JSON reports and CSV curve files.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gsym/error.hpp"
#include "gsym/verify.hpp"

namespace gsym {

inline constexpr int report_version = 1;

struct ReportEntry {
    std::string name;
    std::string field;
    std::size_t dim = 0;
    std::size_t N = 0;
    std::size_t M = 0;
    double tolerance = 0.0;
    double max_violation = 0.0;
    bool pass = true;
    long long runtime_ms = 0;
    std::optional<std::string> curves_file;

    friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

struct Report {
    int version = report_version;
    std::vector<ReportEntry> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }

    friend bool operator==(const Report&, const Report&) = default;
};

inline ReportEntry to_entry(const IneqReport& r) {
    ReportEntry e;
    e.name = r.check_name;
    e.field = r.field_label;
    e.dim = r.dim;
    e.N = r.N;
    e.M = r.M;
    e.tolerance = r.tolerance;
    e.max_violation = r.max_violation;
    e.pass = r.pass;
    e.runtime_ms = r.runtime_ms;
    return e;
}

inline void to_json(nlohmann::json& j, const ReportEntry& e) {
    j = nlohmann::json{{"name", e.name},
                       {"field", e.field},
                       {"dim", e.dim},
                       {"N", e.N},
                       {"M", e.M},
                       {"tolerance", e.tolerance},
                       {"max_violation", e.max_violation},
                       {"pass", e.pass},
                       {"runtime_ms", e.runtime_ms}};
    if (e.curves_file)
        j["curves_file"] = *e.curves_file;
}

inline void from_json(const nlohmann::json& j, ReportEntry& e) {
    j.at("name").get_to(e.name);
    j.at("field").get_to(e.field);
    j.at("dim").get_to(e.dim);
    j.at("N").get_to(e.N);
    j.at("M").get_to(e.M);
    j.at("tolerance").get_to(e.tolerance);
    j.at("max_violation").get_to(e.max_violation);
    j.at("pass").get_to(e.pass);
    j.at("runtime_ms").get_to(e.runtime_ms);
    if (j.contains("curves_file"))
        e.curves_file = j.at("curves_file").get<std::string>();
    else
        e.curves_file.reset();
}

inline void to_json(nlohmann::json& j, const Report& r) {
    j = nlohmann::json{{"version", r.version}, {"checks", r.checks}};
}

inline void from_json(const nlohmann::json& j, Report& r) {
    j.at("version").get_to(r.version);
    j.at("checks").get_to(r.checks);
}

/// Returns an empty string when `j` matches the report schema, otherwise a
/// description of the first problem found.
inline std::string schema_problem(const nlohmann::json& j) {
    using nlohmann::json;
    if (!j.is_object())
        return "report is not an object";
    if (!j.contains("version") || !j["version"].is_number_integer() || j["version"] != report_version)
        return "missing or unsupported version";
    if (!j.contains("checks") || !j["checks"].is_array())
        return "missing checks array";
    const std::pair<const char*, json::value_t> required[] = {
        {"name", json::value_t::string},           {"field", json::value_t::string},
        {"dim", json::value_t::number_unsigned},   {"N", json::value_t::number_unsigned},
        {"M", json::value_t::number_unsigned},     {"tolerance", json::value_t::number_float},
        {"max_violation", json::value_t::number_float}, {"pass", json::value_t::boolean},
        {"runtime_ms", json::value_t::number_integer},
    };
    for (const auto& c : j["checks"]) {
        if (!c.is_object())
            return "check entry is not an object";
        for (const auto& [key, type] : required) {
            if (!c.contains(key))
                return std::string("check entry lacks '") + key + "'";
            const auto& v = c[key];
            const bool ok = type == json::value_t::number_float ? v.is_number()
                            : type == json::value_t::number_integer ? v.is_number_integer()
                            : type == json::value_t::number_unsigned ? v.is_number_unsigned()
                                                                      : v.type() == type;
            if (!ok)
                return std::string("check entry has a bad '") + key + "'";
        }
        if (c.contains("curves_file") && !c["curves_file"].is_string())
            return "check entry has a bad 'curves_file'";
    }
    return {};
}

inline std::string format17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string curves_csv(const IneqReport& r) {
    if (r.abscissa.size() != r.lhs_curve.size() || r.lhs_curve.size() != r.rhs_curve.size())
        throw invalid_parameter("curve lengths differ in report '" + r.check_name + "'");
    std::string out = r.abscissa_name + ",lhs,rhs\n";
    for (std::size_t j = 0; j < r.abscissa.size(); ++j)
        out += format17(r.abscissa[j]) + ',' + format17(r.lhs_curve[j]) + ',' + format17(r.rhs_curve[j]) + '\n';
    return out;
}

/// Writes `<path>.partial` and renames it over `path`, so readers never see a
/// half-written file.
inline void write_atomically(const std::filesystem::path& path, const std::string& contents) {
    std::filesystem::path tmp = path;
    tmp += ".partial";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os)
            throw error("cannot open '" + tmp.string() + "' for writing");
        os << contents;
        os.close();
        if (!os) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw error("failed writing '" + tmp.string() + "'");
        }
    }
    std::filesystem::rename(tmp, path);
}

inline std::string emit(const Report& r) { return nlohmann::json(r).dump(2) + "\n"; }

inline Report parse_report(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (const std::string problem = schema_problem(j); !problem.empty())
        throw error("invalid report: " + problem);
    return j.get<Report>();
}

}  // namespace gsym
