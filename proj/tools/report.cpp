#include "report.hpp"

#include "cwb/common.hpp"

namespace cwb::cli {

using json = nlohmann::json;

namespace {

void flatten(const json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); })) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    } else if (j.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < j.size(); ++i) s += (i ? " " : "") + (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
        out.emplace_back(path, s);
    } else {
        out.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

}  // namespace

json make_report(const Outcome& o, std::uint64_t seed, double runtime_ms) {
    json r{{"schema_version", kSchemaVersion},
                {"problem", o.problem},
                {"parameters", o.parameters},
                {"result", o.result},
                {"verdict", o.verdict},
                {"seed", seed},
                {"tool_version", kToolVersion},
                {"runtime_ms", std::max(runtime_ms, 0.0)}};
    if (runtime_ms >= 0) r["diagnostics"] = o.diagnostics;
    return r;
}

std::string render(const Outcome& o, const json& report, Format f) {
    if (f == Format::Json) return report.dump(2) + "\n";
    std::vector<std::pair<std::string, std::string>> rows;
    if (f == Format::Csv) {
        if (o.csv) return *o.csv;
        flatten(report["result"], "", rows);
        std::string s = "key,value\n";
        for (const auto& [k, v] : rows) s += csv_field(k) + "," + csv_field(v) + "\n";
        return s;
    }
    std::string s = "problem: " + o.problem + "\nverdict: " + o.verdict + "\n";
    if (o.text_only && o.text) return s + *o.text;
    flatten(report["parameters"], "", rows);
    for (const auto& [k, v] : rows) s += "  " + k + " = " + v + "\n";
    rows.clear();
    flatten(report["result"], "", rows);
    for (const auto& [k, v] : rows) {
        if (o.text && v.find('\n') != std::string::npos) continue;  // shown in the body
        s += k + ": " + v + "\n";
    }
    if (o.text) s += "\n" + *o.text;
    return s;
}

}  // namespace cwb::cli
