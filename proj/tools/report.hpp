#pragma once

#include <optional>
#include <string>

#include "json.hpp"

namespace cwb::cli {

inline constexpr int kSchemaVersion = 1;

/// What a subcommand hands back; the driver adds seed, version and timing.
struct Outcome {
    Outcome() = default;
    Outcome(std::string p, nlohmann::json params) : problem(std::move(p)), parameters(std::move(params)) {}

    std::string problem;
    nlohmann::json parameters = nlohmann::json::object();
    nlohmann::json result = nlohmann::json::object();
    nlohmann::json diagnostics = nlohmann::json::object();  // search statistics that depend on scheduling
    std::string verdict = "report-only";
    std::optional<std::string> csv;   // replaces the flattened result in csv output
    std::optional<std::string> text;  // appended to text output
    bool text_only = false;           // text output is the header plus `text`
    int exit_code = 0;
};

enum class Format { Json, Csv, Text };

/// runtime_ms < 0 means timing is off: runtime 0 and no diagnostics.
nlohmann::json make_report(const Outcome& o, std::uint64_t seed, double runtime_ms);
std::string render(const Outcome& o, const nlohmann::json& report, Format f);

}  // namespace cwb::cli
