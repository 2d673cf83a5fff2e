#pragma once

// Fixed batteries of anchored checks shared by `cwb suite` and the acceptance test.

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cwb::battery {

struct Check {
    std::string id;     // "A1".."A13" or "Q.<module>.<name>"
    std::string title;
    bool passed = false;
    nlohmann::json details = nlohmann::json::object();
    nlohmann::json diagnostics = nlohmann::json::object();  // timings, node counts; may vary between runs
    std::vector<std::string> diff;  // one line per mismatched anchor
    double runtime_ms = 0;
};

using Progress = std::function<void(const std::string&)>;

/// The thirteen acceptance criteria, in order.
std::vector<Check> acceptance(unsigned threads = 1, const Progress& progress = {});
/// Cheap structural anchors, a few seconds in total.
std::vector<Check> quick(unsigned threads = 1, const Progress& progress = {});

/// With `timing` false, runtime is 0 and diagnostics are dropped.
nlohmann::json to_json(const Check& c, bool timing = true);

}  // namespace cwb::battery
