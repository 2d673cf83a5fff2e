// Runs the acceptance battery and prints one line per criterion.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "cwb/battery.hpp"

int main(int argc, char** argv) {
    const unsigned threads = argc > 1 ? static_cast<unsigned>(std::strtoul(argv[1], nullptr, 10)) : 0;
    const auto checks = cwb::battery::acceptance(threads);
    int failed = 0;
    for (const auto& c : checks) {
        std::printf("%-4s %s  %s (%.0f ms)\n", c.passed ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(), c.runtime_ms);
        for (const auto& d : c.diff) std::printf("       %s\n", d.c_str());
        failed += !c.passed;
    }
    std::printf("%zu/%zu criteria passed\n", checks.size() - static_cast<std::size_t>(failed), checks.size());
    return failed == 0 ? 0 : 1;
}
