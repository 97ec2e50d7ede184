// Runs the acceptance criteria and prints one line per criterion.
//   acceptance [--fast] [ID ...]

#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "nonstatic/checks.hpp"

int main(int argc, char** argv) {
    using namespace nonstatic::checks;
    Level level = Level::Full;
    std::vector<std::string> ids;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--fast") == 0) level = Level::Fast;
        else ids.emplace_back(argv[i]);
    }

    std::vector<CheckResult> results;
    if (ids.empty()) {
        results = acceptance_criteria(level);
    } else {
        for (const auto& id : ids) {
            auto r = acceptance_criterion(id, level);
            if (!r) {
                std::cerr << "unknown criterion " << id << "\n";
                return 2;
            }
            results.push_back(std::move(*r));
        }
    }

    std::size_t passed = 0;
    for (const auto& r : results) {
        std::cout << format_result(r) << "\n";
        passed += r.passed ? 1 : 0;
    }
    std::cout << passed << "/" << results.size() << " acceptance criteria passed\n";
    return passed == results.size() ? 0 : 1;
}
