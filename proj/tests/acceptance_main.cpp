// One line per acceptance criterion; nonzero exit if any fails.

#include "newtoncomm/acceptance.hpp"

#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv) {
    newtoncomm::AcceptanceOptions options;
    if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);
    const auto results = newtoncomm::run_acceptance(options);
    int failed = 0;
    for (const auto& r : results) {
        if (!r.passed) ++failed;
        std::printf("%s  %-26s %-62s %7.2fs / %5.0fs  %s\n", r.passed ? "PASS" : "FAIL", r.id.c_str(), r.title.c_str(), r.seconds,
                    r.time_limit, r.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
    return failed == 0 ? 0 : 1;
}
