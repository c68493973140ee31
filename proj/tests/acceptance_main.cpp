// Acceptance suite runner: executes every criterion at the stated scale and
// prints one verdict line per criterion. Exit status is nonzero when any
// criterion fails. Pass --quick for the shorter documented mode.

#include <cstring>
#include <iostream>

#include "sinrgame/acceptance.hpp"

int main(int argc, char** argv) {
    sinrgame::AcceptanceConfig cfg;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) cfg = sinrgame::AcceptanceConfig::quick_mode();
    auto results = sinrgame::run_acceptance(cfg, std::cout);
    int failures = 0;
    for (const auto& r : results)
        if (!r.pass) ++failures;
    return failures == 0 ? 0 : 1;
}
