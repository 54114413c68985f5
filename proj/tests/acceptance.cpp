// Runs every acceptance criterion at its fixed bounds and prints one line each.

#include <iostream>

#include "qchar/verify.hpp"

int main() {
    qchar::verify::Config cfg;
    cfg.max_n = 4;
    cfg.order_bound = 3;
    cfg.sharp_bound2 = 7;
    cfg.character_bound2 = 9;

    int failed = 0;
    qchar::verify::run_all(cfg, [&](const qchar::verify::CriterionResult &r) {
        if (!r.passed)
            ++failed;
        std::cout << qchar::verify::format_line(r) << std::endl;
    });
    std::cout << (failed ? "FAILED: " : "all criteria passed") ;
    if (failed)
        std::cout << failed << " criteria";
    std::cout << std::endl;
    return failed ? 1 : 0;
}
