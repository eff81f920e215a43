// Acceptance suite: runs every verification criterion at its stated size and
// prints one line per criterion.  Exits nonzero when anything fails.

#include <cstdlib>
#include <iostream>

#include "umbra/verify.hpp"

int main(int argc, char** argv) {
    umbra::VerifyConfig cfg;
    if (argc > 1) cfg.seed = std::strtoull(argv[1], nullptr, 10);

    bool all = true;
    for (int id = 1; id <= 11; ++id) {
        umbra::CriterionResult r = umbra::run_criterion(id, cfg);
        std::cout << "criterion " << (r.id < 10 ? " " : "") << r.id << " "
                  << (r.pass ? "[PASS]" : "[FAIL]") << " " << r.name << " (" << r.checks
                  << " checks)";
        if (!r.detail.empty()) std::cout << "  -- " << r.detail;
        std::cout << std::endl;
        all = all && r.pass;
    }
    std::cout << (all ? "acceptance: all criteria pass" : "acceptance: FAILURES above")
              << std::endl;
    return all ? 0 : 1;
}
