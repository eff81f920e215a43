#ifndef UMBRA_VERIFY_HPP
#define UMBRA_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace umbra {

/* The identity-verification suites.  Every check is exact rational
 * arithmetic; a criterion passes only when every identity it covers holds on
 * the nose at the stated sizes. */

struct VerifyConfig {
    std::uint64_t seed = 20260808;
    int degree = -1;  // when >= 0, lowers the exhaustive degree bounds
    bool verbose = false;
};

struct CriterionResult {
    int id;                 // 1..11
    std::string name;
    bool pass;
    int checks;             // number of identities evaluated
    std::string detail;     // counterexample payload or report text
};

// Run one criterion (1..11).
CriterionResult run_criterion(int id, const VerifyConfig& cfg);

// Resolve a suite name to criterion ids:
//   binomial derivatives genfun hopf taylor roman transfer schur plethysm
//   oracle all
std::vector<int> suite_criteria(const std::string& suite);

std::vector<CriterionResult> run_suite(const std::string& suite, const VerifyConfig& cfg);

}  // namespace umbra

#endif
