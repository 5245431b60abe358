#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace primword::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;     // deterministic; no timing inside
    double seconds = 0.0;
};

// The seven verification criteria the project gates releases on. Each one is
// a hard, exact check (no tolerances anywhere); criteria 1 and 7 also carry a
// wall-clock ceiling.
CriterionResult criterion_oracle_equivalence(std::uint64_t budget);   // 1
CriterionResult criterion_bijection_fidelity(std::uint64_t budget);   // 2
CriterionResult criterion_formula_cross_agreement();                  // 3
CriterionResult criterion_eps1_combinatorial_adjudication();          // 4
CriterionResult criterion_primitive_count_correctness();              // 5
CriterionResult criterion_asymptotic_finite_checks();                 // 6
CriterionResult criterion_word_property_suites();                    // 7

std::vector<CriterionResult> run_acceptance(std::uint64_t budget);

// Extra seeded sampling of the cross-agreement identities on a wider (n, l)
// range; deterministic for a fixed seed.
CriterionResult random_spot_checks(std::uint64_t seed);

// The individual word-property suites behind criterion 7, exposed so unit tests
// can exercise and report them one by one.
struct SuiteResult {
    std::string name;
    bool pass = false;
    std::uint64_t cases = 0;  // how many instances the sweep checked
    std::string detail;       // first counterexample, when failing
};
std::vector<SuiteResult> run_property_suites();

}  // namespace primword::verify
