// Acceptance gate: runs every verification criterion at its exact threshold
// and prints one pass/fail line per criterion. Exit 0 only when all pass.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "primword/verify.hpp"

int main() {
    std::uint64_t budget = 10'000'000;
    if (const char* env = std::getenv("PRIMWORD_BUDGET")) budget = std::strtoull(env, nullptr, 10);

    bool all = true;
    for (const auto& r : primword::verify::run_acceptance(budget)) {
        std::printf("[%s] criterion %d: %s — %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.c_str(), r.seconds);
        all = all && r.pass;
    }
    std::printf("%s\n", all ? "ACCEPTANCE: all criteria pass" : "ACCEPTANCE: FAILURES PRESENT");
    return all ? 0 : 1;
}
