#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "primword/bigint.hpp"

namespace primword {

// eps1/eps2/eps count the pairs (p, q) of primitive words with |p| = 2|q| = 2l
// and pq non-primitive, split by whether the primitive root of pq is longer
// (eps1, the squared x-q-x shape) or shorter (eps2) than q. Several
// independent formulas compute each; the divisor-sum forms are the canonical
// ones, proven by explicit bijection and checked against the brute-force
// oracle, and the others are validated against them.

// Canonical: sum over d in Lambda(l) of pi_n(3l/d).
BigInt eps2_divisor_sum(std::uint64_t n, std::uint64_t l);

// Canonical, even l only: n^(l/2) pi_n(l) - sum over even Lambda divisors.
BigInt eps1_divisor_sum(std::uint64_t n, std::uint64_t l);

// eps1 + eps2, via the direct formula for each parity of l (eps1 is 0 for odd
// l: the squared shape needs |q| = 2|x|).
BigInt eps_total(std::uint64_t n, std::uint64_t l);

// Closed form, defined for l = 3^m l1 with l1 >= 2 coprime to 3:
// n^(3l) - n^l - pi_n(3l), minus pi_n(3l/2) as well when l1 is even.
BigInt eps2_closed(std::uint64_t n, std::uint64_t l);

// Closed form, even l: n^(l/2) (pi_n(l) + 1) + pi_n(3l/2) - n^(3l/2).
BigInt eps1_closed(std::uint64_t n, std::uint64_t l);

// Signed subset sum over the gamma family: sum of (-1)^(|L|+1) n^(3l/p(L)).
BigInt eps2_combinatorial(std::uint64_t n, std::uint64_t l);

// Signed subset sum over prime-factor subsets plus the gamma2 family, taken
// exactly as formulated:
//   sum over L subset pf(l) of (-1)^|L| n^(l/p(L) + l/2)
// + sum over L in gamma2(l) of (-1)^|L| n^(l/(2 p(L))).
// The second sum's exponent is not always an integer (e.g. l = 10,
// L = {3,5}); the variant is then reported non-evaluable rather than
// reinterpreted. Even l only. See FINDINGS.md for how this variant fares
// against the canonical one.
std::optional<BigInt> eps1_combinatorial(std::uint64_t n, std::uint64_t l);

// Specialized shapes: l = 3^m 2^s (s >= 1) gives formulas for both counts
// (the eps1 one only when its exponents are integral, which needs m >= 1);
// l = 3^m p^s for a prime p >= 5 gives eps1 = 0 and a two-term eps2.
// Lengths of neither shape yield nothing.
struct ExampleForms {
    std::optional<BigInt> eps1;  // absent when flagged non-evaluable
    bool eps1_non_evaluable = false;
    BigInt eps2;
};
std::optional<ExampleForms> example_forms(std::uint64_t n, std::uint64_t l);

// Every variant whose precondition holds, the brute-force oracle when the
// pair space n^(3l) fits the budget, and all pairwise equality verdicts.
// Disagreements are recorded, never dropped.
struct CountReport {
    std::uint64_t n = 0, l = 0;
    std::map<std::string, BigInt> eps1;  // variant name -> value
    std::map<std::string, BigInt> eps2;
    std::map<std::string, BigInt> eps;   // "total" and "component_sum"
    std::optional<std::pair<BigInt, BigInt>> oracle;  // (|E1|, |E2|)
    struct Agreement {
        std::string a, b;
        bool equal;
    };
    std::vector<Agreement> agreements;
    std::vector<std::string> notes;
    bool all_agree = true;
};
CountReport consistency_report(std::uint64_t n, std::uint64_t l, std::uint64_t oracle_budget);

std::string report_to_json(const CountReport& r);
std::string report_csv_header();
std::string report_to_csv_row(const CountReport& r);

}  // namespace primword
