#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "primword/bigint.hpp"

namespace primword {

// Primes up to 10^6, sieved once; enough for trial division up to 10^12.
const std::vector<std::uint32_t>& small_primes();

constexpr std::uint64_t kFactorizationLimit = 1'000'000'000'000ull;

struct Factorization {
    std::vector<std::pair<std::uint64_t, int>> factors;  // (prime, multiplicity), ascending
    std::uint64_t value() const;
    int distinct_prime_count() const { return static_cast<int>(factors.size()); }
};

// Trial division by the sieved primes. Rejects 0 and values beyond the limit.
Factorization factorize(std::uint64_t v);

// Moebius function: 1, 0 on non-squarefree, (-1)^k on squarefree with k
// prime factors.
int mobius(std::uint64_t n);

// All divisors of l, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t l);

// Divisors d of l with d >= 4 and d not divisible by 3, plus the even/odd
// split. These index every divisor sum in the counting module.
struct LambdaSets {
    std::vector<std::uint64_t> all;    // ascending
    std::vector<std::uint64_t> even;   // the even members
    std::vector<std::uint64_t> odd;    // the odd members
};
LambdaSets lambda_sets(std::uint64_t l);

// l split as 3^m * l1 with l1 coprime to 3.
struct ThreeSplit {
    int m;
    std::uint64_t l1;
};
ThreeSplit split_pow3(std::uint64_t l);

// l split as 3^m * 2^s * l1 with l1 coprime to 6.
struct SixSplit {
    int m;
    int s;
    std::uint64_t l1;
};
SixSplit split_pow3_pow2(std::uint64_t l);

// A set of pairwise distinct atoms multiplied together by product(). Atoms
// are primes except the literal 4, which one subset family uses as a formal
// atom alongside 3.
struct AtomSet {
    std::vector<std::uint64_t> atoms;  // ascending
    std::uint64_t product() const;     // empty set -> 1
    friend bool operator==(const AtomSet&, const AtomSet&) = default;
};

// The subset family indexing the signed combinatorial count of eps2:
// subsets of {3,4} u pf(l1) when s >= 2 (gamma1), of {3} u pf(l1) when
// s <= 1 (gamma2); the empty set and {3} are excluded. Ordered by size,
// then lexicographically.
struct GammaFamily {
    bool gamma1;
    std::vector<AtomSet> sets;
};
GammaFamily gamma_sets(std::uint64_t l);

// Number of primitive words of length l over an n-letter alphabet:
// sum over d | l of mu(d) * n^(l/d).
BigInt count_primitive(std::uint64_t n, std::uint64_t l);

// The same count for length r^(m+1) * l, computed by splitting off the prime
// power: sum over d | l of mu(d) * (n^(r^(m+1) l / d) - n^(r^m l / d)).
// Requires r prime and l coprime to r.
BigInt count_primitive_split(std::uint64_t n, std::uint64_t r, int m, std::uint64_t l);

// Closed form of sum over d | l of count_primitive(n, r^(m+1) l / d):
// n^(r^(m+1) l) - n^(r^m l). Same preconditions.
BigInt primitive_sum_telescoped(std::uint64_t n, std::uint64_t r, int m, std::uint64_t l);

// k-th prime (p_1 = 2), its successor, and the gap between them.
struct PrimePair {
    std::uint64_t pk;
    std::uint64_t pk_next;
    std::uint64_t gap;
};
PrimePair primes_and_gaps(std::uint64_t k);

}  // namespace primword
