#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "primword/word.hpp"

namespace primword {

// Pairs (p, q) of primitive words with |p| = 2|q| = 2l whose product pq is
// non-primitive split into exactly three shapes, keyed by the exponent k of
// pq = root^k:
//   CaseI    k = 2        p = x q x with xq primitive and |q| = 2|x|
//   CaseII   k = 3s+1     p = (ba)^(2s) b,  q = (ab)^s a, |b| = 2|a|
//   CaseIII  k = 3s+2     p = (ba)^(2s+1) b, q = (ab)^s a, |a| = 2|b|
// (a, b standing for the alpha/beta fragments below, s >= 1, ab primitive).
enum class CaseTag { I, II, III };

const char* case_name(CaseTag tag);  // "I" / "II" / "III"

struct PairWitness {
    Word p, q;
    CaseTag tag = CaseTag::I;
    std::optional<Word> x;            // CaseI
    std::optional<Word> alpha, beta;  // CaseII / CaseIII
    std::optional<std::int64_t> s;    // CaseII / CaseIII
    Word root;                        // primitive root of pq
    std::int64_t exponent = 0;        // k >= 2
};

// All words of length k over n letters, lexicographic, n^k <= budget.
std::vector<Word> all_words(int n, int k, std::uint64_t budget);

// All primitive words of length k over n letters, lexicographic. Refuses to
// scan more than `budget` words (the scan visits all n^k).
std::vector<Word> enumerate_primitive(int n, int k, std::uint64_t budget);

// Exhaustive scan of every (primitive p of length 2l, primitive q of length
// l). Qualifying pairs go to e1 when |root(pq)| > |q| and to e2 when
// |root(pq)| < |q|; |root(pq)| == |q| is impossible and aborts if ever seen.
// Output sorted by (p, q). The pair space measure n^(3l) must fit the budget.
struct OracleResult {
    std::vector<std::pair<Word, Word>> e1, e2;
};
OracleResult oracle_enumerate_E(int n, int l, std::uint64_t budget);

// Constructive enumeration of the e2 family: for each d in Lambda(l) and
// each primitive u of length 3l/d, the unique witness whose product is u^d.
// Sorted by (p, q), duplicate-free, every witness re-verified on emission.
std::vector<PairWitness> construct_e2(int n, int l, std::uint64_t budget);

// Constructive enumeration of the e1 family: (xqx, q) over all x of length
// l/2 and primitive q of length l, minus the pairs where xq is non-primitive.
// With check_excluded_set the removed pairs are independently regenerated
// from the e2-shaped images over the even Lambda divisors and compared.
std::vector<PairWitness> construct_e1(int n, int l, std::uint64_t budget,
                                      bool check_excluded_set = false);

// Full classification of a candidate pair into its unique case shape, with
// every reconstruction equality verified. Throws DomainError naming the
// violated precondition; throws logic_error if the trichotomy itself fails
// (which would be a bug, not an input problem).
PairWitness classify_pair(const Word& p, const Word& q);

// For q primitive with |q| = 2|x|: the (alpha, beta, s) shape of the pair
// (xqx, q) when xq is non-primitive, nothing when xq is primitive. s odd
// means |beta| = 2|alpha| (CaseII shape), s even the CaseIII shape.
struct XqDecomposition {
    Word alpha, beta;
    std::int64_t s = 0;
    bool s_odd = false;
};
std::optional<XqDecomposition> xq_nonprimitive_filter(const Word& x, const Word& q);

// One witness as a single JSON line:
// {"p":...,"q":...,"case":"I","x":...,"alpha":null,...,"root":...,"k":2}
std::string witness_to_json(const PairWitness& w);

}  // namespace primword
