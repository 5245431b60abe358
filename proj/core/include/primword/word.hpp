#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace primword {

// A finite word over the alphabet {0, ..., alphabet-1}. Letters are plain
// ints so the alphabet size is not capped; rendering maps 0->'a', 1->'b', ...
// when the alphabet fits in a-z and falls back to a bracketed integer list.
struct Word {
    std::vector<int> letters;
    int alphabet = 2;

    Word() = default;
    Word(std::vector<int> ls, int n) : letters(std::move(ls)), alphabet(n) {}

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    Word prefix(std::size_t k) const;
    Word suffix(std::size_t k) const;  // last k letters
    Word slice(std::size_t pos, std::size_t len) const;

    friend Word operator+(const Word& a, const Word& b);
    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
    friend auto operator<=>(const Word& a, const Word& b) { return a.letters <=> b.letters; }
};

struct RootDecomposition {
    Word root;              // primitive
    std::int64_t exponent;  // >= 1, root^exponent == original word
};

// Longest-proper-border lengths for every prefix (the KMP failure table).
std::vector<std::size_t> border_table(const Word& u);

// |u| minus the longest border length; the smallest p with u[i] == u[i+p].
std::size_t smallest_period(const Word& u);

// True iff u is not w^m for any word w and m >= 2. Linear time: u is a proper
// power exactly when its smallest period divides |u| strictly.
bool is_primitive(const Word& u);

// The unique primitive root and exponent with u == root^exponent.
RootDecomposition primitive_root(const Word& u);

// u concatenated k times (k >= 1).
Word power(const Word& u, std::int64_t k);

// If uv == vu, the common primitive root both words are powers of; otherwise
// nothing.
std::optional<Word> commute(const Word& u, const Word& v);

// Solution of the transposition equation t u = u v for distinct t, v of equal
// length: pq is primitive, t = (pq)^m, v = (qp)^m, u = (pq)^j p. p may be
// empty; q never is.
struct ConjugacyWitness {
    Word p, q;
    std::int64_t m = 0;
    std::int64_t j = 0;
};
ConjugacyWitness conjugacy_witness(const Word& t, const Word& v, const Word& u);

// Text forms: "aabab" for alphabets up to 26, "[0,0,1,0,1]" otherwise (the
// bracketed form is accepted for any alphabet).
Word parse_word(std::string_view text, int alphabet);
std::string render_word(const Word& w);

}  // namespace primword
