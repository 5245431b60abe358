#include "primword/word.hpp"

#include <algorithm>
#include <cctype>

#include "primword/errors.hpp"

namespace primword {

Word Word::prefix(std::size_t k) const {
    if (k > size()) throw DomainError("prefix length exceeds word length");
    return Word(std::vector<int>(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(k)),
                alphabet);
}

Word Word::suffix(std::size_t k) const {
    if (k > size()) throw DomainError("suffix length exceeds word length");
    return Word(std::vector<int>(letters.end() - static_cast<std::ptrdiff_t>(k), letters.end()),
                alphabet);
}

Word Word::slice(std::size_t pos, std::size_t len) const {
    if (pos + len > size()) throw DomainError("slice out of range");
    auto first = letters.begin() + static_cast<std::ptrdiff_t>(pos);
    return Word(std::vector<int>(first, first + static_cast<std::ptrdiff_t>(len)), alphabet);
}

Word operator+(const Word& a, const Word& b) {
    Word out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    out.alphabet = std::max(a.alphabet, b.alphabet);
    return out;
}

std::vector<std::size_t> border_table(const Word& u) {
    const auto& s = u.letters;
    std::vector<std::size_t> b(s.size(), 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        while (k > 0 && s[i] != s[k]) k = b[k - 1];
        if (s[i] == s[k]) ++k;
        b[i] = k;
    }
    return b;
}

std::size_t smallest_period(const Word& u) {
    if (u.empty()) throw DomainError("empty word has no period");
    return u.size() - border_table(u).back();
}

bool is_primitive(const Word& u) {
    if (u.empty()) throw DomainError("empty word has no primitivity status");
    std::size_t p = smallest_period(u);
    return !(p < u.size() && u.size() % p == 0);
}

RootDecomposition primitive_root(const Word& u) {
    if (u.empty()) throw DomainError("empty word has no primitive root");
    std::size_t p = smallest_period(u);
    if (p < u.size() && u.size() % p == 0)
        return {u.prefix(p), static_cast<std::int64_t>(u.size() / p)};
    return {u, 1};
}

Word power(const Word& u, std::int64_t k) {
    if (u.empty()) throw DomainError("cannot take a power of the empty word");
    if (k < 1) throw DomainError("power exponent must be >= 1");
    Word out(std::vector<int>{}, u.alphabet);
    out.letters.reserve(u.size() * static_cast<std::size_t>(k));
    for (std::int64_t i = 0; i < k; ++i)
        out.letters.insert(out.letters.end(), u.letters.begin(), u.letters.end());
    return out;
}

std::optional<Word> commute(const Word& u, const Word& v) {
    if (u.empty() || v.empty()) throw DomainError("commute requires nonempty words");
    if (u + v == v + u) return primitive_root(u).root;
    return std::nullopt;
}

ConjugacyWitness conjugacy_witness(const Word& t, const Word& v, const Word& u) {
    if (t.empty() || v.empty() || u.empty())
        throw DomainError("conjugacy_witness requires nonempty t, v, u");
    if (t == v) throw DomainError("t and v must be distinct");
    if (t.size() != v.size()) throw DomainError("not a transposition instance");
    if (!(t + u == u + v)) throw DomainError("not a transposition instance");

    auto [root, m] = primitive_root(t);
    std::size_t rlen = root.size();
    std::int64_t j = static_cast<std::int64_t>(u.size() / rlen);
    std::size_t plen = u.size() % rlen;

    ConjugacyWitness w;
    w.p = root.prefix(plen);
    w.q = root.suffix(rlen - plen);
    w.m = m;
    w.j = j;

    // reconstruction equalities are the contract; valid inputs cannot fail them
    Word pq = w.p + w.q;
    Word qp = w.q + w.p;
    if (!is_primitive(pq) || power(pq, m) != t || power(qp, m) != v ||
        (j > 0 ? power(pq, j) + w.p : w.p) != u)
        throw std::logic_error("conjugacy reconstruction failed");
    return w;
}

Word parse_word(std::string_view text, int alphabet) {
    if (alphabet < 2) throw DomainError("alphabet size must be >= 2");
    Word w;
    w.alphabet = alphabet;
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') throw DomainError("unterminated bracketed word");
        std::string_view body = text.substr(1, text.size() - 2);
        std::size_t pos = 0;
        while (pos < body.size()) {
            std::size_t end = body.find(',', pos);
            if (end == std::string_view::npos) end = body.size();
            int value = 0;
            bool any = false;
            for (std::size_t i = pos; i < end; ++i) {
                char c = body[i];
                if (c == ' ') continue;
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw DomainError("bad letter in bracketed word");
                value = value * 10 + (c - '0');
                any = true;
            }
            if (!any) throw DomainError("empty entry in bracketed word");
            if (value >= alphabet) throw DomainError("letter out of alphabet range");
            w.letters.push_back(value);
            pos = end + 1;
        }
        return w;
    }
    for (char c : text) {
        if (c < 'a' || c > 'z') throw DomainError("words use letters a..z or bracketed integers");
        int value = c - 'a';
        if (value >= alphabet) throw DomainError("letter out of alphabet range");
        w.letters.push_back(value);
    }
    return w;
}

std::string render_word(const Word& w) {
    std::string out;
    if (w.alphabet <= 26) {
        out.reserve(w.size());
        for (int c : w.letters) out.push_back(static_cast<char>('a' + c));
        return out;
    }
    out.push_back('[');
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0) out.push_back(',');
        out += std::to_string(w.letters[i]);
    }
    out.push_back(']');
    return out;
}

}  // namespace primword
