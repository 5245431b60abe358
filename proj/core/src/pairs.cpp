#include "primword/pairs.hpp"

#include <algorithm>

#include "primword/bigint.hpp"
#include "primword/errors.hpp"
#include "primword/jsonout.hpp"
#include "primword/numtheory.hpp"

namespace primword {

namespace {

// smallest period of the letter buffer, border table kept in scratch
std::size_t buffer_period(const std::vector<int>& s, std::vector<std::size_t>& scratch) {
    scratch.assign(s.size(), 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        while (k > 0 && s[i] != s[k]) k = scratch[k - 1];
        if (s[i] == s[k]) ++k;
        scratch[i] = k;
    }
    return s.size() - scratch.back();
}

bool buffer_primitive(const std::vector<int>& s, std::vector<std::size_t>& scratch) {
    std::size_t p = buffer_period(s, scratch);
    return !(p < s.size() && s.size() % p == 0);
}

void require_scan_budget(int n, int k, std::uint64_t budget, const char* what) {
    BigInt required = BigInt::pow(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
    if (required > BigInt(budget))
        throw BudgetError(std::string(what) + " needs a scan of " + required.to_string() +
                              " words, budget is " + std::to_string(budget),
                          required.to_string(), budget);
}

// all words of length k over n letters, lexicographic
template <typename Fn>
void for_each_word(int n, int k, Fn&& fn) {
    std::vector<int> letters(static_cast<std::size_t>(k), 0);
    for (;;) {
        fn(letters);
        int i = k - 1;
        while (i >= 0 && letters[i] == n - 1) letters[i--] = 0;
        if (i < 0) break;
        ++letters[i];
    }
}

void verify_witness(const PairWitness& w, int l) {
    bool ok = static_cast<int>(w.q.size()) == l && w.p.size() == 2 * w.q.size() &&
              is_primitive(w.p) && is_primitive(w.q);
    if (ok) {
        auto [root, k] = primitive_root(w.p + w.q);
        ok = k == w.exponent && root == w.root && k >= 2;
        if (ok) {
            bool expect_shorter_root = w.tag != CaseTag::I;
            ok = expect_shorter_root ? root.size() < w.q.size() : root.size() > w.q.size();
        }
    }
    if (!ok)
        throw std::logic_error("constructed pair fails witness verification: p=" +
                               render_word(w.p) + " q=" + render_word(w.q));
}

// The witness whose product is u^d, for d = 3s+1 or 3s+2 in Lambda(l) and u
// primitive of length 3l/d.
PairWitness witness_from_seed(const Word& u, std::uint64_t d, int l) {
    std::size_t third = u.size() / 3;
    PairWitness w;
    w.root = u;
    w.exponent = static_cast<std::int64_t>(d);
    if (d % 3 == 1) {
        std::int64_t s = static_cast<std::int64_t>((d - 1) / 3);
        Word beta = u.prefix(2 * third);
        Word alpha = u.suffix(third);
        w.p = power(u, 2 * s) + beta;
        w.q = power(alpha + beta, s) + alpha;
        w.tag = CaseTag::II;
        w.alpha = std::move(alpha);
        w.beta = std::move(beta);
        w.s = s;
    } else {
        std::int64_t s = static_cast<std::int64_t>((d - 2) / 3);
        Word beta = u.prefix(third);
        Word alpha = u.suffix(2 * third);
        w.p = power(u, 2 * s + 1) + beta;
        w.q = power(alpha + beta, s) + alpha;
        w.tag = CaseTag::III;
        w.alpha = std::move(alpha);
        w.beta = std::move(beta);
        w.s = s;
    }
    verify_witness(w, l);
    return w;
}

std::vector<PairWitness> construct_e2_over(const std::vector<std::uint64_t>& ds, int n, int l,
                                           std::uint64_t budget) {
    std::vector<PairWitness> out;
    for (std::uint64_t d : ds) {
        int seed_len = static_cast<int>(3 * static_cast<std::uint64_t>(l) / d);
        for (const Word& u : enumerate_primitive(n, seed_len, budget))
            out.push_back(witness_from_seed(u, d, l));
    }
    std::sort(out.begin(), out.end(), [](const PairWitness& a, const PairWitness& b) {
        return std::tie(a.p, a.q) < std::tie(b.p, b.q);
    });
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i - 1].p == out[i].p && out[i - 1].q == out[i].q)
            throw std::logic_error("duplicate pair emitted by e2 construction");
    return out;
}

bool case1_shape(const Word& p, const Word& q) {
    if (q.size() % 2 != 0) return false;
    Word x = p.prefix(q.size() / 2);
    return p == x + q + x && is_primitive(x + q);
}

bool case2_shape(const Word& p, const Word& q) {
    for (std::size_t s = 1; 3 * s + 1 <= q.size(); ++s) {
        if (q.size() % (3 * s + 1) != 0) continue;
        std::size_t a = q.size() / (3 * s + 1);
        Word alpha = q.prefix(a);
        Word beta = q.slice(a, 2 * a);
        if (power(alpha + beta, static_cast<std::int64_t>(s)) + alpha == q &&
            power(beta + alpha, static_cast<std::int64_t>(2 * s)) + beta == p &&
            is_primitive(alpha + beta))
            return true;
    }
    return false;
}

bool case3_shape(const Word& p, const Word& q) {
    for (std::size_t s = 1; 3 * s + 2 <= q.size(); ++s) {
        if (q.size() % (3 * s + 2) != 0) continue;
        std::size_t b = q.size() / (3 * s + 2);
        Word alpha = q.prefix(2 * b);
        Word beta = q.slice(2 * b, b);
        if (power(alpha + beta, static_cast<std::int64_t>(s)) + alpha == q &&
            power(beta + alpha, static_cast<std::int64_t>(2 * s + 1)) + beta == p &&
            is_primitive(alpha + beta))
            return true;
    }
    return false;
}

}  // namespace

const char* case_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::I: return "I";
        case CaseTag::II: return "II";
        case CaseTag::III: return "III";
    }
    return "?";
}

std::vector<Word> all_words(int n, int k, std::uint64_t budget) {
    if (n < 2) throw DomainError("alphabet size must be >= 2");
    if (k < 1) throw DomainError("length must be positive");
    require_scan_budget(n, k, budget, "word enumeration");
    std::vector<Word> out;
    for_each_word(n, k, [&](const std::vector<int>& letters) { out.emplace_back(letters, n); });
    return out;
}

std::vector<Word> enumerate_primitive(int n, int k, std::uint64_t budget) {
    if (n < 2) throw DomainError("alphabet size must be >= 2");
    if (k < 1) throw DomainError("length must be positive");
    require_scan_budget(n, k, budget, "primitive word enumeration");
    std::vector<Word> out;
    std::vector<std::size_t> scratch;
    for_each_word(n, k, [&](const std::vector<int>& letters) {
        if (buffer_primitive(letters, scratch)) out.emplace_back(letters, n);
    });
    return out;
}

OracleResult oracle_enumerate_E(int n, int l, std::uint64_t budget) {
    if (n < 2) throw DomainError("alphabet size must be >= 2");
    if (l < 1) throw DomainError("length must be positive");
    require_scan_budget(n, 3 * l, budget, "exhaustive pair enumeration");

    std::vector<Word> qs = enumerate_primitive(n, l, budget);
    std::vector<Word> ps = enumerate_primitive(n, 2 * l, budget);

    OracleResult result;
    std::vector<int> buf(static_cast<std::size_t>(3 * l));
    std::vector<std::size_t> scratch;
    for (const Word& p : ps) {
        std::copy(p.letters.begin(), p.letters.end(), buf.begin());
        for (const Word& q : qs) {
            std::copy(q.letters.begin(), q.letters.end(), buf.begin() + 2 * l);
            std::size_t period = buffer_period(buf, scratch);
            if (period == buf.size() || buf.size() % period != 0) continue;  // pq primitive
            if (period == static_cast<std::size_t>(l))
                throw std::logic_error("pair with |root(pq)| == |q| encountered: p=" +
                                       render_word(p) + " q=" + render_word(q));
            auto& bucket = period > static_cast<std::size_t>(l) ? result.e1 : result.e2;
            bucket.emplace_back(p, q);
        }
    }
    return result;  // already sorted: ps outer, qs inner, both lexicographic
}

std::vector<PairWitness> construct_e2(int n, int l, std::uint64_t budget) {
    if (n < 2) throw DomainError("alphabet size must be >= 2");
    if (l < 1) throw DomainError("length must be positive");
    return construct_e2_over(lambda_sets(static_cast<std::uint64_t>(l)).all, n, l, budget);
}

std::vector<PairWitness> construct_e1(int n, int l, std::uint64_t budget, bool check_excluded_set) {
    if (n < 2) throw DomainError("alphabet size must be >= 2");
    if (l < 1 || l % 2 != 0) throw DomainError("e1 construction requires even l");

    BigInt required = BigInt::pow(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(l / 2)) *
                      count_primitive(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(l));
    if (required > BigInt(budget))
        throw BudgetError("e1 construction needs " + required.to_string() +
                              " candidate pairs, budget is " + std::to_string(budget),
                          required.to_string(), budget);

    std::vector<Word> qs = enumerate_primitive(n, l, budget);
    std::vector<PairWitness> out;
    std::vector<std::pair<Word, Word>> excluded;
    std::vector<std::size_t> scratch;
    std::vector<int> xq_buf(static_cast<std::size_t>(l + l / 2));
    for_each_word(n, l / 2, [&](const std::vector<int>& x_letters) {
        std::copy(x_letters.begin(), x_letters.end(), xq_buf.begin());
        Word x(x_letters, n);
        for (const Word& q : qs) {
            std::copy(q.letters.begin(), q.letters.end(), xq_buf.begin() + l / 2);
            if (!buffer_primitive(xq_buf, scratch)) {
                if (check_excluded_set) excluded.emplace_back(x + q + x, q);
                continue;
            }
            PairWitness w;
            w.p = x + q + x;
            w.q = q;
            w.tag = CaseTag::I;
            w.x = x;
            w.root = Word(xq_buf, n);
            w.exponent = 2;
            verify_witness(w, l);
            out.push_back(std::move(w));
        }
    });

    if (check_excluded_set) {
        auto image = construct_e2_over(lambda_sets(static_cast<std::uint64_t>(l)).even, n, l, budget);
        std::vector<std::pair<Word, Word>> image_pairs;
        image_pairs.reserve(image.size());
        for (const auto& w : image) image_pairs.emplace_back(w.p, w.q);
        std::sort(excluded.begin(), excluded.end());
        if (excluded != image_pairs)
            throw std::logic_error("excluded set does not match the even-divisor image");
    }

    std::sort(out.begin(), out.end(), [](const PairWitness& a, const PairWitness& b) {
        return std::tie(a.p, a.q) < std::tie(b.p, b.q);
    });
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i - 1].p == out[i].p && out[i - 1].q == out[i].q)
            throw std::logic_error("duplicate pair emitted by e1 construction");
    return out;
}

PairWitness classify_pair(const Word& p, const Word& q) {
    if (p.empty() || q.empty()) throw DomainError("words must be nonempty");
    if (!is_primitive(p)) throw DomainError("p not primitive");
    if (!is_primitive(q)) throw DomainError("q not primitive");
    if (p.size() != 2 * q.size()) throw DomainError("|p| != 2|q|");
    auto [root, k] = primitive_root(p + q);
    if (k == 1) throw DomainError("pq is primitive");

    PairWitness w;
    w.p = p;
    w.q = q;
    w.root = root;
    w.exponent = k;

    if (k == 2) {
        if (q.size() % 2 != 0)
            throw std::logic_error("case trichotomy violated: squared product with odd |q|");
        Word x = p.prefix(q.size() / 2);
        Word xq = x + q;
        if (p != x + q + x || !is_primitive(xq) || xq != root)
            throw std::logic_error("case trichotomy violated: square shape does not reconstruct");
        w.tag = CaseTag::I;
        w.x = std::move(x);
    } else if (k % 3 == 1) {
        std::int64_t s = (k - 1) / 3;
        if (root.size() % 3 != 0)
            throw std::logic_error("case trichotomy violated: root length not divisible by 3");
        Word beta = root.prefix(2 * root.size() / 3);
        Word alpha = root.suffix(root.size() / 3);
        if (power(beta + alpha, 2 * s) + beta != p || power(alpha + beta, s) + alpha != q ||
            !is_primitive(alpha + beta))
            throw std::logic_error("case trichotomy violated: 3s+1 shape does not reconstruct");
        w.tag = CaseTag::II;
        w.alpha = std::move(alpha);
        w.beta = std::move(beta);
        w.s = s;
    } else if (k % 3 == 2) {  // k >= 5 here; k == 2 was the square case
        std::int64_t s = (k - 2) / 3;
        if (root.size() % 3 != 0)
            throw std::logic_error("case trichotomy violated: root length not divisible by 3");
        Word beta = root.prefix(root.size() / 3);
        Word alpha = root.suffix(2 * root.size() / 3);
        if (power(beta + alpha, 2 * s + 1) + beta != p || power(alpha + beta, s) + alpha != q ||
            !is_primitive(alpha + beta))
            throw std::logic_error("case trichotomy violated: 3s+2 shape does not reconstruct");
        w.tag = CaseTag::III;
        w.alpha = std::move(alpha);
        w.beta = std::move(beta);
        w.s = s;
    } else {
        throw std::logic_error("case trichotomy violated: product exponent divisible by 3");
    }

    // the three shapes must be mutually exclusive on every classified pair
    int matches = (case1_shape(p, q) ? 1 : 0) + (case2_shape(p, q) ? 1 : 0) +
                  (case3_shape(p, q) ? 1 : 0);
    if (matches != 1)
        throw std::logic_error("case trichotomy violated: " + std::to_string(matches) +
                               " shapes match p=" + render_word(p) + " q=" + render_word(q));
    return w;
}

std::optional<XqDecomposition> xq_nonprimitive_filter(const Word& x, const Word& q) {
    if (x.empty() || q.empty()) throw DomainError("words must be nonempty");
    if (!is_primitive(q)) throw DomainError("q not primitive");
    if (q.size() != 2 * x.size()) throw DomainError("|q| != 2|x|");

    Word xq = x + q;
    auto [w, j] = primitive_root(xq);
    if (j == 1) return std::nullopt;
    if (j % 3 == 0 || w.size() % 3 != 0)
        throw std::logic_error("xq exponent shape impossible for primitive q");

    XqDecomposition d;
    std::size_t third = w.size() / 3;
    std::int64_t half_reps;
    if (j % 3 == 2) {  // s odd, |beta| = 2|alpha|
        d.s = (2 * j - 1) / 3;
        d.s_odd = true;
        d.beta = w.prefix(2 * third);
        d.alpha = w.suffix(third);
        half_reps = (d.s - 1) / 2;
    } else {  // j % 3 == 1, s even, |alpha| = 2|beta|
        d.s = (2 * j - 2) / 3;
        d.s_odd = false;
        d.beta = w.prefix(third);
        d.alpha = w.suffix(2 * third);
        half_reps = d.s / 2;
    }
    Word expect_x = half_reps > 0 ? power(w, half_reps) + d.beta : d.beta;
    if (expect_x != x || power(d.alpha + d.beta, d.s) + d.alpha != q)
        throw std::logic_error("xq decomposition does not reconstruct");
    return d;
}

std::string witness_to_json(const PairWitness& w) {
    auto word_or_null = [](const std::optional<Word>& v) {
        return v ? json_escape(render_word(*v)) : std::string("null");
    };
    std::string out = "{";
    out += "\"p\":" + json_escape(render_word(w.p));
    out += ",\"q\":" + json_escape(render_word(w.q));
    out += ",\"case\":" + json_escape(case_name(w.tag));
    out += ",\"x\":" + word_or_null(w.x);
    out += ",\"alpha\":" + word_or_null(w.alpha);
    out += ",\"beta\":" + word_or_null(w.beta);
    out += ",\"s\":" + (w.s ? std::to_string(*w.s) : std::string("null"));
    out += ",\"root\":" + json_escape(render_word(w.root));
    out += ",\"k\":" + std::to_string(w.exponent);
    out += "}";
    return out;
}

}  // namespace primword
