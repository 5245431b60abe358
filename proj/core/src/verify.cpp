#include "primword/verify.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <sstream>

#include "primword/asymptotics.hpp"
#include "primword/counting.hpp"
#include "primword/errors.hpp"
#include "primword/numtheory.hpp"
#include "primword/pairs.hpp"
#include "primword/word.hpp"

namespace primword::verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

constexpr std::uint64_t kSweepBudget = 1ull << 24;

// failure collector: keeps the first message, counts the rest
struct Check {
    bool pass = true;
    std::uint64_t cases = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& msg) {
        ++cases;
        if (!ok && pass) {
            pass = false;
            first_failure = msg;
        }
    }
};

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

std::string pair_str(const Word& p, const Word& q) {
    return "(" + render_word(p) + ", " + render_word(q) + ")";
}

const std::vector<std::pair<int, int>>& oracle_grid() {
    static const std::vector<std::pair<int, int>> grid = {
        {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 1}, {3, 2}, {3, 3}};
    return grid;
}

}  // namespace

CriterionResult criterion_oracle_equivalence(std::uint64_t budget) {
    auto start = Clock::now();
    CriterionResult r{1, "oracle equivalence of the divisor-sum counts", false, "", 0.0};
    Check check;
    std::ostringstream detail;

    struct Anchor {
        int n, l;
        const char* e1;
        const char* e2;
    };
    // hand-verified counts; e1 is 0 for odd l
    static const Anchor anchors[] = {
        {2, 1, "0", "0"}, {2, 2, "4", "0"},  {2, 3, "0", "0"}, {2, 4, "42", "6"},
        {2, 5, "0", "6"}, {3, 1, "0", "0"},  {3, 2, "18", "0"}, {3, 3, "0", "0"},
    };

    for (auto [n, l] : oracle_grid()) {
        OracleResult oracle = oracle_enumerate_E(n, l, budget);
        BigInt e1_formula = l % 2 == 0 ? eps1_divisor_sum(n, l) : BigInt(0);
        BigInt e2_formula = eps2_divisor_sum(n, l);
        BigInt e1_oracle(static_cast<std::uint64_t>(oracle.e1.size()));
        BigInt e2_oracle(static_cast<std::uint64_t>(oracle.e2.size()));
        check.expect(e1_formula == e1_oracle,
                     "e1 mismatch at n=" + std::to_string(n) + " l=" + std::to_string(l) +
                         ": formula " + e1_formula.to_string() + " oracle " +
                         e1_oracle.to_string());
        check.expect(e2_formula == e2_oracle,
                     "e2 mismatch at n=" + std::to_string(n) + " l=" + std::to_string(l) +
                         ": formula " + e2_formula.to_string() + " oracle " +
                         e2_oracle.to_string());
        for (const Anchor& a : anchors) {
            if (a.n != n || a.l != l) continue;
            check.expect(e1_oracle.to_string() == a.e1 && e2_oracle.to_string() == a.e2,
                         "anchor mismatch at n=" + std::to_string(n) + " l=" + std::to_string(l));
        }
        detail << "(" << n << "," << l << "): e1=" << e1_oracle.to_string()
               << " e2=" << e2_oracle.to_string() << "; ";
    }

    r.seconds = seconds_since(start);
    bool in_time = r.seconds < 60.0;
    r.pass = check.pass && in_time;
    r.detail = check.pass ? detail.str() + (in_time ? "within the 60s ceiling" : "EXCEEDED 60s")
                          : check.first_failure;
    return r;
}

CriterionResult criterion_bijection_fidelity(std::uint64_t budget) {
    auto start = Clock::now();
    CriterionResult r{2, "bijection fidelity of the constructive enumerations", false, "", 0.0};
    Check check;
    std::uint64_t witnesses = 0;

    auto verify_roundtrip = [&](const PairWitness& w, std::uint64_t l) {
        PairWitness c = classify_pair(w.p, w.q);
        check.expect(c.tag == w.tag && c.exponent == w.exponent && c.root == w.root &&
                         c.x == w.x && c.alpha == w.alpha && c.beta == w.beta && c.s == w.s,
                     "classification does not recover construction for " + pair_str(w.p, w.q));
        if (w.tag != CaseTag::I) {
            std::uint64_t k = static_cast<std::uint64_t>(w.exponent);
            check.expect(k == (w.tag == CaseTag::II ? 3 * static_cast<std::uint64_t>(*w.s) + 1
                                                    : 3 * static_cast<std::uint64_t>(*w.s) + 2),
                         "exponent/s arithmetic broken for " + pair_str(w.p, w.q));
            check.expect(l % k == 0 && k >= 4 && k % 3 != 0,
                         "exponent is not a Lambda divisor for " + pair_str(w.p, w.q));
        }
        ++witnesses;
    };

    for (auto [n, l] : oracle_grid()) {
        OracleResult oracle = oracle_enumerate_E(n, l, budget);

        std::vector<PairWitness> e2 = construct_e2(n, l, budget);
        check.expect(e2.size() == oracle.e2.size(),
                     "e2 size mismatch at n=" + std::to_string(n) + " l=" + std::to_string(l));
        for (std::size_t i = 0; i < e2.size() && i < oracle.e2.size(); ++i)
            check.expect(e2[i].p == oracle.e2[i].first && e2[i].q == oracle.e2[i].second,
                         "e2 element mismatch at n=" + std::to_string(n) +
                             " l=" + std::to_string(l) + " index " + std::to_string(i));
        for (const PairWitness& w : e2) verify_roundtrip(w, static_cast<std::uint64_t>(l));

        if (l % 2 == 0) {
            std::vector<PairWitness> e1 = construct_e1(n, l, budget, /*check_excluded_set=*/true);
            check.expect(e1.size() == oracle.e1.size(),
                         "e1 size mismatch at n=" + std::to_string(n) + " l=" + std::to_string(l));
            for (std::size_t i = 0; i < e1.size() && i < oracle.e1.size(); ++i)
                check.expect(e1[i].p == oracle.e1[i].first && e1[i].q == oracle.e1[i].second,
                             "e1 element mismatch at n=" + std::to_string(n) +
                                 " l=" + std::to_string(l) + " index " + std::to_string(i));
            for (const PairWitness& w : e1) verify_roundtrip(w, static_cast<std::uint64_t>(l));
        } else {
            check.expect(oracle.e1.empty(), "oracle found a squared-shape pair at odd l");
        }
    }

    r.seconds = seconds_since(start);
    r.pass = check.pass;
    r.detail = check.pass ? std::to_string(witnesses) + " witnesses matched element-for-element "
                            "and round-tripped through classification"
                          : check.first_failure;
    return r;
}

CriterionResult criterion_formula_cross_agreement() {
    auto start = Clock::now();
    CriterionResult r{3, "cross-agreement of the counting formulas", false, "", 0.0};
    Check check;

    for (std::uint64_t n : {2, 3}) {
        for (std::uint64_t l = 1; l <= 24; ++l) {
            BigInt ds = eps2_divisor_sum(n, l);
            check.expect(ds == eps2_combinatorial(n, l),
                         "eps2 divisor_sum != combinatorial at n=" + std::to_string(n) +
                             " l=" + std::to_string(l));
            if (split_pow3(l).l1 >= 2)
                check.expect(ds == eps2_closed(n, l),
                             "eps2 divisor_sum != closed at n=" + std::to_string(n) +
                                 " l=" + std::to_string(l));
            if (l % 2 == 0)
                check.expect(eps1_divisor_sum(n, l) == eps1_closed(n, l),
                             "eps1 divisor_sum != closed at n=" + std::to_string(n) +
                                 " l=" + std::to_string(l));
        }
    }

    r.seconds = seconds_since(start);
    r.pass = check.pass;
    r.detail = check.pass ? std::to_string(check.cases) + " identities hold exactly over "
                            "n in {2,3}, l <= 24"
                          : check.first_failure;
    return r;
}

CriterionResult criterion_eps1_combinatorial_adjudication() {
    auto start = Clock::now();
    CriterionResult r{4, "adjudication of the eps1 combinatorial form at (2,12)", false, "", 0.0};

    CountReport report = consistency_report(2, 12, 0);
    const CountReport::Agreement* verdict = nullptr;
    for (const auto& a : report.agreements)
        if (a.a == "eps1.combinatorial" && a.b == "eps1.divisor_sum") verdict = &a;

    std::ostringstream detail;
    if (verdict == nullptr) {
        r.detail = "report is silent: no verdict between eps1.combinatorial and eps1.divisor_sum";
        r.pass = false;
    } else {
        BigInt ds = report.eps1.at("divisor_sum");
        BigInt comb = report.eps1.at("combinatorial");
        BigInt diff = comb >= ds ? comb - ds : ds - comb;
        bool canonical_consistent = ds == report.eps1.at("closed_form");
        detail << "verdict recorded: eps1.divisor_sum=" << ds.to_string()
               << " eps1.combinatorial=" << comb.to_string() << " equal="
               << (verdict->equal ? "true" : "false") << " |difference|=" << diff.to_string()
               << "; divisor-sum side corroborated by closed form ("
               << (canonical_consistent ? "consistent" : "INCONSISTENT")
               << "); measured outcome documented in FINDINGS.md";
        r.detail = detail.str();
        r.pass = canonical_consistent;  // pass = a definite verdict exists, not that the forms agree
    }

    r.seconds = seconds_since(start);
    return r;
}

CriterionResult criterion_primitive_count_correctness() {
    auto start = Clock::now();
    CriterionResult r{5, "primitive word counts against exhaustive enumeration", false, "", 0.0};
    Check check;

    auto sweep = [&](int n, int lmax) {
        for (int l = 1; l <= lmax; ++l) {
            std::uint64_t found = 0;
            for_each_word(n, l, [&](const std::vector<int>& letters) {
                Word w(letters, n);
                if (is_primitive(w)) ++found;
            });
            check.expect(BigInt(found) == count_primitive(n, l),
                         "count mismatch at n=" + std::to_string(n) + " l=" + std::to_string(l));
        }
    };
    sweep(2, 12);
    sweep(3, 8);

    for (std::uint64_t n = 2; n <= 5; ++n) {
        for (std::uint64_t l = 1; l <= 30; ++l) {
            BigInt total;
            for (std::uint64_t d : divisors(l)) total += count_primitive(n, d);
            check.expect(total == BigInt::pow(n, l),
                         "divisor sum of counts != n^l at n=" + std::to_string(n) +
                             " l=" + std::to_string(l));
        }
    }

    r.seconds = seconds_since(start);
    r.pass = check.pass;
    r.detail = check.pass ? std::to_string(check.cases) +
                                " count checks passed (enumeration + divisor-sum identity)"
                          : check.first_failure;
    return r;
}

CriterionResult criterion_asymptotic_finite_checks() {
    auto start = Clock::now();
    CriterionResult r{6, "finite-scale asymptotic identities and bounds", false, "", 0.0};
    Check check;

    // eps2(n,4) = n^3 - n exactly, so |eps2/n^3 - 1| = n^-2
    for (std::uint64_t n = 2; n <= 100; ++n) {
        BigInt eps2 = eps2_divisor_sum(n, 4);
        check.expect(BigInt::pow(n, 3) - eps2 == BigInt(n),
                     "eps2(n,4) != n^3 - n at n=" + std::to_string(n));
    }

    // eps2^4 <= 16 n^(3l)
    for (std::uint64_t n : {2, 3, 5}) {
        std::vector<std::uint64_t> ls;
        for (std::uint64_t l = 1; l <= 40; ++l) ls.push_back(l);
        for (const RatioRow& row : check_eps2_bound(n, ls).rows)
            check.expect(row.pass, "eps2 bound fails at n=" + std::to_string(n) +
                                       " l=" + std::to_string(row.parameter));
    }

    // six-term polynomial at l = p_k p_(k+1)
    for (std::uint64_t n : {2, 3})
        for (const RatioRow& row : prime_product_table(n, {3, 4, 5}).rows)
            check.expect(row.pass, "prime-product polynomial mismatch at n=" + std::to_string(n) +
                                       " k=" + std::to_string(row.parameter));

    r.seconds = seconds_since(start);
    r.pass = check.pass;
    r.detail = check.pass ? std::to_string(check.cases) + " exact integer comparisons passed"
                          : check.first_failure;
    return r;
}

namespace {

SuiteResult suite_root_decomposition() {
    SuiteResult s{"primitive root decomposition and length buckets", true, 0, ""};
    Check check;
    for (int n : {2, 3}) {
        for (int l = 1; l <= 12; ++l) {
            std::map<std::size_t, std::uint64_t> by_root_length;
            for_each_word(n, l, [&](const std::vector<int>& letters) {
                Word w(letters, n);
                RootDecomposition rd = primitive_root(w);
                check.expect(power(rd.root, rd.exponent) == w, "root power does not rebuild word");
                check.expect(is_primitive(rd.root), "root is not primitive");
                check.expect(is_primitive(w) == (rd.exponent == 1),
                             "primitivity disagrees with exponent");
                ++by_root_length[rd.root.size()];
            });
            std::uint64_t total = 0;
            for (std::uint64_t d : divisors(static_cast<std::uint64_t>(l))) {
                std::uint64_t bucket = by_root_length.count(d) ? by_root_length.at(d) : 0;
                check.expect(BigInt(bucket) == count_primitive(n, d),
                             "root-length bucket mismatch at n=" + std::to_string(n) +
                                 " l=" + std::to_string(l) + " d=" + std::to_string(d));
                total += bucket;
            }
            check.expect(BigInt(total) == BigInt::pow(n, l), "buckets do not cover all words");
        }
    }
    s.pass = check.pass;
    s.cases = check.cases;
    s.detail = check.first_failure;
    return s;
}

SuiteResult suite_commutation() {
    SuiteResult s{"commutation criterion", true, 0, ""};
    Check check;
    auto sweep = [&](int n, int lmax) {
        std::vector<Word> words;
        for (int l = 1; l <= lmax; ++l)
            for_each_word(n, l, [&](const std::vector<int>& ls) { words.emplace_back(ls, n); });
        for (const Word& u : words)
            for (const Word& v : words) {
                auto root = commute(u, v);
                bool commutes = u + v == v + u;
                check.expect(root.has_value() == commutes, "commute presence wrong for " +
                                                               pair_str(u, v));
                if (root) {
                    bool powers = u.size() % root->size() == 0 && v.size() % root->size() == 0 &&
                                  power(*root, static_cast<std::int64_t>(u.size() / root->size())) == u &&
                                  power(*root, static_cast<std::int64_t>(v.size() / root->size())) == v;
                    check.expect(powers && is_primitive(*root),
                                 "commute root is not a common primitive root for " +
                                     pair_str(u, v));
                }
            }
    };
    sweep(2, 4);
    sweep(3, 3);
    s.pass = check.pass;
    s.cases = check.cases;
    s.detail = check.first_failure;
    return s;
}

SuiteResult suite_transposition() {
    SuiteResult s{"transposition equation witnesses", true, 0, ""};
    Check check;
    std::vector<Word> ts, us;
    for (int l = 1; l <= 4; ++l)
        for_each_word(2, l, [&](const std::vector<int>& ls) { ts.emplace_back(ls, 2); });
    for (int l = 1; l <= 5; ++l)
        for_each_word(2, l, [&](const std::vector<int>& ls) { us.emplace_back(ls, 2); });
    for (const Word& t : ts)
        for (const Word& u : us) {
            Word w = t + u;
            if (w.prefix(u.size()) != u) continue;  // tu = uv has no solution v of |t| letters
            Word v = w.suffix(t.size());
            if (v == t) continue;
            ConjugacyWitness cw = conjugacy_witness(t, v, u);  // self-verifying
            check.expect(cw.m >= 1 && cw.j >= 0, "degenerate witness for t=" + render_word(t));
        }
    s.pass = check.pass;
    s.cases = check.cases;
    s.detail = check.first_failure;
    return s;
}

SuiteResult suite_unexpected_powers() {
    SuiteResult s{"no unexpected roots of u q^m", true, 0, ""};
    Check check;
    std::vector<Word> us, qs;
    for (int l = 1; l <= 4; ++l)
        for_each_word(2, l, [&](const std::vector<int>& ls) { us.emplace_back(ls, 2); });
    for (int l = 1; l <= 3; ++l)
        for (const Word& q : enumerate_primitive(2, l, kSweepBudget)) qs.push_back(q);
    for (const Word& u : us)
        for (const Word& q : qs) {
            bool u_in_q_plus = u.size() % q.size() == 0 &&
                               power(q, static_cast<std::int64_t>(u.size() / q.size())) == u;
            if (u_in_q_plus) continue;
            for (int m = 1; m <= 3; ++m) {
                RootDecomposition rd = primitive_root(u + power(q, m));
                check.expect(rd.root != q, "root of u q^m equals q for u=" + render_word(u) +
                                               " q=" + render_word(q));
                check.expect(rd.root.size() > static_cast<std::size_t>(m - 1) * q.size(),
                             "root of u q^m too short for u=" + render_word(u) +
                                 " q=" + render_word(q) + " m=" + std::to_string(m));
            }
        }
    s.pass = check.pass;
    s.cases = check.cases;
    s.detail = check.first_failure;
    return s;
}

SuiteResult suite_at_most_one_nonprimitive() {
    SuiteResult s{"at most one non-primitive product in p+ q+", true, 0, ""};
    Check check;
    std::vector<Word> ps;
    for (int l = 1; l <= 4; ++l)
        for (const Word& w : enumerate_primitive(2, l, kSweepBudget)) ps.push_back(w);
    for (const Word& p : ps)
        for (const Word& q : ps) {
            if (p == q) continue;
            int nonprimitive = 0;
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j)
                    if (!is_primitive(power(p, i) + power(q, j))) ++nonprimitive;
            check.expect(nonprimitive <= 1, "two non-primitive products for p=" + render_word(p) +
                                                " q=" + render_word(q));
        }
    s.pass = check.pass;
    s.cases = check.cases;
    s.detail = check.first_failure;
    return s;
}

SuiteResult suite_extension_dichotomy() {
    SuiteResult s{"primitive extension dichotomy", true, 0, ""};
    Check check;
    for (int ul = 2; ul <= 8; ++ul) {
        std::vector<Word> us;
        for_each_word(2, ul, [&](const std::vector<int>& ls) { us.emplace_back(ls, 2); });
        for (int xl = 1; 2 * xl <= ul; ++xl) {
            std::vector<Word> xs;
            for_each_word(2, xl, [&](const std::vector<int>& ls) { xs.emplace_back(ls, 2); });
            for (const Word& u : us)
                for (const Word& x : xs)
                    for (const Word& y : xs) {
                        if (x == y) continue;
                        check.expect(is_primitive(u + x) || is_primitive(u + y),
                                     "both extensions non-primitive for u=" + render_word(u) +
                                         " x=" + render_word(x) + " y=" + render_word(y));
                    }
        }
    }
    s.pass = check.pass;
    s.cases = check.cases;
    s.detail = check.first_failure;
    return s;
}

SuiteResult suite_prefix_suffix_extension() {
    SuiteResult s{"prefix/suffix extensions of primitive words", true, 0, ""};
    Check check;
    for (int l = 2; l <= 5; ++l)
        for (const Word& q : enumerate_primitive(2, l, kSweepBudget))
            for (std::size_t xl = 1; xl < q.size(); ++xl) {
                Word pre = q.prefix(xl);
                Word suf = q.suffix(xl);
                for (int k = 2; k <= 3; ++k) {
                    check.expect(is_primitive(power(q, k) + pre),
                                 "q^k x non-primitive for q=" + render_word(q) +
                                     " x=" + render_word(pre) + " k=" + std::to_string(k));
                    check.expect(is_primitive(suf + power(q, k)),
                                 "x q^k non-primitive for q=" + render_word(q) +
                                     " x=" + render_word(suf) + " k=" + std::to_string(k));
                }
            }
    s.pass = check.pass;
    s.cases = check.cases;
    s.detail = check.first_failure;
    return s;
}

SuiteResult suite_length_multiple_products() {
    SuiteResult s{"products of primitive words with |p| = r|q|", true, 0, ""};
    Check check;
    for (int ql = 1; ql <= 3; ++ql) {
        std::vector<Word> qs = enumerate_primitive(2, ql, kSweepBudget);
        for (int r : {2, 3}) {
            std::vector<Word> ps = enumerate_primitive(2, r * ql, kSweepBudget);
            for (const Word& p : ps)
                for (const Word& q : qs) {
                    for (int m = r; m <= r + 2; ++m)
                        check.expect(is_primitive(p + power(q, m)),
                                     "p q^m non-primitive for p=" + render_word(p) +
                                         " q=" + render_word(q) + " m=" + std::to_string(m));
                    for (int m = 2; m <= 3; ++m)
                        check.expect(is_primitive(power(p, m) + q),
                                     "p^m q non-primitive for p=" + render_word(p) +
                                         " q=" + render_word(q) + " m=" + std::to_string(m));
                }
        }
    }
    s.pass = check.pass;
    s.cases = check.cases;
    s.detail = check.first_failure;
    return s;
}

SuiteResult suite_xq_filter() {
    SuiteResult s{"xq primitivity filter equivalence", true, 0, ""};
    Check check;
    for (int ql = 2; ql <= 8; ql += 2) {
        std::vector<Word> xs;
        for_each_word(2, ql / 2, [&](const std::vector<int>& ls) { xs.emplace_back(ls, 2); });
        for (const Word& q : enumerate_primitive(2, ql, kSweepBudget))
            for (const Word& x : xs) {
                auto filtered = xq_nonprimitive_filter(x, q);  // self-verifying when present
                bool xq_primitive = is_primitive(x + q);
                check.expect(filtered.has_value() == !xq_primitive,
                             "filter presence wrong for x=" + render_word(x) +
                                 " q=" + render_word(q));
                PairWitness w = classify_pair(x + q + x, q);
                if (filtered) {
                    CaseTag expect = filtered->s_odd ? CaseTag::II : CaseTag::III;
                    check.expect(w.tag == expect && w.s && *w.s == filtered->s,
                                 "filter case disagrees with classification for x=" +
                                     render_word(x) + " q=" + render_word(q));
                } else {
                    check.expect(w.tag == CaseTag::I && w.x && *w.x == x,
                                 "primitive xq should classify as the squared case for x=" +
                                     render_word(x) + " q=" + render_word(q));
                }
            }
    }
    s.pass = check.pass;
    s.cases = check.cases;
    s.detail = check.first_failure;
    return s;
}

}  // namespace

std::vector<SuiteResult> run_property_suites() {
    return {
        suite_root_decomposition(),   suite_commutation(),
        suite_transposition(),        suite_unexpected_powers(),
        suite_at_most_one_nonprimitive(), suite_extension_dichotomy(),
        suite_prefix_suffix_extension(),  suite_length_multiple_products(),
        suite_xq_filter(),
    };
}

CriterionResult criterion_word_property_suites() {
    auto start = Clock::now();
    CriterionResult r{7, "exhaustive word-property suites", false, "", 0.0};

    std::vector<SuiteResult> suites = run_property_suites();
    bool all = true;
    std::uint64_t cases = 0;
    std::string first_failure;
    for (const SuiteResult& s : suites) {
        cases += s.cases;
        if (!s.pass && all) {
            all = false;
            first_failure = s.name + ": " + s.detail;
        }
    }

    r.seconds = seconds_since(start);
    bool in_time = r.seconds < 120.0;
    r.pass = all && in_time;
    r.detail = all ? std::to_string(suites.size()) + " suites, " + std::to_string(cases) +
                         " exhaustive cases, no counterexample" +
                         (in_time ? "" : " (EXCEEDED 120s)")
                   : first_failure;
    return r;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t budget) {
    return {
        criterion_oracle_equivalence(budget),
        criterion_bijection_fidelity(budget),
        criterion_formula_cross_agreement(),
        criterion_eps1_combinatorial_adjudication(),
        criterion_primitive_count_correctness(),
        criterion_asymptotic_finite_checks(),
        criterion_word_property_suites(),
    };
}

CriterionResult random_spot_checks(std::uint64_t seed) {
    auto start = Clock::now();
    CriterionResult r{8, "seeded cross-agreement samples", false, "", 0.0};
    Check check;
    std::ostringstream points;

    std::uint64_t state = seed == 0 ? 0x9e3779b97f4a7c15ull : seed;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };

    for (int i = 0; i < 6; ++i) {
        std::uint64_t n = 2 + next() % 4;
        std::uint64_t l = 1 + next() % 30;
        points << "(" << n << "," << l << ") ";
        BigInt ds = eps2_divisor_sum(n, l);
        check.expect(ds == eps2_combinatorial(n, l), "eps2 combinatorial mismatch in sample");
        if (split_pow3(l).l1 >= 2)
            check.expect(ds == eps2_closed(n, l), "eps2 closed mismatch in sample");
        BigInt total = eps_total(n, l);
        BigInt components = ds;
        if (l % 2 == 0) {
            BigInt e1 = eps1_divisor_sum(n, l);
            check.expect(e1 == eps1_closed(n, l), "eps1 closed mismatch in sample");
            components += e1;
        }
        check.expect(total == components, "eps total mismatch in sample");
    }

    r.seconds = seconds_since(start);
    r.pass = check.pass;
    r.detail = check.pass ? "sampled points " + points.str() + "all consistent"
                          : check.first_failure;
    return r;
}

}  // namespace primword::verify
