// primword — exact counting, construction, and classification of primitive
// word pairs (p, q) with |p| = 2|q| and pq non-primitive.
//
// Batch-oriented: flags in, deterministic machine-readable output out.
// Exit codes: 0 ok, 1 strict disagreement / failed verification, 2 usage,
// 3 enumeration budget exceeded, 4 domain precondition violated.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "primword/asymptotics.hpp"
#include "primword/counting.hpp"
#include "primword/errors.hpp"
#include "primword/jsonout.hpp"
#include "primword/numtheory.hpp"
#include "primword/pairs.hpp"
#include "primword/verify.hpp"
#include "primword/word.hpp"

namespace {

using namespace primword;

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitDomain = 4;
constexpr int kExitInternal = 70;

std::uint64_t default_budget() {
    if (const char* env = std::getenv("PRIMWORD_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (...) {
            std::cerr << "warning: ignoring unparsable PRIMWORD_BUDGET\n";
        }
    }
    return 10'000'000ull;
}

std::vector<std::uint64_t> parse_list(const std::string& text) {
    std::vector<std::uint64_t> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        std::string item = text.substr(pos, end - pos);
        if (!item.empty()) values.push_back(std::stoull(item));
        pos = end + 1;
    }
    if (values.empty()) throw DomainError("expected a comma-separated list of integers");
    return values;
}

struct PiArgs {
    std::uint64_t n = 0, l = 0;
    std::string format = "plain";
};

int run_pi(const PiArgs& a) {
    BigInt value = count_primitive(a.n, a.l);
    if (a.format == "json")
        std::cout << "{\"n\":" << a.n << ",\"l\":" << a.l
                  << ",\"pi\":" << json_escape(value.to_string()) << "}\n";
    else if (a.format == "csv")
        std::cout << "n,l,pi\n" << a.n << "," << a.l << "," << value.to_string() << "\n";
    else
        std::cout << value.to_string() << "\n";
    return kExitOk;
}

struct MobiusArgs {
    std::uint64_t value = 0;
    std::string format = "plain";
};

int run_mobius(const MobiusArgs& a) {
    int mu = mobius(a.value);
    if (a.format == "json")
        std::cout << "{\"value\":" << a.value << ",\"mu\":" << mu << "}\n";
    else if (a.format == "csv")
        std::cout << "value,mu\n" << a.value << "," << mu << "\n";
    else
        std::cout << mu << "\n";
    return kExitOk;
}

struct CountArgs {
    std::uint64_t n = 0, l = 0;
    std::uint64_t budget = 0;
    bool budget_set = false;
    bool force_oracle = false;
    bool no_oracle = false;
    bool strict = false;
    std::string format = "plain";
};

void print_count_plain(const CountReport& r) {
    std::cout << "n=" << r.n << " l=" << r.l << "\n";
    if (r.l % 2 != 0) std::cout << "eps1 = 0 (odd l; see note)\n";
    for (const auto& [name, value] : r.eps1)
        std::cout << "eps1." << name << " = " << value.to_string() << "\n";
    for (const auto& [name, value] : r.eps2)
        std::cout << "eps2." << name << " = " << value.to_string() << "\n";
    for (const auto& [name, value] : r.eps)
        std::cout << "eps." << name << " = " << value.to_string() << "\n";
    if (r.oracle)
        std::cout << "oracle.eps1 = " << r.oracle->first.to_string()
                  << "\noracle.eps2 = " << r.oracle->second.to_string() << "\n";
    else
        std::cout << "oracle: skipped (pair space exceeds budget)\n";
    for (const auto& a : r.agreements)
        std::cout << "agreement " << a.a << " == " << a.b << ": " << (a.equal ? "yes" : "NO")
                  << "\n";
    for (const auto& note : r.notes) std::cout << "note: " << note << "\n";
    std::cout << "all variants agree: " << (r.all_agree ? "yes" : "NO") << "\n";
}

int run_count(const CountArgs& a) {
    std::uint64_t budget = a.budget_set ? a.budget : default_budget();
    std::uint64_t oracle_budget = a.no_oracle ? 0 : budget;
    if (a.force_oracle && BigInt::pow(a.n, 3 * a.l) > BigInt(oracle_budget))
        throw BudgetError("oracle requested but the pair space n^(3l) = " +
                              BigInt::pow(a.n, 3 * a.l).to_string() + " exceeds the budget " +
                              std::to_string(oracle_budget),
                          BigInt::pow(a.n, 3 * a.l).to_string(), oracle_budget);

    CountReport report = consistency_report(a.n, a.l, oracle_budget);
    if (a.format == "json")
        std::cout << report_to_json(report) << "\n";
    else if (a.format == "csv")
        std::cout << report_csv_header() << "\n" << report_to_csv_row(report) << "\n";
    else
        print_count_plain(report);
    return a.strict && !report.all_agree ? kExitDisagreement : kExitOk;
}

struct EnumerateArgs {
    std::uint64_t n = 0, l = 0;
    std::string set = "both";
    std::string out_path;
    std::uint64_t budget = 0;
    bool budget_set = false;
    std::string format = "json";
};

int run_enumerate(const EnumerateArgs& a) {
    std::uint64_t budget = a.budget_set ? a.budget : default_budget();
    int n = static_cast<int>(a.n);
    int l = static_cast<int>(a.l);

    std::vector<PairWitness> e1, e2;
    std::vector<std::string> notes;
    if (a.set != "e2") {
        if (a.l % 2 == 0)
            e1 = construct_e1(n, l, budget);
        else
            notes.push_back("e1 empty for odd l (the squared shape needs |q| = 2|x|)");
    }
    if (a.set != "e1") e2 = construct_e2(n, l, budget);

    std::ofstream file;
    if (!a.out_path.empty()) {
        file.open(a.out_path);
        if (!file) throw DomainError("cannot open output file " + a.out_path);
    }
    std::ostream& out = a.out_path.empty() ? std::cout : file;

    if (a.format == "csv") out << "p,q,case,x,alpha,beta,s,root,k\n";
    auto emit = [&](const PairWitness& w) {
        if (a.format == "json") {
            out << witness_to_json(w) << "\n";
        } else if (a.format == "csv") {
            auto cell = [](const std::optional<Word>& v) {
                return v ? render_word(*v) : std::string();
            };
            out << render_word(w.p) << "," << render_word(w.q) << "," << case_name(w.tag) << ","
                << cell(w.x) << "," << cell(w.alpha) << "," << cell(w.beta) << ","
                << (w.s ? std::to_string(*w.s) : std::string()) << "," << render_word(w.root)
                << "," << w.exponent << "\n";
        } else {
            out << "p=" << render_word(w.p) << " q=" << render_word(w.q)
                << " case=" << case_name(w.tag);
            if (w.x) out << " x=" << render_word(*w.x);
            if (w.alpha) out << " alpha=" << render_word(*w.alpha);
            if (w.beta) out << " beta=" << render_word(*w.beta);
            if (w.s) out << " s=" << *w.s;
            out << " root=" << render_word(w.root) << " k=" << w.exponent << "\n";
        }
    };
    for (const PairWitness& w : e1) emit(w);
    for (const PairWitness& w : e2) emit(w);

    std::size_t total = e1.size() + e2.size();
    if (a.format == "json") {
        out << "{\"summary\":{\"n\":" << a.n << ",\"l\":" << a.l << ",\"set\":"
            << json_escape(a.set) << ",\"e1\":" << e1.size() << ",\"e2\":" << e2.size()
            << ",\"total\":" << total << ",\"notes\":[";
        for (std::size_t i = 0; i < notes.size(); ++i)
            out << (i ? "," : "") << json_escape(notes[i]);
        out << "]}}\n";
    } else if (a.format == "csv") {
        out << "# summary e1=" << e1.size() << " e2=" << e2.size() << " total=" << total << "\n";
    } else {
        for (const auto& note : notes) out << "note: " << note << "\n";
        out << "summary: e1=" << e1.size() << " e2=" << e2.size() << " total=" << total << "\n";
    }
    return kExitOk;
}

struct ClassifyArgs {
    std::uint64_t n = 2;
    std::string p_text, q_text;
    std::string format = "plain";
};

int run_classify(const ClassifyArgs& a) {
    Word p, q;
    try {
        p = parse_word(a.p_text, static_cast<int>(a.n));
        q = parse_word(a.q_text, static_cast<int>(a.n));
    } catch (const DomainError& e) {
        std::cerr << "malformed word: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        PairWitness w = classify_pair(p, q);
        if (a.format == "csv") {
            auto cell = [](const std::optional<Word>& v) {
                return v ? render_word(*v) : std::string();
            };
            std::cout << "p,q,case,x,alpha,beta,s,root,k\n"
                      << render_word(w.p) << "," << render_word(w.q) << "," << case_name(w.tag)
                      << "," << cell(w.x) << "," << cell(w.alpha) << "," << cell(w.beta) << ","
                      << (w.s ? std::to_string(*w.s) : std::string()) << ","
                      << render_word(w.root) << "," << w.exponent << "\n";
        } else if (a.format == "plain") {
            std::cout << "case=" << case_name(w.tag);
            if (w.x) std::cout << " x=" << render_word(*w.x);
            if (w.alpha) std::cout << " alpha=" << render_word(*w.alpha);
            if (w.beta) std::cout << " beta=" << render_word(*w.beta);
            if (w.s) std::cout << " s=" << *w.s;
            std::cout << " root=" << render_word(w.root) << " k=" << w.exponent << "\n";
        } else {
            std::cout << witness_to_json(w) << "\n";
        }
        return kExitOk;
    } catch (const DomainError& e) {
        std::cout << "{\"error\":\"precondition\",\"reason\":" << json_escape(e.what()) << "}\n";
        return kExitDomain;
    }
}

struct AsymptoteArgs {
    std::string regime;
    std::uint64_t l = 0, n = 0;
    bool l_set = false, n_set = false;
    std::string n_values, l_values, k_values;
    std::uint64_t l_max = 0;
    std::string format = "plain";
};

void print_table_plain(const RatioTable& t) {
    std::cout << "regime: " << regime_name(t.regime) << "\n";
    std::cout << "parameter  numerator  denominator  ratio  verdict  note\n";
    std::size_t failures = 0;
    for (const RatioRow& row : t.rows) {
        std::cout << row.parameter << "  " << row.numerator.to_string() << "  "
                  << row.denominator.to_string() << "  " << row.ratio << "  "
                  << (row.pass ? "pass" : "fail") << "  " << row.note << "\n";
        if (!row.pass) ++failures;
    }
    if (t.flagged) std::cout << "flagged: " << t.flag_reason << "\n";
    std::cout << "verdict: " << (failures == 0 ? "all rows pass" : std::to_string(failures) + " row(s) fail")
              << "\n";
}

int run_asymptote(const AsymptoteArgs& a) {
    RatioTable table;
    if (a.regime == "n-to-inf-eps2") {
        if (!a.l_set || a.n_values.empty()) {
            std::cerr << "usage: asymptote --regime n-to-inf-eps2 -l L --n-values a,b,...\n";
            return kExitUsage;
        }
        table = ratio_eps2_n(a.l, parse_list(a.n_values));
    } else if (a.regime == "n-to-inf-eps1") {
        if (!a.l_set || a.n_values.empty()) {
            std::cerr << "usage: asymptote --regime n-to-inf-eps1 -l L --n-values a,b,...\n";
            return kExitUsage;
        }
        table = ratio_eps1_n(a.l, parse_list(a.n_values));
    } else if (a.regime == "l-to-inf-eps1") {
        if (!a.n_set || a.l_values.empty()) {
            std::cerr << "usage: asymptote --regime l-to-inf-eps1 --n N --l-values a,b,...\n";
            return kExitUsage;
        }
        table = ratio_eps1_l(a.n, parse_list(a.l_values));
    } else if (a.regime == "bound") {
        if (!a.n_set || (a.l_values.empty() && a.l_max == 0)) {
            std::cerr << "usage: asymptote --regime bound --n N (--l-values a,b,... | --l-max M)\n";
            return kExitUsage;
        }
        std::vector<std::uint64_t> ls;
        if (!a.l_values.empty())
            ls = parse_list(a.l_values);
        else
            for (std::uint64_t l = 1; l <= a.l_max; ++l) ls.push_back(l);
        table = check_eps2_bound(a.n, ls);
    } else if (a.regime == "prime-product") {
        if (!a.n_set || a.k_values.empty()) {
            std::cerr << "usage: asymptote --regime prime-product --n N --k a,b,...\n";
            return kExitUsage;
        }
        table = prime_product_table(a.n, parse_list(a.k_values));
    } else {
        std::cerr << "unknown regime; expected one of n-to-inf-eps2, n-to-inf-eps1, "
                     "l-to-inf-eps1, bound, prime-product\n";
        return kExitUsage;
    }

    if (a.format == "json")
        std::cout << table_to_json(table) << "\n";
    else if (a.format == "csv")
        std::cout << table_to_csv(table);
    else
        print_table_plain(table);
    return kExitOk;
}

struct VerifyArgs {
    std::uint64_t budget = 0;
    bool budget_set = false;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string format = "plain";
};

int run_verify(const VerifyArgs& a) {
    std::uint64_t budget = a.budget_set ? a.budget : default_budget();
    std::vector<verify::CriterionResult> results = verify::run_acceptance(budget);
    if (a.seed_set) results.push_back(verify::random_spot_checks(a.seed));

    bool all = true;
    if (a.format == "json") {
        std::cout << "[";
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            std::cout << (i ? "," : "") << "{\"id\":" << r.id
                      << ",\"name\":" << json_escape(r.name)
                      << ",\"pass\":" << (r.pass ? "true" : "false")
                      << ",\"detail\":" << json_escape(r.detail) << "}";
        }
        std::cout << "]\n";
    } else if (a.format == "csv") {
        std::cout << "id,name,pass\n";
        for (const auto& r : results)
            std::cout << r.id << "," << r.name << "," << (r.pass ? "pass" : "fail") << "\n";
    }
    for (const auto& r : results) {
        if (a.format == "plain")
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << " — "
                      << r.detail << "\n";
        std::cerr << "criterion " << r.id << ": " << r.seconds << " s\n";
        all = all && r.pass;
    }
    if (a.format == "plain")
        std::cout << (all ? "all criteria pass" : "SOME CRITERIA FAIL") << "\n";
    return all ? kExitOk : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting and enumeration of primitive word pairs with "
                 "non-primitive product (|p| = 2|q|)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "primword 1.0.0");

    PiArgs pi_args;
    auto* pi = app.add_subcommand("pi", "number of primitive words of length l over n letters");
    pi->add_option("-n,--alphabet", pi_args.n, "alphabet size (>= 2)")->required();
    pi->add_option("-l,--length", pi_args.l, "word length")->required();
    pi->add_option("--format", pi_args.format)->check(CLI::IsMember({"json", "csv", "plain"}));

    MobiusArgs mobius_args;
    auto* mob = app.add_subcommand("mobius", "Moebius function");
    mob->add_option("value", mobius_args.value, "positive integer")->required();
    mob->add_option("--format", mobius_args.format)->check(CLI::IsMember({"json", "csv", "plain"}));

    CountArgs count_args;
    auto* count = app.add_subcommand(
        "count", "all formula variants for the pair counts at (n, l), cross-checked");
    count->add_option("-n,--alphabet", count_args.n)->required();
    count->add_option("-l,--length", count_args.l)->required();
    auto* count_budget = count->add_option("--budget", count_args.budget,
                                           "max pair-space size the oracle may scan");
    count->add_flag("--oracle", count_args.force_oracle, "fail if the oracle cannot run");
    count->add_flag("--no-oracle", count_args.no_oracle, "skip the brute-force oracle");
    count->add_flag("--strict", count_args.strict, "exit 1 when any variants disagree");
    count->add_option("--format", count_args.format)
        ->check(CLI::IsMember({"json", "csv", "plain"}));

    EnumerateArgs enum_args;
    auto* enumerate = app.add_subcommand("enumerate", "emit every witness pair at (n, l)");
    enumerate->add_option("-n,--alphabet", enum_args.n)->required();
    enumerate->add_option("-l,--length", enum_args.l)->required();
    enumerate->add_option("--set", enum_args.set)->check(CLI::IsMember({"e1", "e2", "both"}));
    enumerate->add_option("-o,--out", enum_args.out_path, "output path (default stdout)");
    auto* enum_budget = enumerate->add_option("--budget", enum_args.budget);
    enumerate->add_option("--format", enum_args.format)
        ->check(CLI::IsMember({"json", "csv", "plain"}));

    ClassifyArgs classify_args;
    auto* classify = app.add_subcommand("classify", "classify one pair into its case shape");
    classify->add_option("-n,--alphabet", classify_args.n)->required();
    classify->add_option("-p", classify_args.p_text, "the longer word")->required();
    classify->add_option("-q", classify_args.q_text, "the shorter word")->required();
    classify->add_option("--format", classify_args.format)
        ->check(CLI::IsMember({"json", "csv", "plain"}));

    AsymptoteArgs asym_args;
    auto* asymptote = app.add_subcommand("asymptote", "finite-scale ratio tables and bounds");
    asymptote->add_option("--regime", asym_args.regime)->required();
    auto* asym_l = asymptote->add_option("-l,--l,--length", asym_args.l);
    auto* asym_n = asymptote->add_option("-n,--n,--alphabet", asym_args.n);
    asymptote->add_option("--n-values", asym_args.n_values, "comma-separated alphabet sizes");
    asymptote->add_option("--l-values", asym_args.l_values, "comma-separated lengths");
    asymptote->add_option("--l-max", asym_args.l_max, "check lengths 1..M");
    asymptote->add_option("--k", asym_args.k_values, "comma-separated prime indices (k >= 3)");
    asymptote->add_option("--format", asym_args.format)
        ->check(CLI::IsMember({"json", "csv", "plain"}));

    VerifyArgs verify_args;
    auto* ver = app.add_subcommand("verify", "run the full verification grid");
    auto* verify_budget = ver->add_option("--budget", verify_args.budget);
    auto* verify_seed = ver->add_option("--seed", verify_args.seed,
                                        "append seeded cross-agreement samples");
    ver->add_option("--format", verify_args.format)
        ->check(CLI::IsMember({"json", "csv", "plain"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    count_args.budget_set = count_budget->count() > 0;
    enum_args.budget_set = enum_budget->count() > 0;
    asym_args.l_set = asym_l->count() > 0;
    asym_args.n_set = asym_n->count() > 0;
    verify_args.budget_set = verify_budget->count() > 0;
    verify_args.seed_set = verify_seed->count() > 0;

    try {
        if (pi->parsed()) return run_pi(pi_args);
        if (mob->parsed()) return run_mobius(mobius_args);
        if (count->parsed()) return run_count(count_args);
        if (enumerate->parsed()) return run_enumerate(enum_args);
        if (classify->parsed()) return run_classify(classify_args);
        if (asymptote->parsed()) return run_asymptote(asym_args);
        if (ver->parsed()) return run_verify(verify_args);
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
