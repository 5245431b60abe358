#include "primword/counting.hpp"

#include <algorithm>

#include "primword/errors.hpp"
#include "primword/jsonout.hpp"
#include "primword/numtheory.hpp"
#include "primword/pairs.hpp"

namespace primword {

namespace {

BigInt require_nonnegative(BigInt v, const char* what) {
    if (v.is_negative())
        throw std::logic_error(std::string(what) + " evaluated negative");
    return v;
}

void check_args(std::uint64_t n, std::uint64_t l) {
    if (n < 2) throw DomainError("alphabet size must be >= 2");
    if (l < 1) throw DomainError("length must be positive");
}

}  // namespace

BigInt eps2_divisor_sum(std::uint64_t n, std::uint64_t l) {
    check_args(n, l);
    BigInt total;
    for (std::uint64_t d : lambda_sets(l).all) total += count_primitive(n, 3 * l / d);
    return require_nonnegative(std::move(total), "eps2 divisor sum");
}

BigInt eps1_divisor_sum(std::uint64_t n, std::uint64_t l) {
    check_args(n, l);
    if (l % 2 != 0)
        throw DomainError("eps1 requires even l; the count is 0 for odd l "
                          "(the squared shape needs |q| = 2|x|)");
    BigInt total = BigInt::pow(n, l / 2) * count_primitive(n, l);
    for (std::uint64_t d : lambda_sets(l).even) total -= count_primitive(n, 3 * l / d);
    return require_nonnegative(std::move(total), "eps1 divisor sum");
}

BigInt eps_total(std::uint64_t n, std::uint64_t l) {
    check_args(n, l);
    LambdaSets lambda = lambda_sets(l);
    BigInt total;
    if (l % 2 == 0) {
        total = BigInt::pow(n, l / 2) * count_primitive(n, l);
        for (std::uint64_t d : lambda.odd) total += count_primitive(n, 3 * l / d);
    } else {
        for (std::uint64_t d : lambda.all) total += count_primitive(n, 3 * l / d);
    }
    require_nonnegative(total, "eps total");
    if (total > BigInt::pow(n, 3 * l))
        throw std::logic_error("eps total exceeds the pair space n^(3l)");
    return total;
}

BigInt eps2_closed(std::uint64_t n, std::uint64_t l) {
    check_args(n, l);
    ThreeSplit split = split_pow3(l);
    if (split.l1 < 2)
        throw DomainError("eps2 closed form requires the 3-free part of l to be >= 2");
    BigInt result = BigInt::pow(n, 3 * l) - BigInt::pow(n, l) - count_primitive(n, 3 * l);
    if (split.l1 % 2 == 0) result -= count_primitive(n, 3 * l / 2);
    return require_nonnegative(std::move(result), "eps2 closed form");
}

BigInt eps1_closed(std::uint64_t n, std::uint64_t l) {
    check_args(n, l);
    if (l % 2 != 0) throw DomainError("eps1 closed form requires even l");
    BigInt result = BigInt::pow(n, l / 2) * (count_primitive(n, l) + BigInt(1)) +
                    count_primitive(n, 3 * l / 2) - BigInt::pow(n, 3 * l / 2);
    return require_nonnegative(std::move(result), "eps1 closed form");
}

BigInt eps2_combinatorial(std::uint64_t n, std::uint64_t l) {
    check_args(n, l);
    BigInt total;
    for (const AtomSet& set : gamma_sets(l).sets) {
        std::uint64_t divisor = set.product();
        if ((3 * l) % divisor != 0)
            throw std::logic_error("gamma subset product does not divide 3l");
        BigInt term = BigInt::pow(n, 3 * l / divisor);
        total += set.atoms.size() % 2 == 1 ? term : -term;
    }
    return require_nonnegative(std::move(total), "eps2 combinatorial form");
}

std::optional<BigInt> eps1_combinatorial(std::uint64_t n, std::uint64_t l) {
    check_args(n, l);
    if (l % 2 != 0) throw DomainError("eps1 combinatorial form requires even l");

    BigInt total;
    std::vector<std::uint64_t> primes;
    for (auto [p, e] : factorize(l).factors) primes.push_back(p);
    for (std::uint32_t mask = 0; mask < (1u << primes.size()); ++mask) {
        std::uint64_t product = 1;
        int size = 0;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (mask & (1u << i)) {
                product *= primes[i];
                ++size;
            }
        BigInt term = BigInt::pow(n, l / product + l / 2);  // p(L) | l by construction
        total += size % 2 == 0 ? term : -term;
    }

    // the second sum runs over gamma2(l) regardless of the power of 2 in l:
    // nonempty subsets of {3} u pf(l1) other than {3} itself
    std::vector<std::uint64_t> atoms{3};
    for (auto [p, e] : factorize(split_pow3_pow2(l).l1).factors) atoms.push_back(p);
    std::sort(atoms.begin(), atoms.end());
    std::vector<AtomSet> gamma2;
    for (std::uint32_t mask = 1; mask < (1u << atoms.size()); ++mask) {
        AtomSet set;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (mask & (1u << i)) set.atoms.push_back(atoms[i]);
        if (set.atoms.size() == 1 && set.atoms[0] == 3) continue;
        gamma2.push_back(std::move(set));
    }
    for (const AtomSet& set : gamma2) {
        std::uint64_t divisor = 2 * set.product();
        if (l % divisor != 0) return std::nullopt;  // non-integral exponent; not evaluable as stated
        BigInt term = BigInt::pow(n, l / divisor);
        total += set.atoms.size() % 2 == 0 ? term : -term;
    }
    return require_nonnegative(std::move(total), "eps1 combinatorial form");
}

std::optional<ExampleForms> example_forms(std::uint64_t n, std::uint64_t l) {
    check_args(n, l);
    SixSplit split = split_pow3_pow2(l);

    if (split.s >= 1 && split.l1 == 1) {  // l = 3^m 2^s
        ExampleForms forms;
        if ((2 * l) % 3 == 0 && (5 * l) % 6 == 0) {
            forms.eps1 = require_nonnegative(BigInt::pow(n, 3 * l / 2) + BigInt::pow(n, 2 * l / 3) -
                                                 BigInt::pow(n, l) - BigInt::pow(n, 5 * l / 6),
                                             "eps1 example form");
        } else {
            forms.eps1_non_evaluable = true;  // 2l/3 or 5l/6 not an integer
        }
        if (split.s == 1) {
            forms.eps2 = BigInt(0);
        } else {
            std::uint64_t base = l / 4;  // 3^m 2^(s-2)
            forms.eps2 = require_nonnegative(BigInt::pow(n, 3 * base) - BigInt::pow(n, base),
                                             "eps2 example form");
        }
        return forms;
    }

    if (split.s == 0 && split.l1 >= 5) {  // l = 3^m p^s for one prime p >= 5?
        Factorization f = factorize(split.l1);
        if (f.factors.size() == 1) {
            std::uint64_t base = l / f.factors[0].first;  // 3^m p^(s-1)
            ExampleForms forms;
            forms.eps1 = BigInt(0);
            forms.eps2 = require_nonnegative(BigInt::pow(n, 3 * base) - BigInt::pow(n, base),
                                             "eps2 example form");
            return forms;
        }
    }
    return std::nullopt;
}

namespace {

void record_agreements(const std::map<std::string, BigInt>& variants, const std::string& family,
                       CountReport& report) {
    std::vector<std::pair<std::string, BigInt>> items(variants.begin(), variants.end());
    for (std::size_t i = 0; i < items.size(); ++i)
        for (std::size_t j = i + 1; j < items.size(); ++j) {
            bool equal = items[i].second == items[j].second;
            report.agreements.push_back(
                {family + "." + items[i].first, family + "." + items[j].first, equal});
            if (!equal) report.all_agree = false;
        }
}

}  // namespace

CountReport consistency_report(std::uint64_t n, std::uint64_t l, std::uint64_t oracle_budget) {
    check_args(n, l);
    CountReport report;
    report.n = n;
    report.l = l;

    bool even = l % 2 == 0;
    if (even) {
        report.eps1["divisor_sum"] = eps1_divisor_sum(n, l);
        report.eps1["closed_form"] = eps1_closed(n, l);
        if (auto v = eps1_combinatorial(n, l))
            report.eps1["combinatorial"] = *v;
        else
            report.notes.push_back("eps1 combinatorial form not evaluable at l=" +
                                   std::to_string(l) + " (non-integral exponent as stated)");
    } else {
        report.notes.push_back("eps1 = 0 for odd l (the squared shape needs |q| = 2|x|)");
    }

    report.eps2["divisor_sum"] = eps2_divisor_sum(n, l);
    if (split_pow3(l).l1 >= 2) report.eps2["closed_form"] = eps2_closed(n, l);
    report.eps2["combinatorial"] = eps2_combinatorial(n, l);

    if (auto forms = example_forms(n, l)) {
        if (forms->eps1) report.eps1["example_form"] = *forms->eps1;
        if (forms->eps1_non_evaluable)
            report.notes.push_back("eps1 example form flagged non-evaluable at l=" +
                                   std::to_string(l) + " (non-integral exponent)");
        report.eps2["example_form"] = forms->eps2;
    }

    report.eps["total"] = eps_total(n, l);
    BigInt components = report.eps2.at("divisor_sum");
    if (even) components += report.eps1.at("divisor_sum");
    report.eps["component_sum"] = components;

    if (BigInt::pow(n, 3 * l) <= BigInt(oracle_budget)) {
        OracleResult oracle =
            oracle_enumerate_E(static_cast<int>(n), static_cast<int>(l), oracle_budget);
        report.oracle = {BigInt(static_cast<std::uint64_t>(oracle.e1.size())),
                         BigInt(static_cast<std::uint64_t>(oracle.e2.size()))};
    }

    record_agreements(report.eps1, "eps1", report);
    record_agreements(report.eps2, "eps2", report);
    {
        bool equal = report.eps.at("total") == report.eps.at("component_sum");
        report.agreements.push_back({"eps.total", "eps.component_sum", equal});
        if (!equal) report.all_agree = false;
    }
    if (report.oracle) {
        if (even) {
            bool equal = report.oracle->first == report.eps1.at("divisor_sum");
            report.agreements.push_back({"eps1.divisor_sum", "eps1.oracle", equal});
            if (!equal) report.all_agree = false;
        } else {
            bool equal = report.oracle->first.is_zero();
            report.agreements.push_back({"eps1.zero_for_odd_l", "eps1.oracle", equal});
            if (!equal) report.all_agree = false;
        }
        bool equal = report.oracle->second == report.eps2.at("divisor_sum");
        report.agreements.push_back({"eps2.divisor_sum", "eps2.oracle", equal});
        if (!equal) report.all_agree = false;
    }
    return report;
}

namespace {

std::string variants_json(const std::map<std::string, BigInt>& variants) {
    std::string out = "{";
    bool first = true;
    for (const auto& [name, value] : variants) {
        if (!first) out.push_back(',');
        first = false;
        out += json_escape(name) + ":" + json_escape(value.to_string());
    }
    out.push_back('}');
    return out;
}

}  // namespace

std::string report_to_json(const CountReport& r) {
    std::string out = "{";
    out += "\"n\":" + std::to_string(r.n);
    out += ",\"l\":" + std::to_string(r.l);
    out += ",\"variants\":{";
    out += "\"eps1\":" + variants_json(r.eps1);
    out += ",\"eps2\":" + variants_json(r.eps2);
    out += ",\"eps\":" + variants_json(r.eps);
    out += "}";
    if (r.oracle) {
        out += ",\"oracle\":{\"eps1\":" + json_escape(r.oracle->first.to_string()) +
               ",\"eps2\":" + json_escape(r.oracle->second.to_string()) + "}";
    } else {
        out += ",\"oracle\":null";
    }
    out += ",\"agreements\":[";
    for (std::size_t i = 0; i < r.agreements.size(); ++i) {
        if (i != 0) out.push_back(',');
        out += "{\"a\":" + json_escape(r.agreements[i].a) +
               ",\"b\":" + json_escape(r.agreements[i].b) +
               ",\"equal\":" + (r.agreements[i].equal ? "true" : "false") + "}";
    }
    out += "],\"notes\":[";
    for (std::size_t i = 0; i < r.notes.size(); ++i) {
        if (i != 0) out.push_back(',');
        out += json_escape(r.notes[i]);
    }
    out += "],\"all_agree\":";
    out += r.all_agree ? "true" : "false";
    out += "}";
    return out;
}

namespace {
const char* kCsvColumns[] = {"divisor_sum", "closed_form", "combinatorial", "example_form"};

void append_variant_cells(const std::map<std::string, BigInt>& variants, std::string& out) {
    for (const char* column : kCsvColumns) {
        out.push_back(',');
        auto it = variants.find(column);
        if (it != variants.end()) out += it->second.to_string();
    }
}
}  // namespace

std::string report_csv_header() {
    std::string out = "n,l";
    for (const char* family : {"eps1", "eps2"})
        for (const char* column : kCsvColumns)
            out += std::string(",") + family + "_" + column;
    out += ",eps_total,oracle_eps1,oracle_eps2,all_agree";
    return out;
}

std::string report_to_csv_row(const CountReport& r) {
    std::string out = std::to_string(r.n) + "," + std::to_string(r.l);
    append_variant_cells(r.eps1, out);
    append_variant_cells(r.eps2, out);
    out += "," + r.eps.at("total").to_string();
    out.push_back(',');
    if (r.oracle) out += r.oracle->first.to_string();
    out.push_back(',');
    if (r.oracle) out += r.oracle->second.to_string();
    out += r.all_agree ? ",true" : ",false";
    return out;
}

}  // namespace primword
