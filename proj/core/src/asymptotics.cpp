#include "primword/asymptotics.hpp"

#include "primword/counting.hpp"
#include "primword/errors.hpp"
#include "primword/jsonout.hpp"
#include "primword/numtheory.hpp"

namespace primword {

namespace {

BigInt abs_diff(const BigInt& a, const BigInt& b) { return a >= b ? a - b : b - a; }

// flag the table unless |row.ratio - 1| is non-increasing, compared exactly:
// |num_i - den_i| * den_j  vs  |num_j - den_j| * den_i
void flag_unless_converging(RatioTable& table) {
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
        const RatioRow& prev = table.rows[i - 1];
        const RatioRow& cur = table.rows[i];
        BigInt lhs = abs_diff(cur.numerator, cur.denominator) * prev.denominator;
        BigInt rhs = abs_diff(prev.numerator, prev.denominator) * cur.denominator;
        if (lhs > rhs) {
            table.flagged = true;
            table.flag_reason = "|ratio - 1| grew between parameters " +
                                std::to_string(prev.parameter) + " and " +
                                std::to_string(cur.parameter);
            return;
        }
    }
}

}  // namespace

const char* regime_name(Regime regime) {
    switch (regime) {
        case Regime::n_to_inf_eps2: return "n_to_inf_eps2";
        case Regime::n_to_inf_eps1: return "n_to_inf_eps1";
        case Regime::l_to_inf_eps1: return "l_to_inf_eps1";
        case Regime::eps2_bound: return "eps2_bound";
        case Regime::prime_product: return "prime_product";
    }
    return "?";
}

std::optional<std::uint64_t> delta(std::uint64_t l) {
    LambdaSets lambda = lambda_sets(l);
    if (lambda.all.empty()) return std::nullopt;
    return lambda.all.front();
}

RatioTable ratio_eps2_n(std::uint64_t l, const std::vector<std::uint64_t>& n_values) {
    auto d = delta(l);
    if (!d) throw DomainError("delta(l) undefined: Lambda(l) is empty");
    RatioTable table;
    table.regime = Regime::n_to_inf_eps2;
    for (std::uint64_t n : n_values) {
        RatioRow row;
        row.parameter = n;
        row.numerator = eps2_divisor_sum(n, l);
        row.denominator = BigInt::pow(n, 3 * l / *d);
        row.ratio = render_ratio(row.numerator, row.denominator);
        table.rows.push_back(std::move(row));
    }
    flag_unless_converging(table);
    return table;
}

RatioTable ratio_eps1_n(std::uint64_t l, const std::vector<std::uint64_t>& n_values) {
    if (l % 2 != 0) throw DomainError("eps1 regimes require even l");
    RatioTable table;
    table.regime = Regime::n_to_inf_eps1;
    for (std::uint64_t n : n_values) {
        RatioRow row;
        row.parameter = n;
        row.numerator = eps1_divisor_sum(n, l);
        row.denominator = BigInt::pow(n, 3 * l / 2);
        row.ratio = render_ratio(row.numerator, row.denominator);
        table.rows.push_back(std::move(row));
    }
    flag_unless_converging(table);
    return table;
}

RatioTable ratio_eps1_l(std::uint64_t n, const std::vector<std::uint64_t>& l_values) {
    RatioTable table;
    table.regime = Regime::l_to_inf_eps1;
    for (std::uint64_t l : l_values) {
        if (l % 2 != 0) throw DomainError("eps1 regimes require even l");
        RatioRow row;
        row.parameter = l;
        row.numerator = eps1_divisor_sum(n, l);
        row.denominator = BigInt::pow(n, 3 * l / 2);
        row.ratio = render_ratio(row.numerator, row.denominator);
        // tail bound from the even Lambda divisors: tail <= l * n^(3l/4),
        // checked as tail^4 <= l^4 * n^(3l)
        BigInt tail;
        for (std::uint64_t d : lambda_sets(l).even) tail += count_primitive(n, 3 * l / d);
        BigInt lhs = tail * tail * tail * tail;
        BigInt l4 = BigInt(l) * BigInt(l) * BigInt(l) * BigInt(l);
        row.pass = lhs <= l4 * BigInt::pow(n, 3 * l);
        if (!row.pass) row.note = "tail bound violated";
        table.rows.push_back(std::move(row));
    }
    return table;
}

RatioTable check_eps2_bound(std::uint64_t n, const std::vector<std::uint64_t>& l_values) {
    if (n < 2) throw DomainError("alphabet size must be >= 2");
    RatioTable table;
    table.regime = Regime::eps2_bound;
    for (std::uint64_t l : l_values) {
        BigInt eps2 = eps2_divisor_sum(n, l);
        RatioRow row;
        row.parameter = l;
        row.numerator = eps2 * eps2 * eps2 * eps2;
        row.denominator = BigInt(std::uint64_t{16}) * BigInt::pow(n, 3 * l);
        row.ratio = render_ratio(row.numerator, row.denominator);
        row.pass = row.numerator <= row.denominator;
        if (!row.pass) row.note = "eps2^4 > 16 n^(3l)";
        table.rows.push_back(std::move(row));
    }
    return table;
}

RatioTable prime_product_table(std::uint64_t n, const std::vector<std::uint64_t>& k_values) {
    RatioTable table;
    table.regime = Regime::prime_product;
    for (std::uint64_t k : k_values) {
        if (k < 3) throw DomainError("prime product rows start at k = 3");
        PrimePair primes = primes_and_gaps(k);
        std::uint64_t l = primes.pk * primes.pk_next;
        BigInt exact = eps2_divisor_sum(n, l);
        BigInt poly = BigInt::pow(n, 3 * primes.pk_next) + BigInt::pow(n, 3 * primes.pk) +
                      BigInt(n) - BigInt::pow(n, primes.pk_next) - BigInt::pow(n, primes.pk) -
                      BigInt::pow(n, 3);
        RatioRow row;
        row.parameter = k;
        row.numerator = exact;
        // main part n^(3l/delta) (1 + n^(-3 gap)) collapses to an exact integer
        row.denominator = BigInt::pow(n, 3 * primes.pk_next) + BigInt::pow(n, 3 * primes.pk);
        row.ratio = render_ratio(row.numerator, row.denominator);
        row.pass = exact == poly;
        row.note = "l=" + std::to_string(l) + " polynomial=" + poly.to_string() +
                   (row.pass ? " (equal)" : " (MISMATCH)");
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string table_to_json(const RatioTable& t) {
    std::string out = "{\"regime\":";
    out += json_escape(regime_name(t.regime));
    out += ",\"rows\":[";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const RatioRow& row = t.rows[i];
        if (i != 0) out.push_back(',');
        out += "{\"parameter\":" + std::to_string(row.parameter);
        out += ",\"numerator\":" + json_escape(row.numerator.to_string());
        out += ",\"denominator\":" + json_escape(row.denominator.to_string());
        out += ",\"ratio\":" + json_escape(row.ratio);
        out += ",\"pass\":";
        out += row.pass ? "true" : "false";
        if (!row.note.empty()) out += ",\"note\":" + json_escape(row.note);
        out += "}";
    }
    out += "],\"flagged\":";
    out += t.flagged ? "true" : "false";
    if (t.flagged) out += ",\"flag_reason\":" + json_escape(t.flag_reason);
    out += "}";
    return out;
}

std::string table_csv_header() { return "parameter,numerator,denominator,ratio,verdict,note"; }

std::string table_to_csv(const RatioTable& t) {
    std::string out = table_csv_header();
    out.push_back('\n');
    for (const RatioRow& row : t.rows) {
        out += std::to_string(row.parameter) + "," + row.numerator.to_string() + "," +
               row.denominator.to_string() + "," + row.ratio + "," +
               (row.pass ? "pass" : "fail") + "," + row.note + "\n";
    }
    return out;
}

}  // namespace primword
