#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primword/bigint.hpp"

namespace primword {

// Finite-scale evidence for the limiting behavior of eps1 and eps2: exact
// numerator/denominator pairs with a rendered decimal ratio, plus per-row
// exact verdicts. Every comparison with a fractional exponent is cleared to
// an integer-power comparison first; no floating point is involved anywhere.
enum class Regime {
    n_to_inf_eps2,  // eps2(n,l) against n^(3l/delta(l)), n growing
    n_to_inf_eps1,  // eps1(n,l) against n^(3l/2), n growing
    l_to_inf_eps1,  // eps1(n,l) against n^(3l/2), even l growing
    eps2_bound,     // eps2(n,l)^4 against 16 n^(3l)
    prime_product,  // eps2 at l = p_k p_(k+1) against its two-term main part
};

const char* regime_name(Regime regime);

struct RatioRow {
    std::uint64_t parameter = 0;  // the varying quantity: n, l, or k
    BigInt numerator;
    BigInt denominator;
    std::string ratio;  // rendered to 12 significant digits
    bool pass = true;   // row-level exact verdict, regime-specific
    std::string note;
};

struct RatioTable {
    Regime regime = Regime::n_to_inf_eps2;
    std::vector<RatioRow> rows;
    bool flagged = false;  // convergence shape looked wrong across the rows
    std::string flag_reason;
};

// min of Lambda(l), absent when Lambda(l) is empty.
std::optional<std::uint64_t> delta(std::uint64_t l);

// Rows (n, eps2(n,l), n^(3l/delta(l))) for fixed l; |ratio - 1| must shrink
// monotonically along the rows or the table is flagged.
RatioTable ratio_eps2_n(std::uint64_t l, const std::vector<std::uint64_t>& n_values);

// Rows (n, eps1(n,l), n^(3l/2)) for fixed even l, same monotonicity flag.
RatioTable ratio_eps1_n(std::uint64_t l, const std::vector<std::uint64_t>& n_values);

// Rows (l, eps1(n,l), n^(3l/2)) for fixed n over even l values. Each row also
// checks the tail bound (sum over even Lambda divisors)^4 <= l^4 n^(3l).
RatioTable ratio_eps1_l(std::uint64_t n, const std::vector<std::uint64_t>& l_values);

// Rows (l, eps2(n,l)^4, 16 n^(3l)); pass means the bound holds exactly.
RatioTable check_eps2_bound(std::uint64_t n, const std::vector<std::uint64_t>& l_values);

// Rows at l = p_k p_(k+1) for k >= 3: eps2 from the divisor sum against the
// explicit six-term polynomial (pass = exact equality), ratio against
// n^(3 p_(k+1)) + n^(3 p_k).
RatioTable prime_product_table(std::uint64_t n, const std::vector<std::uint64_t>& k_values);

std::string table_to_json(const RatioTable& t);
std::string table_csv_header();
std::string table_to_csv(const RatioTable& t);

}  // namespace primword
