#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace primword {

struct DivmodResult;

// Signed arbitrary-precision integer, sign-magnitude over base-2^32 limbs.
// Covers everything the counting formulas need exactly: the largest values in
// practice are around n^3750, a few thousand bits. Schoolbook arithmetic is
// more than fast enough at that scale.
class BigInt {
  public:
    BigInt() = default;
    BigInt(std::int64_t v);
    BigInt(std::uint64_t v);
    BigInt(int v) : BigInt(static_cast<std::int64_t>(v)) {}
    BigInt(unsigned v) : BigInt(static_cast<std::uint64_t>(v)) {}

    static BigInt from_string(std::string_view s);
    static BigInt pow(std::uint64_t base, std::uint64_t exponent);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }
    BigInt abs() const;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);
    BigInt operator-() const;

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

    static DivmodResult divmod(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, const BigInt& b) = default;
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    std::string to_string() const;
    // Throws DomainError when negative or >= 2^64.
    std::uint64_t to_uint64() const;
    std::size_t bit_length() const;

  private:
    static int compare_magnitude(const std::vector<std::uint32_t>& a,
                                 const std::vector<std::uint32_t>& b);
    static void add_magnitude(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    // Requires a >= b in magnitude.
    static void sub_magnitude(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    void trim();

    bool negative_ = false;
    std::vector<std::uint32_t> limbs_;  // little-endian, no trailing zero limbs; empty == 0
};

struct DivmodResult {
    BigInt quotient;
    BigInt remainder;  // same sign as the dividend, |remainder| < |divisor|
};

// num/den rendered as a decimal with `significant` significant digits,
// round-half-up. Exact rational in, display string out. den must be positive,
// num nonnegative.
std::string render_ratio(const BigInt& num, const BigInt& den, int significant = 12);

}  // namespace primword
