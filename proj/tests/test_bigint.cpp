#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "primword/bigint.hpp"
#include "primword/errors.hpp"

using primword::BigInt;
using primword::render_ratio;

namespace {
std::uint64_t rng_state = 0x2545f4914f6cdd1dull;
std::uint64_t next_u64() {
    rng_state ^= rng_state << 13;
    rng_state ^= rng_state >> 7;
    rng_state ^= rng_state << 17;
    return rng_state;
}
}  // namespace

TEST_CASE("construction and decimal round trip") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-1).to_string() == "-1");
    CHECK(BigInt(std::uint64_t{18446744073709551615ull}).to_string() == "18446744073709551615");
    CHECK(BigInt(std::int64_t{-9223372036854775807ll}).to_string() == "-9223372036854775807");
    CHECK(BigInt::from_string("12345678901234567890123456789").to_string() ==
          "12345678901234567890123456789");
    CHECK(BigInt::from_string("-42") == BigInt(-42));
    CHECK(BigInt::from_string("-0") == BigInt(0));
    CHECK_THROWS_AS(BigInt::from_string(""), primword::DomainError);
    CHECK_THROWS_AS(BigInt::from_string("12x"), primword::DomainError);
}

TEST_CASE("powers") {
    CHECK(BigInt::pow(2, 10) == BigInt(1024));
    CHECK(BigInt::pow(2, 64).to_string() == "18446744073709551616");
    CHECK(BigInt::pow(3, 40).to_string() == "12157665459056928801");
    CHECK(BigInt::pow(10, 30).to_string() == "1000000000000000000000000000000");
    CHECK(BigInt::pow(7, 0) == BigInt(1));
    // n^(3l) for n=10, l=20 stays exact
    CHECK(BigInt::pow(10, 60).to_string() == "1" + std::string(60, '0'));
}

TEST_CASE("arithmetic agrees with 128-bit reference on random operands") {
    for (int i = 0; i < 2000; ++i) {
        std::int64_t a = static_cast<std::int64_t>(next_u64() >> 2) - (1ll << 61);
        std::int64_t b = static_cast<std::int64_t>(next_u64() >> 2) - (1ll << 61);
        __int128 sum = static_cast<__int128>(a) + b;
        __int128 diff = static_cast<__int128>(a) - b;
        __int128 prod = static_cast<__int128>(a) * b;
        auto to_big = [](__int128 v) {
            bool neg = v < 0;
            unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v)
                                        : static_cast<unsigned __int128>(v);
            BigInt hi(static_cast<std::uint64_t>(mag >> 64));
            BigInt lo(static_cast<std::uint64_t>(mag));
            BigInt out = hi * BigInt::pow(2, 64) + lo;
            return neg ? -out : out;
        };
        CHECK(BigInt(a) + BigInt(b) == to_big(sum));
        CHECK(BigInt(a) - BigInt(b) == to_big(diff));
        CHECK(BigInt(a) * BigInt(b) == to_big(prod));
    }
}

TEST_CASE("signed arithmetic identities on multi-limb values") {
    for (int i = 0; i < 300; ++i) {
        BigInt a = BigInt(next_u64()) * BigInt(next_u64()) * BigInt(next_u64());
        BigInt b = BigInt(next_u64()) * BigInt(next_u64());
        if (next_u64() & 1) a = -a;
        if (next_u64() & 1) b = -b;
        CHECK((a + b) - b == a);
        CHECK(a + (-a) == BigInt(0));
        CHECK(a * BigInt(0) == BigInt(0));
        CHECK(a * BigInt(1) == a);
        CHECK((a + a) == a * BigInt(2));
    }
}

TEST_CASE("divmod reconstructs the dividend") {
    for (int i = 0; i < 300; ++i) {
        BigInt a = BigInt(next_u64()) * BigInt(next_u64()) * BigInt(next_u64()) + BigInt(next_u64());
        BigInt b = BigInt(next_u64()) * BigInt(next_u64()) + BigInt(1);
        if (next_u64() & 1) a = -a;
        auto [q, r] = BigInt::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.is_negative() == a.is_negative());
    }
    CHECK(BigInt::divmod(BigInt(100), BigInt(7)).quotient == BigInt(14));
    CHECK(BigInt::divmod(BigInt(100), BigInt(7)).remainder == BigInt(2));
    CHECK(BigInt::divmod(BigInt::pow(10, 30), BigInt(7)).quotient.to_string() ==
          "142857142857142857142857142857");
    CHECK_THROWS_AS(BigInt::divmod(BigInt(1), BigInt(0)), primword::DomainError);
}

TEST_CASE("ordering") {
    CHECK(BigInt(-5) < BigInt(3));
    CHECK(BigInt(3) < BigInt(5));
    CHECK(BigInt(-3) > BigInt(-5));
    CHECK(BigInt::pow(2, 100) > BigInt::pow(2, 99));
    CHECK(BigInt(0) == BigInt(std::uint64_t{0}));
}

TEST_CASE("to_uint64 bounds") {
    CHECK(BigInt(std::uint64_t{42}).to_uint64() == 42);
    CHECK((BigInt::pow(2, 64) - BigInt(1)).to_uint64() == 18446744073709551615ull);
    CHECK_THROWS_AS(BigInt(-1).to_uint64(), primword::DomainError);
    CHECK_THROWS_AS(BigInt::pow(2, 64).to_uint64(), primword::DomainError);
    CHECK_THROWS_AS(BigInt::pow(2, 128).to_uint64(), primword::DomainError);
}

TEST_CASE("ratio rendering at 12 significant digits") {
    CHECK(render_ratio(BigInt(3), BigInt(4)) == "0.750000000000");
    CHECK(render_ratio(BigInt(1), BigInt(3)) == "0.333333333333");
    CHECK(render_ratio(BigInt(2), BigInt(3)) == "0.666666666667");
    CHECK(render_ratio(BigInt(1), BigInt(1)) == "1.00000000000");
    CHECK(render_ratio(BigInt(0), BigInt(7)) == "0");
    CHECK(render_ratio(BigInt(36810), BigInt(32768)) == "1.12335205078");
    CHECK(render_ratio(BigInt(1), BigInt(300)) == "0.00333333333333");
    CHECK(render_ratio(BigInt::from_string("999999999999"),
                       BigInt::from_string("1000000000000")) == "0.999999999999");
    // carry across the leading digit
    CHECK(render_ratio(BigInt::from_string("9999999999995"),
                       BigInt::from_string("10000000000000")) == "1.00000000000");
    CHECK(render_ratio(BigInt(123), BigInt(1)) == "123.000000000");
    CHECK_THROWS_AS(render_ratio(BigInt(1), BigInt(0)), primword::DomainError);
    CHECK_THROWS_AS(render_ratio(BigInt(-1), BigInt(2)), primword::DomainError);
}
