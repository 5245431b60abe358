#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "primword/counting.hpp"
#include "primword/errors.hpp"
#include "primword/numtheory.hpp"
#include "primword/pairs.hpp"

using namespace primword;

TEST_CASE("eps2 divisor sum") {
    CHECK(eps2_divisor_sum(2, 4) == BigInt(6));
    CHECK(eps2_divisor_sum(2, 9) == BigInt(0));
    CHECK(eps2_divisor_sum(2, 5) == BigInt(6));
    CHECK(eps2_divisor_sum(2, 12) == BigInt(504));
    CHECK(eps2_divisor_sum(2, 1) == BigInt(0));
    CHECK(eps2_divisor_sum(2, 3) == BigInt(0));
    CHECK(eps2_divisor_sum(2, 27) == BigInt(0));  // powers of 3 have empty Lambda
    CHECK_THROWS_AS(eps2_divisor_sum(1, 4), DomainError);
}

TEST_CASE("eps1 divisor sum") {
    CHECK(eps1_divisor_sum(2, 2) == BigInt(4));
    CHECK(eps1_divisor_sum(2, 4) == BigInt(42));
    CHECK(eps1_divisor_sum(2, 6) == BigInt(432));
    CHECK(eps1_divisor_sum(3, 2) == BigInt(18));
    CHECK_THROWS_AS(eps1_divisor_sum(2, 5), DomainError);  // odd l is a library-level error
}

TEST_CASE("eps total") {
    CHECK(eps_total(2, 1) == BigInt(0));
    CHECK(eps_total(2, 2) == BigInt(4));
    CHECK(eps_total(2, 4) == BigInt(48));
    CHECK(eps_total(2, 3) == BigInt(0));
    for (std::uint64_t n : {2, 3})
        for (std::uint64_t l = 1; l <= 20; ++l) {
            BigInt components = eps2_divisor_sum(n, l);
            if (l % 2 == 0) components += eps1_divisor_sum(n, l);
            CAPTURE(n);
            CAPTURE(l);
            CHECK(eps_total(n, l) == components);
            CHECK(eps_total(n, l) <= BigInt::pow(n, 3 * l));
        }
}

TEST_CASE("eps2 closed form") {
    CHECK(eps2_closed(2, 4) == BigInt(6));
    CHECK(eps2_closed(2, 5) == BigInt(6));
    CHECK(eps2_closed(2, 10) == eps2_divisor_sum(2, 10));
    CHECK_THROWS_AS(eps2_closed(2, 9), DomainError);  // 3-free part is 1
    CHECK_THROWS_AS(eps2_closed(2, 1), DomainError);
    CHECK_THROWS_AS(eps2_closed(2, 27), DomainError);
}

TEST_CASE("eps1 closed form") {
    CHECK(eps1_closed(2, 2) == BigInt(4));
    CHECK(eps1_closed(2, 4) == BigInt(42));
    CHECK(eps1_closed(2, 12) == eps1_divisor_sum(2, 12));
    CHECK_THROWS_AS(eps1_closed(2, 5), DomainError);
}

TEST_CASE("eps2 combinatorial form") {
    CHECK(eps2_combinatorial(2, 8) == BigInt(60));
    CHECK(eps2_combinatorial(2, 20) == BigInt(36810));
    CHECK(eps2_combinatorial(2, 20) == eps2_divisor_sum(2, 20));
    CHECK(eps2_combinatorial(2, 5) == BigInt(6));
    CHECK(eps2_combinatorial(2, 9) == BigInt(0));
    CHECK(eps2_combinatorial(2, 1) == BigInt(0));
}

TEST_CASE("eps1 combinatorial form, taken exactly as stated") {
    auto v = eps1_combinatorial(2, 2);
    REQUIRE(v.has_value());
    CHECK(*v == BigInt(4));

    v = eps1_combinatorial(2, 6);
    REQUIRE(v.has_value());
    CHECK(*v == BigInt(432));

    // agrees with the canonical count for l = 2 mod 4 ...
    for (std::uint64_t l : {2, 6, 18}) {
        auto value = eps1_combinatorial(2, l);
        REQUIRE(value.has_value());
        CHECK(*value == eps1_divisor_sum(2, l));
    }

    // ... but not when 4 divides l: at (2,12) it overshoots by exactly 504
    v = eps1_combinatorial(2, 12);
    REQUIRE(v.has_value());
    CHECK(*v == BigInt(257280));
    CHECK(eps1_divisor_sum(2, 12) == BigInt(256776));
    CHECK(*v - eps1_divisor_sum(2, 12) == BigInt(504));

    // and at l = 10 its second sum would need the exponent 10/30
    CHECK_FALSE(eps1_combinatorial(2, 10).has_value());

    CHECK_THROWS_AS(eps1_combinatorial(2, 5), DomainError);
}

TEST_CASE("specialized example forms") {
    auto forms = example_forms(2, 6);  // 3^1 2^1
    REQUIRE(forms.has_value());
    REQUIRE(forms->eps1.has_value());
    CHECK(*forms->eps1 == BigInt(432));
    CHECK(forms->eps2 == BigInt(0));  // s = 1

    forms = example_forms(2, 5);  // 3^0 5^1
    REQUIRE(forms.has_value());
    REQUIRE(forms->eps1.has_value());
    CHECK(*forms->eps1 == BigInt(0));
    CHECK(forms->eps2 == BigInt(6));

    forms = example_forms(2, 4);  // 3^0 2^2: eps1 exponent 8/3 is not an integer
    REQUIRE(forms.has_value());
    CHECK_FALSE(forms->eps1.has_value());
    CHECK(forms->eps1_non_evaluable);
    CHECK(forms->eps2 == BigInt(6));

    forms = example_forms(2, 8);  // 3^0 2^3
    REQUIRE(forms.has_value());
    CHECK(forms->eps2 == BigInt(60));

    forms = example_forms(2, 7);  // prime >= 5
    REQUIRE(forms.has_value());
    CHECK(forms->eps2 == BigInt(6));

    forms = example_forms(2, 45);  // 3^2 5^1
    REQUIRE(forms.has_value());
    CHECK(forms->eps2 == eps2_divisor_sum(2, 45));

    forms = example_forms(2, 15);  // 3^1 5^1
    REQUIRE(forms.has_value());
    REQUIRE(forms->eps1.has_value());
    CHECK(*forms->eps1 == BigInt(0));
    CHECK(forms->eps2 == BigInt(504));
    CHECK(forms->eps2 == eps2_divisor_sum(2, 15));

    CHECK_FALSE(example_forms(2, 1).has_value());
    CHECK_FALSE(example_forms(2, 9).has_value());   // pure power of 3
    CHECK_FALSE(example_forms(2, 20).has_value());  // mixed 2^2 * 5
    CHECK_FALSE(example_forms(2, 35).has_value());  // two distinct primes beyond 3
}

TEST_CASE("every evaluable variant agrees with the canonical one where proven") {
    for (std::uint64_t n : {2, 3})
        for (std::uint64_t l = 1; l <= 24; ++l) {
            BigInt ds = eps2_divisor_sum(n, l);
            CAPTURE(n);
            CAPTURE(l);
            CHECK(eps2_combinatorial(n, l) == ds);
            if (split_pow3(l).l1 >= 2) CHECK(eps2_closed(n, l) == ds);
            if (auto forms = example_forms(n, l)) CHECK(forms->eps2 == ds);
            if (l % 2 == 0) CHECK(eps1_divisor_sum(n, l) == eps1_closed(n, l));
        }
}

TEST_CASE("divisor sums match the brute-force oracle") {
    for (int l = 1; l <= 5; ++l) {
        OracleResult oracle = oracle_enumerate_E(2, l, 1u << 20);
        CAPTURE(l);
        CHECK(BigInt(static_cast<std::uint64_t>(oracle.e2.size())) == eps2_divisor_sum(2, l));
        BigInt e1 = l % 2 == 0 ? eps1_divisor_sum(2, l) : BigInt(0);
        CHECK(BigInt(static_cast<std::uint64_t>(oracle.e1.size())) == e1);
    }
    for (int l = 1; l <= 3; ++l) {
        OracleResult oracle = oracle_enumerate_E(3, l, 1u << 20);
        CAPTURE(l);
        CHECK(BigInt(static_cast<std::uint64_t>(oracle.e2.size())) == eps2_divisor_sum(3, l));
        BigInt e1 = l % 2 == 0 ? eps1_divisor_sum(3, l) : BigInt(0);
        CHECK(BigInt(static_cast<std::uint64_t>(oracle.e1.size())) == e1);
    }
}

TEST_CASE("consistency report at (2,4): canonical chain all agrees") {
    CountReport r = consistency_report(2, 4, 10'000'000);
    CHECK(r.eps1.at("divisor_sum") == BigInt(42));
    CHECK(r.eps1.at("closed_form") == BigInt(42));
    CHECK(r.eps2.at("divisor_sum") == BigInt(6));
    CHECK(r.eps2.at("closed_form") == BigInt(6));
    CHECK(r.eps2.at("combinatorial") == BigInt(6));
    CHECK(r.eps2.at("example_form") == BigInt(6));
    REQUIRE(r.oracle.has_value());
    CHECK(r.oracle->first == BigInt(42));
    CHECK(r.oracle->second == BigInt(6));
    for (const auto& a : r.agreements) {
        // only the as-stated eps1 combinatorial form may disagree
        if (a.a.find("combinatorial") == std::string::npos &&
            a.b.find("combinatorial") == std::string::npos) {
            CAPTURE(a.a);
            CAPTURE(a.b);
            CHECK(a.equal);
        }
    }
}

TEST_CASE("consistency report at (2,3): odd length") {
    CountReport r = consistency_report(2, 3, 10'000'000);
    CHECK(r.eps1.empty());
    CHECK(r.eps2.at("divisor_sum") == BigInt(0));
    REQUIRE(r.oracle.has_value());
    CHECK(r.oracle->first == BigInt(0));
    CHECK(r.oracle->second == BigInt(0));
    bool noted = false;
    for (const auto& note : r.notes) noted = noted || note.find("odd l") != std::string::npos;
    CHECK(noted);
    CHECK(r.all_agree);
}

TEST_CASE("consistency report at (2,12) records the adjudication verdict") {
    CountReport r = consistency_report(2, 12, 0);
    CHECK_FALSE(r.oracle.has_value());
    const CountReport::Agreement* verdict = nullptr;
    for (const auto& a : r.agreements)
        if (a.a == "eps1.combinatorial" && a.b == "eps1.divisor_sum") verdict = &a;
    REQUIRE(verdict != nullptr);
    CHECK_FALSE(verdict->equal);
    CHECK_FALSE(r.all_agree);
    CHECK(r.eps1.at("divisor_sum") == BigInt(256776));
    CHECK(r.eps1.at("combinatorial") == BigInt(257280));
}

TEST_CASE("report serialization") {
    CountReport r = consistency_report(2, 4, 10'000'000);
    nlohmann::json j = nlohmann::json::parse(report_to_json(r));
    CHECK(j["n"] == 2);
    CHECK(j["l"] == 4);
    CHECK(j["variants"]["eps1"]["divisor_sum"] == "42");
    CHECK(j["variants"]["eps2"]["divisor_sum"] == "6");
    CHECK(j["oracle"]["eps1"] == "42");
    CHECK(j["agreements"].is_array());
    CHECK(j["all_agree"].is_boolean());

    CountReport odd = consistency_report(2, 3, 0);
    nlohmann::json jo = nlohmann::json::parse(report_to_json(odd));
    CHECK(jo["oracle"].is_null());
    CHECK(jo["notes"].size() >= 1);

    std::string header = report_csv_header();
    std::string row = report_to_csv_row(r);
    CHECK(std::count(header.begin(), header.end(), ',') ==
          std::count(row.begin(), row.end(), ','));
    CHECK(row.substr(0, 4) == "2,4,");
}
