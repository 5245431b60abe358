#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#ifndef PRIMWORD_CLI_PATH
#define PRIMWORD_CLI_PATH "primword"
#endif

namespace {

struct CmdResult {
    int code;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    std::string cmd = std::string(PRIMWORD_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("pi") {
    CmdResult r = run_cli("pi -n 2 -l 6");
    CHECK(r.code == 0);
    CHECK(r.out == "54\n");

    CHECK(run_cli("pi -n 2 -l 1").out == "2\n");
    CHECK(run_cli("pi -n 3 -l 4").out == "72\n");

    r = run_cli("pi -n 2 -l 6 --format json");
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 2);
    CHECK(j["l"] == 6);
    CHECK(j["pi"] == "54");

    // 2^100 - 2^50 - 2^20 + 2^10, checked against an independent evaluation
    r = run_cli("pi -n 2 -l 100 --format csv");
    CHECK(r.out == "n,l,pi\n2,100,1267650600228228275596795315200\n");
}

TEST_CASE("mobius") {
    CHECK(run_cli("mobius 4").out == "0\n");
    CHECK(run_cli("mobius 6").out == "1\n");
    CHECK(run_cli("mobius 2").out == "-1\n");
    CHECK(run_cli("mobius 0").code == 4);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("pi -n 2").code == 2);
    CHECK(run_cli("nonsense").code == 2);
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("count -n 2 -l 4 --format yaml").code == 2);
}

TEST_CASE("count report") {
    CmdResult r = run_cli("count -n 2 -l 4 --format json");
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["variants"]["eps1"]["divisor_sum"] == "42");
    CHECK(j["variants"]["eps1"]["closed_form"] == "42");
    CHECK(j["variants"]["eps2"]["divisor_sum"] == "6");
    CHECK(j["oracle"]["eps1"] == "42");
    CHECK(j["oracle"]["eps2"] == "6");
    CHECK(j["variants"]["eps"]["total"] == "48");

    r = run_cli("count -n 2 -l 1 --format json");
    j = nlohmann::json::parse(r.out);
    CHECK(j["variants"]["eps"]["total"] == "0");
    CHECK(j["all_agree"] == true);

    // --strict surfaces the recorded disagreement of the as-stated eps1
    // combinatorial form
    CHECK(run_cli("count -n 2 -l 12 --strict --format json").code == 1);
    CHECK(run_cli("count -n 2 -l 6 --strict --format json").code == 0);

    // forcing the oracle beyond the budget is a budget error
    CHECK(run_cli("count -n 2 -l 4 --oracle --budget 10").code == 3);

    r = run_cli("count -n 2 -l 4 --no-oracle --format json");
    j = nlohmann::json::parse(r.out);
    CHECK(j["oracle"].is_null());

    r = run_cli("count -n 2 -l 4 --format csv");
    CHECK(r.out.find("n,l,eps1_divisor_sum") == 0);
    CHECK(r.out.find("\n2,4,42,42,48,") != std::string::npos);
}

TEST_CASE("enumerate") {
    CmdResult r = run_cli("enumerate -n 2 -l 2 --set e1");
    REQUIRE(r.code == 0);
    REQUIRE(count_lines(r.out) == 5);  // 4 witnesses + summary
    std::size_t pos = 0;
    int records = 0;
    while (pos < r.out.size()) {
        std::size_t end = r.out.find('\n', pos);
        nlohmann::json j = nlohmann::json::parse(r.out.substr(pos, end - pos));
        if (j.contains("summary")) {
            CHECK(j["summary"]["e1"] == 4);
            CHECK(j["summary"]["e2"] == 0);
            CHECK(j["summary"]["total"] == 4);
        } else {
            CHECK(j["case"] == "I");
            CHECK(j["k"] == 2);
            ++records;
        }
        pos = end + 1;
    }
    CHECK(records == 4);

    r = run_cli("enumerate -n 2 -l 4 --set e2");
    CHECK(count_lines(r.out) == 7);

    r = run_cli("enumerate -n 2 -l 3 --set both");
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["summary"]["total"] == 0);
    CHECK(j["summary"]["notes"].size() == 1);

    CHECK(run_cli("enumerate -n 2 -l 12 --budget 1000").code == 3);

    r = run_cli("enumerate -n 2 -l 2 --set e1 --format csv");
    CHECK(r.out.find("p,q,case,x,alpha,beta,s,root,k\n") == 0);
    CHECK(r.out.find("aaba,ab,I,a,,,,aab,2\n") != std::string::npos);
    CHECK(r.out.find("# summary e1=4 e2=0 total=4\n") != std::string::npos);
}

TEST_CASE("every emitted witness line classifies back to itself") {
    CmdResult r = run_cli("enumerate -n 2 -l 4 --set both");
    REQUIRE(r.code == 0);
    std::size_t pos = 0;
    int verified = 0;
    while (pos < r.out.size()) {
        std::size_t end = r.out.find('\n', pos);
        nlohmann::json j = nlohmann::json::parse(r.out.substr(pos, end - pos));
        pos = end + 1;
        if (j.contains("summary")) continue;
        std::string p = j["p"], q = j["q"];
        CmdResult c = run_cli("classify -n 2 -p " + p + " -q " + q + " --format json");
        REQUIRE(c.code == 0);
        nlohmann::json back = nlohmann::json::parse(c.out);
        CHECK(back["case"] == j["case"]);
        CHECK(back["root"] == j["root"]);
        CHECK(back["k"] == j["k"]);
        CHECK(back["x"] == j["x"]);
        CHECK(back["alpha"] == j["alpha"]);
        CHECK(back["beta"] == j["beta"]);
        CHECK(back["s"] == j["s"]);
        ++verified;
    }
    CHECK(verified == 48);
}

TEST_CASE("classify") {
    CmdResult r = run_cli("classify -n 2 -p aaba -q ab --format json");
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["case"] == "I");
    CHECK(j["x"] == "a");
    CHECK(j["root"] == "aab");

    r = run_cli("classify -n 2 -p bbabbabb -q abba --format json");
    j = nlohmann::json::parse(r.out);
    CHECK(j["case"] == "II");
    CHECK(j["s"] == 1);
    CHECK(j["alpha"] == "a");
    CHECK(j["beta"] == "bb");

    r = run_cli("classify -n 2 -p aaaa -q ab");
    CHECK(r.code == 4);
    j = nlohmann::json::parse(r.out);
    CHECK(j["error"] == "precondition");
    CHECK(j["reason"] == "p not primitive");

    r = run_cli("classify -n 2 -p aab -q ab");
    CHECK(r.code == 4);
    CHECK(nlohmann::json::parse(r.out)["reason"] == "|p| != 2|q|");

    r = run_cli("classify -n 2 -p aabb -q ab");
    CHECK(r.code == 4);
    CHECK(nlohmann::json::parse(r.out)["reason"] == "pq is primitive");

    // malformed word text is a usage error, not a domain error
    CHECK(run_cli("classify -n 2 -p axba -q ab").code == 2);
    CHECK(run_cli("classify -n 2 -p [0,2,1] -q [0,1]").code == 2);

    r = run_cli("classify -n 4 -p [0,0,1,0] -q [0,1] --format json");
    CHECK(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["case"] == "I");
}

TEST_CASE("asymptote") {
    CmdResult r = run_cli("asymptote --regime n-to-inf-eps2 -l 4 --n-values 2,5,10,100 --format csv");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("2,6,8,0.750000000000,pass") != std::string::npos);
    CHECK(r.out.find("100,999900,1000000,0.999900000000,pass") != std::string::npos);

    r = run_cli("asymptote --regime bound --n 2 --l-max 40");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("verdict: all rows pass") != std::string::npos);

    r = run_cli("asymptote --regime prime-product --n 2 --k 3,4,5 --format json");
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["rows"].size() == 3);
    CHECK(j["rows"][0]["pass"] == true);

    CHECK(run_cli("asymptote --regime n-to-inf-eps2 -l 9 --n-values 2").code == 4);
    CHECK(run_cli("asymptote --regime n-to-inf-eps2").code == 2);
    CHECK(run_cli("asymptote --regime prime-product --n 2 --k 2").code == 4);
}

TEST_CASE("verify") {
    CmdResult r = run_cli("verify");
    CHECK(r.code == 0);
    for (int i = 1; i <= 7; ++i)
        CHECK(r.out.find("[PASS] " + std::to_string(i) + ".") != std::string::npos);
    CHECK(r.out.find("all criteria pass") != std::string::npos);
    CHECK(r.out.find("[FAIL]") == std::string::npos);

    r = run_cli("verify --seed 42 --format json");
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.size() == 8);
    for (const auto& item : j) CHECK(item["pass"] == true);
}

TEST_CASE("PRIMWORD_BUDGET env var sets the default budget") {
    CmdResult r = run_cli("count -n 2 -l 4 --format json");  // default budget admits the oracle
    CHECK_FALSE(nlohmann::json::parse(r.out)["oracle"].is_null());

    // the env default is overridable per invocation
    std::string cmd = std::string("PRIMWORD_BUDGET=100 ") + PRIMWORD_CLI_PATH +
                      " count -n 2 -l 4 --format json 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    pclose(pipe);
    CHECK(nlohmann::json::parse(out)["oracle"].is_null());  // 2^12 > 100: oracle skipped
}

TEST_CASE("identical invocations produce byte-identical output") {
    for (const std::string& cmd :
         {std::string("count -n 2 -l 4 --format json"),
          std::string("enumerate -n 2 -l 4 --set both"),
          std::string("asymptote --regime prime-product --n 2 --k 3,4 --format json"),
          std::string("verify --seed 9 --format csv")}) {
        CmdResult a = run_cli(cmd);
        CmdResult b = run_cli(cmd);
        CAPTURE(cmd);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}
