#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "modgcd/cli.hpp"

using namespace modgcd;
using nlohmann::json;

namespace {

const char* kF = "x^8+x^6-3x^4-3x^3+8x^2+2x-5";
const char* kG = "3x^6+5x^4-4x^2-9x+21";

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args, const std::string& input = "") {
    std::ostringstream out, err;
    std::istringstream in(input);
    const int code = run_cli(args, out, err, in);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, GcdExamples) {
    EXPECT_EQ(run({"gcd", kF, kG}).out, "1\n");
    EXPECT_EQ(run({"gcd", "12x^2+24x+12", "8x+8", "--algorithm", "big-prime"}).out, "4x+4\n");
    for (const char* a : {"big-prime", "aux", "multi-aux", "oracle"})
        EXPECT_EQ(run({"gcd", "12x^2+24x+12", "8x+8", "--algorithm", a}).out, "4x+4\n") << a;
    EXPECT_EQ(run({"gcd", "-4x-4", "-x^2+1"}).out, "x+1\n");
}

TEST(Cli, Trace) {
    const CliRun r = run({"gcd", kF, kG, "--algorithm", "big-prime", "--trace"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1\nprime=1031 role=main e_degree=0 action=accepted\n");
}

TEST(Cli, StdinPolynomial) {
    EXPECT_EQ(run({"gcd", "-", "8x+8"}, "12x^2+24x+12\n").out, "4x+4\n");
    EXPECT_EQ(run({"gcd", "-", "8x+8"}).code, kExitUsage);
}

TEST(Cli, Coprime) {
    const CliRun yes = run({"coprime", kF, kG});
    EXPECT_EQ(yes.code, kExitOk);
    EXPECT_EQ(yes.out, "coprime\nwitness prime: 3\n");
    const CliRun no = run({"coprime", "x^2+2x+1", "x+1"});
    EXPECT_EQ(no.code, kExitNotCoprime);
    EXPECT_EQ(no.out, "not coprime\nexhausted 4 primes\n");
    const CliRun content = run({"coprime", "2x+2", "4x"});
    EXPECT_EQ(content.code, kExitNotCoprime);
    EXPECT_EQ(content.out, "not coprime\ncontent gcd: 2\n");
}

TEST(Cli, Bounds) {
    const CliRun r = run({"bounds", kF, kG});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("k     = 30\n"), std::string::npos);
    EXPECT_NE(r.out.find("N_fg  = 511\n"), std::string::npos);
    const CliRun a = run({"bounds", kF, kG, "--aux", "2"});
    EXPECT_NE(a.out.find("s     = 2\nM     = 32\n"), std::string::npos);
    const json j = json::parse(run({"bounds", kF, kG, "--json"}).out);
    EXPECT_EQ(j["bounds"]["k"], 30);
    EXPECT_EQ(j["bounds"]["nfg"], "511");
    EXPECT_TRUE(j["bounds"]["s"].is_null());
}

TEST(Cli, ResultantAndSwell) {
    EXPECT_EQ(run({"resultant", kF, kG}).out, "260708\n");
    const CliRun s = run({"swell", kG, kF});
    EXPECT_EQ(s.code, 0);
    EXPECT_NE(s.out.find("max_bits"), std::string::npos);
    EXPECT_NE(s.out.find("31"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"gcd", kF}).code, kExitUsage);
    EXPECT_EQ(run({"gcd", "x^-2", kG}).code, kExitUsage);
    EXPECT_NE(run({"gcd", "x^-2", kG}).err.find("position 2"), std::string::npos);
    EXPECT_EQ(run({"gcd", "0", kG}).code, kExitDomain);
    EXPECT_EQ(run({"gcd", kF, kG, "--algorithm", "fast"}).code, kExitUsage);
    EXPECT_EQ(run({"gcd", kF, kG, "--algorithm", "aux", "--aux-prime", "4"}).code, kExitDomain);
    EXPECT_EQ(run({"bench", "nosuch"}).code, kExitUsage);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, JsonSchema) {
    for (const char* a : {"big-prime", "aux", "multi-aux", "oracle"}) {
        const json j = json::parse(run({"gcd", "12x^2+24x+12", "8x+8", "--algorithm", a, "--json"}).out);
        ASSERT_TRUE(j.is_object());
        EXPECT_EQ(j.size(), 4u);
        EXPECT_EQ(j["result"], "4x+4");
        EXPECT_EQ(j["algorithm"], a);
        ASSERT_TRUE(j["trace"].is_array());
        for (const auto& t : j["trace"]) {
            EXPECT_TRUE(t["prime"].is_string());
            EXPECT_TRUE(t["role"] == "auxiliary" || t["role"] == "main");
            EXPECT_TRUE(t["e_degree"].is_number_unsigned() || t["e_degree"].is_null());
            EXPECT_TRUE(t["action"].is_string());
        }
        if (std::string(a) == "oracle") {
            EXPECT_TRUE(j["bounds"].is_null());
            continue;
        }
        const json& b = j["bounds"];
        for (const char* key : {"nf", "ng", "nfg", "afg"})
            EXPECT_TRUE(b[key].is_string()) << key;
        EXPECT_TRUE(b["k"].is_number_unsigned());
        EXPECT_TRUE(b["m"].is_string() || b["m"].is_null());
    }
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args{"gcd", kF, kG, "--algorithm", "big-prime", "--json"};
    EXPECT_EQ(run(args).out, run(args).out);
    const std::vector<std::string> bench{"bench", "constructed(2,3,10,6,5)", "--json"};
    EXPECT_EQ(run(bench).out, run(bench).out);
}
