#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "cli_goldens.hpp"

namespace lorder::cli {
namespace {

TEST(Cli, GoldenInvocations) {
  for (const Golden& g : goldens()) {
    const Outcome o = invoke(g.args);
    std::string label;
    for (const std::string& a : g.args) label += a + ' ';
    EXPECT_EQ(o.code, g.code) << label << o.err;
    if (!g.out.empty()) EXPECT_EQ(o.out, g.out) << label;
    if (g.code == 2) EXPECT_FALSE(o.err.empty()) << label;
  }
}

TEST(Cli, Deterministic) {
  for (const Golden& g : goldens()) {
    const Outcome a = invoke(g.args);
    const Outcome b = invoke(g.args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, JsonTreeInput) {
  const Outcome o = invoke({"print", R"({"sign":"0","children":[{"sign":"+","children":[{"sign":"0","children":[]}]}]})"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "w\n");
  EXPECT_EQ(invoke({"print", R"({"sign":"0","children":[{"sign":"0","children":[{}]}]})"}).code, 2);
}

TEST(Cli, JsonOutputsParse) {
  for (std::vector<std::string> args : {std::vector<std::string>{"fingerprint", "w + 1"},
                                        {"divide", "w", "w + w"},
                                        {"ast", "w*(w- + w)"},
                                        {"oracle", "w*(w + w-)", "w + w*(w- + w)"},
                                        {"decompose", "w + w-"}}) {
    args.push_back("--output");
    args.push_back("json");
    const Outcome o = invoke(args);
    EXPECT_EQ(o.code, 0) << args[0] << o.err;
    EXPECT_TRUE(nlohmann::json::accept(o.out)) << o.out;
  }
}

TEST(Cli, BoundsMustBePositive) {
  EXPECT_EQ(invoke({"width", "w", "--k-max", "0"}).code, 2);
  EXPECT_EQ(invoke({"width", "w", "--output", "yaml"}).code, 2);
}

}  // namespace
}  // namespace lorder::cli
