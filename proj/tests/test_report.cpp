#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "hkwall/report.hpp"
#include "hkwall/verify.hpp"

using namespace hkwall;
using nlohmann::json;

TEST_CASE("json emission") {
  const auto ctx = GenusContext::make(12, DivCase::Div2);
  const auto bundle = build_report(ctx, SectionSet{.walls = true, .fixed = true});
  const std::string text = emit_json(bundle);
  const json parsed = json::parse(text);

  CHECK(parsed["genus"] == 12);
  CHECK(parsed["divisibility"] == 2);
  REQUIRE(parsed["walls"].size() == 5);
  // Exact rationals serialize as strings, never numbers.
  CHECK(parsed["walls"][0]["slope"] == "7/1");
  CHECK(parsed["walls"][4]["slope"] == "1/3");
  CHECK(parsed["walls"][4]["a"] == json::array({3, -1, 4}));
  CHECK(parsed["fixed"]["main_theorem_count"] == 2);
  CHECK(parsed["fixed"]["signs"]["Sigma"] == "det");

  SUBCASE("round trip is byte-identical") {
    CHECK(parsed.dump(2) + "\n" == text);
  }
}

TEST_CASE("slope of three serializes as 3/1") {
  const auto ctx = GenusContext::make(4, DivCase::Div2);
  const auto bundle = build_report(ctx, SectionSet{.walls = true});
  const json parsed = json::parse(emit_json(bundle));
  CHECK(parsed["walls"][0]["slope"] == "3/1");
}

TEST_CASE("divisibility-1 report") {
  const auto ctx = GenusContext::make(5, DivCase::Div1);
  const auto bundle =
      build_report(ctx, SectionSet{.classes = true, .fixed = true});
  const json parsed = json::parse(emit_json(bundle));
  CHECK(parsed["classes"]["lambda"] == json::array({1, 0, -1}));
  CHECK(parsed["fixed"]["main_theorem_count"] == 1);
  CHECK(parsed["fixed"]["components"][0]["fiber_count"] == "528");  // 2^4 (2^5+1)
}

TEST_CASE("tsv emission") {
  const auto ctx = GenusContext::make(8, DivCase::Div2);
  const auto bundle = build_report(ctx, SectionSet{.walls = true});
  const std::string tsv = emit_tsv(bundle);
  Int rows = -1;  // discount header
  for (char ch : tsv)
    if (ch == '\n') ++rows;
  CHECK(rows == 3);
  CHECK(tsv.substr(0, 2) == "c\t");
}

TEST_CASE("dot emission") {
  auto dashed_edges = [](const std::string& dot) {
    Int n = 0;
    std::size_t pos = 0;
    while ((pos = dot.find("style=dashed", pos)) != std::string::npos) {
      ++n;
      pos += 1;
    }
    return n;
  };

  const auto g4 = model_chain(GenusContext::make(4, DivCase::Div2));
  const std::string dot4 = emit_chain_dot(g4);
  CHECK(dashed_edges(dot4) == 2);
  CHECK(dot4.find("M_0_m1") != std::string::npos);
  CHECK(dot4.find("label=\"f_{0,-1}\"") != std::string::npos);
  CHECK(dot4.find("label=\"pi\"") != std::string::npos);
  CHECK(dot4.find("label=\"phi\"") != std::string::npos);

  const auto g8 = model_chain(GenusContext::make(8, DivCase::Div2));
  CHECK(dashed_edges(emit_chain_dot(g8)) == 3);

  const auto d1 = model_chain(GenusContext::make(6, DivCase::Div1));
  CHECK(dashed_edges(emit_chain_dot(d1)) == 0);

  // Byte stability.
  CHECK(emit_chain_dot(g4) == emit_chain_dot(model_chain(GenusContext::make(4, DivCase::Div2))));
}

TEST_CASE("strata section carries the b_k diagnostic in divisibility 2") {
  const auto ctx = GenusContext::make(8, DivCase::Div2);
  const auto bundle = build_report(ctx, SectionSet{.strata = true});
  REQUIRE(!bundle.diagnostics.empty());
  CHECK(bundle.diagnostics.front().find("b_k") != std::string::npos);
}

TEST_CASE("verify sweep passes") {
  const auto result = run_verify(32);
  for (const auto& f : result.failures) MESSAGE(f);
  CHECK(result.ok);
  CHECK(result.checks_run > 100);
}

TEST_CASE("verify fails when any single pinned value is perturbed") {
  const auto& table = pinned_table();
  REQUIRE(table.size() >= 15);
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto mutated = table;
    mutated[i].value += "_x";
    const auto result = run_verify(8, mutated);
    CHECK(!result.ok);
  }
}
