#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "birat/corpus.hpp"
#include "birat/report.hpp"

using namespace birat;

namespace {
const Config cfg;
}

TEST_CASE("corpus names are present and well formed") {
  for (const char* name :
       {"identity-n1", "identity-n2", "identity-n3", "identity-n4", "std-quadratic", "veronese",
        "gabber-n2-d2", "gabber-n2-d3", "gabber-n3-d2", "gabber-n3-d3", "terai",
        "cubic-dejonquieres", "quintic-dejonquieres", "quartic-nondj", "nonbir-squares",
        "nonbir-cubics"}) {
    const CorpusEntry* e = corpus_find(name);
    REQUIRE(e != nullptr);
    CHECK_NOTHROW(corpus_descriptor(*e, cfg));
  }
  CHECK(corpus_find("no-such-map") == nullptr);
}

// every expected field of every corpus entry must match the computed report;
// this is the regression suite
TEST_CASE("corpus expectations match computed reports") {
  for (const auto& e : corpus()) {
    INFO("entry ", e.name);
    auto F = corpus_descriptor(e, cfg);
    AnalysisReport r = analyze(F, corpus_options(e, cfg));
    if (e.expected.birational) CHECK(r.verdict.birational == *e.expected.birational);
    if (e.expected.inverse_degree) {
      REQUIRE(r.inverse.has_value());
      CHECK(r.inverse->degree == *e.expected.inverse_degree);
    }
    if (e.expected.relation_type) CHECK(r.relation_type == *e.expected.relation_type);
    if (e.expected.analytic_spread) CHECK(r.spread == *e.expected.analytic_spread);
    if (e.expected.saturated) {
      REQUIRE(r.saturated.has_value());
      CHECK(*r.saturated == *e.expected.saturated);
    }
    if (e.expected.rees_cm) {
      REQUIRE(r.rees_cm.has_value());
      CHECK(*r.rees_cm == *e.expected.rees_cm);
    }
    if (!e.expected.f_values.empty()) {
      REQUIRE(r.profile.has_value());
      CHECK(r.profile->f == e.expected.f_values);
    }
    // no applicable bound may fail on corpus maps
    for (const auto& entry : r.ledger) {
      INFO("ledger ", entry.id, " lhs=", entry.lhs, " rhs=", entry.rhs);
      CHECK(entry.status != "fail");
    }
    // under the asserted base-point hypothesis the two classification sides
    // must agree on every instance
    if (r.plane) {
      CHECK(!r.plane->paper_discrepancy);
      if (e.assume_three_proper_nonaligned) CHECK(r.plane->agrees);
    }
  }
}

TEST_CASE("reports are byte-identical across repeated runs") {
  const CorpusEntry* e = corpus_find("std-quadratic");
  auto F1 = corpus_descriptor(*e, cfg);
  auto F2 = corpus_descriptor(*e, cfg);
  std::string a = report_to_json(analyze(F1, corpus_options(*e, cfg)));
  std::string b = report_to_json(analyze(F2, corpus_options(*e, cfg)));
  CHECK(a == b);
  CHECK(a.find("\"birational\": true") != std::string::npos);
  CHECK(a.find("\"seed\": 42") != std::string::npos);
}

TEST_CASE("map files parse into descriptors") {
  std::string text = R"({
    "field": "Q",
    "variables": ["x", "y", "z"],
    "source_ideal": [],
    "forms": ["y*z", "x*z", "x*y"]
  })";
  RationalMapDescriptor F = descriptor_from_json(text, cfg);
  CHECK(F.delta == 2);
  CHECK(F.n() == 2);
  CHECK(F.m() == 2);

  RationalMapDescriptor Fp = descriptor_from_json(text, cfg, FieldSpec::prime_field(32003));
  CHECK(Fp.source_ctx->field.characteristic == 32003);

  CHECK_THROWS_AS(descriptor_from_json("{", cfg), Error);
  CHECK_THROWS_AS(descriptor_from_json(R"({"field": "Q"})", cfg), Error);
  std::string bad = R"({"field": "Q", "variables": ["x"], "forms": ["x", "q"]})";
  CHECK_THROWS_AS(descriptor_from_json(bad, cfg), Error);
}

TEST_CASE("rees and betti serializations") {
  const CorpusEntry* e = corpus_find("veronese");
  auto F = corpus_descriptor(*e, cfg);
  ReesPresentation P = rees_ideal(F, cfg);
  std::string rj = rees_to_json(P);
  CHECK(rj.find("\"relation_type\": 2") != std::string::npos);

  auto mins = minimal_generators(Ideal(F.source_ctx, F.forms).gens(), cfg);
  BettiTable bt = betti_table(minimal_free_resolution(presentation_of_ideal(mins), cfg));
  std::string bj = betti_to_json(bt);
  CHECK(bj.find("\"beta\": 3") != std::string::npos);
  CHECK(bt.triangular().find("3") != std::string::npos);
}

TEST_CASE("field override reproduces the terai checks over Fp") {
  const CorpusEntry* e = corpus_find("terai");
  auto F = corpus_descriptor(*e, cfg, FieldSpec::prime_field(32003));
  CHECK(analytic_spread(F, cfg) == 6);
  ReesPresentation P = rees_ideal(F, cfg);
  CHECK(is_birational(F, P, cfg).birational);
}
