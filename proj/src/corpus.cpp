#include "birat/corpus.hpp"

#include "birat/parse.hpp"

namespace birat {

namespace {

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> v;

  auto identity = [&](size_t n) {
    CorpusEntry e;
    e.name = "identity-n" + std::to_string(n);
    for (size_t i = 0; i <= n; ++i) e.variables.push_back("x" + std::to_string(i));
    e.forms = e.variables;
    e.expected.birational = true;
    e.expected.inverse_degree = 1;
    e.expected.relation_type = 1;
    e.expected.analytic_spread = n + 1;
    e.expected.rees_cm = true;
    // the irrelevant ideal saturates to the unit ideal
    e.expected.saturated = false;
    if (n >= 3) {
      e.with_f = false; // powers of the maximal ideal grow quickly
      e.with_x_reg = false;
    }
    return e;
  };
  v.push_back(identity(1));
  v.push_back(identity(2));
  v.push_back(identity(3));
  v.push_back(identity(4));

  {
    CorpusEntry e;
    e.name = "std-quadratic"; // plane quadratic involution
    e.variables = {"x", "y", "z"};
    e.forms = {"y*z", "x*z", "x*y"};
    e.assume_three_proper_nonaligned = true;
    e.expected.birational = true;
    e.expected.inverse_degree = 2;
    e.expected.relation_type = 1;
    e.expected.analytic_spread = 3;
    e.expected.saturated = true;
    e.expected.rees_cm = true;
    e.expected.f_values = {0, 0, 0};
    v.push_back(e);
  }
  {
    CorpusEntry e;
    e.name = "veronese"; // P^1 onto the conic
    e.variables = {"x", "y"};
    e.forms = {"x^2", "x*y", "y^2"};
    e.expected.birational = true;
    e.expected.inverse_degree = 1;
    e.expected.relation_type = 2;
    e.expected.analytic_spread = 2;
    // the square of the irrelevant ideal of P^1 saturates to the unit ideal
    e.expected.saturated = false;
    e.expected.rees_cm = true;
    e.expected.f_values = {0, 0, 0};
    v.push_back(e);
  }

  auto gabber = [&](size_t n, unsigned d) {
    // x0^d : x1 x0^(d-1) : x2 x0^(d-1) + x1^d : ... — inverse degree d^(n-1)
    CorpusEntry e;
    e.name = "gabber-n" + std::to_string(n) + "-d" + std::to_string(d);
    for (size_t i = 0; i <= n; ++i) e.variables.push_back("x" + std::to_string(i));
    e.forms.push_back("x0^" + std::to_string(d));
    e.forms.push_back("x1*x0^" + std::to_string(d - 1));
    for (size_t i = 2; i <= n; ++i) {
      e.forms.push_back("x" + std::to_string(i) + "*x0^" + std::to_string(d - 1) + " + x" +
                        std::to_string(i - 1) + "^" + std::to_string(d));
    }
    e.expected.birational = true;
    uint64_t invdeg = 1;
    for (size_t k = 1; k < n; ++k) invdeg *= d;
    e.expected.inverse_degree = invdeg;
    e.with_f = n == 2;     // the profile is only needed on the small family members
    e.with_x_reg = n == 2 && d == 2;
    e.with_rees_cm = n == 2;
    return e;
  };
  v.push_back(gabber(2, 2));
  v.push_back(gabber(2, 3));
  v.push_back(gabber(3, 2));
  v.push_back(gabber(3, 3));

  {
    CorpusEntry e;
    e.name = "terai"; // ten squarefree cubics on P^5, linearly presented
    e.variables = {"a", "b", "c", "d", "e", "f"};
    e.forms = {"a*b*c", "a*b*f", "a*c*e", "a*d*e", "a*d*f",
               "b*c*d", "b*d*e", "b*e*f", "c*d*f", "c*e*f"};
    e.r_max = 2;
    e.with_x_reg = false;   // the presentation ideal lives in 16 variables
    e.with_rees_cm = false;
    e.with_reduction = false;
    e.expected.birational = true;
    e.expected.analytic_spread = 6;
    e.expected.saturated = true;
    e.expected.f_values = {0, 1};
    v.push_back(e);
  }

  {
    CorpusEntry e;
    // Hilbert-Burch columns of degrees {1, 2}: (x q : y q : x b - y a) with
    // q = y^2 - x z, a = z y, b = x^2
    e.name = "cubic-dejonquieres";
    e.variables = {"x", "y", "z"};
    e.forms = {"x*y^2 - x^2*z", "y^3 - x*y*z", "x^3 - y^2*z"};
    e.assume_three_proper_nonaligned = true;
    e.expected.birational = true;
    e.expected.saturated = true;
    e.expected.rees_cm = true;
    v.push_back(e);
  }
  {
    CorpusEntry e;
    // same construction one degree up: q = y^4 - x^3 z, a = z y^3, b = x^4
    e.name = "quintic-dejonquieres";
    e.variables = {"x", "y", "z"};
    e.forms = {"x*y^4 - x^4*z", "y^5 - x^3*y*z", "x^5 - y^4*z"};
    e.assume_three_proper_nonaligned = true;
    e.expected.birational = true;
    e.expected.saturated = true;
    e.expected.rees_cm = false; // degree 5 forces a non-CM graph
    e.with_f = false;
    e.with_x_reg = false;
    v.push_back(e);
  }
  {
    CorpusEntry e;
    // composite of two general quadratic involutions; type (4; 2^3, 1^3)
    e.name = "quartic-nondj";
    e.variables = {"x", "y", "z"};
    e.forms = {"(y*z + 2*x*z + 4*x*y)*(y*z + 3*x*z + 9*x*y)",
               "(y*z + x*z + x*y)*(y*z + 3*x*z + 9*x*y)",
               "(y*z + x*z + x*y)*(y*z + 2*x*z + 4*x*y)"};
    e.assume_three_proper_nonaligned = true;
    e.expected.birational = true;
    e.expected.inverse_degree = 4;
    e.expected.saturated = true;
    e.expected.rees_cm = true;
    e.with_f = false;
    e.with_x_reg = false;
    v.push_back(e);
  }

  {
    CorpusEntry e;
    e.name = "nonbir-squares"; // 2:1 onto P^1
    e.variables = {"x", "y"};
    e.forms = {"x^2", "y^2"};
    e.expected.birational = false;
    e.expected.relation_type = 1;
    v.push_back(e);
  }
  {
    CorpusEntry e;
    e.name = "nonbir-cubics"; // degree 9 self-map, no linear part in the relations
    e.variables = {"x", "y", "z"};
    e.forms = {"x^3 + y^3", "y^3 + z^3", "x^3 + z^3"};
    e.expected.birational = false;
    e.with_f = false;
    e.with_x_reg = false;
    e.with_rees_cm = false;
    v.push_back(e);
  }
  return v;
}

} // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build_corpus();
  return entries;
}

const CorpusEntry* corpus_find(const std::string& name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

RationalMapDescriptor corpus_descriptor(const CorpusEntry& e, const Config& cfg,
                                        std::optional<FieldSpec> field_override) {
  FieldSpec field = FieldSpec::parse(e.field);
  if (field_override) field = *field_override;
  CtxPtr ctx = make_context(field, e.variables);
  std::vector<Polynomial> source;
  for (const auto& s : e.source_ideal) source.push_back(parse_polynomial(s, ctx));
  std::vector<Polynomial> forms;
  for (const auto& s : e.forms) forms.push_back(parse_polynomial(s, ctx));
  return RationalMapDescriptor::make(ctx, Ideal(ctx, source), forms, cfg);
}

AnalyzeOptions corpus_options(const CorpusEntry& e, const Config& cfg) {
  AnalyzeOptions o;
  o.cfg = cfg;
  o.r_max = e.r_max;
  o.with_f = e.with_f;
  o.with_x_reg = e.with_x_reg;
  o.with_rees_cm = e.with_rees_cm;
  o.with_reduction = e.with_reduction;
  o.assume_three_proper_nonaligned = e.assume_three_proper_nonaligned;
  return o;
}

} // namespace birat
