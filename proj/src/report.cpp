#include "birat/report.hpp"

#include <json.hpp>

#include "birat/parse.hpp"

namespace birat {

using json = nlohmann::ordered_json;

std::string report_to_json(const AnalysisReport& r, int indent) {
  json j;
  j["map"] = {{"field", r.field.str()},
              {"variables", r.variables},
              {"source_ideal", r.source_ideal_text},
              {"forms", r.forms_text}};
  j["seed"] = r.seed;
  j["birational"] = r.verdict.birational;
  j["criterion"] = {{"rank", r.verdict.rank},
                    {"n", r.verdict.n},
                    {"empty_linear_part", r.verdict.empty_linear_part}};
  if (r.inverse) {
    std::vector<std::string> forms;
    for (const auto& f : r.inverse->forms) forms.push_back(f.str());
    j["inverse"] = {{"forms", forms},
                    {"degree", r.inverse->degree},
                    {"content_removed", r.inverse->content_removed},
                    {"upper_estimate", r.inverse->upper_estimate}};
  } else {
    j["inverse"] = nullptr;
  }
  json inv;
  inv["delta"] = r.delta;
  inv["relation_type"] = r.relation_type;
  inv["analytic_spread"] = r.spread;
  inv["dim_X"] = r.dim_x;
  inv["d0"] = r.d0;
  if (r.reduction) {
    json combos = json::array();
    for (const auto& row : r.reduction->combination) {
      json rr = json::array();
      for (const auto& c : row) rr.push_back(c.str());
      combos.push_back(rr);
    }
    inv["reduction_number"] = {{"estimate", r.reduction->r},
                               {"upper_estimate", true},
                               {"monte_carlo", r.reduction->monte_carlo},
                               {"trials", r.reduction->trials},
                               {"seed", r.reduction->seed},
                               {"combination", combos}};
  } else {
    inv["reduction_number"] = nullptr;
  }
  if (r.profile) {
    inv["reg_powers"] = r.profile->reg;
    inv["f_values"] = r.profile->f;
    inv["b1"] = r.profile->b1;
  } else {
    inv["reg_powers"] = nullptr;
    inv["f_values"] = nullptr;
  }
  inv["x_regularity"] = r.x_reg ? json(*r.x_reg) : json(nullptr);
  inv["saturated"] = r.saturated ? json(*r.saturated) : json(nullptr);
  inv["rees_cm"] = r.rees_cm ? json(*r.rees_cm) : json(nullptr);
  j["invariants"] = inv;
  if (r.plane) {
    j["plane_classification"] = {{"degree", r.plane->degree},
                                 {"saturated", r.plane->a_saturated},
                                 {"rees_cm", r.plane->a_rees_cm},
                                 {"a_holds", r.plane->a_holds},
                                 {"de_jonquieres", r.plane->de_jonquieres},
                                 {"b_holds", r.plane->b_holds},
                                 {"agrees", r.plane->agrees},
                                 {"paper_discrepancy", r.plane->paper_discrepancy}};
  } else {
    j["plane_classification"] = nullptr;
  }
  json ledger = json::array();
  for (const auto& e : r.ledger) {
    ledger.push_back({{"id", e.id}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"status", e.status}});
  }
  j["ledger"] = ledger;
  return j.dump(indent) + "\n";
}

std::string rees_to_json(const ReesPresentation& P, int indent) {
  json j;
  j["ambient_variables"] = P.ambient->variables;
  std::vector<std::string> gens;
  json bidegs = json::array();
  for (const auto& [g, bd] : P.min_gens) {
    gens.push_back(g.str());
    bidegs.push_back({bd.x, bd.y});
  }
  j["generators"] = gens;
  j["bidegrees"] = bidegs;
  j["relation_type"] = P.relation_type;
  return j.dump(indent) + "\n";
}

std::string betti_to_json(const BettiTable& bt, int indent) {
  json j;
  j["bigraded"] = bt.bigraded;
  json entries = json::array();
  for (const auto& [k, v] : bt.entries) {
    json e;
    e["i"] = k.first;
    if (bt.bigraded) {
      e["j"] = {k.second.first, k.second.second};
    } else {
      e["j"] = k.second.first;
    }
    e["beta"] = v;
    entries.push_back(e);
  }
  j["entries"] = entries;
  return j.dump(indent) + "\n";
}

RationalMapDescriptor descriptor_from_json(const std::string& json_text, const Config& cfg,
                                           std::optional<FieldSpec> field_override) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& e) {
    fail(ErrKind::SyntaxError, std::string("bad map file: ") + e.what());
  }
  require(j.contains("field") && j.contains("variables") && j.contains("forms"),
          ErrKind::SyntaxError, "map file needs field, variables and forms");
  FieldSpec field = FieldSpec::parse(j["field"].get<std::string>());
  if (field_override) field = *field_override;
  std::vector<std::string> vars = j["variables"].get<std::vector<std::string>>();
  CtxPtr ctx = make_context(field, vars);
  std::vector<Polynomial> source;
  if (j.contains("source_ideal") && !j["source_ideal"].is_null()) {
    for (const auto& s : j["source_ideal"]) {
      source.push_back(parse_polynomial(s.get<std::string>(), ctx));
    }
  }
  std::vector<Polynomial> forms;
  for (const auto& s : j["forms"]) {
    forms.push_back(parse_polynomial(s.get<std::string>(), ctx));
  }
  return RationalMapDescriptor::make(ctx, Ideal(ctx, source), forms, cfg);
}

} // namespace birat
