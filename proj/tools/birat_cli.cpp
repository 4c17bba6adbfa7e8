// birat: birationality analysis for rational maps between projective varieties.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "birat/corpus.hpp"
#include "birat/report.hpp"

using namespace birat;

namespace {

struct CommonArgs {
  std::string map_source;
  unsigned r_max = 3;
  unsigned trials = 3;
  uint64_t budget = 2'000'000;
  uint64_t seed = 42;
  unsigned jobs = 1;
  std::string field_override;
  bool assume_three = false;
  std::string x_reg_mode = "auto";
  std::string rees_cm_mode = "auto";
};

Config config_of(const CommonArgs& a) {
  Config cfg;
  cfg.pair_budget = a.budget;
  cfg.r_max = a.r_max;
  cfg.reduction_trials = a.trials;
  cfg.seed = a.seed;
  return cfg;
}

std::optional<FieldSpec> override_of(const CommonArgs& a) {
  if (a.field_override.empty()) return std::nullopt;
  return FieldSpec::parse(a.field_override);
}

struct LoadedMap {
  RationalMapDescriptor F;
  AnalyzeOptions opts;
};

LoadedMap load_map(const CommonArgs& a) {
  Config cfg = config_of(a);
  if (a.map_source.rfind("corpus:", 0) == 0) {
    std::string name = a.map_source.substr(7);
    const CorpusEntry* e = corpus_find(name);
    if (!e) fail(ErrKind::SyntaxError, "unknown corpus entry '" + name + "'");
    AnalyzeOptions opts = corpus_options(*e, cfg);
    opts.r_max = a.r_max != 3 ? a.r_max : opts.r_max;
    if (a.assume_three) opts.assume_three_proper_nonaligned = true;
    LoadedMap lm{corpus_descriptor(*e, cfg, override_of(a)), opts};
    return lm;
  }
  std::ifstream in(a.map_source);
  if (!in) fail(ErrKind::SyntaxError, "cannot open map file '" + a.map_source + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  RationalMapDescriptor F = descriptor_from_json(buf.str(), cfg, override_of(a));
  AnalyzeOptions opts = AnalyzeOptions::tuned_for(F.nx() + F.forms.size(), cfg);
  opts.r_max = a.r_max;
  opts.assume_three_proper_nonaligned = a.assume_three;
  return LoadedMap{std::move(F), opts};
}

void apply_mode(AnalyzeOptions& opts, const std::string& x_reg, const std::string& rees_cm) {
  if (x_reg == "on") opts.with_x_reg = true;
  if (x_reg == "off") opts.with_x_reg = false;
  if (rees_cm == "on") opts.with_rees_cm = true;
  if (rees_cm == "off") opts.with_rees_cm = false;
}

void add_common(CLI::App* cmd, CommonArgs& a, bool need_map = true) {
  if (need_map)
    cmd->add_option("map", a.map_source, "path to a map JSON file or corpus:<name>")->required();
  cmd->add_option("--r-max,--r_max", a.r_max, "largest power in the regularity profile");
  cmd->add_option("--trials", a.trials, "Monte-Carlo trials for reduction numbers");
  cmd->add_option("--budget", a.budget, "S-pair budget before ResourceLimit");
  cmd->add_option("--seed", a.seed, "seed for randomized procedures");
  cmd->add_option("--jobs", a.jobs, "parallel corpus analyses (corpus-all only)");
  cmd->add_option("--field-override", a.field_override, "compute over Q or Fp:<prime> instead");
  cmd->add_flag("--assume-three-proper-nonaligned", a.assume_three,
                "assert the base-point hypothesis of the plane classification");
  cmd->add_option("--x-reg", a.x_reg_mode, "x-regularity: auto|on|off")
      ->check(CLI::IsMember({"auto", "on", "off"}));
  cmd->add_option("--rees-cm", a.rees_cm_mode, "Rees Cohen-Macaulayness: auto|on|off")
      ->check(CLI::IsMember({"auto", "on", "off"}));
}

int run_analyze(const CommonArgs& a) {
  LoadedMap lm = load_map(a);
  apply_mode(lm.opts, a.x_reg_mode, a.rees_cm_mode);
  AnalysisReport r = analyze(lm.F, lm.opts);
  std::cout << report_to_json(r);
  return 0;
}

int run_inverse(const CommonArgs& a) {
  LoadedMap lm = load_map(a);
  Config cfg = config_of(a);
  ReesPresentation P = rees_ideal(lm.F, cfg);
  BirationalVerdict v = is_birational(lm.F, P, cfg);
  nlohmann::ordered_json j;
  j["birational"] = v.birational;
  j["rank"] = v.rank;
  j["n"] = v.n;
  j["empty_linear_part"] = v.empty_linear_part;
  if (v.birational) {
    InverseRepresentative inv = inverse_representative(lm.F, P, cfg);
    std::vector<std::string> forms;
    for (const auto& f : inv.forms) forms.push_back(f.str());
    j["inverse"] = {{"forms", forms},
                    {"degree", inv.degree},
                    {"content_removed", inv.content_removed},
                    {"upper_estimate", inv.upper_estimate}};
    j["verified"] = verify_inverse(lm.F, inv.forms, cfg);
  } else {
    j["inverse"] = nullptr;
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_rees(const CommonArgs& a) {
  LoadedMap lm = load_map(a);
  Config cfg = config_of(a);
  std::cout << rees_to_json(rees_ideal(lm.F, cfg));
  return 0;
}

int run_betti(const CommonArgs& a, unsigned power, bool text) {
  LoadedMap lm = load_map(a);
  Config cfg = config_of(a);
  Ideal I(lm.F.source_ctx, lm.F.forms);
  Ideal Ir = ideal_power(I, power);
  auto mins = minimal_generators(Ir.gens(), cfg);
  BettiTable bt = betti_table(minimal_free_resolution(presentation_of_ideal(mins), cfg));
  if (text) {
    std::cout << bt.triangular();
  } else {
    std::cout << betti_to_json(bt);
  }
  return 0;
}

int run_bounds(const CommonArgs& a) {
  LoadedMap lm = load_map(a);
  apply_mode(lm.opts, a.x_reg_mode, a.rees_cm_mode);
  AnalysisReport r = analyze(lm.F, lm.opts);
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& e : r.ledger) {
    j.push_back({{"id", e.id}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"status", e.status}});
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_oracle(const CommonArgs& a) {
  LoadedMap lm = load_map(a);
  bool b = monomial_birationality_oracle(lm.F);
  nlohmann::ordered_json j;
  j["oracle_birational"] = b;
  std::cout << j.dump(2) << "\n";
  return 0;
}

// analyze every built-in corpus entry; --jobs > 1 runs entries concurrently
int run_corpus(const CommonArgs& a) {
  Config cfg = config_of(a);
  const auto& entries = corpus();
  std::vector<std::string> out(entries.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= entries.size()) return;
      const auto& e = entries[i];
      try {
        auto F = corpus_descriptor(e, cfg, override_of(a));
        AnalysisReport r = analyze(F, corpus_options(e, cfg));
        nlohmann::ordered_json j;
        j["name"] = e.name;
        j["report"] = nlohmann::ordered_json::parse(report_to_json(r, -1));
        out[i] = j.dump();
      } catch (const std::exception& ex) {
        nlohmann::ordered_json j;
        j["name"] = e.name;
        j["error"] = ex.what();
        out[i] = j.dump();
      }
    }
  };
  unsigned jobs = std::max(1u, a.jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::cout << "[\n";
  for (size_t i = 0; i < out.size(); ++i)
    std::cout << "  " << out[i] << (i + 1 < out.size() ? "," : "") << "\n";
  std::cout << "]\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"analysis of birational maps between projectively embedded varieties"};
  app.require_subcommand(1);

  CommonArgs a_analyze, a_inverse, a_rees, a_betti, a_bounds, a_oracle, a_corpus;
  unsigned betti_power = 1;
  bool betti_text = false;

  add_common(app.add_subcommand("analyze", "full pipeline: Rees, criterion, invariants, ledger"),
             a_analyze);
  add_common(app.add_subcommand("inverse", "birationality verdict and inverse representative"),
             a_inverse);
  add_common(app.add_subcommand("rees", "Rees presentation ideal and relation type"), a_rees);
  auto* cb = app.add_subcommand("betti", "Betti table of a power of the base ideal");
  add_common(cb, a_betti);
  cb->add_option("--power", betti_power, "which power of the base ideal");
  cb->add_flag("--text", betti_text, "print the triangular layout instead of JSON");
  add_common(app.add_subcommand("bounds", "the bound ledger only"), a_bounds);
  add_common(app.add_subcommand("oracle", "lattice-index oracle for monomial maps"), a_oracle);
  add_common(app.add_subcommand("corpus", "analyze every built-in corpus entry"), a_corpus,
             false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("analyze")) return run_analyze(a_analyze);
    if (app.got_subcommand("inverse")) return run_inverse(a_inverse);
    if (app.got_subcommand("rees")) return run_rees(a_rees);
    if (app.got_subcommand("betti")) return run_betti(a_betti, betti_power, betti_text);
    if (app.got_subcommand("bounds")) return run_bounds(a_bounds);
    if (app.got_subcommand("oracle")) return run_oracle(a_oracle);
    if (app.got_subcommand("corpus")) return run_corpus(a_corpus);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == ErrKind::ResourceLimit ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
