#pragma once

#include <optional>
#include <string>
#include <vector>

#include "birat/analysis.hpp"

namespace birat {

struct CorpusExpected {
  std::optional<bool> birational;
  std::optional<uint64_t> inverse_degree;
  std::optional<unsigned> relation_type;
  std::optional<size_t> analytic_spread;
  std::optional<bool> saturated;
  std::optional<bool> rees_cm;
  std::vector<int64_t> f_values; // checked when nonempty
};

struct CorpusEntry {
  std::string name;
  std::string field = "Q";
  std::vector<std::string> variables;
  std::vector<std::string> source_ideal;
  std::vector<std::string> forms;
  bool assume_three_proper_nonaligned = false;
  unsigned r_max = 3;
  bool with_f = true;
  bool with_x_reg = true;
  bool with_rees_cm = true;
  bool with_reduction = true;
  CorpusExpected expected;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry* corpus_find(const std::string& name);

RationalMapDescriptor corpus_descriptor(const CorpusEntry& e, const Config& cfg,
                                        std::optional<FieldSpec> field_override = {});
AnalyzeOptions corpus_options(const CorpusEntry& e, const Config& cfg);

} // namespace birat
