#pragma once

#include <optional>

#include "birat/biratio.hpp"
#include "birat/resolve.hpp"

namespace birat {

// The ideal generated by all the variables of the ring.
Ideal irrelevant_ideal(const CtxPtr& ctx);

bool is_saturated(const Ideal& I, const Config& cfg);

// codim of the ideal (ambient variables minus the quotient dimension)
size_t codimension(const Ideal& I, const Config& cfg);

// Cohen-Macaulayness of the Rees algebra over a polynomial source ring,
// via projective dimension = codimension of the presentation ideal.
bool rees_is_cm(const RationalMapDescriptor& F, const ReesPresentation& P, const Config& cfg);

// Saturation statement for Cremona maps with CM graph:
// saturate(I, A+) == (I : A+^(n-2)).
bool saturation_colon_check(const RationalMapDescriptor& F, const Config& cfg);

struct RegularityProfile {
  std::vector<int64_t> reg; // Reg(I^r), r = 1..r_max
  std::vector<int64_t> f;   // Reg(I^r) - r*delta
  int64_t b1 = -1;          // largest first-syzygy twist of I itself
};

RegularityProfile f_function(const RationalMapDescriptor& F, unsigned r_max, const Config& cfg);

// x-regularity of the Rees algebra read from the bigraded Betti numbers of
// the presentation ideal: max over steps of (x-twist - homological index),
// shifted to the quotient convention.
int64_t x_regularity(const ReesPresentation& P, const Config& cfg);

// Exact evaluation (rounded up to an integer) of the doubly exponential
// Groebner-degree bound 2n [ delta^(2(n+m+1-dimX)^2) / 2 + delta ]^(2^(dimX+2)),
// delta = max(d+1, d0).
mpz_class mayr_ritscher_bound(uint64_t n, uint64_t m, uint64_t dim_x, uint64_t d, uint64_t d0);

struct Grade2Certificate {
  Polynomial h;
  std::vector<Polynomial> minors;      // signed maximal minors, h*f_i = minor_i
  std::vector<size_t> columns;         // chosen syzygy columns
  std::vector<Polynomial> generators;  // the minimal generators certified
};

// Rank-m submatrix of the syzygy matrix whose signed minors are h*(f_i).
Grade2Certificate grade2_check(const Ideal& I, const Config& cfg);

// First-syzygy matrix of a saturated codimension-2 perfect ideal; its signed
// maximal minors regenerate the ideal (asserted).
PolyMatrix hilbert_burch(const Ideal& I, const Config& cfg);

// Hilbert-Burch column degrees equal {1, d-1}.
bool dejonquieres_test(const Ideal& I, const Config& cfg);

struct PlaneClassification {
  bool a_saturated = false;
  bool a_rees_cm = false;
  bool a_holds = false;
  bool de_jonquieres = false;
  bool b_holds = false;
  uint64_t degree = 0;
  bool agrees = false;
  bool paper_discrepancy = false; // disagreement under the base-point assumption
};

PlaneClassification plane_classification(const RationalMapDescriptor& F,
                                         bool assume_three_proper_nonaligned,
                                         const Config& cfg);

// Lattice-index test for monomial maps: exponent differences have Smith form
// with unit divisors and rank n exactly when the map is birational onto the
// image.
bool monomial_birationality_oracle(const RationalMapDescriptor& F);

struct BoundLedgerEntry {
  std::string id;     // MR, B2, B21, B22, CRE_N2, RELTYPE_REG, GRADE2_DELTA, GRADE2_B1, SAT_COLON
  std::string lhs;
  std::string rhs;
  std::string status; // pass | fail | not-applicable
};

struct AnalyzeOptions {
  Config cfg;
  unsigned r_max = 3;
  bool with_f = true;
  bool with_saturated = true;
  bool with_rees_cm = true;
  bool with_x_reg = true;
  bool with_reduction = true;
  bool assume_three_proper_nonaligned = false;
  static AnalyzeOptions tuned_for(size_t ambient_vars, const Config& cfg);
};

struct AnalysisReport {
  // map echo
  FieldSpec field;
  std::vector<std::string> variables;
  std::vector<std::string> source_ideal_text;
  std::vector<std::string> forms_text;
  uint64_t seed = 0;

  BirationalVerdict verdict;
  std::optional<InverseRepresentative> inverse;

  uint64_t delta = 0;
  unsigned relation_type = 0;
  size_t dim_x = 0;
  uint64_t d0 = 0;
  size_t spread = 0;
  std::optional<ReductionCertificate> reduction;
  std::optional<RegularityProfile> profile;
  std::optional<int64_t> x_reg;
  std::optional<bool> saturated;
  std::optional<bool> rees_cm;
  std::optional<PlaneClassification> plane; // plane Cremona maps only

  std::vector<BoundLedgerEntry> ledger;
};

AnalysisReport analyze(const RationalMapDescriptor& F, const AnalyzeOptions& opts);

std::vector<BoundLedgerEntry> bound_ledger(const RationalMapDescriptor& F,
                                           const AnalysisReport& parts, const Config& cfg);

} // namespace birat
