#pragma once

#include "birat/groebner.hpp"

namespace birat {

// A representative of a rational map: forms of a common degree on the source,
// modulo its defining ideal.
struct RationalMapDescriptor {
  CtxPtr source_ctx;               // k[x_0..x_n]
  Ideal source_ideal;              // defining ideal of the source (may be zero)
  std::vector<Polynomial> forms;   // f_0..f_m, homogeneous of common degree
  uint64_t delta = 0;

  size_t nx() const { return source_ctx->nvars(); }
  size_t n() const { return nx() - 1; }  // source ambient projective dimension
  size_t m() const { return forms.size() - 1; }

  static RationalMapDescriptor make(CtxPtr source_ctx, Ideal source_ideal,
                                    std::vector<Polynomial> forms, const Config& cfg);
};

struct ReesPresentation {
  CtxPtr ambient;                        // k[X, Y] with the standard bigrading
  Ideal ideal;                           // the presentation ideal (with the source ideal inside)
  std::vector<std::pair<Polynomial, Bidegree>> min_gens;
  unsigned relation_type = 0;            // max y-degree among minimal generators
  std::vector<std::string> y_names;
};

// Presentation ideal of the Rees algebra by eliminating t from
// (Y_0 - f_0 t, ..., Y_m - f_m t, a). Deterministic output; every minimal
// generator is checked to vanish under Y_j -> f_j t.
ReesPresentation rees_ideal(const RationalMapDescriptor& F, const Config& cfg);

// Minimal generators of x-degree exactly one.
std::vector<Polynomial> x_linear_part(const ReesPresentation& P);

// Defining ideal of the image: kernel of k[Y] -> A, Y_j -> f_j.
Ideal special_fiber(const RationalMapDescriptor& F, const Config& cfg);
size_t analytic_spread(const RationalMapDescriptor& F, const Config& cfg);

struct ReductionCertificate {
  unsigned r = 0;                        // Monte-Carlo upper estimate
  std::vector<std::vector<Scalar>> combination; // the successful generic coefficients
  uint64_t seed = 0;
  unsigned trials = 0;
  bool monte_carlo = true;
};

// Monte-Carlo upper bound for the absolute reduction number: random l-generated
// subideals, smallest n with J I^n = I^(n+1). NoReductionFound past the cap.
ReductionCertificate reduction_number(const RationalMapDescriptor& F, const Config& cfg);

} // namespace birat
