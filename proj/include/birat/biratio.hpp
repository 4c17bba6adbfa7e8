#pragma once

#include "birat/matrix.hpp"
#include "birat/rees.hpp"

namespace birat {

// Jacobian matrix of the x-linear part of the Rees ideal, with entries taken
// in the coordinate ring of the image.
struct JacobianDual {
  CtxPtr yctx;      // k[Y]
  Ideal fiber;      // defining ideal of the image
  PolyMatrix psi;   // rows: x-linear generators; columns: source variables
  size_t n = 0;     // source ambient projective dimension
};

JacobianDual jacobian_dual(const RationalMapDescriptor& F, const ReesPresentation& P,
                           const Config& cfg); // EmptyLinearPart if no (1,q) generators

// Rank over the domain k[Y]/b via fraction-free elimination with zero tests
// against a Groebner basis of b.
size_t rank_mod(const PolyMatrix& mat, const Ideal& b, const Config& cfg);

struct BirationalVerdict {
  bool birational = false;
  size_t rank = 0;
  size_t n = 0;
  bool empty_linear_part = false; // criterion could not run; reported, not fatal
};

BirationalVerdict is_birational(const RationalMapDescriptor& F, const ReesPresentation& P,
                                const Config& cfg);

struct InverseRepresentative {
  std::vector<Polynomial> forms; // in k[Y], one per source variable
  uint64_t degree = 0;
  bool content_removed = false;  // content division applies only over k[Y] itself
  bool upper_estimate = false;   // over a proper image the degree may exceed the minimum
};

// Signed maximal minors of a rank-n row selection of psi, reduced modulo the
// image ideal; the null-space identity psi . forms = 0 is always verified.
InverseRepresentative inverse_representative(const RationalMapDescriptor& F,
                                             const ReesPresentation& P, const Config& cfg);

// Substitute Y_j -> f_j into forms over k[Y] and reduce modulo the source ideal.
std::vector<Polynomial> compose(const std::vector<Polynomial>& g_forms,
                                const RationalMapDescriptor& F, const Config& cfg);

// True when the composite tuple is proportional to (x_0..x_n) modulo the
// source ideal: all cross products x_i g_j - x_j g_i vanish and the tuple is
// nonzero on the source.
bool verify_inverse(const RationalMapDescriptor& F, const std::vector<Polynomial>& g_forms,
                    const Config& cfg);

} // namespace birat
