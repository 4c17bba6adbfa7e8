#pragma once

#include <vector>

#include "birat/config.hpp"
#include "birat/poly.hpp"

namespace birat {

// Degree of a (bi)graded object: plain grading stores (d, 0); a ring with a
// block split grades by (x-degree, y-degree).
struct GDeg {
  int64_t a = 0;
  int64_t b = 0;
  int64_t total() const { return a + b; }
  GDeg operator+(const GDeg& o) const { return {a + o.a, b + o.b}; }
  bool operator==(const GDeg& o) const { return a == o.a && b == o.b; }
  bool operator<(const GDeg& o) const { return a != o.a ? a < o.a : b < o.b; }
};

GDeg gdeg_of_monomial(const Monomial& m, const RingContext& ctx);

struct ModTerm {
  uint32_t pos;
  Monomial mono;
  Scalar coeff;
};

// Free-module context: ring, order used on monomial parts, and row twists.
struct ModuleCtx {
  CtxPtr ring;
  MonomialOrder order;
  std::vector<GDeg> row_twists;
  size_t positions() const { return row_twists.size(); }
};

// Element of a free module; terms sorted descending (ring order on the
// monomial, smaller position wins ties).
class ModElement {
public:
  ModElement() = default;
  static ModElement from_terms(const ModuleCtx& mc, std::vector<ModTerm> terms);
  static ModElement unit(const ModuleCtx& mc, uint32_t pos, const Scalar& c);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<ModTerm>& terms() const { return terms_; }
  const ModTerm& lt() const;

  ModElement add(const ModElement& o, const ModuleCtx& mc) const;
  ModElement sub(const ModElement& o, const ModuleCtx& mc) const;
  ModElement scale(const Scalar& c) const;
  ModElement mul_term(const Monomial& m, const Scalar& c) const;
  ModElement neg() const;

  // the element as a vector of polynomials of length mc.positions()
  std::vector<Polynomial> to_vector(const ModuleCtx& mc) const;
  static ModElement from_vector(const ModuleCtx& mc, const std::vector<Polynomial>& v);

  // homogeneous degree relative to the row twists; NotHomogeneous otherwise
  GDeg degree(const ModuleCtx& mc) const;
  bool is_homogeneous(const ModuleCtx& mc) const;

  ModElement normalized_primitive(const FieldSpec& field) const;

  bool operator==(const ModElement& o) const;

private:
  std::vector<ModTerm> terms_;
};

// Module normal form against a list of elements (first reducer wins).
ModElement module_reduce(const ModElement& e, const std::vector<ModElement>& basis,
                         const ModuleCtx& mc);

// Generators of the syzygy module of `columns`, collected from S-pair
// reductions with cofactor tracking. Output elements live in R^k (k = number
// of columns) with row twists equal to the column degrees. `prune` switches
// the Gebauer-Moller lcm criteria (the product criterion is never used for
// modules; it is invalid there).
std::vector<ModElement> module_syzygies(const std::vector<ModElement>& columns,
                                        const ModuleCtx& mc, const Config& cfg,
                                        bool prune = true);

// Minimal generating set of the module generated by homogeneous `elements`
// (degree-ascending greedy selection, graded Nakayama).
std::vector<ModElement> module_minimal_generators(std::vector<ModElement> elements,
                                                  const ModuleCtx& mc, const Config& cfg);

// Membership of e in the submodule generated by gens.
bool module_member(const ModElement& e, const std::vector<ModElement>& gens,
                   const ModuleCtx& mc, const Config& cfg);

} // namespace birat
