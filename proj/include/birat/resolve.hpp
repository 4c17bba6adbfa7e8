#pragma once

#include <map>

#include "birat/groebner.hpp"
#include "birat/matrix.hpp"
#include "birat/module.hpp"

namespace birat {

// Columns generate a submodule of the graded free module with the given row
// twists; every column must be homogeneous relative to them.
struct Presentation {
  CtxPtr ctx;
  std::vector<GDeg> row_degrees;
  PolyMatrix mat;
};

Presentation presentation_of_ideal(const std::vector<Polynomial>& gens);

struct ResStep {
  std::vector<GDeg> twists; // basis twists of F_i
  PolyMatrix mat;           // F_i -> F_{i-1} (i = 0: into the ambient free module)
};

// Free resolution of the image module: F_len -> ... -> F_0 -> M -> 0.
// steps[0].mat has the ambient rows; steps[i>=1].mat maps F_i into F_{i-1}.
struct FreeResolution {
  CtxPtr ctx;
  std::vector<GDeg> ambient_degrees;
  std::vector<ResStep> steps;
  size_t length() const { return steps.empty() ? 0 : steps.size() - 1; }
};

// Syzygies of the columns: matrix whose columns generate the kernel of the
// presentation map, homogeneous over the column degrees.
PolyMatrix syzygies(const Presentation& pres, const Config& cfg);

// Minimal graded free resolution computed level by level: minimal generators,
// then minimal generators of their syzygies, and so on. Matrices never carry
// unit entries.
FreeResolution minimal_free_resolution(const Presentation& pres, const Config& cfg);
FreeResolution resolve_ideal(const Ideal& I, const Config& cfg);

struct BettiTable {
  bool bigraded = false;
  std::map<std::pair<int64_t, std::pair<int64_t, int64_t>>, uint64_t> entries; // (i,(a,b)) -> beta

  uint64_t beta(int64_t i, int64_t j) const; // graded accessor (a = j, b = 0)
  std::string triangular() const;            // conventional text layout (graded only)
};

BettiTable betti_table(const FreeResolution& res); // NotMinimal if a unit entry exists
BettiTable bigraded_betti(const Presentation& pres, const Config& cfg);

int64_t regularity(const BettiTable& bt);           // max (total twist - i)
int64_t projective_dimension(const BettiTable& bt); // of the resolved module; -1 if empty
// depth of R/I via Auslander-Buchsbaum when the table resolves the ideal I
int64_t depth_of_quotient(const BettiTable& bt, size_t ambient_vars);

// Cancel unit entries by pivoting (lowest row, then column), keeping the
// complex exact. Used to minimize non-minimal complexes such as Taylor ones.
void minimize(FreeResolution& res);

bool resolution_is_minimal(const FreeResolution& res);

} // namespace birat
