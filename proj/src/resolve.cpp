#include "birat/resolve.hpp"

#include <algorithm>
#include <sstream>

namespace birat {

Presentation presentation_of_ideal(const std::vector<Polynomial>& gens) {
  require(!gens.empty(), ErrKind::LengthMismatch, "empty generator list");
  const CtxPtr& ctx = gens[0].ctx();
  PolyMatrix m(ctx, MonomialOrder::grevlex(), 1, gens.size());
  for (size_t j = 0; j < gens.size(); ++j) m.set(0, j, gens[j]);
  return Presentation{ctx, {GDeg{0, 0}}, std::move(m)};
}

namespace {

std::vector<ModElement> columns_of(const Presentation& pres, const ModuleCtx& mc) {
  std::vector<ModElement> cols;
  cols.reserve(pres.mat.cols());
  for (size_t j = 0; j < pres.mat.cols(); ++j) {
    std::vector<Polynomial> v;
    v.reserve(pres.mat.rows());
    for (size_t i = 0; i < pres.mat.rows(); ++i) v.push_back(pres.mat.at(i, j));
    cols.push_back(ModElement::from_vector(mc, v));
  }
  return cols;
}

PolyMatrix matrix_of(const std::vector<ModElement>& cols, const ModuleCtx& mc) {
  PolyMatrix m(mc.ring, mc.order, mc.positions(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    auto v = cols[j].to_vector(mc);
    for (size_t i = 0; i < v.size(); ++i) m.set(i, j, std::move(v[i]));
  }
  return m;
}

void check_columns_homogeneous(const std::vector<ModElement>& cols, const ModuleCtx& mc) {
  for (const auto& c : cols) {
    bool bi = mc.ring->block_split.has_value();
    require(c.is_homogeneous(mc), bi ? ErrKind::NotBihomogeneous : ErrKind::NotHomogeneous,
            "presentation column is not homogeneous");
  }
}

bool is_unit_poly(const Polynomial& p) {
  return !p.is_zero() && p.nterms() == 1 && p.lm().is_one();
}

} // namespace

PolyMatrix syzygies(const Presentation& pres, const Config& cfg) {
  ModuleCtx mc{pres.ctx, MonomialOrder::grevlex(), pres.row_degrees};
  auto cols = columns_of(pres, mc);
  check_columns_homogeneous(cols, mc);
  auto syz = module_syzygies(cols, mc, cfg);
  std::vector<GDeg> coldegs;
  for (const auto& c : cols)
    coldegs.push_back(c.is_zero() ? GDeg{0, 0} : c.degree(mc));
  ModuleCtx out_mc{pres.ctx, MonomialOrder::grevlex(), coldegs};
  // deterministic presentation: sort by degree then leading data
  std::sort(syz.begin(), syz.end(), [&](const ModElement& x, const ModElement& y) {
    GDeg dx = x.degree(out_mc), dy = y.degree(out_mc);
    if (!(dx == dy)) return dx.total() != dy.total() ? dx.total() < dy.total() : dx < dy;
    if (x.lt().pos != y.lt().pos) return x.lt().pos < y.lt().pos;
    return out_mc.order.compare(x.lt().mono, y.lt().mono) > 0;
  });
  return matrix_of(syz, out_mc);
}

FreeResolution minimal_free_resolution(const Presentation& pres, const Config& cfg) {
  FreeResolution res;
  res.ctx = pres.ctx;
  res.ambient_degrees = pres.row_degrees;

  ModuleCtx mc{pres.ctx, MonomialOrder::grevlex(), pres.row_degrees};
  auto cols = columns_of(pres, mc);
  check_columns_homogeneous(cols, mc);
  auto gens = module_minimal_generators(cols, mc, cfg);
  if (gens.empty()) return res; // zero module: empty resolution

  std::vector<GDeg> twists;
  for (const auto& g : gens) twists.push_back(g.degree(mc));
  res.steps.push_back(ResStep{twists, matrix_of(gens, mc)});

  size_t nvars = pres.ctx->nvars();
  std::vector<ModElement> current = std::move(gens);
  ModuleCtx cur_mc = mc;
  for (size_t level = 1; level <= nvars + 1; ++level) {
    auto syz = module_syzygies(current, cur_mc, cfg);
    ModuleCtx syz_mc{pres.ctx, MonomialOrder::grevlex(), res.steps.back().twists};
    auto syz_min = module_minimal_generators(syz, syz_mc, cfg);
    if (syz_min.empty()) break;
    std::vector<GDeg> t;
    for (const auto& s : syz_min) t.push_back(s.degree(syz_mc));
    res.steps.push_back(ResStep{t, matrix_of(syz_min, syz_mc)});
    current = std::move(syz_min);
    cur_mc = syz_mc;
    require(res.length() <= nvars, ErrKind::Internal,
            "resolution longer than the Hilbert syzygy bound");
  }

  // composition of consecutive matrices must vanish
  for (size_t l = 1; l < res.steps.size(); ++l) {
    const PolyMatrix& A = res.steps[l - 1].mat;
    const PolyMatrix& B = res.steps[l].mat;
    for (size_t j = 0; j < B.cols(); ++j) {
      std::vector<Polynomial> col;
      for (size_t i = 0; i < B.rows(); ++i) col.push_back(B.at(i, j));
      auto image = A.apply(col);
      for (const auto& p : image)
        require(p.is_zero(), ErrKind::Internal, "resolution does not compose to zero");
    }
  }
  return res;
}

FreeResolution resolve_ideal(const Ideal& I, const Config& cfg) {
  if (I.gens().empty()) {
    FreeResolution res;
    res.ctx = I.ctx();
    res.ambient_degrees = {GDeg{0, 0}};
    return res;
  }
  return minimal_free_resolution(presentation_of_ideal(I.gens()), cfg);
}

bool resolution_is_minimal(const FreeResolution& res) {
  for (size_t l = 1; l < res.steps.size(); ++l) {
    const PolyMatrix& m = res.steps[l].mat;
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j)
        if (is_unit_poly(m.at(i, j))) return false;
  }
  return true;
}

uint64_t BettiTable::beta(int64_t i, int64_t j) const {
  auto it = entries.find({i, {j, 0}});
  uint64_t v = it == entries.end() ? 0 : it->second;
  if (!bigraded) return v;
  // sum over all (a,b) with a+b == j
  uint64_t s = 0;
  for (const auto& [k, c] : entries) {
    if (k.first == i && k.second.first + k.second.second == j) s += c;
  }
  return s;
}

std::string BettiTable::triangular() const {
  if (entries.empty()) return "(empty Betti table)\n";
  int64_t imax = 0, dmin = 0, dmax = 0;
  bool first = true;
  for (const auto& [k, c] : entries) {
    int64_t i = k.first, d = k.second.first + k.second.second - i;
    imax = std::max(imax, i);
    if (first) {
      dmin = dmax = d;
      first = false;
    } else {
      dmin = std::min(dmin, d);
      dmax = std::max(dmax, d);
    }
  }
  std::ostringstream os;
  os << "      ";
  for (int64_t i = 0; i <= imax; ++i) os << i << "\t";
  os << "\n";
  for (int64_t d = dmin; d <= dmax; ++d) {
    os << d << ":    ";
    for (int64_t i = 0; i <= imax; ++i) {
      uint64_t v = 0;
      for (const auto& [k, c] : entries) {
        if (k.first == i && k.second.first + k.second.second == d + i) v += c;
      }
      if (v) {
        os << v << "\t";
      } else {
        os << ".\t";
      }
    }
    os << "\n";
  }
  return os.str();
}

BettiTable betti_table(const FreeResolution& res) {
  require(resolution_is_minimal(res), ErrKind::NotMinimal,
          "Betti numbers need a minimal resolution");
  BettiTable bt;
  bt.bigraded = res.ctx && res.ctx->block_split.has_value();
  for (size_t l = 0; l < res.steps.size(); ++l) {
    for (const auto& t : res.steps[l].twists) {
      bt.entries[{(int64_t)l, {t.a, t.b}}] += 1;
    }
  }
  return bt;
}

BettiTable bigraded_betti(const Presentation& pres, const Config& cfg) {
  require(pres.ctx->block_split.has_value(), ErrKind::NotBihomogeneous,
          "bigraded Betti numbers need a ring with a block split");
  return betti_table(minimal_free_resolution(pres, cfg));
}

int64_t regularity(const BettiTable& bt) {
  int64_t r = INT64_MIN;
  for (const auto& [k, c] : bt.entries) {
    if (c) r = std::max(r, k.second.first + k.second.second - k.first);
  }
  return r;
}

int64_t projective_dimension(const BettiTable& bt) {
  int64_t p = -1;
  for (const auto& [k, c] : bt.entries) {
    if (c) p = std::max(p, k.first);
  }
  return p;
}

int64_t depth_of_quotient(const BettiTable& bt, size_t ambient_vars) {
  // resolving the ideal: pd(R/I) = pd(I) + 1 (0 for the zero ideal)
  int64_t pd_quot = projective_dimension(bt) + 1;
  return (int64_t)ambient_vars - pd_quot;
}

void minimize(FreeResolution& res) {
  auto drop_row = [](PolyMatrix& m, size_t row) {
    PolyMatrix out(m.ctx(), m.order(), m.rows() - 1, m.cols());
    for (size_t i = 0, oi = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      for (size_t j = 0; j < m.cols(); ++j) out.set(oi, j, m.at(i, j));
      ++oi;
    }
    m = std::move(out);
  };
  auto drop_col = [](PolyMatrix& m, size_t col) {
    PolyMatrix out(m.ctx(), m.order(), m.rows(), m.cols() - 1);
    for (size_t i = 0; i < m.rows(); ++i) {
      for (size_t j = 0, oj = 0; j < m.cols(); ++j) {
        if (j == col) continue;
        out.set(i, oj++, m.at(i, j));
      }
    }
    m = std::move(out);
  };

  bool found = true;
  while (found) {
    found = false;
    for (size_t l = 1; l < res.steps.size() && !found; ++l) {
      PolyMatrix& d = res.steps[l].mat;
      for (size_t r = 0; r < d.rows() && !found; ++r) {
        for (size_t c = 0; c < d.cols() && !found; ++c) {
          if (!is_unit_poly(d.at(r, c))) continue;
          found = true;
          Polynomial pivot = d.at(r, c);
          Scalar pv = pivot.lc();
          // clear row r by column operations (basis change in F_l),
          // mirrored as row operations on the next matrix
          for (size_t j = 0; j < d.cols(); ++j) {
            if (j == c || d.at(r, j).is_zero()) continue;
            Polynomial f = d.at(r, j).scale(pv.inverse());
            for (size_t i = 0; i < d.rows(); ++i) {
              d.set(i, j, d.at(i, j) - d.at(i, c) * f);
            }
            if (l + 1 < res.steps.size()) {
              PolyMatrix& e = res.steps[l + 1].mat;
              for (size_t k = 0; k < e.cols(); ++k) {
                e.set(c, k, e.at(c, k) + f * e.at(j, k));
              }
            }
          }
          // clear column c by row operations (basis change in F_{l-1});
          // the matching column of the previous matrix is dropped below
          for (size_t i = 0; i < d.rows(); ++i) {
            if (i == r || d.at(i, c).is_zero()) continue;
            Polynomial f = d.at(i, c).scale(pv.inverse());
            for (size_t j = 0; j < d.cols(); ++j) {
              d.set(i, j, d.at(i, j) - f * d.at(r, j));
            }
          }
          // split off the trivial pair (e_c of F_l, e_r of F_{l-1})
          if (l + 1 < res.steps.size()) {
            PolyMatrix& e = res.steps[l + 1].mat;
            for (size_t k = 0; k < e.cols(); ++k)
              require(e.at(c, k).is_zero(), ErrKind::Internal, "minimization broke exactness");
            drop_row(e, c);
          }
          // the matching column of the previous matrix is zero after the
          // basis change and is simply dropped
          drop_col(res.steps[l - 1].mat, r);
          drop_row(d, r);
          drop_col(d, c);
          res.steps[l].twists.erase(res.steps[l].twists.begin() + (long)c);
          res.steps[l - 1].twists.erase(res.steps[l - 1].twists.begin() + (long)r);
        }
      }
    }
    // drop empty trailing steps
    while (!res.steps.empty() && res.steps.back().twists.empty()) res.steps.pop_back();
  }
  if (!res.steps.empty() && res.steps.front().twists.empty()) res.steps.clear();
  for (size_t l = 1; l < res.steps.size(); ++l) {
    const PolyMatrix& A = res.steps[l - 1].mat;
    const PolyMatrix& B = res.steps[l].mat;
    for (size_t j = 0; j < B.cols(); ++j) {
      std::vector<Polynomial> col;
      for (size_t i = 0; i < B.rows(); ++i) col.push_back(B.at(i, j));
      for (const auto& p : A.apply(col))
        require(p.is_zero(), ErrKind::Internal, "minimized complex lost exactness");
    }
  }
}

} // namespace birat
