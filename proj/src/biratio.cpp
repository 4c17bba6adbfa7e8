#include "birat/biratio.hpp"

#include <algorithm>

#include "birat/gcdpoly.hpp"

namespace birat {

JacobianDual jacobian_dual(const RationalMapDescriptor& F, const ReesPresentation& P,
                           const Config& cfg) {
  auto rows = x_linear_part(P);
  require(!rows.empty(), ErrKind::EmptyLinearPart,
          "the presentation ideal has no generators of x-degree one");

  std::vector<size_t> xvars(F.nx());
  for (size_t i = 0; i < F.nx(); ++i) xvars[i] = i;
  PolyMatrix amb = jacobian(rows, xvars);

  JacobianDual jd;
  jd.fiber = special_fiber(F, cfg);
  jd.yctx = jd.fiber.ctx();
  jd.n = F.n();

  const GroebnerBasis& bgb = jd.fiber.gb(MonomialOrder::grevlex(), cfg);
  PolyMatrix psi(jd.yctx, MonomialOrder::grevlex(), amb.rows(), amb.cols());
  const size_t nx = F.nx();
  for (size_t i = 0; i < amb.rows(); ++i) {
    for (size_t j = 0; j < amb.cols(); ++j) {
      const Polynomial& e = amb.at(i, j);
      // x-linearity of the rows puts every partial in k[Y]
      std::vector<Term> ts;
      for (const auto& t : e.terms()) {
        for (size_t v = 0; v < nx; ++v)
          require(t.mono[v] == 0, ErrKind::Internal, "Jacobian dual entry involves x");
        std::vector<uint32_t> ye(t.mono.exponents().begin() + (long)nx,
                                 t.mono.exponents().end());
        ts.push_back({Monomial(std::move(ye)), t.coeff});
      }
      Polynomial y = Polynomial::from_terms(jd.yctx, MonomialOrder::grevlex(), std::move(ts));
      psi.set(i, j, normal_form(y, bgb));
    }
  }
  jd.psi = std::move(psi);
  return jd;
}

size_t rank_mod(const PolyMatrix& mat, const Ideal& b, const Config& cfg) {
  const GroebnerBasis& gb = b.gb(MonomialOrder::grevlex(), cfg);
  auto vanishes = [&](const Polynomial& p) { return normal_form(p, gb).is_zero(); };
  return rank_bareiss(mat, vanishes);
}

BirationalVerdict is_birational(const RationalMapDescriptor& F, const ReesPresentation& P,
                                const Config& cfg) {
  BirationalVerdict v;
  v.n = F.n();
  try {
    JacobianDual jd = jacobian_dual(F, P, cfg);
    v.rank = rank_mod(jd.psi, jd.fiber, cfg);
    v.birational = v.rank == v.n;
  } catch (const Error& e) {
    if (e.kind() != ErrKind::EmptyLinearPart) throw;
    v.empty_linear_part = true;
    v.birational = false;
  }
  return v;
}

namespace {

// lexicographically first rank-n row subset, found greedily (matroid exchange
// makes greedy = lex-first here)
std::vector<size_t> rank_n_rows(const PolyMatrix& psi, const Ideal& b, size_t n,
                                const Config& cfg) {
  std::vector<size_t> rows;
  std::vector<size_t> all_cols(psi.cols());
  for (size_t j = 0; j < psi.cols(); ++j) all_cols[j] = j;
  for (size_t r = 0; r < psi.rows() && rows.size() < n; ++r) {
    std::vector<size_t> probe = rows;
    probe.push_back(r);
    if (rank_mod(psi.select(probe, all_cols), b, cfg) == probe.size()) rows = probe;
  }
  return rows;
}

std::vector<Polynomial> normalize_vector(std::vector<Polynomial> v, const FieldSpec& field) {
  if (field.kind == FieldKind::PrimeField) {
    for (const auto& p : v) {
      if (!p.is_zero()) {
        Scalar s = p.lc().inverse();
        for (auto& q : v) q = q.scale(s);
        break;
      }
    }
    return v;
  }
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& p : v) {
    for (const auto& t : p.terms()) {
      const mpq_class& q = t.coeff.rational();
      den_lcm = den_lcm / gcd(den_lcm, q.get_den()) * q.get_den();
    }
  }
  for (const auto& p : v) {
    for (const auto& t : p.terms()) {
      const mpq_class& q = t.coeff.rational();
      num_gcd = gcd(num_gcd, q.get_num() * (den_lcm / q.get_den()));
    }
  }
  if (num_gcd == 0) return v;
  mpq_class f(den_lcm, num_gcd);
  f.canonicalize();
  for (const auto& p : v) {
    if (!p.is_zero()) {
      if (p.lc().rational() < 0) f = -f;
      break;
    }
  }
  Scalar s = Scalar::of_fraction(field, f.get_num(), f.get_den());
  for (auto& q : v) q = q.scale(s);
  return v;
}

} // namespace

InverseRepresentative inverse_representative(const RationalMapDescriptor& F,
                                             const ReesPresentation& P, const Config& cfg) {
  JacobianDual jd = jacobian_dual(F, P, cfg);
  const size_t n = jd.n;
  const size_t nx = F.nx();
  require(rank_mod(jd.psi, jd.fiber, cfg) == n, ErrKind::NoRankNSubmatrix,
          "inverse requested for a map the criterion rejects");

  std::vector<size_t> rows = rank_n_rows(jd.psi, jd.fiber, n, cfg);
  require(rows.size() == n, ErrKind::NoRankNSubmatrix,
          "no rank-n row selection despite a rank-n matrix");
  std::vector<size_t> all_cols(nx);
  for (size_t j = 0; j < nx; ++j) all_cols[j] = j;
  PolyMatrix sub = jd.psi.select(rows, all_cols); // n x (n+1)

  const GroebnerBasis& bgb = jd.fiber.gb(MonomialOrder::grevlex(), cfg);
  std::vector<Polynomial> minors;
  for (size_t j = 0; j < nx; ++j) {
    std::vector<size_t> cols;
    for (size_t k = 0; k < nx; ++k) {
      if (k != j) cols.push_back(k);
    }
    std::vector<size_t> rsel(n);
    for (size_t i = 0; i < n; ++i) rsel[i] = i;
    Polynomial d = det_bareiss(sub.select(rsel, cols));
    if (j % 2 == 1) d = d.neg();
    minors.push_back(normal_form(d, bgb));
  }

  InverseRepresentative inv;
  inv.upper_estimate = !jd.fiber.gens().empty();
  if (jd.fiber.gens().empty()) {
    Polynomial content = poly_gcd_list(minors);
    if (!content.is_zero() && !content.is_constant()) {
      for (auto& m : minors) {
        if (!m.is_zero()) m = divide_exact(m, content);
      }
    }
    inv.content_removed = true;
  }
  inv.forms = normalize_vector(std::move(minors), F.source_ctx->field);

  int64_t deg = -1;
  bool any = false;
  for (const auto& m : inv.forms) {
    if (m.is_zero()) continue;
    any = true;
    require(m.is_homogeneous(), ErrKind::Internal, "inverse form not homogeneous");
    if (deg < 0) deg = m.degree();
    require(m.degree() == deg, ErrKind::Internal, "inverse forms of unequal degree");
  }
  require(any, ErrKind::NoRankNSubmatrix, "all candidate minors vanish on the image");
  inv.degree = (uint64_t)deg;

  // null-space identity over the image ring (criterion item (i))
  auto image = jd.psi.apply(inv.forms);
  for (const auto& p : image) {
    require(normal_form(p, bgb).is_zero(), ErrKind::Internal,
            "inverse candidate is not in the null space of psi");
  }
  return inv;
}

std::vector<Polynomial> compose(const std::vector<Polynomial>& g_forms,
                                const RationalMapDescriptor& F, const Config& cfg) {
  require(!g_forms.empty(), ErrKind::LengthMismatch, "empty composite");
  const CtxPtr& yctx = g_forms[0].ctx();
  require(yctx->nvars() == F.forms.size(), ErrKind::LengthMismatch,
          "composite needs one Y variable per form of F");
  const GroebnerBasis* agb = nullptr;
  const GroebnerBasis& gb = F.source_ideal.gb(MonomialOrder::grevlex(), cfg);
  if (!F.source_ideal.gens().empty()) agb = &gb;
  std::vector<Polynomial> out;
  for (const auto& g : g_forms) {
    require(same_ctx(g.ctx(), yctx), ErrKind::ContextMismatch, "mixed composite rings");
    Polynomial c = g.substitute(F.forms);
    out.push_back(agb ? normal_form(c, *agb) : c);
  }
  return out;
}

bool verify_inverse(const RationalMapDescriptor& F, const std::vector<Polynomial>& g_forms,
                    const Config& cfg) {
  if (g_forms.size() != F.nx()) return false;
  auto c = compose(g_forms, F, cfg);
  bool nonzero = false;
  for (const auto& p : c) {
    if (!p.is_zero()) {
      nonzero = true;
      break;
    }
  }
  if (!nonzero) return false;
  const GroebnerBasis& agb = F.source_ideal.gb(MonomialOrder::grevlex(), cfg);
  MonomialOrder ord = MonomialOrder::grevlex();
  for (size_t i = 0; i < c.size(); ++i) {
    for (size_t j = i + 1; j < c.size(); ++j) {
      Polynomial xi = Polynomial::variable(F.source_ctx, ord, i);
      Polynomial xj = Polynomial::variable(F.source_ctx, ord, j);
      Polynomial cross = xi * c[j].resorted(ord) - xj * c[i].resorted(ord);
      if (!normal_form(cross, agb).is_zero()) return false;
    }
  }
  return true;
}

} // namespace birat
