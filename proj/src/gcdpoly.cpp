#include "birat/gcdpoly.hpp"

#include <algorithm>

namespace birat {

namespace {

int64_t degree_in(const Polynomial& p, size_t var) {
  int64_t d = -1;
  for (const auto& t : p.terms()) d = std::max<int64_t>(d, t.mono[var]);
  return d;
}

// coefficient of var^k viewed as a polynomial in the remaining variables
Polynomial coeff_of(const Polynomial& p, size_t var, uint32_t k) {
  std::vector<Term> ts;
  for (const auto& t : p.terms()) {
    if (t.mono[var] != k) continue;
    std::vector<uint32_t> e = t.mono.exponents();
    e[var] = 0;
    ts.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(p.ctx(), p.order(), std::move(ts));
}

Polynomial lead_coeff_in(const Polynomial& p, size_t var) {
  return coeff_of(p, var, (uint32_t)degree_in(p, var));
}

// exact pseudo-remainder: lc(g)^(deg f - deg g + 1) f modulo g in the
// variable var; the fixed scaling keeps the subresultant divisors exact
Polynomial prem(const Polynomial& f, const Polynomial& g, size_t var) {
  int64_t dg = degree_in(g, var);
  Polynomial lg = lead_coeff_in(g, var);
  Polynomial r = f;
  int64_t e = degree_in(f, var) - dg + 1;
  while (!r.is_zero() && degree_in(r, var) >= dg) {
    int64_t dr = degree_in(r, var);
    Polynomial lr = lead_coeff_in(r, var);
    Polynomial shift = Polynomial::monomial(
        f.ctx(), f.order(), Monomial::var(f.ctx()->nvars(), var, (uint32_t)(dr - dg)),
        Scalar::one(f.ctx()->field));
    r = r * lg - g * shift * lr;
    --e;
  }
  for (; e > 0; --e) r = r * lg;
  return r;
}

Polynomial gcd_rec(Polynomial f, Polynomial g, size_t limit_var);

Polynomial content_in(const Polynomial& p, size_t var) {
  Polynomial c = Polynomial::zero(p.ctx(), p.order());
  for (int64_t k = 0; k <= degree_in(p, var); ++k) {
    Polynomial ck = coeff_of(p, var, (uint32_t)k);
    if (ck.is_zero()) continue;
    c = c.is_zero() ? ck : gcd_rec(c, ck, var);
    if (c.is_constant()) break;
  }
  return c;
}

// gcd by the subresultant pseudo-remainder sequence on the largest occurring
// variable, recursing into the coefficient ring for contents
Polynomial gcd_rec(Polynomial f, Polynomial g, size_t limit_var) {
  const CtxPtr& ctx = f.ctx();
  if (f.is_zero()) return g.normalized_primitive();
  if (g.is_zero()) return f.normalized_primitive();
  if (f.is_constant() || g.is_constant())
    return Polynomial::constant(ctx, f.order(), Scalar::one(ctx->field));

  size_t var = limit_var;
  while (true) {
    if (degree_in(f, var) > 0 || degree_in(g, var) > 0) break;
    require(var > 0, ErrKind::Internal, "gcd recursion ran out of variables");
    --var;
  }
  if (degree_in(f, var) == 0) return gcd_rec(f, content_in(g, var), var);
  if (degree_in(g, var) == 0) return gcd_rec(content_in(f, var), g, var);

  Polynomial cf = content_in(f, var);
  Polynomial cg = content_in(g, var);
  Polynomial c = gcd_rec(cf, cg, var);
  Polynomial fp = divide_exact(f, cf);
  Polynomial gp = divide_exact(g, cg);
  if (degree_in(fp, var) < degree_in(gp, var)) std::swap(fp, gp);

  Polynomial one = Polynomial::constant(ctx, f.order(), Scalar::one(ctx->field));
  Polynomial gg = one, h = one;
  while (true) {
    int64_t d = degree_in(fp, var) - degree_in(gp, var);
    Polynomial r = prem(fp, gp, var);
    if (r.is_zero()) {
      Polynomial pp = divide_exact(gp, content_in(gp, var));
      return (c * pp).normalized_primitive();
    }
    if (degree_in(r, var) == 0) {
      return c.normalized_primitive();
    }
    fp = gp;
    // subresultant divisor g h^d is exact in r
    Polynomial div = gg;
    for (int64_t k = 0; k < d; ++k) div = div * h;
    gp = divide_exact(r, div);
    gg = lead_coeff_in(fp, var);
    if (d >= 1) {
      Polynomial num = gg;
      for (int64_t k = 1; k < d; ++k) num = num * gg;
      Polynomial den = one;
      for (int64_t k = 1; k < d; ++k) den = den * h;
      h = divide_exact(num, den);
    }
  }
}

} // namespace

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
  require(same_ctx(f.ctx(), g.ctx()), ErrKind::ContextMismatch, "gcd in different rings");
  Polynomial a = f.resorted(MonomialOrder::grevlex());
  Polynomial b = g.resorted(MonomialOrder::grevlex());
  return gcd_rec(a, b, f.ctx()->nvars() - 1);
}

Polynomial poly_gcd_list(const std::vector<Polynomial>& polys) {
  Polynomial acc;
  bool started = false;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    if (!started) {
      acc = p.normalized_primitive();
      started = true;
    } else {
      acc = poly_gcd(acc, p);
    }
    if (started && acc.is_constant()) break;
  }
  if (!started && !polys.empty())
    return Polynomial::zero(polys[0].ctx(), polys[0].order());
  return acc;
}

} // namespace birat
