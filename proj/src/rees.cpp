#include "birat/rees.hpp"

#include <algorithm>

namespace birat {

RationalMapDescriptor RationalMapDescriptor::make(CtxPtr source_ctx, Ideal source_ideal,
                                                  std::vector<Polynomial> forms,
                                                  const Config& cfg) {
  require(forms.size() >= 2, ErrKind::LengthMismatch, "a rational map needs at least two forms");
  RationalMapDescriptor F;
  F.source_ctx = source_ctx;
  F.source_ideal = source_ideal;
  int64_t d = -1;
  for (auto& f : forms) {
    require(same_ctx(f.ctx(), source_ctx), ErrKind::ContextMismatch,
            "form from a different ring");
    require(!f.is_zero(), ErrKind::ContextMismatch, "zero form in a representative");
    require(f.is_homogeneous(), ErrKind::NotHomogeneous, "forms must be homogeneous");
    if (d < 0) d = f.degree();
    require(f.degree() == d, ErrKind::ContextMismatch, "forms of unequal degrees");
    F.forms.push_back(f.resorted(MonomialOrder::grevlex()));
  }
  F.delta = (uint64_t)d;
  bool some_outside = false;
  for (const auto& f : F.forms) {
    if (!source_ideal.contains(f, cfg)) {
      some_outside = true;
      break;
    }
  }
  require(some_outside, ErrKind::ContextMismatch, "all forms vanish on the source");
  F.source_ideal = source_ideal;
  return F;
}

namespace {

std::vector<std::string> default_y_names(const RationalMapDescriptor& F) {
  std::vector<std::string> names;
  for (size_t j = 0; j <= F.m(); ++j) {
    std::string n = "Y" + std::to_string(j);
    require(!F.source_ctx->var_index(n), ErrKind::ContextMismatch,
            "source variable collides with target name '" + n + "'");
    names.push_back(n);
  }
  return names;
}

} // namespace

ReesPresentation rees_ideal(const RationalMapDescriptor& F, const Config& cfg) {
  const size_t nx = F.nx();
  const size_t nf = F.forms.size();
  auto ynames = default_y_names(F);

  CtxPtr ambient = extend_context(F.source_ctx, ynames, nx);
  std::string tname = "t_";
  while (ambient->var_index(tname)) tname += "_";
  std::vector<std::string> big_vars = ambient->variables;
  big_vars.push_back(tname);
  CtxPtr big = make_context(F.source_ctx->field, big_vars);
  const size_t ti = big->nvars() - 1;

  std::vector<size_t> src_map(nx);
  for (size_t i = 0; i < nx; ++i) src_map[i] = i;

  MonomialOrder elim = MonomialOrder::block_elim({ti}, big->nvars());
  std::vector<Polynomial> gens;
  for (const auto& a : F.source_ideal.gens())
    gens.push_back(map_to_context(a, big, src_map, elim));
  Polynomial t = Polynomial::variable(big, elim, ti);
  for (size_t j = 0; j < nf; ++j) {
    Polynomial yj = Polynomial::variable(big, elim, nx + j);
    gens.push_back(yj - map_to_context(F.forms[j], big, src_map, elim) * t);
  }

  GroebnerBasis gb = buchberger(gens, elim, cfg);
  std::vector<Polynomial> down;
  std::vector<size_t> amb_map(ambient->nvars());
  for (size_t i = 0; i < ambient->nvars(); ++i) amb_map[i] = i;
  for (const auto& g : gb.elements) {
    bool has_t = false;
    for (const auto& term : g.terms()) {
      if (term.mono[ti]) {
        has_t = true;
        break;
      }
    }
    if (has_t) continue;
    std::vector<Term> ts;
    for (const auto& term : g.terms()) {
      std::vector<uint32_t> e(term.mono.exponents().begin(), term.mono.exponents().end() - 1);
      ts.push_back({Monomial(std::move(e)), term.coeff});
    }
    down.push_back(Polynomial::from_terms(ambient, MonomialOrder::grevlex(), std::move(ts)));
  }

  ReesPresentation P;
  P.ambient = ambient;
  P.y_names = ynames;
  P.ideal = Ideal(ambient, down);
  auto mins = minimal_generators(down, cfg);
  unsigned reltype = 0;
  for (const auto& g : mins) {
    Bidegree bd = bidegree_of(g);
    if (bd.y >= 1) reltype = std::max<unsigned>(reltype, (unsigned)bd.y);
    P.min_gens.push_back({g, bd});
  }
  std::sort(P.min_gens.begin(), P.min_gens.end(), [](const auto& a, const auto& b) {
    uint64_t ta = a.second.x + a.second.y, tb = b.second.x + b.second.y;
    if (ta != tb) return ta < tb;
    if (a.second.y != b.second.y) return a.second.y < b.second.y;
    return a.first.str() < b.first.str();
  });
  P.relation_type = reltype;

  // defining property: every minimal generator vanishes under Y_j -> f_j t
  {
    std::vector<Polynomial> images;
    MonomialOrder ord = MonomialOrder::grevlex();
    for (size_t i = 0; i < nx; ++i) images.push_back(Polynomial::variable(big, ord, i));
    Polynomial tb = Polynomial::variable(big, ord, ti);
    for (size_t j = 0; j < nf; ++j)
      images.push_back(map_to_context(F.forms[j], big, src_map, ord) * tb);
    std::vector<Polynomial> amod;
    for (const auto& a : F.source_ideal.gens())
      amod.push_back(map_to_context(a, big, src_map, ord));
    Ideal lifted(big, amod);
    for (const auto& [g, bd] : P.min_gens) {
      Polynomial sub = g.substitute(images);
      require(lifted.contains(sub, cfg), ErrKind::Internal,
              "Rees generator fails the substitution check");
    }
  }
  return P;
}

std::vector<Polynomial> x_linear_part(const ReesPresentation& P) {
  std::vector<Polynomial> out;
  for (const auto& [g, bd] : P.min_gens) {
    // bidegree (1,0) would be a linear form of the source ideal, not a relation
    if (bd.x == 1 && bd.y >= 1) out.push_back(g);
  }
  return out;
}

Ideal special_fiber(const RationalMapDescriptor& F, const Config& cfg) {
  auto ynames = default_y_names(F);
  return kernel_of_map(F.forms, F.source_ideal, ynames, cfg);
}

size_t analytic_spread(const RationalMapDescriptor& F, const Config& cfg) {
  Ideal b = special_fiber(F, cfg);
  if (b.gens().empty()) return b.ctx()->nvars();
  return krull_dimension(b, cfg);
}

ReductionCertificate reduction_number(const RationalMapDescriptor& F, const Config& cfg) {
  const FieldSpec field = F.source_ctx->field;
  require(field.kind == FieldKind::Rationals || field.characteristic > 3,
          ErrKind::UnsupportedSource, "reduction numbers need a large coefficient field");
  size_t ell = analytic_spread(F, cfg);
  Rng rng(cfg.seed);

  Ideal I(F.source_ctx, F.forms);
  Ideal amb = F.source_ideal;
  auto with_a = [&](const Ideal& J) { return amb.gens().empty() ? J : ideal_sum(J, amb); };

  std::vector<Ideal> powers; // powers[k] = I^(k+1)
  powers.push_back(I);
  auto power = [&](unsigned k) -> const Ideal& {
    while (powers.size() < k) powers.push_back(ideal_product(powers.back(), I));
    return powers[k - 1];
  };

  auto random_scalar = [&]() {
    if (field.kind == FieldKind::Rationals) {
      int64_t b = cfg.coeff_bound;
      int64_t v = rng.in_range(-b, b - 1);
      if (v >= 0) ++v; // skip zero
      return Scalar::of_int(field, v);
    }
    return Scalar::of_int(field, (long)(1 + rng.below(field.characteristic - 1)));
  };

  ReductionCertificate best;
  bool found = false;
  for (unsigned trial = 0; trial < cfg.reduction_trials; ++trial) {
    std::vector<std::vector<Scalar>> combo;
    std::vector<Polynomial> jgens;
    for (size_t i = 0; i < ell; ++i) {
      std::vector<Scalar> coeffs;
      Polynomial g = Polynomial::zero(F.source_ctx, MonomialOrder::grevlex());
      for (const auto& f : F.forms) {
        Scalar c = random_scalar();
        coeffs.push_back(c);
        g = g + f.scale(c);
      }
      combo.push_back(std::move(coeffs));
      if (!g.is_zero()) jgens.push_back(g);
    }
    Ideal J(F.source_ctx, jgens);
    for (unsigned nn = 0; nn <= cfg.reduction_cap; ++nn) {
      Ideal lhs = nn == 0 ? J : ideal_product(J, power(nn));
      const Ideal& rhs = power(nn + 1);
      if (ideal_equal(with_a(lhs), with_a(rhs), cfg)) {
        if (!found || nn < best.r) {
          best.r = nn;
          best.combination = combo;
        }
        found = true;
        break;
      }
    }
    if (found && best.r == 0) break; // cannot improve
  }
  require(found, ErrKind::NoReductionFound,
          "no reduction found with n <= " + std::to_string(cfg.reduction_cap));
  best.seed = cfg.seed;
  best.trials = cfg.reduction_trials;
  best.monte_carlo = true;
  return best;
}

} // namespace birat
