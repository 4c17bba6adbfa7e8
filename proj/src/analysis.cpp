#include "birat/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "birat/snf.hpp"

namespace birat {

Ideal irrelevant_ideal(const CtxPtr& ctx) {
  std::vector<Polynomial> vars;
  for (size_t i = 0; i < ctx->nvars(); ++i)
    vars.push_back(Polynomial::variable(ctx, MonomialOrder::grevlex(), i));
  return Ideal(ctx, std::move(vars));
}

bool is_saturated(const Ideal& I, const Config& cfg) {
  auto [sat, e] = saturate(I, irrelevant_ideal(I.ctx()), cfg);
  (void)e;
  return ideal_equal(I, sat, cfg);
}

size_t codimension(const Ideal& I, const Config& cfg) {
  return I.ctx()->nvars() - krull_dimension(I, cfg);
}

bool rees_is_cm(const RationalMapDescriptor& F, const ReesPresentation& P, const Config& cfg) {
  require(F.source_ideal.gens().empty(), ErrKind::UnsupportedSource,
          "Rees Cohen-Macaulayness is computed over a polynomial source ring only");
  size_t codim = codimension(P.ideal, cfg);
  std::vector<Polynomial> gens;
  for (const auto& [g, bd] : P.min_gens) gens.push_back(g);
  FreeResolution res = minimal_free_resolution(presentation_of_ideal(gens), cfg);
  int64_t pd_quotient = projective_dimension(betti_table(res)) + 1;
  return pd_quotient == (int64_t)codim;
}

bool saturation_colon_check(const RationalMapDescriptor& F, const Config& cfg) {
  Ideal I(F.source_ctx, F.forms);
  Ideal aplus = irrelevant_ideal(F.source_ctx);
  size_t n = F.n();
  require(n >= 2, ErrKind::ContextMismatch, "colon check needs n >= 2");
  Ideal lhs = saturate(I, aplus, cfg).first;
  Ideal rhs = colon(I, ideal_power(aplus, (unsigned)(n - 2)), cfg);
  return ideal_equal(lhs, rhs, cfg);
}

RegularityProfile f_function(const RationalMapDescriptor& F, unsigned r_max, const Config& cfg) {
  require(F.source_ideal.gens().empty(), ErrKind::UnsupportedSource,
          "regularity profile is computed over a polynomial source ring only");
  require(r_max >= 1, ErrKind::LengthMismatch, "r_max must be at least 1");
  RegularityProfile out;
  Ideal I(F.source_ctx, F.forms);
  Ideal power = I;
  for (unsigned r = 1; r <= r_max; ++r) {
    if (r > 1) power = ideal_product(power, I);
    auto mins = minimal_generators(power.gens(), cfg);
    FreeResolution res = minimal_free_resolution(presentation_of_ideal(mins), cfg);
    BettiTable bt = betti_table(res);
    int64_t reg = regularity(bt);
    out.reg.push_back(reg);
    out.f.push_back(reg - (int64_t)(r * F.delta));
    if (r == 1) {
      int64_t b1 = -1;
      if (res.steps.size() > 1) {
        for (const auto& t : res.steps[1].twists) b1 = std::max(b1, t.total());
      }
      out.b1 = b1;
    }
  }
  return out;
}

int64_t x_regularity(const ReesPresentation& P, const Config& cfg) {
  std::vector<Polynomial> gens;
  for (const auto& [g, bd] : P.min_gens) gens.push_back(g);
  if (gens.empty()) return 0;
  FreeResolution res = minimal_free_resolution(presentation_of_ideal(gens), cfg);
  // steps of the quotient ring are the ideal's steps shifted by one
  int64_t best = 0;
  for (size_t l = 0; l < res.steps.size(); ++l) {
    for (const auto& t : res.steps[l].twists) {
      best = std::max(best, t.a - (int64_t)(l + 1));
    }
  }
  return best;
}

mpz_class mayr_ritscher_bound(uint64_t n, uint64_t m, uint64_t dim_x, uint64_t d, uint64_t d0) {
  require(n >= 1 && m >= 1 && d >= 1, ErrKind::LengthMismatch, "bound needs n, m, d >= 1");
  require(dim_x <= n + m + 1 && dim_x + 2 < 63, ErrKind::LengthMismatch,
          "dimension out of range for the bound");
  mpz_class delta = std::max<uint64_t>(d + 1, d0);
  uint64_t inner_exp = 2 * (n + m + 1 - dim_x) * (n + m + 1 - dim_x);
  mpz_class delta_pow;
  mpz_pow_ui(delta_pow.get_mpz_t(), delta.get_mpz_t(), (unsigned long)inner_exp);
  mpq_class inner = mpq_class(delta_pow, 2) + mpq_class(delta);
  inner.canonicalize();
  uint64_t outer_exp = 1ull << (dim_x + 2);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), inner.get_num().get_mpz_t(), (unsigned long)outer_exp);
  mpz_pow_ui(den.get_mpz_t(), inner.get_den().get_mpz_t(), (unsigned long)outer_exp);
  num *= 2 * n;
  // round up: the bound stays a bound
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) q += 1;
  return q;
}

Grade2Certificate grade2_check(const Ideal& I, const Config& cfg) {
  require(!I.gens().empty(), ErrKind::GradeTooSmall, "zero ideal has grade 0");
  require(codimension(I, cfg) >= 2, ErrKind::GradeTooSmall,
          "grade < 2: the certificate needs codimension at least 2");
  auto gens = minimal_generators(I.gens(), cfg);
  size_t m = gens.size() - 1;
  require(m >= 1, ErrKind::GradeTooSmall, "principal ideals have no rank-m submatrix");
  PolyMatrix syz = syzygies(presentation_of_ideal(gens), cfg);
  require(syz.cols() >= m, ErrKind::NoFullRankSubmatrix, "fewer syzygies than expected");

  auto plain_rank = [&](const PolyMatrix& mm) {
    return rank_bareiss(mm, [](const Polynomial&) { return false; });
  };
  std::vector<size_t> all_rows(syz.rows());
  for (size_t i = 0; i < syz.rows(); ++i) all_rows[i] = i;
  std::vector<size_t> cols;
  for (size_t c = 0; c < syz.cols() && cols.size() < m; ++c) {
    std::vector<size_t> probe = cols;
    probe.push_back(c);
    if (plain_rank(syz.select(all_rows, probe)) == probe.size()) cols = probe;
  }
  require(cols.size() == m, ErrKind::NoFullRankSubmatrix,
          "syzygy matrix has rank below m despite grade >= 2");

  PolyMatrix sub = syz.select(all_rows, cols); // (m+1) x m
  std::vector<Polynomial> minors;
  for (size_t i = 0; i <= m; ++i) {
    std::vector<size_t> rsel;
    for (size_t k = 0; k <= m; ++k) {
      if (k != i) rsel.push_back(k);
    }
    std::vector<size_t> csel(m);
    for (size_t k = 0; k < m; ++k) csel[k] = k;
    Polynomial d = det_bareiss(sub.select(rsel, csel));
    if (i % 2 == 1) d = d.neg();
    minors.push_back(d);
  }

  size_t i0 = minors.size();
  for (size_t i = 0; i < minors.size(); ++i) {
    if (!minors[i].is_zero()) {
      i0 = i;
      break;
    }
  }
  require(i0 < minors.size(), ErrKind::NoFullRankSubmatrix, "all maximal minors vanish");
  Polynomial h = divide_exact(minors[i0], gens[i0]);
  for (size_t i = 0; i < minors.size(); ++i) {
    require(h * gens[i] == minors[i], ErrKind::Internal,
            "h f_i = minor_i fails; syzygy matrix is inconsistent");
  }
  return Grade2Certificate{h, minors, cols, gens};
}

PolyMatrix hilbert_burch(const Ideal& I, const Config& cfg) {
  require(is_saturated(I, cfg), ErrKind::NotSaturated, "Hilbert-Burch needs a saturated ideal");
  require(codimension(I, cfg) == 2, ErrKind::WrongCodimension,
          "Hilbert-Burch needs codimension 2");
  auto gens = minimal_generators(I.gens(), cfg);
  FreeResolution res = minimal_free_resolution(presentation_of_ideal(gens), cfg);
  require(res.length() == 1, ErrKind::WrongCodimension,
          "quotient is not Cohen-Macaulay of projective dimension 2");
  const PolyMatrix& hb = res.steps[1].mat; // (m+1) x m
  require(hb.rows() == hb.cols() + 1, ErrKind::Internal, "unexpected Hilbert-Burch shape");

  // the signed maximal minors regenerate the ideal
  size_t m = hb.cols();
  std::vector<Polynomial> minors;
  for (size_t i = 0; i <= m; ++i) {
    std::vector<size_t> rsel;
    for (size_t k = 0; k <= m; ++k) {
      if (k != i) rsel.push_back(k);
    }
    std::vector<size_t> csel(m);
    for (size_t k = 0; k < m; ++k) csel[k] = k;
    Polynomial d = det_bareiss(hb.select(rsel, csel));
    if (i % 2 == 1) d = d.neg();
    minors.push_back(d);
  }
  require(ideal_equal(Ideal(I.ctx(), minors), I, cfg), ErrKind::Internal,
          "Hilbert-Burch minors do not regenerate the ideal");
  return hb;
}

bool dejonquieres_test(const Ideal& I, const Config& cfg) {
  Ideal sat = saturate(I, irrelevant_ideal(I.ctx()), cfg).first;
  if (sat.is_unit(cfg)) return false; // empty base locus
  if (codimension(sat, cfg) != 2) return false;
  auto gens = minimal_generators(sat.gens(), cfg);
  int64_t d = -1;
  for (const auto& g : gens) {
    if (d < 0) d = g.degree();
    if (g.degree() != d) return false; // not equigenerated
  }
  FreeResolution res = minimal_free_resolution(presentation_of_ideal(gens), cfg);
  if (res.length() != 1) return false; // not codim-2 CM
  std::vector<int64_t> coldegs;
  for (const auto& t : res.steps[1].twists) coldegs.push_back(t.total() - d);
  std::sort(coldegs.begin(), coldegs.end());
  return coldegs == std::vector<int64_t>{1, d - 1};
}

PlaneClassification plane_classification(const RationalMapDescriptor& F,
                                         bool assume_three_proper_nonaligned,
                                         const Config& cfg) {
  require(F.n() == 2 && F.m() == 2 && F.source_ideal.gens().empty(),
          ErrKind::UnsupportedSource, "plane classification needs a map P^2 -> P^2");
  ReesPresentation P = rees_ideal(F, cfg);
  BirationalVerdict v = is_birational(F, P, cfg);
  require(v.birational, ErrKind::UnsupportedSource,
          "plane classification applies to Cremona maps");

  Ideal I(F.source_ctx, F.forms);
  PlaneClassification out;
  out.degree = F.delta;
  out.a_saturated = is_saturated(I, cfg);
  out.a_rees_cm = rees_is_cm(F, P, cfg);
  out.a_holds = out.a_saturated && out.a_rees_cm;
  out.de_jonquieres = dejonquieres_test(I, cfg);
  out.b_holds = (F.delta <= 3) || (F.delta == 4 && !out.de_jonquieres);
  out.agrees = out.a_holds == out.b_holds;
  out.paper_discrepancy = assume_three_proper_nonaligned && !out.agrees;
  return out;
}

bool monomial_birationality_oracle(const RationalMapDescriptor& F) {
  require(F.source_ideal.gens().empty(), ErrKind::UnsupportedSource,
          "monomial oracle needs a polynomial source ring");
  for (const auto& f : F.forms) {
    require(f.is_monomial(), ErrKind::NotMonomial, "oracle needs monomial forms");
  }
  const size_t nx = F.nx();
  std::vector<std::vector<mpz_class>> rows;
  const auto& e0 = F.forms[0].lm();
  for (size_t i = 1; i < F.forms.size(); ++i) {
    const auto& ei = F.forms[i].lm();
    std::vector<mpz_class> row(nx);
    for (size_t v = 0; v < nx; ++v)
      row[v] = mpz_class((long)ei[v]) - mpz_class((long)e0[v]);
    rows.push_back(std::move(row));
  }
  SmithResult snf = smith_normal_form(rows);
  if (snf.rank != F.n()) return false;
  for (const auto& d : snf.divisors) {
    if (d != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// ledger and pipeline

namespace {

std::string frac_str(const mpq_class& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

BoundLedgerEntry mk_entry(const std::string& id, const std::string& lhs, const std::string& rhs,
                          bool pass) {
  return BoundLedgerEntry{id, lhs, rhs, pass ? "pass" : "fail"};
}

BoundLedgerEntry na_entry(const std::string& id) {
  return BoundLedgerEntry{id, "", "", "not-applicable"};
}

} // namespace

std::vector<BoundLedgerEntry> bound_ledger(const RationalMapDescriptor& F,
                                           const AnalysisReport& r, const Config& cfg) {
  std::vector<BoundLedgerEntry> L;
  const uint64_t n = F.n(), m = F.m();
  const bool cremona = n == m && F.source_ideal.gens().empty() && r.verdict.birational &&
                       r.spread == n + 1;
  const bool cm = r.rees_cm.value_or(false);

  // MR: inverse degree against the Groebner-degree bound
  if (r.inverse) {
    mpz_class bound = mayr_ritscher_bound(n, m, r.dim_x, F.delta, r.d0);
    mpz_class lhs((unsigned long)r.inverse->degree);
    L.push_back(mk_entry("MR", lhs.get_str(), bound.get_str(), lhs <= bound));
  } else {
    L.push_back(na_entry("MR"));
  }

  // B2: delta <= m (sup_r f(r) + 1), sup over the computed window; the bound
  // is a statement about birational maps
  if (r.verdict.birational && r.profile && !r.profile->f.empty()) {
    int64_t fmax = *std::max_element(r.profile->f.begin(), r.profile->f.end());
    mpz_class rhs = mpz_class((long)m) * (fmax + 1);
    L.push_back(
        mk_entry("B2", std::to_string(F.delta), rhs.get_str(), mpz_class((long)F.delta) <= rhs));
  } else {
    L.push_back(na_entry("B2"));
  }

  // B21 / B22: CM-graph degree bounds with d = dim X + 1
  if (cm) {
    uint64_t d = r.dim_x + 1;
    L.push_back(mk_entry("B21", std::to_string(F.delta), std::to_string(m * d),
                         F.delta <= m * d));
    if (r.inverse) {
      L.push_back(mk_entry("B22", std::to_string(r.inverse->degree), std::to_string(n * d),
                           r.inverse->degree <= n * d));
    } else {
      L.push_back(na_entry("B22"));
    }
  } else {
    L.push_back(na_entry("B21"));
    L.push_back(na_entry("B22"));
  }

  // CRE_N2 and RELTYPE_REG: Cremona maps with CM graph
  if (cremona && cm) {
    uint64_t lhs = F.delta;
    if (r.inverse) lhs = std::max<uint64_t>(lhs, r.inverse->degree);
    L.push_back(mk_entry("CRE_N2", std::to_string(lhs), std::to_string(n * n), lhs <= n * n));
    L.push_back(mk_entry("RELTYPE_REG", std::to_string(r.relation_type), std::to_string(n),
                         r.relation_type <= n));
  } else {
    L.push_back(na_entry("CRE_N2"));
    L.push_back(na_entry("RELTYPE_REG"));
  }

  // grade-2 presentation bounds, with e read as the largest first-syzygy twist
  if (r.profile && r.profile->b1 >= 0) {
    bool grade2 = false;
    try {
      grade2 = codimension(Ideal(F.source_ctx, F.forms), cfg) >= 2;
    } catch (const Error&) {
      grade2 = false;
    }
    if (grade2) {
      mpq_class rhs_delta(mpz_class((long)m) * r.profile->b1, m + 1);
      rhs_delta.canonicalize();
      L.push_back(mk_entry("GRADE2_DELTA", std::to_string(F.delta), frac_str(rhs_delta),
                           mpq_class((long)F.delta) <= rhs_delta));
      mpq_class lhs_b1(mpz_class((long)(m + 1)) * (long)F.delta, m);
      lhs_b1.canonicalize();
      L.push_back(mk_entry("GRADE2_B1", frac_str(lhs_b1), std::to_string(r.profile->b1),
                           lhs_b1 <= mpq_class(r.profile->b1)));
    } else {
      L.push_back(na_entry("GRADE2_DELTA"));
      L.push_back(na_entry("GRADE2_B1"));
    }
  } else {
    L.push_back(na_entry("GRADE2_DELTA"));
    L.push_back(na_entry("GRADE2_B1"));
  }

  // SAT_COLON: saturation via a single colon for CM Cremona maps. Degree-1
  // maps are excluded: their base ideal is A+ itself, whose saturation is the
  // unit ideal, and the underlying begin-degree estimate has no content there.
  if (cremona && cm && n >= 2 && F.delta >= 2) {
    bool ok = saturation_colon_check(F, cfg);
    L.push_back(mk_entry("SAT_COLON", "saturate(I, A+)", "I : A+^(n-2)", ok));
  } else {
    L.push_back(na_entry("SAT_COLON"));
  }
  return L;
}

AnalyzeOptions AnalyzeOptions::tuned_for(size_t ambient_vars, const Config& cfg) {
  AnalyzeOptions o;
  o.cfg = cfg;
  o.r_max = cfg.r_max;
  if (ambient_vars > 10) {
    o.with_rees_cm = false;
    o.with_x_reg = false;
  }
  return o;
}

AnalysisReport analyze(const RationalMapDescriptor& F, const AnalyzeOptions& opts) {
  const Config& cfg = opts.cfg;
  AnalysisReport r;
  r.field = F.source_ctx->field;
  r.variables = F.source_ctx->variables;
  for (const auto& a : F.source_ideal.gens()) r.source_ideal_text.push_back(a.str());
  for (const auto& f : F.forms) r.forms_text.push_back(f.str());
  r.seed = cfg.seed;
  r.delta = F.delta;

  // source geometry
  if (F.source_ideal.gens().empty()) {
    r.dim_x = F.n();
    r.d0 = 0;
  } else {
    r.dim_x = krull_dimension(F.source_ideal, cfg) - 1;
    uint64_t d0 = 0;
    for (const auto& a : minimal_generators(F.source_ideal.gens(), cfg))
      d0 = std::max<uint64_t>(d0, (uint64_t)a.degree());
    r.d0 = d0;
  }

  ReesPresentation P = rees_ideal(F, cfg);
  r.relation_type = P.relation_type;
  r.spread = analytic_spread(F, cfg);
  r.verdict = is_birational(F, P, cfg);
  if (r.verdict.birational) r.inverse = inverse_representative(F, P, cfg);

  if (opts.with_reduction) {
    try {
      r.reduction = reduction_number(F, cfg);
    } catch (const Error& e) {
      if (e.kind() != ErrKind::NoReductionFound && e.kind() != ErrKind::UnsupportedSource) throw;
    }
  }
  if (opts.with_f && F.source_ideal.gens().empty()) {
    r.profile = f_function(F, opts.r_max, cfg);
  }
  if (opts.with_saturated) {
    r.saturated = is_saturated(Ideal(F.source_ctx, F.forms), cfg);
  }
  if (opts.with_rees_cm && F.source_ideal.gens().empty()) {
    r.rees_cm = rees_is_cm(F, P, cfg);
  }
  if (opts.with_x_reg) {
    r.x_reg = x_regularity(P, cfg);
  }
  if (F.n() == 2 && F.m() == 2 && F.source_ideal.gens().empty() && r.verdict.birational &&
      r.saturated.has_value() && r.rees_cm.has_value()) {
    r.plane = plane_classification(F, opts.assume_three_proper_nonaligned, cfg);
  }
  r.ledger = bound_ledger(F, r, cfg);
  return r;
}

} // namespace birat
