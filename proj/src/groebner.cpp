#include "birat/groebner.hpp"

#include <algorithm>
#include <set>

namespace birat {

namespace {

// Deterministic total order on polynomials (for stable sorts).
int poly_cmp(const Polynomial& a, const Polynomial& b) {
  if (a.nterms() != b.nterms()) return a.nterms() < b.nterms() ? -1 : 1;
  const MonomialOrder& ord = a.order();
  for (size_t i = 0; i < a.nterms(); ++i) {
    int c = ord.compare(a.terms()[i].mono, b.terms()[i].mono);
    if (c) return c;
  }
  for (size_t i = 0; i < a.nterms(); ++i) {
    if (a.terms()[i].coeff != b.terms()[i].coeff) {
      // arbitrary but fixed: compare printed form
      return a.terms()[i].coeff.str() < b.terms()[i].coeff.str() ? -1 : 1;
    }
  }
  return 0;
}

} // namespace

// ---------------------------------------------------------------------------
// reduction

// Full reduction of p against `basis` (first divisor wins). Over Q the loop is
// fraction-free: both remainder and work polynomial are rescaled by reducer
// leading coefficients and the accumulated multiplier is divided out at the
// end, so intermediate arithmetic stays integral for integral inputs.
Polynomial reduce_full(const Polynomial& p, const std::vector<Polynomial>& basis,
                       std::vector<Polynomial>* quotients) {
  const CtxPtr& ctx = p.ctx();
  const MonomialOrder& ord = p.order();
  const FieldSpec field = ctx->field;
  const bool rational = field.kind == FieldKind::Rationals;

  if (quotients) {
    quotients->assign(basis.size(), Polynomial::zero(ctx, ord));
  }
  std::vector<std::vector<Term>> qterms(quotients ? basis.size() : 0);

  Polynomial cur = p;
  std::vector<Term> rem;
  Scalar mult = Scalar::one(field);
  int steps_since_strip = 0;

  auto strip = [&]() {
    if (!rational) return;
    // joint integer content of everything, folded into mult
    mpz_class den_lcm = 1, num_gcd = 0;
    auto feed = [&](const std::vector<Term>& ts) {
      for (const auto& t : ts) {
        const mpq_class& q = t.coeff.rational();
        den_lcm = den_lcm / gcd(den_lcm, q.get_den()) * q.get_den();
      }
    };
    feed(cur.terms());
    feed(rem);
    for (const auto& qs : qterms) feed(qs);
    auto feed2 = [&](const std::vector<Term>& ts) {
      for (const auto& t : ts) {
        const mpq_class& q = t.coeff.rational();
        num_gcd = gcd(num_gcd, q.get_num() * (den_lcm / q.get_den()));
      }
    };
    feed2(cur.terms());
    feed2(rem);
    for (const auto& qs : qterms) feed2(qs);
    if (num_gcd == 0) num_gcd = den_lcm; // everything zero but mult
    mpq_class f(den_lcm, num_gcd);
    f.canonicalize();
    if (f == 1) return;
    Scalar s = Scalar::of_fraction(field, f.get_num(), f.get_den());
    cur = cur.scale(s);
    for (auto& t : rem) t.coeff = t.coeff * s;
    for (auto& qs : qterms)
      for (auto& t : qs) t.coeff = t.coeff * s;
    mult = mult * s;
  };

  while (!cur.is_zero()) {
    const Monomial& lm = cur.lm();
    size_t hit = basis.size();
    for (size_t i = 0; i < basis.size(); ++i) {
      if (!basis[i].is_zero() && basis[i].lm().divides(lm)) {
        hit = i;
        break;
      }
    }
    if (hit == basis.size()) {
      rem.push_back(cur.lt());
      cur = cur - Polynomial::monomial(ctx, ord, cur.lm(), cur.lc());
      continue;
    }
    const Polynomial& g = basis[hit];
    Monomial u = lm.div(g.lm());
    if (rational && !g.lc().is_one()) {
      Scalar a = g.lc();
      Scalar b = cur.lc();
      cur = cur.scale(a) - g.mul_term(u, b);
      for (auto& t : rem) t.coeff = t.coeff * a;
      for (auto& qs : qterms)
        for (auto& t : qs) t.coeff = t.coeff * a;
      mult = mult * a;
      if (quotients) qterms[hit].push_back({u, b});
    } else {
      Scalar c = cur.lc() / g.lc();
      cur = cur - g.mul_term(u, c);
      if (quotients) qterms[hit].push_back({u, c});
    }
    if (++steps_since_strip >= 16) {
      strip();
      steps_since_strip = 0;
    }
  }

  Scalar inv = mult.inverse();
  for (auto& t : rem) t.coeff = t.coeff * inv;
  if (quotients) {
    for (size_t i = 0; i < qterms.size(); ++i) {
      for (auto& t : qterms[i]) t.coeff = t.coeff * inv;
      (*quotients)[i] = Polynomial::from_terms(ctx, ord, std::move(qterms[i]));
    }
  }
  return Polynomial::from_terms(ctx, ord, std::move(rem));
}

// ---------------------------------------------------------------------------
// Buchberger engine

class GBEngine {
public:
  GBEngine(CtxPtr ctx, MonomialOrder order, const Config& cfg)
      : ctx_(std::move(ctx)), order_(std::move(order)), cfg_(cfg),
        pairs_(PairLess{order_}) {}

  void add_input(const Polynomial& p) {
    Polynomial q = p.order() == order_ ? p : p.resorted(order_);
    q = reduce_full(q, basis_, nullptr); // keep inputs interreduced against current basis
    if (q.is_zero()) return;
    push_element(q.normalized_primitive());
  }

  void complete() {
    while (!pairs_.empty()) {
      if (++processed_ > cfg_.pair_budget)
        fail(ErrKind::ResourceLimit, "S-pair budget exhausted (" +
                                         std::to_string(cfg_.pair_budget) + ")");
      Pair pr = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      Polynomial s = spoly(pr.i, pr.j);
      Polynomial h = reduce_full(s, basis_, nullptr);
      if (!h.is_zero()) push_element(h.normalized_primitive(), pr.sugar);
    }
  }

  const std::vector<Polynomial>& basis() const { return basis_; }

  std::vector<Polynomial> reduced() const {
    // keep only elements with minimal distinct leading monomials
    std::vector<size_t> keep;
    for (size_t i = 0; i < basis_.size(); ++i) {
      bool redundant = false;
      for (size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j) continue;
        if (basis_[j].lm().divides(basis_[i].lm())) {
          if (basis_[j].lm() == basis_[i].lm()) {
            redundant = j < i;
          } else {
            redundant = true;
          }
        }
      }
      if (!redundant) keep.push_back(i);
    }
    std::vector<Polynomial> out;
    out.reserve(keep.size());
    for (size_t i : keep) out.push_back(basis_[i]);
    // tail-interreduce to a fixpoint; leading terms are already minimal
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < out.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(out.size() - 1);
        for (size_t j = 0; j < out.size(); ++j) {
          if (j != i) others.push_back(out[j]);
        }
        Polynomial nf = reduce_full(out[i], others, nullptr).normalized_primitive();
        if (poly_cmp(nf, out[i]) != 0) {
          out[i] = nf;
          changed = true;
        }
      }
    }
    for (auto& g : out) g = g.monic();
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      int c = order_.compare(a.lm(), b.lm());
      return c < 0;
    });
    return out;
  }

private:
  struct Pair {
    Monomial lcm;
    uint64_t sugar;
    uint32_t i, j;
  };
  struct PairLess {
    MonomialOrder order;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      int c = order.compare(a.lcm, b.lcm);
      if (c) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  Polynomial spoly(uint32_t i, uint32_t j) const {
    const Polynomial& f = basis_[i];
    const Polynomial& g = basis_[j];
    Monomial l = Monomial::lcm(f.lm(), g.lm());
    Monomial uf = l.div(f.lm());
    Monomial ug = l.div(g.lm());
    if (ctx_->field.kind == FieldKind::Rationals) {
      return f.mul_term(uf, g.lc()) - g.mul_term(ug, f.lc());
    }
    return f.mul_term(uf, f.lc().inverse()) - g.mul_term(ug, g.lc().inverse());
  }

  void push_element(const Polynomial& h, uint64_t sugar_hint = 0) {
    uint32_t t = (uint32_t)basis_.size();
    basis_.push_back(h);
    sugar_.push_back(std::max<uint64_t>(sugar_hint, (uint64_t)std::max<int64_t>(h.degree(), 0)));
    gm_update(t);
  }

  // Gebauer-Moller pair update for the new element t.
  void gm_update(uint32_t t) {
    const Monomial& lt = basis_[t].lm();
    std::vector<std::pair<Monomial, uint32_t>> cand; // (lcm with t, i)
    cand.reserve(t);
    for (uint32_t i = 0; i < t; ++i) cand.push_back({Monomial::lcm(basis_[i].lm(), lt), i});

    // drop old pairs strictly covered by the new element
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      if (lt.divides(p.lcm) && !(cand[p.i].first == p.lcm) && !(cand[p.j].first == p.lcm)) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }

    // criterion M: keep only minimal lcms among the new column
    std::vector<bool> drop(cand.size(), false);
    for (size_t a = 0; a < cand.size(); ++a) {
      if (drop[a]) continue;
      for (size_t b = 0; b < cand.size(); ++b) {
        if (a == b || drop[a]) continue;
        if (cand[b].first.divides(cand[a].first) && !(cand[b].first == cand[a].first)) {
          drop[a] = true;
        }
      }
    }
    // criterion F: one representative per lcm value (smallest index)
    for (size_t a = 0; a < cand.size(); ++a) {
      if (drop[a]) continue;
      for (size_t b = 0; b < a; ++b) {
        if (!drop[b] && cand[b].first == cand[a].first) {
          drop[a] = true;
          break;
        }
      }
    }
    // product criterion (valid for ideals)
    for (size_t a = 0; a < cand.size(); ++a) {
      if (!drop[a] && basis_[cand[a].second].lm().coprime(lt)) drop[a] = true;
    }
    for (size_t a = 0; a < cand.size(); ++a) {
      if (drop[a]) continue;
      uint32_t i = cand[a].second;
      Monomial l = cand[a].first;
      uint64_t sug = std::max(sugar_[i] + l.div(basis_[i].lm()).degree(),
                              sugar_[t] + l.div(lt).degree());
      pairs_.insert(Pair{std::move(l), sug, i, t});
    }
  }

  CtxPtr ctx_;
  MonomialOrder order_;
  Config cfg_;
  std::vector<Polynomial> basis_;
  std::vector<uint64_t> sugar_;
  std::set<Pair, PairLess> pairs_;
  uint64_t processed_ = 0;
};

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const Config& cfg) {
  CtxPtr ctx;
  for (const auto& g : gens) {
    if (!ctx) {
      ctx = g.ctx();
    } else {
      require(same_ctx(ctx, g.ctx()), ErrKind::ContextMismatch,
              "generators from different rings");
    }
  }
  GroebnerBasis gb{order, {}};
  if (!ctx) return gb; // zero ideal, empty basis
  GBEngine eng(ctx, order, cfg);
  for (const auto& g : gens) eng.add_input(g);
  eng.complete();
  gb.elements = eng.reduced();
  return gb;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb,
                       std::vector<Polynomial>* quotients) {
  Polynomial q = p.order() == gb.order ? p : p.resorted(gb.order);
  Polynomial r = reduce_full(q, gb.elements, quotients);
  return r.resorted(p.order());
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(CtxPtr ctx, std::vector<Polynomial> gens) : d_(std::make_shared<Data>()) {
  d_->ctx = std::move(ctx);
  for (auto& g : gens) {
    require(same_ctx(g.ctx(), d_->ctx), ErrKind::ContextMismatch,
            "generator from a different ring");
    if (!g.is_zero()) d_->gens.push_back(g.resorted(MonomialOrder::grevlex()));
  }
}

Ideal Ideal::zero(CtxPtr ctx) { return Ideal(std::move(ctx), {}); }

Ideal Ideal::unit(CtxPtr ctx) {
  Polynomial one = Polynomial::constant(ctx, MonomialOrder::grevlex(),
                                        Scalar::one(ctx->field));
  return Ideal(ctx, {one});
}

const GroebnerBasis& Ideal::gb(const MonomialOrder& order, const Config& cfg) const {
  const std::string key = order.key();
  {
    std::lock_guard<std::mutex> lk(d_->mtx);
    auto it = d_->cache.find(key);
    if (it != d_->cache.end()) return it->second;
  }
  GroebnerBasis basis = buchberger(d_->gens, order, cfg);
  std::lock_guard<std::mutex> lk(d_->mtx);
  auto [it, inserted] = d_->cache.emplace(key, std::move(basis));
  (void)inserted; // duplicate concurrent computations produce identical bases
  return it->second;
}

bool Ideal::is_zero(const Config& cfg) const {
  return gb(MonomialOrder::grevlex(), cfg).elements.empty();
}

bool Ideal::is_unit(const Config& cfg) const {
  const auto& e = gb(MonomialOrder::grevlex(), cfg).elements;
  return !e.empty() && e.front().lm().is_one();
}

bool Ideal::contains(const Polynomial& p, const Config& cfg) const {
  if (p.is_zero()) return true;
  return normal_form(p, gb(MonomialOrder::grevlex(), cfg)).is_zero();
}

// ---------------------------------------------------------------------------
// derived operations

CtxPtr extend_context(const CtxPtr& ctx, const std::vector<std::string>& extra,
                      std::optional<size_t> block_split) {
  std::vector<std::string> vars = ctx->variables;
  for (const auto& e : extra) vars.push_back(e);
  return make_context(ctx->field, std::move(vars), block_split);
}

Polynomial map_to_context(const Polynomial& p, const CtxPtr& target,
                          const std::vector<size_t>& var_map, const MonomialOrder& order) {
  std::vector<Term> terms;
  terms.reserve(p.nterms());
  for (const auto& t : p.terms()) {
    Monomial m(target->nvars());
    std::vector<uint32_t> e(target->nvars(), 0);
    for (size_t i = 0; i < var_map.size(); ++i) e[var_map[i]] = t.mono[i];
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(target, order, std::move(terms));
}

Ideal elimination_ideal(const Ideal& I, const std::vector<size_t>& keep, const Config& cfg) {
  const CtxPtr& ctx = I.ctx();
  std::vector<bool> kept(ctx->nvars(), false);
  for (size_t i : keep) {
    require(i < ctx->nvars(), ErrKind::ContextMismatch, "keep index out of range");
    kept[i] = true;
  }
  std::vector<size_t> eliminated;
  for (size_t i = 0; i < ctx->nvars(); ++i) {
    if (!kept[i]) eliminated.push_back(i);
  }
  if (eliminated.empty()) return I;
  MonomialOrder order = MonomialOrder::block_elim(eliminated, ctx->nvars());
  const GroebnerBasis& gb = I.gb(order, cfg);
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements) {
    bool pure = true;
    for (const auto& t : g.terms()) {
      for (size_t i : eliminated) {
        if (t.mono[i]) {
          pure = false;
          break;
        }
      }
      if (!pure) break;
    }
    if (pure) out.push_back(g);
  }
  return Ideal(ctx, std::move(out));
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require(same_ctx(I.ctx(), J.ctx()), ErrKind::ContextMismatch, "sum of ideals in different rings");
  std::vector<Polynomial> gens = I.gens();
  for (const auto& g : J.gens()) gens.push_back(g);
  return Ideal(I.ctx(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require(same_ctx(I.ctx(), J.ctx()), ErrKind::ContextMismatch,
          "product of ideals in different rings");
  std::vector<Polynomial> gens;
  for (const auto& f : I.gens())
    for (const auto& g : J.gens()) gens.push_back(f * g);
  return Ideal(I.ctx(), std::move(gens));
}

Ideal ideal_power(const Ideal& I, unsigned r) {
  if (r == 0) return Ideal::unit(I.ctx());
  if (r == 1 || I.gens().empty()) return I;
  // products over r-element multisets of the generators
  const auto& g = I.gens();
  std::vector<Polynomial> out;
  std::vector<size_t> idx(r, 0);
  while (true) {
    Polynomial p = g[idx[0]];
    for (unsigned k = 1; k < r; ++k) p = p * g[idx[k]];
    out.push_back(std::move(p));
    // next nondecreasing index tuple
    size_t pos = r;
    while (pos > 0) {
      --pos;
      if (idx[pos] + 1 < g.size()) {
        ++idx[pos];
        for (size_t k = pos + 1; k < r; ++k) idx[k] = idx[pos];
        break;
      }
      if (pos == 0) return Ideal(I.ctx(), std::move(out));
    }
  }
}

Ideal intersection(const Ideal& I, const Ideal& J, const Config& cfg) {
  require(same_ctx(I.ctx(), J.ctx()), ErrKind::ContextMismatch,
          "intersection of ideals in different rings");
  const CtxPtr& ctx = I.ctx();
  std::string uname = "u_";
  while (ctx->var_index(uname)) uname += "_";
  CtxPtr big = extend_context(ctx, {uname}, std::nullopt);
  size_t u = big->nvars() - 1;
  std::vector<size_t> var_map(ctx->nvars());
  for (size_t i = 0; i < ctx->nvars(); ++i) var_map[i] = i;
  MonomialOrder ord = MonomialOrder::grevlex();
  Polynomial up = Polynomial::variable(big, ord, u);
  Polynomial one = Polynomial::constant(big, ord, Scalar::one(big->field));
  std::vector<Polynomial> gens;
  for (const auto& f : I.gens()) gens.push_back(up * map_to_context(f, big, var_map, ord));
  for (const auto& g : J.gens()) gens.push_back((one - up) * map_to_context(g, big, var_map, ord));
  Ideal aux(big, std::move(gens));
  std::vector<size_t> keep(ctx->nvars());
  for (size_t i = 0; i < ctx->nvars(); ++i) keep[i] = i;
  Ideal elim = elimination_ideal(aux, keep, cfg);
  std::vector<Polynomial> down;
  for (const auto& g : elim.gens()) {
    // support is inside the original variables; drop the u coordinate
    std::vector<Term> ts;
    for (const auto& t : g.terms()) {
      std::vector<uint32_t> e(t.mono.exponents().begin(), t.mono.exponents().end() - 1);
      ts.push_back({Monomial(std::move(e)), t.coeff});
    }
    down.push_back(Polynomial::from_terms(ctx, MonomialOrder::grevlex(), std::move(ts)));
  }
  return Ideal(ctx, std::move(down));
}

Ideal colon(const Ideal& I, const Ideal& J, const Config& cfg) {
  require(same_ctx(I.ctx(), J.ctx()), ErrKind::ContextMismatch,
          "colon of ideals in different rings");
  std::vector<Polynomial> nonzero;
  for (const auto& g : J.gens()) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  require(!nonzero.empty(), ErrKind::DivisionByZero, "colon by the zero ideal");
  Ideal acc = Ideal::unit(I.ctx());
  bool first = true;
  for (const auto& g : nonzero) {
    Ideal gi(I.ctx(), {g});
    Ideal cap = intersection(I, gi, cfg);
    std::vector<Polynomial> quot;
    for (const auto& h : cap.gens()) quot.push_back(divide_exact(h, g));
    Ideal part(I.ctx(), std::move(quot));
    acc = first ? part : intersection(acc, part, cfg);
    first = false;
  }
  return acc;
}

std::pair<Ideal, unsigned> saturate(const Ideal& I, const Ideal& J, const Config& cfg) {
  Ideal prev = I;
  unsigned e = 0;
  while (true) {
    Ideal next = colon(prev, J, cfg);
    if (ideal_equal(prev, next, cfg)) return {prev, e};
    prev = next;
    ++e;
    require(e < 1000, ErrKind::ResourceLimit, "saturation did not stabilize");
  }
}

Ideal kernel_of_map(const std::vector<Polynomial>& forms, const Ideal& source_ideal,
                    const std::vector<std::string>& target_names, const Config& cfg) {
  require(!forms.empty(), ErrKind::LengthMismatch, "kernel of empty map");
  require(forms.size() == target_names.size(), ErrKind::LengthMismatch,
          "one target variable per form");
  const CtxPtr& src = forms[0].ctx();
  for (const auto& f : forms) {
    require(same_ctx(f.ctx(), src), ErrKind::ContextMismatch, "forms from different rings");
  }
  for (const auto& n : target_names) {
    require(!src->var_index(n), ErrKind::ContextMismatch,
            "target variable '" + n + "' collides with a source variable");
  }
  CtxPtr big = extend_context(src, target_names, src->nvars());
  size_t nx = src->nvars();
  std::vector<size_t> var_map(nx);
  for (size_t i = 0; i < nx; ++i) var_map[i] = i;
  MonomialOrder ord = MonomialOrder::grevlex();
  std::vector<Polynomial> gens;
  for (const auto& a : source_ideal.gens()) gens.push_back(map_to_context(a, big, var_map, ord));
  for (size_t j = 0; j < forms.size(); ++j) {
    Polynomial yj = Polynomial::variable(big, ord, nx + j);
    gens.push_back(yj - map_to_context(forms[j], big, var_map, ord));
  }
  Ideal aux(big, std::move(gens));
  std::vector<size_t> keep;
  for (size_t j = 0; j < forms.size(); ++j) keep.push_back(nx + j);
  Ideal elim = elimination_ideal(aux, keep, cfg);
  CtxPtr yctx = make_context(src->field, target_names);
  std::vector<Polynomial> out;
  for (const auto& g : elim.gens()) {
    std::vector<Term> ts;
    for (const auto& t : g.terms()) {
      std::vector<uint32_t> e(target_names.size(), 0);
      for (size_t j = 0; j < target_names.size(); ++j) e[j] = t.mono[nx + j];
      ts.push_back({Monomial(std::move(e)), t.coeff});
    }
    out.push_back(Polynomial::from_terms(yctx, MonomialOrder::grevlex(), std::move(ts)));
  }
  return Ideal(yctx, std::move(out));
}

size_t krull_dimension(const Ideal& I, const Config& cfg) {
  const auto& gb = I.gb(MonomialOrder::grevlex(), cfg);
  size_t n = I.ctx()->nvars();
  require(n <= 24, ErrKind::ResourceLimit, "too many variables for the dimension search");
  for (const auto& g : gb.elements) {
    require(!g.lm().is_one(), ErrKind::UnitIdeal, "dimension of the unit ideal");
  }
  std::vector<uint64_t> masks;
  for (const auto& g : gb.elements) {
    uint64_t m = 0;
    for (size_t i = 0; i < n; ++i) {
      if (g.lm()[i]) m |= 1ull << i;
    }
    masks.push_back(m);
  }
  // largest independent set: no leading support contained in the subset
  std::vector<uint64_t> subsets((size_t)1 << n);
  for (size_t s = 0; s < subsets.size(); ++s) subsets[s] = s;
  std::sort(subsets.begin(), subsets.end(), [](uint64_t a, uint64_t b) {
    int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    if (pa != pb) return pa > pb;
    return a < b;
  });
  for (uint64_t s : subsets) {
    bool independent = true;
    for (uint64_t m : masks) {
      if ((m & ~s) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) return (size_t)__builtin_popcountll(s);
  }
  return 0;
}

bool ideal_equal(const Ideal& I, const Ideal& J, const Config& cfg) {
  require(same_ctx(I.ctx(), J.ctx()), ErrKind::ContextMismatch,
          "comparing ideals in different rings");
  const auto& a = I.gb(MonomialOrder::grevlex(), cfg).elements;
  const auto& b = J.gb(MonomialOrder::grevlex(), cfg).elements;
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[i])) return false;
  }
  return true;
}

std::vector<Polynomial> minimal_generators(std::vector<Polynomial> gens, const Config& cfg) {
  std::vector<Polynomial> nz;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    require(g.is_homogeneous(), ErrKind::NotHomogeneous,
            "minimal generators need homogeneous input");
    nz.push_back(g.resorted(MonomialOrder::grevlex()));
  }
  std::sort(nz.begin(), nz.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return poly_cmp(a, b) < 0;
  });
  std::vector<Polynomial> kept;
  GBEngine eng(nz.empty() ? CtxPtr() : nz[0].ctx(), MonomialOrder::grevlex(), cfg);
  for (const auto& g : nz) {
    if (kept.empty()) {
      kept.push_back(g);
      eng.add_input(g);
      eng.complete();
      continue;
    }
    Polynomial nf = reduce_full(g.resorted(MonomialOrder::grevlex()), eng.basis(), nullptr);
    if (!nf.is_zero()) {
      kept.push_back(g);
      eng.add_input(g);
      eng.complete();
    }
  }
  return kept;
}

} // namespace birat
