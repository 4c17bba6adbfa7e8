#include "birat/module.hpp"

#include <algorithm>
#include <set>

namespace birat {

GDeg gdeg_of_monomial(const Monomial& m, const RingContext& ctx) {
  if (ctx.block_split) {
    size_t s = *ctx.block_split;
    return {(int64_t)m.degree_on(0, s), (int64_t)m.degree_on(s, ctx.nvars())};
  }
  return {(int64_t)m.degree(), 0};
}

namespace {

// descending: larger monomial first, then smaller position first
int mod_term_cmp(const ModTerm& x, const ModTerm& y, const MonomialOrder& ord) {
  int c = ord.compare(x.mono, y.mono);
  if (c) return c;
  if (x.pos != y.pos) return x.pos < y.pos ? 1 : -1;
  return 0;
}

} // namespace

ModElement ModElement::from_terms(const ModuleCtx& mc, std::vector<ModTerm> terms) {
  ModElement e;
  std::sort(terms.begin(), terms.end(), [&](const ModTerm& a, const ModTerm& b) {
    return mod_term_cmp(a, b, mc.order) > 0;
  });
  for (auto& t : terms) {
    require(t.pos < mc.positions(), ErrKind::LengthMismatch, "module position out of range");
    if (!e.terms_.empty() && e.terms_.back().pos == t.pos && e.terms_.back().mono == t.mono) {
      e.terms_.back().coeff = e.terms_.back().coeff + t.coeff;
    } else {
      e.terms_.push_back(std::move(t));
    }
  }
  e.terms_.erase(std::remove_if(e.terms_.begin(), e.terms_.end(),
                                [](const ModTerm& t) { return t.coeff.is_zero(); }),
                 e.terms_.end());
  return e;
}

ModElement ModElement::unit(const ModuleCtx& mc, uint32_t pos, const Scalar& c) {
  return from_terms(mc, {{pos, Monomial(mc.ring->nvars()), c}});
}

const ModTerm& ModElement::lt() const {
  require(!terms_.empty(), ErrKind::Internal, "leading term of zero module element");
  return terms_.front();
}

ModElement ModElement::add(const ModElement& o, const ModuleCtx& mc) const {
  ModElement r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = mod_term_cmp(terms_[i], o.terms_[j], mc.order);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) r.terms_.push_back({terms_[i].pos, terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

ModElement ModElement::sub(const ModElement& o, const ModuleCtx& mc) const {
  return add(o.neg(), mc);
}

ModElement ModElement::scale(const Scalar& c) const {
  ModElement r;
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.pos, t.mono, t.coeff * c});
  return r;
}

ModElement ModElement::mul_term(const Monomial& m, const Scalar& c) const {
  ModElement r;
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.pos, t.mono.times(m), t.coeff * c});
  return r;
}

ModElement ModElement::neg() const {
  ModElement r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.pos, t.mono, t.coeff.neg()});
  return r;
}

std::vector<Polynomial> ModElement::to_vector(const ModuleCtx& mc) const {
  std::vector<std::vector<Term>> rows(mc.positions());
  for (const auto& t : terms_) rows[t.pos].push_back({t.mono, t.coeff});
  std::vector<Polynomial> v;
  v.reserve(rows.size());
  for (auto& ts : rows) v.push_back(Polynomial::from_terms(mc.ring, mc.order, std::move(ts)));
  return v;
}

ModElement ModElement::from_vector(const ModuleCtx& mc, const std::vector<Polynomial>& v) {
  require(v.size() == mc.positions(), ErrKind::LengthMismatch,
          "vector length does not match module rank");
  std::vector<ModTerm> terms;
  for (size_t p = 0; p < v.size(); ++p) {
    for (const auto& t : v[p].terms()) terms.push_back({(uint32_t)p, t.mono, t.coeff});
  }
  return from_terms(mc, std::move(terms));
}

GDeg ModElement::degree(const ModuleCtx& mc) const {
  require(!terms_.empty(), ErrKind::Internal, "degree of zero module element");
  GDeg d = mc.row_twists[terms_[0].pos] + gdeg_of_monomial(terms_[0].mono, *mc.ring);
  for (const auto& t : terms_) {
    GDeg td = mc.row_twists[t.pos] + gdeg_of_monomial(t.mono, *mc.ring);
    require(td == d, ErrKind::NotHomogeneous, "module element is not homogeneous");
  }
  return d;
}

bool ModElement::is_homogeneous(const ModuleCtx& mc) const {
  if (terms_.empty()) return true;
  GDeg d = mc.row_twists[terms_[0].pos] + gdeg_of_monomial(terms_[0].mono, *mc.ring);
  for (const auto& t : terms_) {
    if (!(mc.row_twists[t.pos] + gdeg_of_monomial(t.mono, *mc.ring) == d)) return false;
  }
  return true;
}

ModElement ModElement::normalized_primitive(const FieldSpec& field) const {
  if (terms_.empty()) return *this;
  if (field.kind == FieldKind::PrimeField) {
    return scale(terms_[0].coeff.inverse());
  }
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& t : terms_) {
    const mpq_class& q = t.coeff.rational();
    den_lcm = den_lcm / gcd(den_lcm, q.get_den()) * q.get_den();
  }
  for (const auto& t : terms_) {
    const mpq_class& q = t.coeff.rational();
    num_gcd = gcd(num_gcd, q.get_num() * (den_lcm / q.get_den()));
  }
  if (num_gcd == 0) num_gcd = 1;
  mpq_class f(den_lcm, num_gcd);
  f.canonicalize();
  if (terms_[0].coeff.rational() < 0) f = -f;
  return scale(Scalar::of_fraction(field, f.get_num(), f.get_den()));
}

bool ModElement::operator==(const ModElement& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].pos != o.terms_[i].pos || !(terms_[i].mono == o.terms_[i].mono) ||
        terms_[i].coeff != o.terms_[i].coeff)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// module Buchberger with optional cofactor tracking

namespace {

class ModEngine {
public:
  // cof_rank: number of input columns (cofactor space rank); 0 disables tracking
  ModEngine(const ModuleCtx& mc, const Config& cfg, size_t cof_rank, bool prune)
      : mc_(mc), cfg_(cfg), track_(cof_rank > 0), prune_(prune),
        cof_mc_{mc.ring, mc.order, std::vector<GDeg>(cof_rank)}, pairs_(PairLess{mc.order}) {}

  void add_input(const ModElement& g, uint32_t input_index) {
    if (g.is_zero()) {
      if (track_) syz_.push_back(ModElement::unit(cof_mc_, input_index, one()));
      return;
    }
    push(g, track_ ? ModElement::unit(cof_mc_, input_index, one()) : ModElement());
  }

  void add_plain(const ModElement& g) {
    if (!g.is_zero()) push(g, ModElement());
  }

  void complete() {
    while (!pairs_.empty()) {
      if (++processed_ > cfg_.pair_budget)
        fail(ErrKind::ResourceLimit, "module S-pair budget exhausted");
      Pair pr = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      const ModElement& f = basis_[pr.i];
      const ModElement& g = basis_[pr.j];
      Monomial uf = pr.lcm.div(f.lt().mono);
      Monomial ug = pr.lcm.div(g.lt().mono);
      ModElement s, cs;
      if (rational()) {
        s = f.mul_term(uf, g.lt().coeff).sub(g.mul_term(ug, f.lt().coeff), mc_);
        if (track_)
          cs = cof_[pr.i].mul_term(uf, g.lt().coeff).sub(cof_[pr.j].mul_term(ug, f.lt().coeff),
                                                         cof_mc_);
      } else {
        s = f.mul_term(uf, f.lt().coeff.inverse())
                .sub(g.mul_term(ug, g.lt().coeff.inverse()), mc_);
        if (track_)
          cs = cof_[pr.i]
                   .mul_term(uf, f.lt().coeff.inverse())
                   .sub(cof_[pr.j].mul_term(ug, g.lt().coeff.inverse()), cof_mc_);
      }
      reduce_tracked(s, cs);
      if (s.is_zero()) {
        if (track_ && !cs.is_zero())
          syz_.push_back(cs.normalized_primitive(mc_.ring->field));
      } else {
        push_normalized(s, cs);
      }
    }
  }

  const std::vector<ModElement>& basis() const { return basis_; }
  std::vector<ModElement>& syzygies() { return syz_; }

  // joint fraction-free reduction of (v, cof) against the basis
  void reduce_tracked(ModElement& v, ModElement& cof) {
    size_t scan_from = 0; // terms before this are known irreducible
    while (true) {
      // find the first reducible term at or after scan_from
      size_t ti = scan_from;
      size_t hit = basis_.size();
      for (; ti < v.terms().size(); ++ti) {
        const ModTerm& t = v.terms()[ti];
        for (size_t b = 0; b < basis_.size(); ++b) {
          const ModTerm& lt = basis_[b].lt();
          if (lt.pos == t.pos && lt.mono.divides(t.mono)) {
            hit = b;
            break;
          }
        }
        if (hit != basis_.size()) break;
      }
      if (hit == basis_.size()) break; // fully reduced
      scan_from = ti;
      const ModTerm& t = v.terms()[ti];
      const ModElement& g = basis_[hit];
      Monomial u = t.mono.div(g.lt().mono);
      if (rational() && !g.lt().coeff.is_one()) {
        Scalar a = g.lt().coeff;
        Scalar b = t.coeff;
        v = v.scale(a).sub(g.mul_term(u, b), mc_);
        if (track_) cof = cof.scale(a).sub(cof_[hit].mul_term(u, b), cof_mc_);
      } else {
        Scalar c = t.coeff / g.lt().coeff;
        v = v.sub(g.mul_term(u, c), mc_);
        if (track_) cof = cof.sub(cof_[hit].mul_term(u, c), cof_mc_);
      }
      if (++steps_ % 16 == 0) strip(v, cof);
    }
    strip(v, cof);
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

  bool rational() const { return mc_.ring->field.kind == FieldKind::Rationals; }
  Scalar one() const { return Scalar::one(mc_.ring->field); }

  void strip(ModElement& v, ModElement& cof) {
    if (!rational() || (v.is_zero() && cof.is_zero())) return;
    mpz_class den_lcm = 1, num_gcd = 0;
    auto feed = [&](const ModElement& e) {
      for (const auto& t : e.terms()) {
        const mpq_class& q = t.coeff.rational();
        den_lcm = den_lcm / gcd(den_lcm, q.get_den()) * q.get_den();
      }
    };
    feed(v);
    if (track_) feed(cof);
    auto feed2 = [&](const ModElement& e) {
      for (const auto& t : e.terms()) {
        const mpq_class& q = t.coeff.rational();
        num_gcd = gcd(num_gcd, q.get_num() * (den_lcm / q.get_den()));
      }
    };
    feed2(v);
    if (track_) feed2(cof);
    if (num_gcd == 0) return;
    mpq_class f(den_lcm, num_gcd);
    f.canonicalize();
    if (f == 1) return;
    Scalar s = Scalar::of_fraction(mc_.ring->field, f.get_num(), f.get_den());
    v = v.scale(s);
    if (track_) cof = cof.scale(s);
  }

  void push_normalized(ModElement v, ModElement cs) {
    // scale both sides by the same factor so v == cs . inputs stays exact
    if (rational()) {
      ModElement probe = v;
      mpz_class den_lcm = 1, num_gcd = 0;
      for (const auto& t : probe.terms()) {
        const mpq_class& q = t.coeff.rational();
        den_lcm = den_lcm / gcd(den_lcm, q.get_den()) * q.get_den();
      }
      for (const auto& t : probe.terms()) {
        const mpq_class& q = t.coeff.rational();
        num_gcd = gcd(num_gcd, q.get_num() * (den_lcm / q.get_den()));
      }
      if (num_gcd == 0) num_gcd = 1;
      mpq_class f(den_lcm, num_gcd);
      f.canonicalize();
      if (probe.lt().coeff.rational() < 0) f = -f;
      Scalar s = Scalar::of_fraction(mc_.ring->field, f.get_num(), f.get_den());
      v = v.scale(s);
      if (track_) cs = cs.scale(s);
    } else {
      Scalar s = v.lt().coeff.inverse();
      v = v.scale(s);
      if (track_) cs = cs.scale(s);
    }
    push(v, cs);
  }

  void push(const ModElement& g, const ModElement& cof) {
    uint32_t t = (uint32_t)basis_.size();
    basis_.push_back(g);
    cof_.push_back(cof);
    sugar_.push_back(g.lt().mono.degree());
    gm_update(t);
  }

  void gm_update(uint32_t t) {
    const ModTerm& lt = basis_[t].lt();
    std::vector<std::pair<Monomial, uint32_t>> cand;
    std::vector<bool> same_pos(basis_.size() - 1, false);
    for (uint32_t i = 0; i < t; ++i) {
      same_pos[i] = basis_[i].lt().pos == lt.pos;
      cand.push_back({same_pos[i] ? Monomial::lcm(basis_[i].lt().mono, lt.mono)
                                  : Monomial(mc_.ring->nvars()),
                      i});
    }
    if (prune_) {
      for (auto it = pairs_.begin(); it != pairs_.end();) {
        const Pair& p = *it;
        bool covered = same_pos[p.i] && same_pos[p.j] && lt.mono.divides(p.lcm) &&
                       !(cand[p.i].first == p.lcm) && !(cand[p.j].first == p.lcm);
        it = covered ? pairs_.erase(it) : std::next(it);
      }
    }
    std::vector<bool> drop(cand.size(), false);
    for (size_t a = 0; a < cand.size(); ++a) {
      if (!same_pos[a]) drop[a] = true;
    }
    if (prune_) {
      for (size_t a = 0; a < cand.size(); ++a) {
        if (drop[a]) continue;
        for (size_t b = 0; b < cand.size(); ++b) {
          if (a == b || drop[b] || drop[a]) continue;
          if (cand[b].first.divides(cand[a].first) && !(cand[b].first == cand[a].first))
            drop[a] = true;
        }
      }
      for (size_t a = 0; a < cand.size(); ++a) {
        if (drop[a]) continue;
        for (size_t b = 0; b < a; ++b) {
          if (!drop[b] && cand[b].first == cand[a].first) {
            drop[a] = true;
            break;
          }
        }
      }
      // no product criterion: it is not valid for modules
    }
    for (size_t a = 0; a < cand.size(); ++a) {
      if (drop[a]) continue;
      uint32_t i = cand[a].second;
      Monomial l = cand[a].first;
      uint64_t sug = std::max(sugar_[i] + l.div(basis_[i].lt().mono).degree(),
                              sugar_[t] + l.div(lt.mono).degree());
      pairs_.insert(Pair{std::move(l), sug, i, t});
    }
  }

  ModuleCtx mc_;
  Config cfg_;
  bool track_;
  bool prune_;
  ModuleCtx cof_mc_; // cofactor space (twists unused)
  std::vector<ModElement> basis_;
  std::vector<ModElement> cof_;
  std::vector<ModElement> syz_;
  std::vector<uint64_t> sugar_;
  std::set<Pair, PairLess> pairs_;
  uint64_t processed_ = 0;
  uint64_t steps_ = 0;
};

} // namespace

ModElement module_reduce(const ModElement& e, const std::vector<ModElement>& basis,
                         const ModuleCtx& mc) {
  // tail-complete normal form; remainder terms are collected as irreducible
  ModElement cur = e;
  std::vector<ModTerm> rem;
  Scalar mult = Scalar::one(mc.ring->field);
  const bool rational = mc.ring->field.kind == FieldKind::Rationals;
  while (!cur.is_zero()) {
    const ModTerm& t = cur.lt();
    size_t hit = basis.size();
    for (size_t b = 0; b < basis.size(); ++b) {
      if (basis[b].is_zero()) continue;
      const ModTerm& lt = basis[b].lt();
      if (lt.pos == t.pos && lt.mono.divides(t.mono)) {
        hit = b;
        break;
      }
    }
    if (hit == basis.size()) {
      rem.push_back(t);
      cur = cur.sub(ModElement::from_terms(mc, {t}), mc);
      continue;
    }
    const ModElement& g = basis[hit];
    Monomial u = t.mono.div(g.lt().mono);
    if (rational && !g.lt().coeff.is_one()) {
      Scalar a = g.lt().coeff;
      Scalar b = t.coeff;
      cur = cur.scale(a).sub(g.mul_term(u, b), mc);
      for (auto& r : rem) r.coeff = r.coeff * a;
      mult = mult * a;
    } else {
      cur = cur.sub(g.mul_term(u, t.coeff / g.lt().coeff), mc);
    }
  }
  ModElement out = ModElement::from_terms(mc, std::move(rem));
  return out.scale(mult.inverse());
}

std::vector<ModElement> module_syzygies(const std::vector<ModElement>& columns,
                                        const ModuleCtx& mc, const Config& cfg, bool prune) {
  ModEngine eng(mc, cfg, columns.size(), prune);
  for (size_t k = 0; k < columns.size(); ++k) eng.add_input(columns[k], (uint32_t)k);
  eng.complete();
  return std::move(eng.syzygies());
}

std::vector<ModElement> module_minimal_generators(std::vector<ModElement> elements,
                                                  const ModuleCtx& mc, const Config& cfg) {
  std::vector<ModElement> nz;
  for (auto& e : elements) {
    if (e.is_zero()) continue;
    require(e.is_homogeneous(mc), ErrKind::NotHomogeneous,
            "minimal module generators need homogeneous input");
    nz.push_back(e.normalized_primitive(mc.ring->field));
  }
  std::sort(nz.begin(), nz.end(), [&](const ModElement& x, const ModElement& y) {
    GDeg dx = x.degree(mc), dy = y.degree(mc);
    if (!(dx == dy)) return dx.total() != dy.total() ? dx.total() < dy.total() : dx < dy;
    // deterministic tiebreak: leading term, then size
    int c = mod_term_cmp(x.lt(), y.lt(), mc.order);
    if (c) return c > 0;
    return x.terms().size() < y.terms().size();
  });
  ModEngine eng(mc, cfg, 0, true);
  std::vector<ModElement> kept;
  for (const auto& e : nz) {
    ModElement nf = module_reduce(e, eng.basis(), mc);
    if (nf.is_zero()) continue;
    kept.push_back(nf.normalized_primitive(mc.ring->field));
    eng.add_plain(kept.back());
    eng.complete();
  }
  return kept;
}

bool module_member(const ModElement& e, const std::vector<ModElement>& gens,
                   const ModuleCtx& mc, const Config& cfg) {
  ModEngine eng(mc, cfg, 0, true);
  for (const auto& g : gens) eng.add_plain(g);
  eng.complete();
  return module_reduce(e, eng.basis(), mc).is_zero();
}

} // namespace birat
