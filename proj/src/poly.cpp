#include "birat/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace birat {

Polynomial Polynomial::zero(CtxPtr ctx, const MonomialOrder& order) {
  return Polynomial(std::move(ctx), order);
}

Polynomial Polynomial::constant(CtxPtr ctx, const MonomialOrder& order, const Scalar& c) {
  Polynomial p(ctx, order);
  if (!c.is_zero()) p.terms_.push_back({Monomial(ctx->nvars()), c});
  return p;
}

Polynomial Polynomial::variable(CtxPtr ctx, const MonomialOrder& order, size_t i) {
  Polynomial p(ctx, order);
  p.terms_.push_back({Monomial::var(ctx->nvars(), i), Scalar::one(ctx->field)});
  return p;
}

Polynomial Polynomial::monomial(CtxPtr ctx, const MonomialOrder& order, Monomial m, Scalar c) {
  Polynomial p(ctx, order);
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(CtxPtr ctx, const MonomialOrder& order,
                                  std::vector<Term> terms) {
  Polynomial p(ctx, order);
  for (auto& t : terms) {
    require(t.mono.nvars() == ctx->nvars(), ErrKind::ContextMismatch,
            "monomial arity does not match ring");
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  p.terms_.erase(std::remove_if(p.terms_.begin(), p.terms_.end(),
                                [](const Term& t) { return t.coeff.is_zero(); }),
                 p.terms_.end());
  return p;
}

const Term& Polynomial::lt() const {
  require(!terms_.empty(), ErrKind::Internal, "leading term of zero polynomial");
  return terms_.front();
}

Polynomial Polynomial::resorted(const MonomialOrder& order) const {
  if (order == order_) return *this;
  Polynomial p(ctx_, order);
  p.terms_ = terms_;
  std::sort(p.terms_.begin(), p.terms_.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  return p;
}

void Polynomial::check_compat(const Polynomial& o) const {
  require(same_ctx(ctx_, o.ctx_), ErrKind::ContextMismatch, "polynomials from different rings");
  require(order_ == o.order_, ErrKind::ContextMismatch,
          "polynomials sorted under different orders; resort explicitly");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compat(o);
  Polynomial r(ctx_, order_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = order_.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o.neg(); }

Polynomial Polynomial::neg() const {
  Polynomial r(ctx_, order_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff.neg()});
  return r;
}

Polynomial Polynomial::scale(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ctx_, order_);
  Polynomial r(ctx_, order_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ctx_, order_);
  Polynomial r(ctx_, order_);
  r.terms_.reserve(terms_.size());
  // multiplicativity of the order keeps the sort intact
  for (const auto& t : terms_) r.terms_.push_back({t.mono.times(m), t.coeff * c});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compat(o);
  if (is_zero() || o.is_zero()) return Polynomial(ctx_, order_);
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      acc.push_back({a.mono.times(b.mono), a.coeff * b.coeff});
    }
  }
  return from_terms(ctx_, order_, std::move(acc));
}

Polynomial Polynomial::pow(uint32_t e) const {
  Polynomial r = constant(ctx_, order_, Scalar::one(ctx_->field));
  Polynomial b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ctx(ctx_, o.ctx_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  // compare as term sets; orders may differ
  if (order_ == o.order_) {
    return terms_ == o.terms_;
  }
  return resorted(MonomialOrder::grevlex()).terms_ == o.resorted(MonomialOrder::grevlex()).terms_;
}

int64_t Polynomial::degree() const {
  int64_t d = -1;
  for (const auto& t : terms_) d = std::max<int64_t>(d, (int64_t)t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  uint64_t d = terms_[0].mono.degree();
  for (const auto& t : terms_) {
    if (t.mono.degree() != d) return false;
  }
  return true;
}

Polynomial Polynomial::derivative(size_t var) const {
  Polynomial r(ctx_, order_);
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    uint32_t e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono.div(Monomial::var(ctx_->nvars(), var));
    acc.push_back({std::move(m), t.coeff * Scalar::of_int(ctx_->field, e)});
  }
  return from_terms(ctx_, order_, std::move(acc));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  require(images.size() == ctx_->nvars(), ErrKind::LengthMismatch,
          "substitute needs one image per variable");
  require(!images.empty(), ErrKind::LengthMismatch, "empty substitution");
  const CtxPtr& tctx = images[0].ctx();
  const MonomialOrder& torder = images[0].order();
  for (const auto& g : images) {
    require(same_ctx(g.ctx(), tctx) && g.order() == torder, ErrKind::ContextMismatch,
            "substitution images live in different rings");
  }
  // cache powers of each image
  std::vector<std::vector<Polynomial>> pows(images.size());
  auto power_of = [&](size_t i, uint32_t e) -> const Polynomial& {
    auto& cache = pows[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(tctx, torder, Scalar::one(tctx->field)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial acc = Polynomial::zero(tctx, torder);
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(tctx, torder, Scalar::of_int(tctx->field, 1));
    for (size_t i = 0; i < images.size(); ++i) {
      if (t.mono[i]) prod = prod * power_of(i, t.mono[i]);
    }
    Scalar c = t.coeff;
    if (tctx->field != ctx_->field) {
      // only Q -> Fp coercion is meaningful here
      require(ctx_->field.kind == FieldKind::Rationals, ErrKind::FieldMismatch,
              "cannot coerce coefficients");
      c = Scalar::of_fraction(tctx->field, t.coeff.rational().get_num(),
                              t.coeff.rational().get_den());
    }
    acc = acc + prod.scale(c);
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || lc().is_one()) return *this;
  return scale(lc().inverse());
}

Polynomial Polynomial::normalized_primitive() const {
  if (is_zero()) return *this;
  if (ctx_->field.kind == FieldKind::PrimeField) return monic();
  // clear denominators, divide by integer content, make the lead positive
  mpz_class den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_class d = t.coeff.rational().get_den();
    den_lcm = den_lcm / gcd(den_lcm, d) * d;
  }
  mpz_class num_gcd = 0;
  for (const auto& t : terms_) {
    mpz_class n = t.coeff.rational().get_num() * (den_lcm / t.coeff.rational().get_den());
    num_gcd = gcd(num_gcd, n);
  }
  if (num_gcd == 0) num_gcd = 1;
  mpq_class f(den_lcm, num_gcd);
  f.canonicalize();
  if (lc().rational() < 0) f = -f;
  Scalar s = Scalar::of_fraction(ctx_->field, f.get_num(), f.get_den());
  return scale(s);
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const bool rationals = ctx_->field.kind == FieldKind::Rationals;
  for (const auto& t : terms_) {
    Scalar c = t.coeff;
    if (first) {
      if (rationals && c.sgn() < 0) {
        os << "-";
        c = c.neg();
      }
      first = false;
    } else {
      if (rationals && c.sgn() < 0) {
        os << " - ";
        c = c.neg();
      } else {
        os << " + ";
      }
    }
    if (t.mono.is_one()) {
      os << c.str();
    } else {
      bool printed = false;
      if (!c.is_one()) {
        os << c.str() << "*";
      }
      for (size_t i = 0; i < ctx_->nvars(); ++i) {
        uint32_t e = t.mono[i];
        if (!e) continue;
        if (printed) os << "*";
        os << ctx_->variables[i];
        if (e > 1) os << "^" << e;
        printed = true;
      }
    }
  }
  return os.str();
}

std::optional<Bidegree> try_bidegree(const Polynomial& p) {
  const auto& ctx = *p.ctx();
  if (!ctx.block_split) return std::nullopt;
  size_t s = *ctx.block_split;
  if (p.is_zero()) return Bidegree{0, 0};
  Bidegree d{p.terms()[0].mono.degree_on(0, s), p.terms()[0].mono.degree_on(s, ctx.nvars())};
  for (const auto& t : p.terms()) {
    if (t.mono.degree_on(0, s) != d.x || t.mono.degree_on(s, ctx.nvars()) != d.y)
      return std::nullopt;
  }
  return d;
}

Bidegree bidegree_of(const Polynomial& p) {
  require(p.ctx()->block_split.has_value(), ErrKind::NotBihomogeneous,
          "ring has no block split");
  auto d = try_bidegree(p);
  require(d.has_value(), ErrKind::NotBihomogeneous, "polynomial is not bihomogeneous: " + p.str());
  return *d;
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& d) {
  require(!d.is_zero(), ErrKind::DivisionByZero, "exact division by zero");
  Polynomial rem = p.resorted(d.order());
  Polynomial quot(p.ctx(), d.order());
  std::vector<Term> qterms;
  while (!rem.is_zero()) {
    require(d.lm().divides(rem.lm()), ErrKind::Internal,
            "exact division failed: " + d.str() + " does not divide " + p.str());
    Monomial m = rem.lm().div(d.lm());
    Scalar c = rem.lc() / d.lc();
    qterms.push_back({m, c});
    rem = rem - d.mul_term(m, c);
  }
  return Polynomial::from_terms(p.ctx(), d.order(), std::move(qterms)).resorted(p.order());
}

} // namespace birat
