#pragma once

#include <optional>
#include <string>
#include <vector>

#include "birat/ring.hpp"

namespace birat {

struct Term {
  Monomial mono;
  Scalar coeff;
  bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
};

// Sparse multivariate polynomial: terms sorted strictly descending under the
// attached reference order. Re-sorting on an order change is explicit
// (resorted()), never implicit; binary operations require matching orders.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(CtxPtr ctx, MonomialOrder order) : ctx_(std::move(ctx)), order_(std::move(order)) {}

  static Polynomial zero(CtxPtr ctx, const MonomialOrder& order);
  static Polynomial constant(CtxPtr ctx, const MonomialOrder& order, const Scalar& c);
  static Polynomial variable(CtxPtr ctx, const MonomialOrder& order, size_t i);
  static Polynomial monomial(CtxPtr ctx, const MonomialOrder& order, Monomial m, Scalar c);
  // normalizes: combines duplicates, drops zeros, sorts descending
  static Polynomial from_terms(CtxPtr ctx, const MonomialOrder& order, std::vector<Term> terms);

  const CtxPtr& ctx() const { return ctx_; }
  const MonomialOrder& order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  size_t nterms() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& lt() const;
  const Monomial& lm() const { return lt().mono; }
  const Scalar& lc() const { return lt().coeff; }

  Polynomial resorted(const MonomialOrder& order) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial neg() const;
  Polynomial scale(const Scalar& c) const;
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(uint32_t e) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // -1 for the zero polynomial
  int64_t degree() const;
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  Polynomial derivative(size_t var) const;

  // Substitute images[i] for variable i; the images fix the target ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  // leading coefficient 1
  Polynomial monic() const;
  // over Q: integer content removed and leading sign positive; over Fp: monic
  Polynomial normalized_primitive() const;

  std::string str() const;

private:
  void check_compat(const Polynomial& o) const;

  CtxPtr ctx_;
  MonomialOrder order_ = MonomialOrder::grevlex();
  std::vector<Term> terms_;
};

// Bidegree of a bihomogeneous polynomial; NotBihomogeneous otherwise.
Bidegree bidegree_of(const Polynomial& p);
std::optional<Bidegree> try_bidegree(const Polynomial& p);

// Exact division: q such that q * d == p; Internal error if not divisible.
Polynomial divide_exact(const Polynomial& p, const Polynomial& d);

} // namespace birat
