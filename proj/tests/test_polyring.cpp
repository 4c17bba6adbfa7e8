#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "birat/config.hpp"
#include "birat/matrix.hpp"
#include "birat/parse.hpp"

using namespace birat;

namespace {

CtxPtr qctx(std::vector<std::string> vars, std::optional<size_t> split = std::nullopt) {
  return make_context(FieldSpec::rationals(), std::move(vars), split);
}

Polynomial P(const CtxPtr& ctx, const std::string& s) { return parse_polynomial(s, ctx); }

Monomial random_monomial(Rng& rng, size_t nvars, uint32_t max_exp) {
  std::vector<uint32_t> e(nvars);
  for (auto& v : e) v = (uint32_t)rng.below(max_exp + 1);
  return Monomial(std::move(e));
}

Polynomial random_poly(Rng& rng, const CtxPtr& ctx, int terms, uint32_t max_exp) {
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    long c = (long)rng.in_range(-9, 9);
    ts.push_back({random_monomial(rng, ctx->nvars(), max_exp), Scalar::of_int(ctx->field, c)});
  }
  return Polynomial::from_terms(ctx, MonomialOrder::grevlex(), std::move(ts));
}

} // namespace

TEST_CASE("parsing basics and error paths") {
  auto ctx = qctx({"x0", "x1", "x2"});
  CHECK(P(ctx, "x1*x2").str() == "x1*x2");
  auto ctx2 = qctx({"x", "y", "z"});
  Polynomial p = P(ctx2, "y^2*z - x^3");
  CHECK(p.nterms() == 2);
  CHECK(p.degree() == 3);
  CHECK_THROWS_AS(P(ctx2, "abc"), Error);      // undeclared token, no implicit product
  CHECK_THROWS_AS(P(ctx2, "x +"), Error);      // syntax
  CHECK_THROWS_AS(P(ctx2, "(x"), Error);       // unbalanced
  CHECK(P(ctx2, "1/2*x + 1/2*x") == P(ctx2, "x"));
  CHECK(P(ctx2, "(x+y)^2") == P(ctx2, "x^2 + 2*x*y + y^2"));
  CHECK(P(ctx2, "x - x").is_zero());
}

TEST_CASE("parse then print is the identity on random polynomials") {
  auto ctx = qctx({"x", "y", "z", "w"});
  Rng rng(2024);
  for (int i = 0; i < 120; ++i) {
    Polynomial p = random_poly(rng, ctx, 6, 4);
    CHECK(parse_polynomial(p.str(), ctx) == p);
  }
  // and over a prime field
  auto fctx = make_context(FieldSpec::prime_field(101), {"x", "y"});
  for (int i = 0; i < 60; ++i) {
    std::vector<Term> ts;
    for (int t = 0; t < 5; ++t) {
      ts.push_back({random_monomial(rng, 2, 5),
                    Scalar::of_int(fctx->field, (long)rng.below(101))});
    }
    Polynomial p = Polynomial::from_terms(fctx, MonomialOrder::grevlex(), std::move(ts));
    CHECK(parse_polynomial(p.str(), fctx) == p);
  }
}

TEST_CASE("polynomial arithmetic identities") {
  auto ctx = qctx({"x", "y"});
  CHECK(P(ctx, "x+y") * P(ctx, "x-y") == P(ctx, "x^2 - y^2"));
  CHECK(P(ctx, "x+y").pow(0) == P(ctx, "1"));
  CHECK(P(ctx, "x+y").pow(3) == P(ctx, "x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
  auto ctx3 = qctx({"x", "y", "z"});
  CHECK(P(ctx3, "y*z") * P(ctx3, "x*z") == P(ctx3, "x*y*z^2"));
}

TEST_CASE("monomial order laws on random triples") {
  Rng rng(99);
  size_t nvars = 4;
  std::vector<MonomialOrder> orders = {
      MonomialOrder::lex(), MonomialOrder::grevlex(),
      MonomialOrder::block_elim({0, 2}, nvars),
      MonomialOrder::weighted({3, 1, 4, 1})};
  Monomial one(nvars);
  for (const auto& ord : orders) {
    for (int i = 0; i < 300; ++i) {
      Monomial a = random_monomial(rng, nvars, 5);
      Monomial b = random_monomial(rng, nvars, 5);
      Monomial c = random_monomial(rng, nvars, 5);
      int ab = ord.compare(a, b);
      // antisymmetry and totality
      CHECK(ab == -ord.compare(b, a));
      if (!(a == b)) CHECK(ab != 0);
      // multiplicativity: a > b implies ac > bc
      if (ab > 0) CHECK(ord.compare(a.times(c), b.times(c)) > 0);
      // well order: 1 is minimal
      if (!(a == one)) CHECK(ord.compare(a, one) > 0);
    }
  }
}

TEST_CASE("block order eliminates the outer variables") {
  // outer block dominates: any monomial with outer support beats any without
  size_t nvars = 3;
  auto ord = MonomialOrder::block_elim({0}, nvars);
  Monomial t = Monomial::var(nvars, 0);
  Monomial xy = Monomial::var(nvars, 1).times(Monomial::var(nvars, 2).pow(9));
  CHECK(ord.compare(t, xy) > 0);
}

TEST_CASE("bidegrees") {
  auto ctx = qctx({"x", "y", "z", "Y0", "Y1", "Y2"}, 3);
  CHECK(bidegree_of(P(ctx, "x*Y0 - y*Y1")) == Bidegree{1, 1});
  CHECK(bidegree_of(P(ctx, "Y0*Y2 - Y1^2")) == Bidegree{0, 2});
  CHECK_THROWS_AS(bidegree_of(P(ctx, "x*Y0 + Y1")), Error);
  auto plain = qctx({"x", "y"});
  CHECK_THROWS_AS(bidegree_of(P(plain, "x")), Error); // no block split
}

TEST_CASE("jacobian matrices") {
  auto ctx = qctx({"x", "y", "z", "Y0", "Y1", "Y2"}, 3);
  auto p1 = P(ctx, "x*Y0 - y*Y1");
  auto p2 = P(ctx, "z*Y2 - y*Y1");
  PolyMatrix m = jacobian({p1, p2}, {0, 1, 2});
  CHECK(m.at(0, 0) == P(ctx, "Y0"));
  CHECK(m.at(0, 1) == P(ctx, "-Y1"));
  CHECK(m.at(0, 2).is_zero());
  CHECK(m.at(1, 0).is_zero());
  CHECK(m.at(1, 1) == P(ctx, "-Y1"));
  CHECK(m.at(1, 2) == P(ctx, "Y2"));

  auto cx = qctx({"x", "y"});
  CHECK(jacobian({P(cx, "x^2")}, {0}).at(0, 0) == P(cx, "2*x"));
  CHECK(jacobian({P(cx, "y")}, {0}).at(0, 0).is_zero());
}

TEST_CASE("product rule for formal derivatives") {
  auto ctx = qctx({"x", "y", "z"});
  Rng rng(5150);
  for (int i = 0; i < 60; ++i) {
    Polynomial p = random_poly(rng, ctx, 4, 3);
    Polynomial q = random_poly(rng, ctx, 4, 3);
    for (size_t v = 0; v < 3; ++v) {
      Polynomial lhs = (p * q).derivative(v);
      Polynomial rhs = p * q.derivative(v) + q * p.derivative(v);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("bareiss determinant and rank") {
  auto ctx = qctx({"x", "y"});
  PolyMatrix m(ctx, MonomialOrder::grevlex(), 2, 2);
  m.set(0, 0, P(ctx, "x"));
  m.set(0, 1, P(ctx, "y"));
  m.set(1, 0, P(ctx, "y"));
  m.set(1, 1, P(ctx, "x"));
  CHECK(det_bareiss(m) == P(ctx, "x^2 - y^2"));
  auto never = [](const Polynomial&) { return false; };
  CHECK(rank_bareiss(m, never) == 2);
  PolyMatrix sing(ctx, MonomialOrder::grevlex(), 2, 2);
  sing.set(0, 0, P(ctx, "x"));
  sing.set(0, 1, P(ctx, "y"));
  sing.set(1, 0, P(ctx, "x*y"));
  sing.set(1, 1, P(ctx, "y^2"));
  CHECK(det_bareiss(sing).is_zero());
  CHECK(rank_bareiss(sing, never) == 1);
  // 3x3 with a zero row needs pivoting
  PolyMatrix z(ctx, MonomialOrder::grevlex(), 3, 3);
  z.set(1, 0, P(ctx, "1"));
  z.set(0, 1, P(ctx, "x"));
  z.set(2, 2, P(ctx, "y"));
  CHECK(det_bareiss(z) == P(ctx, "-x*y"));
}

TEST_CASE("substitution") {
  auto yctx = qctx({"Y0", "Y1", "Y2"});
  auto xctx = qctx({"x", "y", "z"});
  Polynomial g = P(yctx, "Y0*Y2 - Y1^2");
  std::vector<Polynomial> images = {P(xctx, "x^2"), P(xctx, "x*y"), P(xctx, "y^2")};
  CHECK(g.substitute(images).is_zero());
  Polynomial h = P(yctx, "Y0 + Y1 + Y2");
  CHECK(h.substitute(images) == P(xctx, "x^2 + x*y + y^2"));
}
