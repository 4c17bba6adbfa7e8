#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "birat/config.hpp"
#include "birat/parse.hpp"
#include "birat/resolve.hpp"

using namespace birat;

namespace {

const Config cfg;

CtxPtr qctx(std::vector<std::string> vars, std::optional<size_t> split = std::nullopt) {
  return make_context(FieldSpec::rationals(), std::move(vars), split);
}

Polynomial P(const CtxPtr& ctx, const std::string& s) { return parse_polynomial(s, ctx); }

FreeResolution resolve_strings(const CtxPtr& ctx, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(P(ctx, g));
  return minimal_free_resolution(presentation_of_ideal(ps), cfg);
}

// Taylor complex of a monomial ideal, as a (generally non-minimal) resolution
// of the ideal; independent brute-force oracle for small inputs.
FreeResolution taylor_complex(const CtxPtr& ctx, const std::vector<Polynomial>& gens) {
  size_t k = gens.size();
  REQUIRE(k <= 16);
  std::vector<std::vector<uint64_t>> subsets_by_size(k + 1);
  for (uint64_t s = 1; s < (1ull << k); ++s) {
    subsets_by_size[(size_t)__builtin_popcountll(s)].push_back(s);
  }
  auto lcm_of = [&](uint64_t s) {
    Monomial l(ctx->nvars());
    for (size_t i = 0; i < k; ++i) {
      if ((s >> i) & 1) l = Monomial::lcm(l, gens[i].lm());
    }
    return l;
  };
  FreeResolution res;
  res.ctx = ctx;
  res.ambient_degrees = {GDeg{0, 0}};
  MonomialOrder ord = MonomialOrder::grevlex();
  // level 0: the generators themselves
  {
    ResStep st;
    PolyMatrix m(ctx, ord, 1, k);
    for (size_t i = 0; i < k; ++i) {
      m.set(0, i, gens[i]);
      st.twists.push_back(GDeg{(int64_t)gens[i].lm().degree(), 0});
    }
    st.mat = std::move(m);
    res.steps.push_back(std::move(st));
  }
  for (size_t lvl = 2; lvl <= k; ++lvl) {
    const auto& rows = subsets_by_size[lvl - 1];
    const auto& cols = subsets_by_size[lvl];
    if (cols.empty()) break;
    ResStep st;
    PolyMatrix m(ctx, ord, rows.size(), cols.size());
    for (size_t c = 0; c < cols.size(); ++c) {
      uint64_t s = cols[c];
      st.twists.push_back(GDeg{(int64_t)lcm_of(s).degree(), 0});
      int pos = 0;
      for (size_t i = 0; i < k; ++i) {
        if (!((s >> i) & 1)) continue;
        uint64_t sub = s & ~(1ull << i);
        size_t r = (size_t)(std::find(rows.begin(), rows.end(), sub) - rows.begin());
        Monomial q = lcm_of(s).div(lcm_of(sub));
        Scalar coef = Scalar::of_int(ctx->field, pos % 2 == 0 ? 1 : -1);
        m.set(r, c, Polynomial::monomial(ctx, ord, q, coef));
        ++pos;
      }
    }
    st.mat = std::move(m);
    res.steps.push_back(std::move(st));
  }
  return res;
}

} // namespace

TEST_CASE("classical resolutions") {
  auto ctx = qctx({"x", "y"});
  // 0 -> R(-3)^2 -> R(-2)^3 -> I -> 0
  FreeResolution v = resolve_strings(ctx, {"x^2", "x*y", "y^2"});
  REQUIRE(v.steps.size() == 2);
  CHECK(v.steps[0].twists == std::vector<GDeg>{GDeg{2, 0}, GDeg{2, 0}, GDeg{2, 0}});
  CHECK(v.steps[1].twists == std::vector<GDeg>{GDeg{3, 0}, GDeg{3, 0}});
  BettiTable bt = betti_table(v);
  CHECK(regularity(bt) == 2);
  CHECK(projective_dimension(bt) == 1);       // of the ideal
  CHECK(depth_of_quotient(bt, 2) == 0);       // pd(R/I) = 2

  FreeResolution pr = resolve_strings(ctx, {"x"});
  REQUIRE(pr.steps.size() == 1);
  CHECK(pr.steps[0].twists == std::vector<GDeg>{GDeg{1, 0}});

  auto c3 = qctx({"x", "y", "z"});
  FreeResolution koszul = resolve_strings(c3, {"x", "y", "z"});
  CHECK(koszul.length() == 2);
  BettiTable kb = betti_table(koszul);
  CHECK(kb.beta(0, 1) == 3);
  CHECK(kb.beta(1, 2) == 3);
  CHECK(kb.beta(2, 3) == 1);
  CHECK(depth_of_quotient(kb, 3) == 0);
}

TEST_CASE("resolution of the zero ideal is empty") {
  auto ctx = qctx({"x", "y"});
  FreeResolution r = resolve_ideal(Ideal::zero(ctx), cfg);
  CHECK(r.steps.empty());
  BettiTable bt = betti_table(r);
  CHECK(bt.entries.empty());
  CHECK(projective_dimension(bt) == -1);
  CHECK(depth_of_quotient(bt, 2) == 2);
}

TEST_CASE("first twists match minimal generator degrees") {
  auto ctx = qctx({"x", "y", "z"});
  FreeResolution r = resolve_strings(ctx, {"x^2", "x^2 + y^2", "y^2", "x^3*y", "y^5"});
  std::vector<int64_t> degs;
  for (const auto& t : r.steps[0].twists) degs.push_back(t.total());
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<int64_t>{2, 2}); // everything else is redundant
}

TEST_CASE("taylor complex minimization agrees with the engine") {
  Rng rng(777);
  for (int iter = 0; iter < 18; ++iter) {
    size_t nvars = 2 + rng.below(3); // 2..4
    std::vector<std::string> names;
    for (size_t i = 0; i < nvars; ++i) names.push_back("v" + std::to_string(i));
    auto ctx = qctx(names);
    size_t ngens = 2 + rng.below(5); // 2..6
    std::vector<Polynomial> gens;
    for (size_t g = 0; g < ngens; ++g) {
      std::vector<uint32_t> e(nvars, 0);
      bool nz = false;
      for (size_t v = 0; v < nvars; ++v) {
        e[v] = (uint32_t)rng.below(4);
        nz |= e[v] > 0;
      }
      if (!nz) e[0] = 1;
      gens.push_back(
          Polynomial::monomial(ctx, MonomialOrder::grevlex(), Monomial(e), Scalar::one(ctx->field)));
    }
    // dedupe equal monomials to keep the Taylor complex honest
    std::sort(gens.begin(), gens.end(),
              [](const Polynomial& a, const Polynomial& b) { return a.str() < b.str(); });
    gens.erase(std::unique(gens.begin(), gens.end(),
                           [](const Polynomial& a, const Polynomial& b) { return a == b; }),
               gens.end());

    FreeResolution taylor = taylor_complex(ctx, gens);
    minimize(taylor);
    BettiTable oracle = betti_table(taylor);
    BettiTable engine = betti_table(minimal_free_resolution(presentation_of_ideal(gens), cfg));
    CHECK(oracle.entries == engine.entries);
  }
}

TEST_CASE("pd respects the Hilbert syzygy bound on random ideals") {
  Rng rng(909);
  auto ctx = qctx({"x", "y", "z"});
  for (int iter = 0; iter < 10; ++iter) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 3; ++g) {
      std::vector<Term> ts;
      for (int t = 0; t < 3; ++t) {
        std::vector<uint32_t> e(3, 0);
        for (int rep = 0; rep < 2; ++rep) e[rng.below(3)] += 1;
        ts.push_back({Monomial(e), Scalar::of_int(ctx->field, (long)rng.in_range(-4, 4))});
      }
      Polynomial p = Polynomial::from_terms(ctx, MonomialOrder::grevlex(), std::move(ts));
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    FreeResolution r = minimal_free_resolution(presentation_of_ideal(gens), cfg);
    CHECK(r.length() + 1 <= 3); // pd(R/I) <= #vars
    CHECK(resolution_is_minimal(r));
  }
}

TEST_CASE("bigraded betti of small presentation ideals") {
  // complete intersection x Y0 - y Y1, z Y2 - y Y1
  auto ctx = qctx({"x", "y", "z", "Y0", "Y1", "Y2"}, 3);
  std::vector<Polynomial> ci = {P(ctx, "x*Y0 - y*Y1"), P(ctx, "z*Y2 - y*Y1")};
  BettiTable bt = bigraded_betti(presentation_of_ideal(ci), cfg);
  CHECK(bt.bigraded);
  CHECK(bt.entries.at({0, {1, 1}}) == 2);
  CHECK(bt.entries.at({1, {2, 2}}) == 1);

  // Veronese Rees ideal: two (1,1) generators and one (0,2)
  auto c2 = qctx({"x", "y", "Y0", "Y1", "Y2"}, 2);
  std::vector<Polynomial> rees = {P(c2, "x*Y1 - y*Y0"), P(c2, "x*Y2 - y*Y1"),
                                  P(c2, "Y0*Y2 - Y1^2")};
  BettiTable vb = bigraded_betti(presentation_of_ideal(rees), cfg);
  CHECK(vb.entries.at({0, {1, 1}}) == 2);
  CHECK(vb.entries.at({0, {0, 2}}) == 1);
  CHECK(vb.entries.size() >= 3);
}

TEST_CASE("betti_table rejects non-minimal resolutions") {
  auto ctx = qctx({"x", "y"});
  std::vector<Polynomial> gens = {P(ctx, "x^2"), P(ctx, "x*y"), P(ctx, "x^2*y")};
  FreeResolution taylor = taylor_complex(ctx, gens); // has unit entries
  bool hit = false;
  try {
    betti_table(taylor);
  } catch (const Error& e) {
    hit = e.kind() == ErrKind::NotMinimal;
  }
  CHECK(hit);
  minimize(taylor);
  CHECK(resolution_is_minimal(taylor));
}

TEST_CASE("bigraded betti rejects non-bihomogeneous columns") {
  auto ctx = qctx({"x", "y", "Y0", "Y1"}, 2);
  std::vector<Polynomial> bad = {P(ctx, "x*Y0 + Y1")};
  bool hit = false;
  try {
    bigraded_betti(presentation_of_ideal(bad), cfg);
  } catch (const Error& e) {
    hit = e.kind() == ErrKind::NotBihomogeneous;
  }
  CHECK(hit);
  auto plain = qctx({"x", "y"});
  std::vector<Polynomial> nosplit = {P(plain, "x")};
  bool hit2 = false;
  try {
    bigraded_betti(presentation_of_ideal(nosplit), cfg);
  } catch (const Error& e) {
    hit2 = e.kind() == ErrKind::NotBihomogeneous;
  }
  CHECK(hit2);
}

TEST_CASE("minimize is the identity on already-minimal resolutions") {
  auto ctx = qctx({"x", "y", "z"});
  FreeResolution r = resolve_strings(ctx, {"y*z", "x*z", "x*y"});
  BettiTable before = betti_table(r);
  minimize(r);
  CHECK(betti_table(r).entries == before.entries);
}
