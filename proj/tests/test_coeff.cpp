#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "birat/config.hpp"
#include "birat/field.hpp"

using namespace birat;

TEST_CASE("field spec parsing round-trips") {
  CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("Fp:32003").characteristic == 32003);
  CHECK(FieldSpec::parse("Fp:7").str() == "Fp:7");
  CHECK_THROWS_AS(FieldSpec::parse("Fp:32004"), Error); // composite
  CHECK_THROWS_AS(FieldSpec::parse("R"), Error);
}

TEST_CASE("exact fraction arithmetic") {
  FieldSpec q = FieldSpec::rationals();
  Scalar half = Scalar::of_fraction(q, 1, 2);
  Scalar third = Scalar::of_fraction(q, 1, 3);
  CHECK((half + third).str() == "5/6");
  CHECK((half * Scalar::zero(q)).is_zero());
  // canonical form: 2/4 equals 1/2 on the nose
  CHECK(Scalar::of_fraction(q, 2, 4) == half);
  CHECK(Scalar::of_fraction(q, -3, -6) == half);
  CHECK_THROWS_AS(half / Scalar::zero(q), Error);
}

TEST_CASE("prime field arithmetic") {
  FieldSpec f7 = FieldSpec::prime_field(7);
  Scalar three = Scalar::of_int(f7, 3);
  Scalar five = Scalar::of_int(f7, 5);
  // 3/5 = 2 in F7 since 2*5 = 10 = 3
  CHECK((three / five) == Scalar::of_int(f7, 2));
  CHECK((three * five) == Scalar::of_int(f7, 1));
  CHECK(Scalar::of_int(f7, -1) == Scalar::of_int(f7, 6));
  CHECK_THROWS_AS(three / Scalar::zero(f7), Error);
  FieldSpec f5 = FieldSpec::prime_field(5);
  CHECK_THROWS_AS(three + Scalar::of_int(f5, 1), Error); // field mismatch
}

TEST_CASE("ring axioms hold on random triples") {
  Rng rng(12345);
  FieldSpec q = FieldSpec::rationals();
  FieldSpec fp = FieldSpec::prime_field(32003);
  for (int iter = 0; iter < 200; ++iter) {
    auto rnd = [&](const FieldSpec& f) {
      long num = (long)rng.in_range(-40, 40);
      long den = (long)rng.in_range(1, 12);
      return Scalar::of_fraction(f, num, den);
    };
    for (const FieldSpec& f : {q, fp}) {
      Scalar a = rnd(f), b = rnd(f), c = rnd(f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a + a.neg() == Scalar::zero(f));
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(f));
    }
  }
}

TEST_CASE("deterministic rng is stable") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(7);
  for (int i = 0; i < 100; ++i) {
    int64_t v = c.in_range(-50, 50);
    CHECK(v >= -50);
    CHECK(v <= 50);
  }
}
