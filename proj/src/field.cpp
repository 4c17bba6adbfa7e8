#include "birat/field.hpp"

#include <sstream>

namespace birat {

const char* err_kind_name(ErrKind k) {
  switch (k) {
    case ErrKind::DivisionByZero: return "DivisionByZero";
    case ErrKind::FieldMismatch: return "FieldMismatch";
    case ErrKind::SyntaxError: return "SyntaxError";
    case ErrKind::UnknownVariable: return "UnknownVariable";
    case ErrKind::ContextMismatch: return "ContextMismatch";
    case ErrKind::NotHomogeneous: return "NotHomogeneous";
    case ErrKind::NotBihomogeneous: return "NotBihomogeneous";
    case ErrKind::ResourceLimit: return "ResourceLimit";
    case ErrKind::UnitIdeal: return "UnitIdeal";
    case ErrKind::NotMinimal: return "NotMinimal";
    case ErrKind::EmptyLinearPart: return "EmptyLinearPart";
    case ErrKind::NoRankNSubmatrix: return "NoRankNSubmatrix";
    case ErrKind::LengthMismatch: return "LengthMismatch";
    case ErrKind::GradeTooSmall: return "GradeTooSmall";
    case ErrKind::NoFullRankSubmatrix: return "NoFullRankSubmatrix";
    case ErrKind::NotSaturated: return "NotSaturated";
    case ErrKind::WrongCodimension: return "WrongCodimension";
    case ErrKind::NotMonomial: return "NotMonomial";
    case ErrKind::NoReductionFound: return "NoReductionFound";
    case ErrKind::UnsupportedSource: return "UnsupportedSource";
    case ErrKind::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

uint64_t pow_mod_u64(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = (__uint128_t)r * b % m;
    b = (__uint128_t)b * b % m;
    e >>= 1;
  }
  return r;
}

} // namespace

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % q == 0) return n == q;
  }
  // deterministic Miller-Rabin for n < 3,215,031,751
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
    uint64_t x = pow_mod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = (__uint128_t)x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime_field(uint32_t p) {
  require(p >= 2 && p < (1u << 31) && is_prime_u32(p), ErrKind::FieldMismatch,
          "characteristic must be a prime < 2^31, got " + std::to_string(p));
  return FieldSpec{FieldKind::PrimeField, p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    const std::string num = text.substr(3);
    require(!num.empty() && num.find_first_not_of("0123456789") == std::string::npos,
            ErrKind::SyntaxError, "bad field spec '" + text + "'");
    unsigned long v = std::stoul(num);
    require(v < (1ul << 31), ErrKind::FieldMismatch, "characteristic out of range in '" + text + "'");
    return prime_field(static_cast<uint32_t>(v));
  }
  fail(ErrKind::SyntaxError, "field spec must be \"Q\" or \"Fp:<prime>\", got '" + text + "'");
}

std::string FieldSpec::str() const {
  if (kind == FieldKind::Rationals) return "Q";
  return "Fp:" + std::to_string(characteristic);
}

uint32_t fp_add(uint32_t a, uint32_t b, uint32_t p) {
  uint64_t s = (uint64_t)a + b;
  return s >= p ? (uint32_t)(s - p) : (uint32_t)s;
}

uint32_t fp_sub(uint32_t a, uint32_t b, uint32_t p) {
  return a >= b ? a - b : (uint32_t)(a + (uint64_t)p - b);
}

uint32_t fp_mul(uint32_t a, uint32_t b, uint32_t p) { return (uint32_t)((uint64_t)a * b % p); }

uint32_t fp_inv(uint32_t a, uint32_t p) {
  require(a % p != 0, ErrKind::DivisionByZero, "inverse of 0 in Fp");
  // extended Euclid on (a, p)
  int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    int64_t q = r / nr;
    int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return (uint32_t)t;
}

Scalar Scalar::zero(const FieldSpec& f) {
  if (f.kind == FieldKind::Rationals) return Scalar(f, mpq_class(0));
  return Scalar(f, (uint32_t)0);
}

Scalar Scalar::one(const FieldSpec& f) {
  if (f.kind == FieldKind::Rationals) return Scalar(f, mpq_class(1));
  return Scalar(f, (uint32_t)(1 % f.characteristic));
}

Scalar Scalar::of_int(const FieldSpec& f, long v) { return of_mpz(f, mpz_class(v)); }

Scalar Scalar::of_mpz(const FieldSpec& f, const mpz_class& v) {
  if (f.kind == FieldKind::Rationals) return Scalar(f, mpq_class(v));
  mpz_class m = v % f.characteristic;
  if (m < 0) m += f.characteristic;
  return Scalar(f, (uint32_t)m.get_ui());
}

Scalar Scalar::of_fraction(const FieldSpec& f, const mpz_class& num, const mpz_class& den) {
  require(den != 0, ErrKind::DivisionByZero, "zero denominator");
  if (f.kind == FieldKind::Rationals) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(f, q);
  }
  Scalar n = of_mpz(f, num);
  Scalar d = of_mpz(f, den);
  return n / d;
}

void Scalar::check_same(const Scalar& o) const {
  require(spec_ == o.spec_, ErrKind::FieldMismatch,
          "mixed scalars from " + spec_.str() + " and " + o.spec_.str());
}

bool Scalar::is_zero() const {
  return spec_.kind == FieldKind::Rationals ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return spec_.kind == FieldKind::Rationals ? rat_ == 1 : res_ == 1 % spec_.characteristic;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  if (spec_.kind == FieldKind::Rationals) return Scalar(spec_, mpq_class(rat_ + o.rat_));
  return Scalar(spec_, fp_add(res_, o.res_, spec_.characteristic));
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  if (spec_.kind == FieldKind::Rationals) return Scalar(spec_, mpq_class(rat_ - o.rat_));
  return Scalar(spec_, fp_sub(res_, o.res_, spec_.characteristic));
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  if (spec_.kind == FieldKind::Rationals) return Scalar(spec_, mpq_class(rat_ * o.rat_));
  return Scalar(spec_, fp_mul(res_, o.res_, spec_.characteristic));
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  require(!o.is_zero(), ErrKind::DivisionByZero, "scalar division by zero");
  if (spec_.kind == FieldKind::Rationals) return Scalar(spec_, mpq_class(rat_ / o.rat_));
  return Scalar(spec_, fp_mul(res_, fp_inv(o.res_, spec_.characteristic), spec_.characteristic));
}

Scalar Scalar::neg() const {
  if (spec_.kind == FieldKind::Rationals) return Scalar(spec_, mpq_class(-rat_));
  return Scalar(spec_, res_ == 0 ? 0 : spec_.characteristic - res_);
}

Scalar Scalar::inverse() const { return one(spec_) / *this; }

bool Scalar::operator==(const Scalar& o) const {
  if (spec_ != o.spec_) return false;
  return spec_.kind == FieldKind::Rationals ? rat_ == o.rat_ : res_ == o.res_;
}

const mpq_class& Scalar::rational() const {
  require(spec_.kind == FieldKind::Rationals, ErrKind::FieldMismatch, "not a rational scalar");
  return rat_;
}

uint32_t Scalar::residue() const {
  require(spec_.kind == FieldKind::PrimeField, ErrKind::FieldMismatch, "not a residue scalar");
  return res_;
}

int Scalar::sgn() const {
  if (spec_.kind == FieldKind::Rationals) return ::sgn(rat_);
  return res_ == 0 ? 0 : 1;
}

std::string Scalar::str() const {
  if (spec_.kind == FieldKind::Rationals) {
    std::ostringstream os;
    os << rat_;
    return os.str();
  }
  return std::to_string(res_);
}

} // namespace birat
