#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "birat/field.hpp"

namespace birat {

// Ambient polynomial ring data. block_split = s marks the first s variables
// as the X block and the rest as the Y block (the standard bigrading).
struct RingContext {
  FieldSpec field;
  std::vector<std::string> variables;
  std::optional<size_t> block_split;

  size_t nvars() const { return variables.size(); }
  std::optional<size_t> var_index(const std::string& name) const;
  bool same(const RingContext& o) const {
    return field == o.field && variables == o.variables && block_split == o.block_split;
  }
};

using CtxPtr = std::shared_ptr<const RingContext>;

CtxPtr make_context(FieldSpec field, std::vector<std::string> variables,
                    std::optional<size_t> block_split = std::nullopt);

inline bool same_ctx(const CtxPtr& a, const CtxPtr& b) {
  return a == b || (a && b && a->same(*b));
}

struct Bidegree {
  uint64_t x = 0;
  uint64_t y = 0;
  bool operator==(const Bidegree& o) const { return x == o.x && y == o.y; }
};

class Monomial {
public:
  Monomial() = default;
  explicit Monomial(size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<uint32_t> exps) : e_(std::move(exps)) {}
  static Monomial var(size_t nvars, size_t i, uint32_t e = 1);

  size_t nvars() const { return e_.size(); }
  uint32_t operator[](size_t i) const { return e_[i]; }
  const std::vector<uint32_t>& exponents() const { return e_; }

  uint64_t degree() const;
  uint64_t degree_on(size_t lo, size_t hi) const; // sum of exponents in [lo, hi)

  bool is_one() const;
  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const; // this | o
  Monomial div(const Monomial& o) const; // this / o, pre: o | this
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;
  Monomial pow(uint32_t k) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
  std::vector<uint32_t> e_;
};

// Total, multiplicative well-orders on monomials. Block orders compare group
// by group and realize elimination (outer block dominates).
class MonomialOrder {
public:
  enum class Kind { Lex, GrevLex, Block, Weighted };

  static MonomialOrder lex();
  static MonomialOrder grevlex();
  // outer variables dominate; grevlex within each of the two groups
  static MonomialOrder block_elim(std::vector<size_t> outer, size_t nvars);
  static MonomialOrder weighted(std::vector<int64_t> weights, Kind tiebreak = Kind::GrevLex);

  Kind kind() const { return kind_; }
  // >0 if a > b, 0 if equal, <0 if a < b
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string key() const; // canonical cache key
  bool operator==(const MonomialOrder& o) const { return key() == o.key(); }
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

private:
  Kind kind_ = Kind::GrevLex;
  std::vector<int64_t> weights_;
  Kind tiebreak_ = Kind::GrevLex;
  std::vector<std::vector<size_t>> groups_; // Block: comparison order
};

} // namespace birat
