#pragma once

#include <functional>
#include <vector>

#include "birat/poly.hpp"

namespace birat {

class PolyMatrix {
public:
  PolyMatrix() = default;
  PolyMatrix(CtxPtr ctx, MonomialOrder order, size_t rows, size_t cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const CtxPtr& ctx() const { return ctx_; }
  const MonomialOrder& order() const { return order_; }

  const Polynomial& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  void set(size_t i, size_t j, Polynomial p);

  PolyMatrix transpose() const;
  PolyMatrix select(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const;
  std::vector<Polynomial> apply(const std::vector<Polynomial>& v) const; // M * v

  bool is_zero() const;

private:
  CtxPtr ctx_;
  MonomialOrder order_ = MonomialOrder::grevlex();
  size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial> a_;
};

// Fraction-free determinant (Bareiss with pivot search); exact over a domain.
Polynomial det_bareiss(const PolyMatrix& m);

// Rank over the quotient domain defined by `is_zero`: fraction-free Bareiss
// where entries stay honest minors of the input, so vanishing tests against
// the quotient decide the rank. Passing an always-false test gives plain rank.
size_t rank_bareiss(const PolyMatrix& m, const std::function<bool(const Polynomial&)>& is_zero);

// Entry (i,j) = d polys[i] / d wrt[j].
PolyMatrix jacobian(const std::vector<Polynomial>& polys, const std::vector<size_t>& wrt);

} // namespace birat
