#include "birat/matrix.hpp"

namespace birat {

PolyMatrix::PolyMatrix(CtxPtr ctx, MonomialOrder order, size_t rows, size_t cols)
    : ctx_(std::move(ctx)), order_(std::move(order)), rows_(rows), cols_(cols) {
  a_.assign(rows_ * cols_, Polynomial::zero(ctx_, order_));
}

void PolyMatrix::set(size_t i, size_t j, Polynomial p) {
  require(same_ctx(p.ctx(), ctx_), ErrKind::ContextMismatch, "matrix entry from wrong ring");
  a_[i * cols_ + j] = p.order() == order_ ? std::move(p) : p.resorted(order_);
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ctx_, order_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

PolyMatrix PolyMatrix::select(const std::vector<size_t>& rows,
                              const std::vector<size_t>& cols) const {
  PolyMatrix s(ctx_, order_, rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) s.set(i, j, at(rows[i], cols[j]));
  return s;
}

std::vector<Polynomial> PolyMatrix::apply(const std::vector<Polynomial>& v) const {
  require(v.size() == cols_, ErrKind::LengthMismatch, "matrix/vector size mismatch");
  std::vector<Polynomial> r;
  r.reserve(rows_);
  for (size_t i = 0; i < rows_; ++i) {
    Polynomial acc = Polynomial::zero(ctx_, order_);
    for (size_t j = 0; j < cols_; ++j) acc = acc + at(i, j) * v[j].resorted(order_);
    r.push_back(std::move(acc));
  }
  return r;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : a_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

Polynomial det_bareiss(const PolyMatrix& m) {
  require(m.rows() == m.cols(), ErrKind::LengthMismatch, "determinant of non-square matrix");
  size_t n = m.rows();
  const CtxPtr& ctx = m.ctx();
  const MonomialOrder& ord = m.order();
  if (n == 0) return Polynomial::constant(ctx, ord, Scalar::one(ctx->field));
  std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n, Polynomial::zero(ctx, ord)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  Polynomial prev = Polynomial::constant(ctx, ord, Scalar::one(ctx->field));
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      size_t piv = k;
      while (piv < n && a[piv][k].is_zero()) ++piv;
      if (piv == n) return Polynomial::zero(ctx, ord);
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Polynomial num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = divide_exact(num, prev);
      }
      a[i][k] = Polynomial::zero(ctx, ord);
    }
    prev = a[k][k];
  }
  Polynomial d = a[n - 1][n - 1];
  return sign < 0 ? d.neg() : d;
}

size_t rank_bareiss(const PolyMatrix& m,
                    const std::function<bool(const Polynomial&)>& is_zero) {
  size_t nr = m.rows(), nc = m.cols();
  if (nr == 0 || nc == 0) return 0;
  const CtxPtr& ctx = m.ctx();
  const MonomialOrder& ord = m.order();
  std::vector<std::vector<Polynomial>> a(nr, std::vector<Polynomial>(nc, Polynomial::zero(ctx, ord)));
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nc; ++j) a[i][j] = m.at(i, j);
  Polynomial prev = Polynomial::constant(ctx, ord, Scalar::one(ctx->field));
  size_t rank = 0;
  for (size_t k = 0; k < std::min(nr, nc); ++k) {
    // pivot: first entry (row-major) of the trailing block that is nonzero in
    // the quotient; entries are honest minors of the input, so this test is
    // exactly the bordering-minor rank criterion
    size_t pi = nr, pj = nc;
    for (size_t i = k; i < nr && pi == nr; ++i) {
      for (size_t j = k; j < nc; ++j) {
        if (!a[i][j].is_zero() && !is_zero(a[i][j])) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == nr) break;
    std::swap(a[k], a[pi]);
    for (size_t i = 0; i < nr; ++i) std::swap(a[i][k], a[i][pj]);
    ++rank;
    for (size_t i = k + 1; i < nr; ++i) {
      for (size_t j = k + 1; j < nc; ++j) {
        Polynomial num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = divide_exact(num, prev);
      }
      a[i][k] = Polynomial::zero(ctx, ord);
    }
    prev = a[k][k];
  }
  return rank;
}

PolyMatrix jacobian(const std::vector<Polynomial>& polys, const std::vector<size_t>& wrt) {
  require(!polys.empty(), ErrKind::LengthMismatch, "jacobian of empty system");
  const CtxPtr& ctx = polys[0].ctx();
  const MonomialOrder& ord = polys[0].order();
  for (size_t j : wrt)
    require(j < ctx->nvars(), ErrKind::ContextMismatch, "jacobian variable out of range");
  PolyMatrix m(ctx, ord, polys.size(), wrt.size());
  for (size_t i = 0; i < polys.size(); ++i) {
    require(same_ctx(polys[i].ctx(), ctx), ErrKind::ContextMismatch,
            "jacobian rows from different rings");
    for (size_t j = 0; j < wrt.size(); ++j) m.set(i, j, polys[i].derivative(wrt[j]));
  }
  return m;
}

} // namespace birat
