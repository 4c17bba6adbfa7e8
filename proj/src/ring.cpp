#include "birat/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace birat {

std::optional<size_t> RingContext::var_index(const std::string& name) const {
  for (size_t i = 0; i < variables.size(); ++i) {
    if (variables[i] == name) return i;
  }
  return std::nullopt;
}

CtxPtr make_context(FieldSpec field, std::vector<std::string> variables,
                    std::optional<size_t> block_split) {
  require(!variables.empty(), ErrKind::ContextMismatch, "a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    require(!v.empty(), ErrKind::ContextMismatch, "empty variable name");
    require(seen.insert(v).second, ErrKind::ContextMismatch, "duplicate variable '" + v + "'");
  }
  if (block_split) {
    require(*block_split > 0 && *block_split < variables.size(), ErrKind::ContextMismatch,
            "block split must lie strictly inside the variable list");
  }
  auto ctx = std::make_shared<RingContext>();
  ctx->field = field;
  ctx->variables = std::move(variables);
  ctx->block_split = block_split;
  return ctx;
}

Monomial Monomial::var(size_t nvars, size_t i, uint32_t e) {
  Monomial m(nvars);
  m.e_[i] = e;
  return m;
}

uint64_t Monomial::degree() const {
  uint64_t d = 0;
  for (uint32_t v : e_) d += v;
  return d;
}

uint64_t Monomial::degree_on(size_t lo, size_t hi) const {
  uint64_t d = 0;
  for (size_t i = lo; i < hi && i < e_.size(); ++i) d += e_[i];
  return d;
}

bool Monomial::is_one() const {
  for (uint32_t v : e_) {
    if (v) return false;
  }
  return true;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r(*this);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > o.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::div(const Monomial& o) const {
  Monomial r(*this);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] && o.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::pow(uint32_t k) const {
  Monomial r(*this);
  for (auto& v : r.e_) v *= k;
  return r;
}

MonomialOrder MonomialOrder::lex() {
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  return o;
}

MonomialOrder MonomialOrder::grevlex() {
  MonomialOrder o;
  o.kind_ = Kind::GrevLex;
  return o;
}

MonomialOrder MonomialOrder::block_elim(std::vector<size_t> outer, size_t nvars) {
  MonomialOrder o;
  o.kind_ = Kind::Block;
  std::vector<bool> in_outer(nvars, false);
  for (size_t i : outer) {
    require(i < nvars, ErrKind::ContextMismatch, "block variable index out of range");
    in_outer[i] = true;
  }
  std::vector<size_t> inner;
  for (size_t i = 0; i < nvars; ++i) {
    if (!in_outer[i]) inner.push_back(i);
  }
  o.groups_.push_back(std::move(outer));
  if (!inner.empty()) o.groups_.push_back(std::move(inner));
  return o;
}

MonomialOrder MonomialOrder::weighted(std::vector<int64_t> weights, Kind tiebreak) {
  MonomialOrder o;
  o.kind_ = Kind::Weighted;
  o.weights_ = std::move(weights);
  o.tiebreak_ = tiebreak;
  return o;
}

namespace {

// grevlex on a subset of the variables: higher degree wins; on ties the
// monomial with the smaller exponent at the last differing variable wins
int grevlex_on(const Monomial& a, const Monomial& b, const std::vector<size_t>& idx) {
  uint64_t da = 0, db = 0;
  for (size_t i : idx) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (size_t k = idx.size(); k-- > 0;) {
    size_t i = idx[k];
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int lex_on(const Monomial& a, const Monomial& b, const std::vector<size_t>& idx) {
  for (size_t i : idx) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

std::vector<size_t> all_indices(size_t n) {
  std::vector<size_t> v(n);
  for (size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex: {
      for (size_t i = 0; i < a.nvars(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    }
    case Kind::GrevLex: {
      uint64_t da = a.degree(), db = b.degree();
      if (da != db) return da > db ? 1 : -1;
      for (size_t i = a.nvars(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    }
    case Kind::Block: {
      for (const auto& g : groups_) {
        int c = grevlex_on(a, b, g);
        if (c) return c;
      }
      return 0;
    }
    case Kind::Weighted: {
      __int128 wa = 0, wb = 0;
      for (size_t i = 0; i < a.nvars(); ++i) {
        int64_t w = i < weights_.size() ? weights_[i] : 0;
        wa += (__int128)w * a[i];
        wb += (__int128)w * b[i];
      }
      if (wa != wb) return wa > wb ? 1 : -1;
      auto idx = all_indices(a.nvars());
      return tiebreak_ == Kind::Lex ? lex_on(a, b, idx) : grevlex_on(a, b, idx);
    }
  }
  return 0;
}

std::string MonomialOrder::key() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Lex: os << "lex"; break;
    case Kind::GrevLex: os << "grevlex"; break;
    case Kind::Block:
      os << "block";
      for (const auto& g : groups_) {
        os << "[";
        for (size_t i : g) os << i << ",";
        os << "]";
      }
      break;
    case Kind::Weighted:
      os << "weighted[";
      for (int64_t w : weights_) os << w << ",";
      os << "]" << (tiebreak_ == Kind::Lex ? "lex" : "grevlex");
      break;
  }
  return os.str();
}

} // namespace birat
