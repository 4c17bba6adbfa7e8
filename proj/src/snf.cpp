#include "birat/snf.hpp"

#include <cstdlib>

namespace birat {

SmithResult smith_normal_form(std::vector<std::vector<mpz_class>> a) {
  SmithResult out;
  if (a.empty() || a[0].empty()) return out;
  size_t rows = a.size(), cols = a[0].size();
  size_t t = 0;

  auto nonzero_at_or_after = [&](size_t from) {
    for (size_t i = from; i < rows; ++i)
      for (size_t j = from; j < cols; ++j)
        if (a[i][j] != 0) return std::pair<size_t, size_t>{i, j};
    return std::pair<size_t, size_t>{rows, cols};
  };

  while (t < rows && t < cols) {
    auto [pi, pj] = nonzero_at_or_after(t);
    if (pi == rows) break;
    std::swap(a[t], a[pi]);
    for (size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      // choose the smallest |entry| in row/column t as pivot
      for (size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] != 0 && (a[t][t] == 0 || abs(a[i][t]) < abs(a[t][t]))) {
          std::swap(a[t], a[i]);
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] != 0 && abs(a[t][j]) < abs(a[t][t])) {
          for (size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][j]);
        }
      }
      // eliminate column t
      for (size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q = a[i][t] / a[t][t];
        for (size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      // eliminate row t
      for (size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q = a[t][j] / a[t][t];
        for (size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // pivot must divide the whole trailing block
      for (size_t i = t + 1; i < rows && clean; ++i) {
        for (size_t j = t + 1; j < cols && clean; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            clean = false;
          }
        }
      }
    }
    ++t;
  }

  for (size_t i = 0; i < t; ++i) {
    mpz_class d = abs(a[i][i]);
    if (d != 0) out.divisors.push_back(d);
  }
  out.rank = out.divisors.size();
  return out;
}

} // namespace birat
