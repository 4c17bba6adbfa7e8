#pragma once

#include <gmpxx.h>

#include <vector>

namespace birat {

struct SmithResult {
  std::vector<mpz_class> divisors; // nonzero elementary divisors d1 | d2 | ...
  size_t rank = 0;
};

// Smith normal form of an integer matrix (destructive on a copy).
SmithResult smith_normal_form(std::vector<std::vector<mpz_class>> m);

} // namespace birat
