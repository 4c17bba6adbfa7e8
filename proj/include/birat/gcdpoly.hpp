#pragma once

#include "birat/poly.hpp"

namespace birat {

// Multivariate polynomial GCD by primitive pseudo-remainder sequences
// (subresultant-style recursion on the last occurring variable). The result
// is normalized: integer-primitive with positive lead over Q, monic over Fp.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

// Iterated pairwise GCD of a list (zero entries ignored); zero for an empty
// or all-zero list.
Polynomial poly_gcd_list(const std::vector<Polynomial>& polys);

} // namespace birat
