#pragma once

#include <string>
#include <utility>
#include <vector>

#include "biquad/poly.hpp"

namespace biquad {

struct FactorReport {
  std::vector<std::pair<Poly, int>> factors;  // monic factor with multiplicity
  std::string pattern;                        // degrees, descending, e.g. "2+1+1"
  bool irreducible = false;
};

// Brute-force factorization of a monic quartic: exhaustive root and
// quadratic-divisor scans over F_p (p <= 1000), exact quadratic-formula
// case analysis for rational biquadratics.  Anything else raises
// OracleScopeExceeded.
FactorReport factor_quartic(const QuarticPoly& P);

// Galois group label of an irreducible quartic over F_p, derived from the
// Frobenius order in the quotient ring; reducible input raises
// ReducibleInput.
std::string galois_group_finite(const QuarticPoly& P);

// Quadratic subfield classes recovered by minimal-polynomial search in the
// quotient ring, independent of the closed-form subfield list.
std::vector<SquareClass> subfields_oracle(const BiquadPoly& P);

}  // namespace biquad
