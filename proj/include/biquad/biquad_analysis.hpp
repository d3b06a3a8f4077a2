#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biquad/poly.hpp"

namespace biquad {

enum class AutKind { V4, C4, C2 };

const char* to_string(AutKind k);

struct AutResult {
  AutKind kind;
  // set exactly when the extension is not Galois (kind == C2)
  std::optional<std::string> galois_closure_group;
};

// Closed-form irreducibility test for X^4 + u X^2 + w:
// irreducible iff u^2 - 4w is not a square and, when w = omega^2 is a square,
// neither -u + 2*omega nor -u - 2*omega is a square (omega the canonical
// root; both branch tests are invariant under omega -> -omega).
// Throws ZeroConstantTerm when w = 0.
bool is_irreducible_biquadratic(const BiquadPoly& P);

// Automorphism group of F[X]/(P) for irreducible P:
//   V4 iff w is a square, C4 iff w is not but w(u^2-4w) is, C2 otherwise.
// Throws ReduciblePolynomial on reducible input.
AutResult aut_type(const BiquadPoly& P);

// Galois over the base iff the automorphism group has order 4 (V4 or C4).
bool is_galois(const BiquadPoly& P);

// Quadratic subfields as square classes: three for V4
// ({-u+2w', -u-2w', u^2-4w} with w' the canonical root of w), one for C4/C2
// ({u^2-4w}).  Sorted by the canonical class order.
std::vector<SquareClass> quadratic_subfields(const BiquadPoly& P);

}  // namespace biquad
