#pragma once

#include <array>
#include <optional>
#include <vector>

#include "biquad/poly.hpp"

namespace biquad {

// F[X]/(P) for an irreducible monic quartic P.  Elements are coordinate
// vectors in the basis 1, x, x^2, x^3 of the residue class of X.
class QuotientRing {
 public:
  using Vec = std::array<Elem, 4>;

  // Validates that the modulus is irreducible (ReduciblePolynomial otherwise).
  // Over an extension field only biquadratic moduli are decidable here
  // (OracleScopeExceeded for the rest).
  explicit QuotientRing(const QuarticPoly& modulus);

  const Field& field() const { return modulus_.field; }
  const QuarticPoly& modulus() const { return modulus_; }

  Vec zero() const;
  Vec one() const;
  Vec gen() const;  // residue class of X
  Vec make(const Elem& c0, const Elem& c1, const Elem& c2, const Elem& c3) const;
  Vec scalar(const Elem& c) const;

  Vec add(const Vec& a, const Vec& b) const;
  Vec sub(const Vec& a, const Vec& b) const;
  Vec mul(const Vec& a, const Vec& b) const;
  Vec neg(const Vec& a) const;
  Vec inv(const Vec& a) const;  // NonInvertible on zero
  Vec div(const Vec& a, const Vec& b) const;
  Vec pow(const Vec& a, const mpz_class& e) const;

  bool is_zero(const Vec& a) const;
  bool eq(const Vec& a, const Vec& b) const;

  Poly to_poly(const Vec& a) const;
  Vec from_poly(const Poly& p) const;  // reduces mod the modulus

  // Evaluate a coefficient-field polynomial at a ring element.
  Vec eval_poly(const Poly& p, const Vec& at) const;

  // Monic minimal polynomial over the coefficient field; degree 1, 2 or 4.
  Poly minimal_polynomial(const Vec& a) const;

 private:
  QuarticPoly modulus_;
  Poly modulus_poly_;
};

// Irreducibility of a general monic quartic, decided without the closed-form
// biquadratic criterion: exhaustive divisor scans over F_p, integer-model
// divisor search over Q (Gauss's lemma).  Biquadratic shapes over any field
// fall back to the closed-form test.
bool quartic_is_irreducible(const QuarticPoly& P);

}  // namespace biquad
