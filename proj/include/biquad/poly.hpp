#pragma once

#include <utility>
#include <vector>

#include "biquad/field.hpp"

namespace biquad {

// Dense univariate polynomial over a Field; trailing zeros are trimmed.
class Poly {
 public:
  explicit Poly(Field F) : field_(std::move(F)) {}
  Poly(Field F, std::vector<Elem> coeffs);

  static Poly x(const Field& F);
  static Poly constant(const Field& F, const Elem& c);

  const Field& field() const { return field_; }
  // -1 for the zero polynomial
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Elem coeff(int i) const;
  const Elem& lead() const;
  bool is_monic() const;

  Poly add(const Poly& o) const;
  Poly sub(const Poly& o) const;
  Poly mul(const Poly& o) const;
  Poly scale(const Elem& c) const;
  Poly neg() const;
  // divisor must have an invertible leading coefficient (any nonzero works)
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  Poly mod(const Poly& divisor) const { return divmod(divisor).second; }

  Elem eval(const Elem& at) const;
  Poly derivative() const;
  Poly monic() const;

  bool equals(const Poly& o) const;

 private:
  void trim();

  Field field_;
  std::vector<Elem> coeffs_;  // coeffs_[i] multiplies X^i
};

// gcd normalized monic (or zero)
Poly poly_gcd(Poly a, Poly b);

// x^e mod m by repeated squaring
Poly pow_mod(const Poly& base, const mpz_class& e, const Poly& m);

// Monic quartic X^4 + u X^3 + v X^2 + w X + z.
struct QuarticPoly {
  Field field;
  Elem u, v, w, z;

  Poly to_poly() const;
  // true when the odd coefficients vanish
  bool is_biquadratic() const;
  std::string str() const;
};

// Monic biquadratic X^4 + u X^2 + w.
struct BiquadPoly {
  Field field;
  Elem u, w;

  QuarticPoly to_quartic() const;
  Poly to_poly() const { return to_quartic().to_poly(); }
  std::string str() const { return to_quartic().str(); }
};

QuarticPoly make_quartic(const Field& F, const Elem& u, const Elem& v,
                         const Elem& w, const Elem& z);
BiquadPoly make_biquad(const Field& F, const Elem& u, const Elem& w);

}  // namespace biquad
