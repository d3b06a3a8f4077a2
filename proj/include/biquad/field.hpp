#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>

#include "biquad/error.hpp"

namespace biquad {

// Element of one of the supported coefficient fields.  The meaning of the two
// coordinates is fixed by the Field that created the value:
//
//   rationals     value = x,                 y = 0
//   prime field   value = x in [0, p),       y = 0
//   quadratic ext value = x + y*sqrt(d),     x, y in the base field
//
// Always construct elements through Field::make / Field::make_quad so the
// coordinates are stored in canonical form.
struct Elem {
  mpq_class x{0};
  mpq_class y{0};

  friend bool operator==(const Elem& a, const Elem& b) {
    return cmp(a.x, b.x) == 0 && cmp(a.y, b.y) == 0;
  }
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }
};

// One of Q, F_p (p an odd prime), or a quadratic extension of either.
// Value type; quadratic extensions share their base descriptor.
class Field {
 public:
  enum class Kind { Rationals, Prime, QuadExt };

  static Field rationals();
  static Field prime(const mpz_class& p);
  // base must be Q or F_p and d a nonzero nonsquare of base.
  static Field quad_ext(const Field& base, const Elem& d);

  Kind kind() const { return kind_; }
  bool is_quad_ext() const { return kind_ == Kind::QuadExt; }
  // Prime modulus of the field (or of the base for an extension); only valid
  // when the scalar part is a prime field.
  const mpz_class& modulus() const;
  const Field& base() const;     // QuadExt only
  const Elem& radicand() const;  // QuadExt only

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

  // -- element construction ------------------------------------------------
  Elem zero() const { return Elem{}; }
  Elem one() const { return make(1); }
  Elem make(long n) const;
  Elem make(const mpq_class& q) const;
  // QuadExt only: x + y*sqrt(d) from base-field elements.
  Elem make_quad(const Elem& x, const Elem& y) const;

  // -- arithmetic ----------------------------------------------------------
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem div(const Elem& a, const Elem& b) const;  // throws ZeroInput on b == 0
  Elem neg(const Elem& a) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, unsigned long e) const;

  bool is_zero(const Elem& a) const;
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  // Conjugate x + y*sqrt(d) -> x - y*sqrt(d); identity on scalar fields.
  Elem conj(const Elem& a) const;

  // Plain-text rendering, e.g. "-7/16" or "3 - 2*sqrt(-2)".
  std::string str(const Elem& a) const;

 private:
  Field(Kind kind, mpz_class p) : kind_(kind), p_(std::move(p)) {}

  // scalar-coordinate helpers (operate on the base field for QuadExt)
  Kind scalar_kind() const;
  mpq_class sreduce(const mpq_class& v) const;
  mpq_class sadd(const mpq_class& a, const mpq_class& b) const;
  mpq_class ssub(const mpq_class& a, const mpq_class& b) const;
  mpq_class smul(const mpq_class& a, const mpq_class& b) const;
  mpq_class sdiv(const mpq_class& a, const mpq_class& b) const;
  mpq_class sneg(const mpq_class& a) const;

  Kind kind_;
  mpz_class p_{0};  // modulus when the scalar part is F_p
  std::shared_ptr<const Field> base_;
  Elem d_;  // radicand of a quadratic extension
};

// -- squares ---------------------------------------------------------------

// Membership of x in the nonzero squares; throws ZeroInput on x == 0.
bool is_square(const Field& F, const Elem& x);

// Canonical square root: nonnegative over Q, residue in [0,(p-1)/2] over F_p,
// coordinatewise-lexicographic minimum of the two roots over an extension.
// Returns nullopt when x is not a square; sqrt(0) = 0.
std::optional<Elem> sqrt_canonical(const Field& F, const Elem& x);

// Class of x in F^x / (F^x)^2, held by a canonical representative:
// the square-free integer part over Q, 1 or the least nonsquare over F_p,
// and the square-content-reduced pair over an extension.  Equality of classes
// is always decided via is_square of the ratio, never via representatives.
struct SquareClass {
  Elem rep;
};

SquareClass square_class(const Field& F, const Elem& x);
bool same_class(const Field& F, const SquareClass& a, const SquareClass& b);
bool same_class(const Field& F, const Elem& a, const Elem& b);
SquareClass class_mul(const Field& F, const SquareClass& a, const SquareClass& b);
bool class_is_one(const Field& F, const SquareClass& c);

// Deterministic ordering used wherever classes are listed or orbit
// representatives are chosen: over Q by (|rep|, sign) with positive first,
// over F_p numerically, over an extension lexicographically by coordinates.
bool class_less(const Field& F, const SquareClass& a, const SquareClass& b);
bool elem_less(const Field& F, const Elem& a, const Elem& b);

// F(sqrt(a)) == F(sqrt(b)) as extensions, i.e. ab in F^2.
// Throws SquareInput when a or b is already a square (or zero).
bool quad_ext_iso(const Field& F, const Elem& a, const Elem& b);

// -- integer utilities -----------------------------------------------------

// Trial-division bound for square-free decomposition; default 10^6,
// overridable via the BIQUAD_FACTOR_BOUND environment variable.
unsigned long factor_bound();

// Square-free part of n (sign preserved): n / (largest square divisor).
// Throws UnfactorableInteger when a cofactor beyond the bound remains that is
// neither prime nor a perfect square; throws ZeroInput on n == 0.
mpz_class squarefree_part(const mpz_class& n);

// Largest k with k^2 | n (n > 0); same factoring caveats as above.
mpz_class square_content(const mpz_class& n);

// Least quadratic nonresidue modulo p.
mpz_class least_nonsquare_mod(const mpz_class& p);

// Tonelli-Shanks; a in [0, p), returns root in [0, p) or nullopt.
std::optional<mpz_class> sqrt_mod(const mpz_class& a, const mpz_class& p);

}  // namespace biquad
