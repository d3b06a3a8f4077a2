#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "biquad/biquad_analysis.hpp"
#include "biquad/poly.hpp"

namespace biquad {

// Parameters (a, b) of a V4 extension F(sqrt(a), sqrt(b)): a, b, ab all
// nonsquare.  Construct through make_elem_abelian or canonical_ab.
struct ElemAbelianExt {
  Field field;
  Elem a, b;
};

// Validates the parameters; DegenerateParameters names the offending product.
ElemAbelianExt make_elem_abelian(const Field& F, const Elem& a, const Elem& b);

// X^4 + u X^2 + w with u = -2(a+b), w = (a-b)^2; the minimal polynomial of
// sqrt(a) + sqrt(b).
BiquadPoly compose_elem_abelian(const Field& F, const Elem& a, const Elem& b);

// Recover canonical (a, b) from a V4 polynomial: with omega the canonical
// root of w, a = (2*omega - u)/4 and b = -(2*omega + u)/4.
// Throws NotElementaryAbelian when the input is not irreducible with V4 group.
ElemAbelianExt canonical_ab(const BiquadPoly& P);

struct IsoVerdict {
  bool isomorphic = false;
  int condition = 0;  // 1..6, first matching condition; 0 when none
};

// Isomorphism of two V4 extensions via the six square-ratio conditions on
// (u, omega(P)) against (v, omega(Q)); first match in fixed order reported.
// Throws NotElementaryAbelian unless both inputs are irreducible V4.
IsoVerdict elem_iso(const BiquadPoly& P, const BiquadPoly& Q);

// Independent decision procedure: match the quadratic-subfield class
// multisets of the two inputs.
bool iso_by_subfields(const BiquadPoly& P, const BiquadPoly& Q);

// Radical closure trichotomy for a V4 extension.
struct RadicalReport {
  enum class Kind { TrivialClosure, NoClosure, ThreeClosures };
  Kind kind;
  // TrivialClosure: gamma^2 = generator_square, generator gamma*(1+i),
  // minimal polynomial X^4 + 4*generator_square^2
  std::optional<BiquadPoly> radical_min_poly;
  std::optional<Elem> generator_square;
  std::string generator;
  // ThreeClosures: classes of -a, -b, -ab, sorted canonically
  std::vector<SquareClass> closure_classes;
};

const char* to_string(RadicalReport::Kind k);

RadicalReport radical_closure_analysis(const ElemAbelianExt& E);

// x = t^4 for some t; x must be nonzero.
bool is_fourth_power(const Field& F, const Elem& x);

// Isomorphism of the radical extensions cut out by X^4 + a and X^4 + a2:
// a2/a must be a fourth power.  Reducible inputs (or two non-V4 inputs) raise
// NotRadicalElementaryAbelian; a single non-V4 counterpart compares false.
bool radical_elem_iso(const Field& F, const Elem& a, const Elem& a2);

// Coordinates of sqrt(a) and sqrt(b) in the basis 1, y, y^2, y^3 of
// F[X]/(compose_elem_abelian(a, b)).
std::array<Elem, 4> sqrt_a_coords(const ElemAbelianExt& E);
std::array<Elem, 4> sqrt_b_coords(const ElemAbelianExt& E);

// True when the element with the given coordinates has a degree-4 minimal
// polynomial of biquadratic shape.
bool is_biquadratic_generator(const ElemAbelianExt& E, const std::array<Elem, 4>& coords);

}  // namespace biquad
