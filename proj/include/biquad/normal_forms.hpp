#pragma once

#include <optional>
#include <string>

#include "biquad/poly.hpp"

namespace biquad {

// Taylor data of P at -u/4: value, first and second derivative.
struct TaylorData {
  Elem p0, p1, p2;
};

TaylorData taylor_at_quarter(const QuarticPoly& P);

// Substitution y = scale * (x + shift), or its reciprocal z = scale / (x + shift).
struct Substitution {
  enum class Kind { Shift, ShiftScale, InverseShiftScale };
  Kind kind;
  Elem scale;  // 1 for plain shifts
  Elem shift;
  // formal rendering, e.g. "y = (-7/16)*(x + 1)"
  std::string text(const Field& F) const;
};

struct BiquadFormData {
  Elem a, b;  // X^4 + a X^2 + b
  Substitution sub;
  BiquadPoly form(const Field& F) const { return BiquadPoly{F, a, b}; }
};

struct RFormData {
  Elem a, b;  // X^4 + a X^2 + b X + b
  Substitution sub;
  QuarticPoly form(const Field& F) const;
};

struct TFormData {
  Elem c, d;  // X^4 + X^3 + c X^2 + d
  Substitution sub;
  QuarticPoly form(const Field& F) const;
};

// Trichotomy on a monic quartic with zero cubic coefficient shifted away:
// either an obvious rational root is exposed, or the polynomial is equivalent
// to a biquadratic, or to both the R-form and the T-form above.
struct NormalForm {
  enum class Kind {
    ReducibleRootZero,      // constant term zero: root 0
    ReducibleRootQuarterU,  // P(-u/4) = 0
    Biquad,                 // first Taylor coefficient vanishes
    RT,                     // generic: R- and T-forms
  };
  Kind kind;
  Elem root;  // for the reducible cases
  std::optional<BiquadFormData> biquad;
  std::optional<RFormData> r_form;
  std::optional<TFormData> t_form;
};

const char* to_string(NormalForm::Kind k);

NormalForm normalize(const QuarticPoly& P);

}  // namespace biquad
