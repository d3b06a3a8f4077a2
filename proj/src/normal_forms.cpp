#include "biquad/normal_forms.hpp"

namespace biquad {

const char* to_string(NormalForm::Kind k) {
  switch (k) {
    case NormalForm::Kind::ReducibleRootZero: return "reducible_root_zero";
    case NormalForm::Kind::ReducibleRootQuarterU: return "reducible_root_quarter_u";
    case NormalForm::Kind::Biquad: return "biquadratic";
    case NormalForm::Kind::RT: return "r_and_t";
  }
  return "?";
}

TaylorData taylor_at_quarter(const QuarticPoly& P) {
  const Field& F = P.field;
  Elem at = F.neg(F.div(P.u, F.make(4)));
  Poly p = P.to_poly();
  Poly dp = p.derivative();
  return TaylorData{p.eval(at), dp.eval(at), dp.derivative().eval(at)};
}

std::string Substitution::text(const Field& F) const {
  std::string base = F.is_zero(shift) ? "x" : "x + (" + F.str(shift) + ")";
  switch (kind) {
    case Kind::Shift:
      return "y = " + base;
    case Kind::ShiftScale:
      return "y = (" + F.str(scale) + ")*(" + base + ")";
    case Kind::InverseShiftScale:
      return "z = (" + F.str(scale) + ")/(" + base + ")";
  }
  return "";
}

QuarticPoly RFormData::form(const Field& F) const {
  return QuarticPoly{F, F.zero(), a, b, b};
}

QuarticPoly TFormData::form(const Field& F) const {
  return QuarticPoly{F, F.one(), c, F.zero(), d};
}

NormalForm normalize(const QuarticPoly& P) {
  const Field& F = P.field;
  NormalForm out;
  out.root = F.zero();
  if (F.is_zero(P.z)) {
    out.kind = NormalForm::Kind::ReducibleRootZero;
    return out;
  }
  auto [p0, p1, p2] = taylor_at_quarter(P);
  Elem shift = F.div(P.u, F.make(4));
  if (F.is_zero(p0)) {
    out.kind = NormalForm::Kind::ReducibleRootQuarterU;
    out.root = F.neg(shift);
    return out;
  }
  Elem half = F.div(F.one(), F.make(2));
  if (F.is_zero(p1)) {
    out.kind = NormalForm::Kind::Biquad;
    out.biquad = BiquadFormData{F.mul(half, p2), p0,
                                Substitution{Substitution::Kind::Shift, F.one(), shift}};
    return out;
  }
  out.kind = NormalForm::Kind::RT;
  Elem p0_2 = F.mul(p0, p0);
  Elem p1_2 = F.mul(p1, p1);
  Elem p1_4 = F.mul(p1_2, p1_2);
  Elem p0_3 = F.mul(p0_2, p0);
  Elem ratio = F.div(p0, p1);
  // R: a = p1^2 p2 / (2 p0^2), b = p1^4 / p0^3, via y = (p0/p1)(x + u/4)
  out.r_form = RFormData{
      F.mul(half, F.div(F.mul(p1_2, p2), p0_2)), F.div(p1_4, p0_3),
      Substitution{Substitution::Kind::ShiftScale, ratio, shift}};
  // T: c = p2 p0 / (2 p1^2), d = p0^3 / p1^4, via z = (p0/p1)/(x + u/4)
  out.t_form = TFormData{
      F.mul(half, F.div(F.mul(p2, p0), p1_2)), F.div(p0_3, p1_4),
      Substitution{Substitution::Kind::InverseShiftScale, ratio, shift}};
  return out;
}

}  // namespace biquad
