#include "biquad/biquad_analysis.hpp"

#include <algorithm>

namespace biquad {

const char* to_string(AutKind k) {
  switch (k) {
    case AutKind::V4: return "V4";
    case AutKind::C4: return "C4";
    case AutKind::C2: return "C2";
  }
  return "?";
}

namespace {

void check_constant_term(const BiquadPoly& P) {
  if (P.field.is_zero(P.w))
    throw Error(ErrorCode::ZeroConstantTerm, "biquadratic with zero constant term");
}

Elem discriminant_core(const BiquadPoly& P) {
  const Field& F = P.field;
  // u^2 - 4w
  return F.sub(F.mul(P.u, P.u), F.mul(F.make(4), P.w));
}

}  // namespace

bool is_irreducible_biquadratic(const BiquadPoly& P) {
  check_constant_term(P);
  const Field& F = P.field;
  Elem disc = discriminant_core(P);
  if (F.is_zero(disc) || is_square(F, disc)) return false;
  // when w is not a square the remaining root tests are vacuous
  auto omega = sqrt_canonical(F, P.w);
  if (!omega) return true;
  Elem neg_u = F.neg(P.u);
  Elem two_omega = F.mul(F.make(2), *omega);
  for (const Elem& cand : {F.add(neg_u, two_omega), F.sub(neg_u, two_omega)}) {
    if (F.is_zero(cand) || is_square(F, cand)) return false;
  }
  return true;
}

AutResult aut_type(const BiquadPoly& P) {
  check_constant_term(P);
  if (!is_irreducible_biquadratic(P))
    throw Error(ErrorCode::ReduciblePolynomial, P.str() + " is reducible");
  const Field& F = P.field;
  if (is_square(F, P.w)) return AutResult{AutKind::V4, std::nullopt};
  Elem prod = F.mul(P.w, discriminant_core(P));
  if (is_square(F, prod)) return AutResult{AutKind::C4, std::nullopt};
  return AutResult{AutKind::C2, "D8"};
}

bool is_galois(const BiquadPoly& P) {
  AutKind k = aut_type(P).kind;
  return k == AutKind::V4 || k == AutKind::C4;
}

std::vector<SquareClass> quadratic_subfields(const BiquadPoly& P) {
  AutResult aut = aut_type(P);
  const Field& F = P.field;
  std::vector<SquareClass> out;
  Elem disc = discriminant_core(P);
  if (aut.kind == AutKind::V4) {
    Elem omega = *sqrt_canonical(F, P.w);
    Elem neg_u = F.neg(P.u);
    Elem two_omega = F.mul(F.make(2), omega);
    out.push_back(square_class(F, F.add(neg_u, two_omega)));
    out.push_back(square_class(F, F.sub(neg_u, two_omega)));
    out.push_back(square_class(F, disc));
  } else {
    out.push_back(square_class(F, disc));
  }
  std::sort(out.begin(), out.end(), [&](const SquareClass& a, const SquareClass& b) {
    return class_less(F, a, b);
  });
  return out;
}

}  // namespace biquad
