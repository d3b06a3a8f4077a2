#include "biquad/elem_abelian.hpp"

#include <algorithm>
#include <stdexcept>

#include "biquad/error.hpp"
#include "biquad/quotient_ring.hpp"

namespace biquad {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

}  // namespace

ElemAbelianExt make_elem_abelian(const Field& F, const Elem& a, const Elem& b) {
  if (F.is_zero(a)) throw Error(ErrorCode::DegenerateParameters, "a = 0");
  if (F.is_zero(b)) throw Error(ErrorCode::DegenerateParameters, "b = 0");
  if (is_square(F, a)) throw Error(ErrorCode::DegenerateParameters, "a is a square");
  if (is_square(F, b)) throw Error(ErrorCode::DegenerateParameters, "b is a square");
  if (is_square(F, F.mul(a, b)))
    throw Error(ErrorCode::DegenerateParameters, "ab is a square");
  return ElemAbelianExt{F, a, b};
}

BiquadPoly compose_elem_abelian(const Field& F, const Elem& a, const Elem& b) {
  ElemAbelianExt E = make_elem_abelian(F, a, b);
  Elem u = F.neg(F.add(F.add(E.a, E.b), F.add(E.a, E.b)));
  Elem diff = F.sub(E.a, E.b);
  Elem w = F.mul(diff, diff);
  return BiquadPoly{F, u, w};
}

ElemAbelianExt canonical_ab(const BiquadPoly& P) {
  const Field& F = P.field;
  if (!is_irreducible_biquadratic(P))
    throw Error(ErrorCode::NotElementaryAbelian, "reducible polynomial");
  AutResult aut = aut_type(P);
  if (aut.kind != AutKind::V4)
    throw Error(ErrorCode::NotElementaryAbelian,
                std::string("automorphism group is ") + to_string(aut.kind));
  auto omega = sqrt_canonical(F, P.w);
  require(omega.has_value(), "V4 polynomial with nonsquare constant term");
  Elem two_omega = F.add(*omega, *omega);
  Elem four = F.make(4);
  Elem a = F.div(F.sub(two_omega, P.u), four);
  Elem b = F.div(F.neg(F.add(two_omega, P.u)), four);
  ElemAbelianExt E = make_elem_abelian(F, a, b);
  BiquadPoly back = compose_elem_abelian(F, E.a, E.b);
  require(F.eq(back.u, P.u) && F.eq(back.w, P.w), "canonical_ab round trip");
  return E;
}

IsoVerdict elem_iso(const BiquadPoly& P, const BiquadPoly& Q) {
  const Field& F = P.field;
  if (!(F == Q.field)) throw Error(ErrorCode::InvalidField, "mixed base fields");

  auto check_v4 = [](const BiquadPoly& R) {
    if (!is_irreducible_biquadratic(R))
      throw Error(ErrorCode::NotElementaryAbelian, "reducible polynomial");
    if (aut_type(R).kind != AutKind::V4)
      throw Error(ErrorCode::NotElementaryAbelian, "automorphism group is not V4");
  };
  check_v4(P);
  check_v4(Q);

  Elem wp = *sqrt_canonical(F, P.w);
  Elem zq = *sqrt_canonical(F, Q.w);
  Elem two_wp = F.add(wp, wp);
  Elem two_zq = F.add(zq, zq);

  Elem den_a = F.sub(two_wp, P.u);                       // 4a
  Elem den_b = F.neg(F.add(P.u, two_wp));                // 4b
  Elem den_ab = F.sub(F.mul(P.u, P.u), F.mul(two_wp, two_wp));  // 16ab
  Elem num_g = F.neg(F.add(Q.u, two_zq));
  Elem num_d = F.sub(two_zq, Q.u);

  auto sq = [&F](const Elem& num, const Elem& den) {
    return is_square(F, F.div(num, den));
  };

  struct Case {
    const Elem* g_den;
    const Elem* d_den;
  };
  const Case cases[6] = {
      {&den_a, &den_b},  {&den_a, &den_ab}, {&den_b, &den_a},
      {&den_b, &den_ab}, {&den_ab, &den_b}, {&den_ab, &den_a},
  };
  for (int i = 0; i < 6; ++i) {
    if (sq(num_g, *cases[i].g_den) && sq(num_d, *cases[i].d_den))
      return IsoVerdict{true, i + 1};
  }
  return IsoVerdict{false, 0};
}

bool iso_by_subfields(const BiquadPoly& P, const BiquadPoly& Q) {
  const Field& F = P.field;
  if (!(F == Q.field)) throw Error(ErrorCode::InvalidField, "mixed base fields");
  std::vector<SquareClass> sp = quadratic_subfields(P);
  std::vector<SquareClass> sq = quadratic_subfields(Q);
  if (sp.size() != sq.size()) return false;
  std::vector<bool> used(sq.size(), false);
  for (const SquareClass& c : sp) {
    bool found = false;
    for (size_t j = 0; j < sq.size(); ++j) {
      if (!used[j] && same_class(F, c.rep, sq[j].rep)) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

const char* to_string(RadicalReport::Kind k) {
  switch (k) {
    case RadicalReport::Kind::TrivialClosure: return "TrivialClosure";
    case RadicalReport::Kind::NoClosure: return "NoClosure";
    case RadicalReport::Kind::ThreeClosures: return "ThreeClosures";
  }
  return "?";
}

RadicalReport radical_closure_analysis(const ElemAbelianExt& E) {
  const Field& F = E.field;
  Elem minus_one = F.neg(F.one());
  RadicalReport rep;
  if (is_square(F, minus_one)) {
    rep.kind = RadicalReport::Kind::NoClosure;
    return rep;
  }
  Elem ab = F.mul(E.a, E.b);
  const Elem candidates[3] = {E.a, E.b, ab};
  bool minus_one_present = false;
  for (const Elem& c : candidates)
    if (same_class(F, minus_one, c)) minus_one_present = true;

  if (minus_one_present) {
    rep.kind = RadicalReport::Kind::TrivialClosure;
    // gamma = sqrt(a')*(1+i) with a' the first parameter outside the class
    // of -1; gamma^2 = 2i*a' has minimal polynomial X^4 + 4a'^2... the
    // radical generator itself satisfies X^4 + 4a'^2 = 0.
    Elem aprime = candidates[0];
    for (const Elem& c : candidates) {
      if (!same_class(F, minus_one, c)) {
        aprime = c;
        break;
      }
    }
    rep.generator_square = aprime;
    Elem sq = F.mul(aprime, aprime);
    Elem w = F.add(F.add(sq, sq), F.add(sq, sq));
    BiquadPoly m{F, F.zero(), w};
    require(is_irreducible_biquadratic(m), "radical minimal polynomial irreducible");
    require(aut_type(m).kind == AutKind::V4, "radical minimal polynomial V4");
    rep.radical_min_poly = m;
    rep.generator = "sqrt(" + F.str(aprime) + ")*(1+i)";
    return rep;
  }

  rep.kind = RadicalReport::Kind::ThreeClosures;
  for (const Elem& c : candidates)
    rep.closure_classes.push_back(square_class(F, F.neg(c)));
  std::sort(rep.closure_classes.begin(), rep.closure_classes.end(),
            [&F](const SquareClass& l, const SquareClass& r) {
              return class_less(F, l, r);
            });
  return rep;
}

bool is_fourth_power(const Field& F, const Elem& x) {
  if (F.is_zero(x)) throw Error(ErrorCode::ZeroInput, "fourth-power test of zero");
  auto s = sqrt_canonical(F, x);
  if (!s) return false;
  return is_square(F, *s) || is_square(F, F.neg(*s));
}

bool radical_elem_iso(const Field& F, const Elem& a, const Elem& a2) {
  BiquadPoly P{F, F.zero(), a};
  BiquadPoly Q{F, F.zero(), a2};
  if (!is_irreducible_biquadratic(P) || !is_irreducible_biquadratic(Q))
    throw Error(ErrorCode::NotRadicalElementaryAbelian, "reducible radical polynomial");
  bool v4p = aut_type(P).kind == AutKind::V4;
  bool v4q = aut_type(Q).kind == AutKind::V4;
  if (!v4p && !v4q)
    throw Error(ErrorCode::NotRadicalElementaryAbelian,
                "neither radical extension is elementary abelian");
  if (v4p != v4q) return false;
  return is_fourth_power(F, F.div(a2, a));
}

std::array<Elem, 4> sqrt_a_coords(const ElemAbelianExt& E) {
  const Field& F = E.field;
  Elem diff2 = F.add(F.sub(E.a, E.b), F.sub(E.a, E.b));  // 2(a-b)
  Elem three_a = F.add(F.add(E.a, E.a), E.a);
  Elem c1 = F.div(F.add(three_a, E.b), diff2);
  Elem c3 = F.neg(F.inv(diff2));
  return {F.zero(), c1, F.zero(), c3};
}

std::array<Elem, 4> sqrt_b_coords(const ElemAbelianExt& E) {
  const Field& F = E.field;
  Elem diff2 = F.add(F.sub(E.a, E.b), F.sub(E.a, E.b));
  Elem three_b = F.add(F.add(E.b, E.b), E.b);
  Elem c1 = F.neg(F.div(F.add(E.a, three_b), diff2));
  Elem c3 = F.inv(diff2);
  return {F.zero(), c1, F.zero(), c3};
}

bool is_biquadratic_generator(const ElemAbelianExt& E, const std::array<Elem, 4>& coords) {
  const Field& F = E.field;
  BiquadPoly m = compose_elem_abelian(F, E.a, E.b);
  QuotientRing R(m.to_quartic());
  Poly mp = R.minimal_polynomial(coords);
  if (mp.degree() != 4) return false;
  return F.is_zero(mp.coeff(3)) && F.is_zero(mp.coeff(1));
}

}  // namespace biquad
