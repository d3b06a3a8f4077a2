#include "biquad/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "biquad/error.hpp"
#include "biquad/quotient_ring.hpp"

namespace biquad {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

std::string degree_pattern(const std::vector<std::pair<Poly, int>>& factors) {
  std::vector<int> degs;
  for (const auto& [f, mult] : factors)
    for (int i = 0; i < mult; ++i) degs.push_back(f.degree());
  std::sort(degs.rbegin(), degs.rend());
  std::string out;
  for (size_t i = 0; i < degs.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(degs[i]);
  }
  return out;
}

void push_factor(std::vector<std::pair<Poly, int>>& factors, const Poly& f, int mult) {
  for (auto& [g, m] : factors) {
    if (g.equals(f)) {
      m += mult;
      return;
    }
  }
  factors.emplace_back(f, mult);
}

Poly linear(const Field& F, const Elem& root) {
  return Poly(F, {F.neg(root), F.one()});
}

FactorReport finish(std::vector<std::pair<Poly, int>> factors) {
  FactorReport rep;
  rep.factors = std::move(factors);
  rep.pattern = degree_pattern(rep.factors);
  rep.irreducible = rep.factors.size() == 1 && rep.factors[0].second == 1 &&
                    rep.factors[0].first.degree() == 4;
  return rep;
}

FactorReport factor_quartic_prime(const QuarticPoly& P) {
  const Field& F = P.field;
  const mpz_class& p = F.modulus();
  if (p > 1000)
    throw Error(ErrorCode::OracleScopeExceeded, "exhaustive scan capped at p <= 1000");

  std::vector<std::pair<Poly, int>> factors;
  Poly rem = P.to_poly();
  for (mpz_class r = 0; r < p; ++r) {
    Elem root = F.make(mpq_class(r));
    while (rem.degree() > 0 && F.is_zero(rem.eval(root))) {
      Poly lin = linear(F, root);
      rem = rem.divmod(lin).first;
      push_factor(factors, lin, 1);
    }
  }

  if (rem.degree() == 4) {
    // root-free quartic: split off a monic quadratic divisor if one exists
    bool split = false;
    for (mpz_class b = 0; b < p && !split; ++b) {
      for (mpz_class c = 1; c < p && !split; ++c) {
        Poly q(F, {F.make(mpq_class(c)), F.make(mpq_class(b)), F.one()});
        auto [quot, mod] = rem.divmod(q);
        if (mod.is_zero()) {
          if (quot.equals(q)) {
            push_factor(factors, q, 2);
          } else {
            push_factor(factors, q, 1);
            push_factor(factors, quot, 1);
          }
          split = true;
        }
      }
    }
    if (!split) push_factor(factors, rem, 1);
  } else if (rem.degree() > 0) {
    // root-free quadratic or cubic remainder is irreducible
    push_factor(factors, rem, 1);
  }
  return finish(std::move(factors));
}

// X^4 + U X^2 + W over the rationals by the explicit quadratic formula
FactorReport factor_biquadratic_rationals(const Field& F, const Elem& U, const Elem& W) {
  std::vector<std::pair<Poly, int>> factors;
  Elem four = F.make(4);

  if (F.is_zero(W)) {
    push_factor(factors, linear(F, F.zero()), 2);
    if (F.is_zero(U)) {
      push_factor(factors, linear(F, F.zero()), 2);
    } else if (auto t = sqrt_canonical(F, F.neg(U)); t && !F.is_zero(*t)) {
      push_factor(factors, linear(F, *t), 1);
      push_factor(factors, linear(F, F.neg(*t)), 1);
    } else {
      push_factor(factors, Poly(F, {U, F.zero(), F.one()}), 1);
    }
    return finish(std::move(factors));
  }

  Elem disc = F.sub(F.mul(U, U), F.mul(four, W));
  if (auto sigma = sqrt_canonical(F, disc)) {
    // Y^2 + U Y + W splits: quartic = (X^2 - y+)(X^2 - y-)
    Elem two = F.make(2);
    Elem yp = F.div(F.sub(*sigma, U), two);
    Elem ym = F.div(F.neg(F.add(*sigma, U)), two);
    int mult = F.is_zero(disc) ? 2 : 1;
    std::vector<Elem> ys = {yp};
    if (!F.is_zero(disc)) ys.push_back(ym);
    for (const Elem& y : ys) {
      require(!F.is_zero(y), "nonzero constant term keeps the roots nonzero");
      if (auto t = sqrt_canonical(F, y)) {
        push_factor(factors, linear(F, *t), mult);
        push_factor(factors, linear(F, F.neg(*t)), mult);
      } else {
        push_factor(factors, Poly(F, {F.neg(y), F.zero(), F.one()}), mult);
      }
    }
    return finish(std::move(factors));
  }

  if (auto omega = sqrt_canonical(F, W)) {
    // (X^2 - tX + w0)(X^2 + tX + w0) with t^2 = -U + 2w0, w0 = +-omega;
    // a square disc here would force a rational root of Y^2+UY+W, already
    // excluded, so both quadratics are irreducible
    Elem two_omega = F.add(*omega, *omega);
    for (int sign : {1, -1}) {
      Elem w0 = sign > 0 ? *omega : F.neg(*omega);
      Elem tt = F.add(F.neg(U), sign > 0 ? two_omega : F.neg(two_omega));
      if (auto t = sqrt_canonical(F, tt)) {
        require(!F.is_zero(*t), "degenerate split lands in the square-disc case");
        push_factor(factors, Poly(F, {w0, F.neg(*t), F.one()}), 1);
        push_factor(factors, Poly(F, {w0, *t, F.one()}), 1);
        return finish(std::move(factors));
      }
    }
  }

  QuarticPoly Q{F, F.zero(), U, F.zero(), W};
  push_factor(factors, Q.to_poly(), 1);
  return finish(std::move(factors));
}

}  // namespace

FactorReport factor_quartic(const QuarticPoly& P) {
  switch (P.field.kind()) {
    case Field::Kind::Prime:
      return factor_quartic_prime(P);
    case Field::Kind::Rationals:
      if (!P.is_biquadratic())
        throw Error(ErrorCode::OracleScopeExceeded,
                    "rational scope is limited to biquadratic quartics");
      return factor_biquadratic_rationals(P.field, P.v, P.z);
    case Field::Kind::QuadExt:
      throw Error(ErrorCode::OracleScopeExceeded,
                  "no factorization oracle over quadratic extensions");
  }
  throw std::logic_error("unreachable");
}

std::string galois_group_finite(const QuarticPoly& P) {
  const Field& F = P.field;
  if (F.kind() != Field::Kind::Prime)
    throw Error(ErrorCode::OracleScopeExceeded, "finite-field oracle needs F_p");
  FactorReport fac = factor_quartic(P);
  if (!fac.irreducible)
    throw Error(ErrorCode::ReducibleInput, "pattern " + fac.pattern);

  const mpz_class& p = F.modulus();
  Poly m = P.to_poly();
  Poly x = Poly::x(F);
  Poly fr1 = pow_mod(x, p, m);
  Poly fr2 = pow_mod(x, p * p, m);
  Poly fr4 = pow_mod(x, p * p * p * p, m);
  require(!fr1.equals(x), "Frobenius fixes no root of an irreducible quartic");
  require(!fr2.equals(x), "Frobenius order exceeds 2");
  require(fr4.equals(x), "Frobenius order divides 4");
  return "C4";
}

std::vector<SquareClass> subfields_oracle(const BiquadPoly& P) {
  const Field& F = P.field;
  QuotientRing R(P.to_quartic());

  std::vector<QuotientRing::Vec> candidates;
  candidates.push_back({F.zero(), F.zero(), F.one(), F.zero()});  // y^2
  // y^3 + t*y hits the remaining subfields of a V4 extension for
  // t = u - omega and t = u + omega
  if (auto omega = sqrt_canonical(F, P.w)) {
    candidates.push_back({F.zero(), F.sub(P.u, *omega), F.zero(), F.one()});
    candidates.push_back({F.zero(), F.add(P.u, *omega), F.zero(), F.one()});
  }
  for (int t = -6; t <= 6; ++t)
    candidates.push_back({F.zero(), F.make(t), F.zero(), F.one()});

  std::vector<SquareClass> classes;
  for (const auto& coords : candidates) {
    Poly mp = R.minimal_polynomial(coords);
    if (mp.degree() != 2) continue;
    Elem b = mp.coeff(1);
    Elem c = mp.coeff(0);
    Elem disc = F.sub(F.mul(b, b), F.mul(F.make(4), c));
    if (F.is_zero(disc)) continue;
    SquareClass cl = square_class(F, disc);
    bool seen = false;
    for (const SquareClass& k : classes)
      if (same_class(F, k.rep, cl.rep)) seen = true;
    if (!seen) classes.push_back(cl);
  }
  std::sort(classes.begin(), classes.end(),
            [&F](const SquareClass& l, const SquareClass& r) {
              return class_less(F, l, r);
            });
  return classes;
}

}  // namespace biquad
