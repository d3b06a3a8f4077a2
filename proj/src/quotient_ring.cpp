#include "biquad/quotient_ring.hpp"

#include <vector>

#include "biquad/biquad_analysis.hpp"

namespace biquad {

namespace {

bool fp_quartic_irreducible(const QuarticPoly& P) {
  const Field& F = P.field;
  Poly p = P.to_poly();
  unsigned long pm = F.modulus().get_ui();
  for (unsigned long r = 0; r < pm; ++r)
    if (F.is_zero(p.eval(F.make(static_cast<long>(r))))) return false;
  // no roots; any factorization is quadratic * quadratic
  for (unsigned long a = 0; a < pm; ++a)
    for (unsigned long b = 0; b < pm; ++b) {
      Poly q(F, {F.make(static_cast<long>(b)), F.make(static_cast<long>(a)), F.one()});
      if (p.divmod(q).second.is_zero()) return false;
    }
  return true;
}

std::vector<mpz_class> signed_divisors(const mpz_class& n) {
  std::vector<mpz_class> out;
  mpz_class a = abs(n);
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (!mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) continue;
    mpz_class e = a / d;
    out.push_back(d);
    out.push_back(-d);
    if (e != d) {
      out.push_back(e);
      out.push_back(-e);
    }
  }
  return out;
}

// Irreducibility of a monic integer quartic Y^4 + c3 Y^3 + c2 Y^2 + c1 Y + c0.
bool integer_quartic_irreducible(const mpz_class& c3, const mpz_class& c2,
                                 const mpz_class& c1, const mpz_class& c0) {
  if (c0 == 0) return false;  // root 0
  auto divisors = signed_divisors(c0);
  for (const mpz_class& r : divisors) {
    mpz_class val = ((r + c3) * r + c2) * r * r + c1 * r + c0;
    if (val == 0) return false;
  }
  // no linear factor; try (Y^2 + aY + b)(Y^2 + cY + d) with b*d = c0
  for (const mpz_class& b : divisors) {
    if (!mpz_divisible_p(c0.get_mpz_t(), b.get_mpz_t())) continue;
    mpz_class d = c0 / b;
    if (d == b) {
      // a + c = c3, ac = c2 - 2b, with c1 = b*c3 forced
      if (c1 != b * c3) continue;
      mpz_class disc = c3 * c3 - 4 * (c2 - 2 * b);
      if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) return false;
    } else {
      mpz_class num = c1 - c3 * b, den = d - b;
      if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) continue;
      mpz_class a = num / den, c = c3 - a;
      if (b + d + a * c == c2) return false;
    }
  }
  return true;
}

bool q_quartic_irreducible(const QuarticPoly& P) {
  // clear denominators: Y = mX turns the quartic into a monic integer model
  mpz_class m = lcm(lcm(P.u.x.get_den(), P.v.x.get_den()),
                    lcm(P.w.x.get_den(), P.z.x.get_den()));
  mpq_class c3 = P.u.x * m, c2 = P.v.x * m * m, c1 = P.w.x * m * m * m,
            c0 = P.z.x * m * m * m * m;
  return integer_quartic_irreducible(c3.get_num(), c2.get_num(), c1.get_num(),
                                     c0.get_num());
}

}  // namespace

bool quartic_is_irreducible(const QuarticPoly& P) {
  if (P.is_biquadratic()) {
    BiquadPoly B{P.field, P.v, P.z};
    if (P.field.is_zero(P.z)) return false;  // X^2 divides
    return is_irreducible_biquadratic(B);
  }
  switch (P.field.kind()) {
    case Field::Kind::Prime:
      return fp_quartic_irreducible(P);
    case Field::Kind::Rationals:
      return q_quartic_irreducible(P);
    case Field::Kind::QuadExt:
      throw Error(ErrorCode::OracleScopeExceeded,
                  "irreducibility over an extension is only decided for "
                  "biquadratic moduli");
  }
  return false;
}

QuotientRing::QuotientRing(const QuarticPoly& modulus)
    : modulus_(modulus), modulus_poly_(modulus.to_poly()) {
  if (!quartic_is_irreducible(modulus_))
    throw Error(ErrorCode::ReduciblePolynomial,
                "quotient modulus " + modulus_.str() + " is reducible");
}

QuotientRing::Vec QuotientRing::zero() const {
  const Field& F = field();
  return {F.zero(), F.zero(), F.zero(), F.zero()};
}

QuotientRing::Vec QuotientRing::one() const {
  const Field& F = field();
  return {F.one(), F.zero(), F.zero(), F.zero()};
}

QuotientRing::Vec QuotientRing::gen() const {
  const Field& F = field();
  return {F.zero(), F.one(), F.zero(), F.zero()};
}

QuotientRing::Vec QuotientRing::make(const Elem& c0, const Elem& c1,
                                     const Elem& c2, const Elem& c3) const {
  return {c0, c1, c2, c3};
}

QuotientRing::Vec QuotientRing::scalar(const Elem& c) const {
  const Field& F = field();
  return {c, F.zero(), F.zero(), F.zero()};
}

QuotientRing::Vec QuotientRing::add(const Vec& a, const Vec& b) const {
  const Field& F = field();
  Vec r;
  for (int i = 0; i < 4; ++i) r[i] = F.add(a[i], b[i]);
  return r;
}

QuotientRing::Vec QuotientRing::sub(const Vec& a, const Vec& b) const {
  const Field& F = field();
  Vec r;
  for (int i = 0; i < 4; ++i) r[i] = F.sub(a[i], b[i]);
  return r;
}

QuotientRing::Vec QuotientRing::neg(const Vec& a) const {
  const Field& F = field();
  Vec r;
  for (int i = 0; i < 4; ++i) r[i] = F.neg(a[i]);
  return r;
}

QuotientRing::Vec QuotientRing::mul(const Vec& a, const Vec& b) const {
  return from_poly(to_poly(a).mul(to_poly(b)));
}

QuotientRing::Vec QuotientRing::inv(const Vec& a) const {
  if (is_zero(a))
    throw Error(ErrorCode::NonInvertible, "zero has no inverse in the quotient");
  // extended euclid: s*a + t*modulus = gcd = const
  const Field& F = field();
  Poly r0 = modulus_poly_, r1 = to_poly(a);
  Poly s0(F), s1 = Poly::constant(F, F.one());
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    Poly s2 = s0.sub(q.mul(s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because the modulus is irreducible
  if (r0.degree() != 0)
    throw Error(ErrorCode::NonInvertible,
                "element shares a factor with the modulus");
  return from_poly(s0.scale(F.inv(r0.coeff(0))));
}

QuotientRing::Vec QuotientRing::div(const Vec& a, const Vec& b) const {
  return mul(a, inv(b));
}

QuotientRing::Vec QuotientRing::pow(const Vec& a, const mpz_class& e) const {
  Vec acc = one();
  Vec b = a;
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = mul(acc, b);
    b = mul(b, b);
    k >>= 1;
  }
  return acc;
}

bool QuotientRing::is_zero(const Vec& a) const {
  const Field& F = field();
  for (const Elem& c : a)
    if (!F.is_zero(c)) return false;
  return true;
}

bool QuotientRing::eq(const Vec& a, const Vec& b) const {
  const Field& F = field();
  for (int i = 0; i < 4; ++i)
    if (!F.eq(a[i], b[i])) return false;
  return true;
}

Poly QuotientRing::to_poly(const Vec& a) const {
  return Poly(field(), {a[0], a[1], a[2], a[3]});
}

QuotientRing::Vec QuotientRing::from_poly(const Poly& p) const {
  Poly r = p.mod(modulus_poly_);
  return {r.coeff(0), r.coeff(1), r.coeff(2), r.coeff(3)};
}

QuotientRing::Vec QuotientRing::eval_poly(const Poly& p, const Vec& at) const {
  Vec acc = zero();
  for (int i = p.degree(); i >= 0; --i)
    acc = add(mul(acc, at), scalar(p.coeff(i)));
  return acc;
}

Poly QuotientRing::minimal_polynomial(const Vec& a) const {
  const Field& F = field();
  // powers a^0 .. a^4 as coordinate columns
  std::vector<Vec> pw;
  pw.push_back(one());
  for (int k = 1; k <= 4; ++k) pw.push_back(mul(pw.back(), a));

  for (int k = 1; k <= 4; ++k) {
    // solve sum c_i a^i = a^k by Gaussian elimination on a 4 x k system
    std::vector<std::vector<Elem>> m(4, std::vector<Elem>(k + 1, F.zero()));
    for (int row = 0; row < 4; ++row) {
      for (int col = 0; col < k; ++col) m[row][col] = pw[col][row];
      m[row][k] = pw[k][row];
    }
    int rank = 0;
    std::vector<int> pivot_col(4, -1);
    for (int col = 0; col < k && rank < 4; ++col) {
      int piv = -1;
      for (int row = rank; row < 4; ++row)
        if (!F.is_zero(m[row][col])) {
          piv = row;
          break;
        }
      if (piv < 0) continue;
      std::swap(m[rank], m[piv]);
      Elem inv_p = F.inv(m[rank][col]);
      for (int j = col; j <= k; ++j) m[rank][j] = F.mul(m[rank][j], inv_p);
      for (int row = 0; row < 4; ++row) {
        if (row == rank || F.is_zero(m[row][col])) continue;
        Elem f = m[row][col];
        for (int j = col; j <= k; ++j)
          m[row][j] = F.sub(m[row][j], F.mul(f, m[rank][j]));
      }
      pivot_col[rank] = col;
      ++rank;
    }
    bool consistent = true;
    for (int row = rank; row < 4; ++row)
      if (!F.is_zero(m[row][k])) {
        consistent = false;
        break;
      }
    if (!consistent) continue;
    std::vector<Elem> coeffs(static_cast<size_t>(k) + 1, F.zero());
    coeffs[static_cast<size_t>(k)] = F.one();
    for (int row = 0; row < rank; ++row)
      coeffs[static_cast<size_t>(pivot_col[row])] = F.neg(m[row][k]);
    return Poly(F, std::move(coeffs));
  }
  throw Error(ErrorCode::NonInvertible, "no minimal polynomial found");
}

}  // namespace biquad
