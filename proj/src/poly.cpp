#include "biquad/poly.hpp"

namespace biquad {

Poly::Poly(Field F, std::vector<Elem> coeffs)
    : field_(std::move(F)), coeffs_(std::move(coeffs)) {
  trim();
}

void Poly::trim() {
  while (!coeffs_.empty() && field_.is_zero(coeffs_.back())) coeffs_.pop_back();
}

Poly Poly::x(const Field& F) { return Poly(F, {F.zero(), F.one()}); }

Poly Poly::constant(const Field& F, const Elem& c) { return Poly(F, {c}); }

Elem Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_.zero();
  return coeffs_[i];
}

const Elem& Poly::lead() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroInput, "leading coefficient of zero");
  return coeffs_.back();
}

bool Poly::is_monic() const {
  return !coeffs_.empty() && field_.eq(coeffs_.back(), field_.one());
}

Poly Poly::add(const Poly& o) const {
  std::vector<Elem> out(std::max(coeffs_.size(), o.coeffs_.size()), field_.zero());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = field_.add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  return Poly(field_, std::move(out));
}

Poly Poly::sub(const Poly& o) const { return add(o.neg()); }

Poly Poly::neg() const {
  std::vector<Elem> out = coeffs_;
  for (auto& c : out) c = field_.neg(c);
  return Poly(field_, std::move(out));
}

Poly Poly::mul(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<Elem> out(coeffs_.size() + o.coeffs_.size() - 1, field_.zero());
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] = field_.add(out[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
  return Poly(field_, std::move(out));
}

Poly Poly::scale(const Elem& c) const {
  std::vector<Elem> out = coeffs_;
  for (auto& e : out) e = field_.mul(e, c);
  return Poly(field_, std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::ZeroInput, "polynomial division by zero");
  Poly rem = *this;
  if (rem.degree() < divisor.degree()) return {Poly(field_), rem};
  std::vector<Elem> q(static_cast<size_t>(rem.degree() - divisor.degree()) + 1,
                      field_.zero());
  Elem lead_inv = field_.inv(divisor.lead());
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    int shift = rem.degree() - divisor.degree();
    Elem c = field_.mul(rem.lead(), lead_inv);
    q[static_cast<size_t>(shift)] = c;
    std::vector<Elem> t(static_cast<size_t>(shift), field_.zero());
    t.push_back(c);
    rem = rem.sub(divisor.mul(Poly(field_, std::move(t))));
  }
  return {Poly(field_, std::move(q)), rem};
}

Elem Poly::eval(const Elem& at) const {
  Elem acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = field_.add(field_.mul(acc, at), *it);
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly(field_);
  std::vector<Elem> out(coeffs_.size() - 1, field_.zero());
  for (size_t i = 1; i < coeffs_.size(); ++i)
    out[i - 1] = field_.mul(coeffs_[i], field_.make(static_cast<long>(i)));
  return Poly(field_, std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(field_.inv(lead()));
}

bool Poly::equals(const Poly& o) const {
  if (degree() != o.degree()) return false;
  for (int i = 0; i <= degree(); ++i)
    if (!field_.eq(coeff(i), o.coeff(i))) return false;
  return true;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly pow_mod(const Poly& base, const mpz_class& e, const Poly& m) {
  Poly acc = Poly::constant(base.field(), base.field().one());
  Poly b = base.mod(m);
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = acc.mul(b).mod(m);
    b = b.mul(b).mod(m);
    k >>= 1;
  }
  return acc;
}

Poly QuarticPoly::to_poly() const {
  return Poly(field, {z, w, v, u, field.one()});
}

bool QuarticPoly::is_biquadratic() const {
  return field.is_zero(u) && field.is_zero(w);
}

std::string QuarticPoly::str() const {
  auto term = [&](const Elem& c, const char* xs) -> std::string {
    if (field.is_zero(c)) return "";
    return " + (" + field.str(c) + ")" + xs;
  };
  return "X^4" + term(u, "*X^3") + term(v, "*X^2") + term(w, "*X") + term(z, "");
}

QuarticPoly BiquadPoly::to_quartic() const {
  return QuarticPoly{field, field.zero(), u, field.zero(), w};
}

QuarticPoly make_quartic(const Field& F, const Elem& u, const Elem& v,
                         const Elem& w, const Elem& z) {
  return QuarticPoly{F, u, v, w, z};
}

BiquadPoly make_biquad(const Field& F, const Elem& u, const Elem& w) {
  return BiquadPoly{F, u, w};
}

}  // namespace biquad
