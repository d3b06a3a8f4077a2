#include "biquad/field.hpp"

#include <cstdlib>
#include <utility>

namespace biquad {

namespace {

mpz_class mod_reduce(const mpz_class& v, const mpz_class& p) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return r;
}

mpz_class mod_inverse(const mpz_class& v, const mpz_class& p) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()) == 0)
    throw Error(ErrorCode::ZeroInput, "no inverse modulo " + p.get_str());
  return r;
}

bool rational_is_square(const mpq_class& v) {
  if (sgn(v) <= 0) return false;
  return mpz_perfect_square_p(v.get_num().get_mpz_t()) != 0 &&
         mpz_perfect_square_p(v.get_den().get_mpz_t()) != 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// Field construction

Field Field::rationals() { return Field(Kind::Rationals, 0); }

Field Field::prime(const mpz_class& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) ||
      mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
    throw Error(ErrorCode::InvalidField, "modulus must be an odd prime, got " + p.get_str());
  return Field(Kind::Prime, p);
}

Field Field::quad_ext(const Field& base, const Elem& d) {
  if (base.kind_ == Kind::QuadExt)
    throw Error(ErrorCode::InvalidField, "extension base must be Q or F_p");
  if (base.is_zero(d))
    throw Error(ErrorCode::InvalidField, "extension radicand is zero");
  if (is_square(base, d))
    throw Error(ErrorCode::InvalidField,
                "extension radicand " + base.str(d) + " is a square in the base");
  Field F(Kind::QuadExt, base.p_);
  F.base_ = std::make_shared<Field>(base);
  F.d_ = d;
  return F;
}

const mpz_class& Field::modulus() const { return p_; }

const Field& Field::base() const {
  if (!base_) throw Error(ErrorCode::InvalidField, "field has no base");
  return *base_;
}

const Elem& Field::radicand() const {
  if (kind_ != Kind::QuadExt)
    throw Error(ErrorCode::InvalidField, "field has no radicand");
  return d_;
}

bool Field::operator==(const Field& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::Rationals: return true;
    case Kind::Prime: return p_ == other.p_;
    case Kind::QuadExt:
      return *base_ == *other.base_ && d_ == other.d_;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Scalar coordinate helpers

Field::Kind Field::scalar_kind() const {
  return kind_ == Kind::QuadExt ? base_->kind_ : kind_;
}

mpq_class Field::sreduce(const mpq_class& v) const {
  if (scalar_kind() != Kind::Prime) return v;
  if (cmp(v.get_den(), 1) == 0) return mpq_class(mod_reduce(v.get_num(), p_));
  mpz_class den = mod_reduce(v.get_den(), p_);
  if (den == 0)
    throw Error(ErrorCode::MalformedInput,
                "denominator not invertible modulo " + p_.get_str());
  mpz_class r = mod_reduce(v.get_num() * mod_inverse(den, p_), p_);
  return mpq_class(r);
}

mpq_class Field::sadd(const mpq_class& a, const mpq_class& b) const {
  mpq_class r = a + b;
  return sreduce(r);
}

mpq_class Field::ssub(const mpq_class& a, const mpq_class& b) const {
  mpq_class r = a - b;
  return sreduce(r);
}

mpq_class Field::smul(const mpq_class& a, const mpq_class& b) const {
  mpq_class r = a * b;
  return sreduce(r);
}

mpq_class Field::sdiv(const mpq_class& a, const mpq_class& b) const {
  if (sgn(b) == 0) throw Error(ErrorCode::ZeroInput, "division by zero");
  if (scalar_kind() == Kind::Prime)
    return mpq_class(mod_reduce(a.get_num() * mod_inverse(b.get_num(), p_), p_));
  mpq_class r = a / b;
  return r;
}

mpq_class Field::sneg(const mpq_class& a) const {
  mpq_class r = -a;
  return sreduce(r);
}

// ---------------------------------------------------------------------------
// Element construction

Elem Field::make(long n) const { return make(mpq_class(n)); }

Elem Field::make(const mpq_class& q) const {
  mpq_class v = q;
  v.canonicalize();
  return Elem{sreduce(v), 0};
}

Elem Field::make_quad(const Elem& x, const Elem& y) const {
  if (kind_ != Kind::QuadExt)
    throw Error(ErrorCode::InvalidField, "make_quad on a non-extension field");
  return Elem{sreduce(x.x), sreduce(y.x)};
}

// ---------------------------------------------------------------------------
// Arithmetic

Elem Field::add(const Elem& a, const Elem& b) const {
  return Elem{sadd(a.x, b.x), sadd(a.y, b.y)};
}

Elem Field::sub(const Elem& a, const Elem& b) const {
  return Elem{ssub(a.x, b.x), ssub(a.y, b.y)};
}

Elem Field::mul(const Elem& a, const Elem& b) const {
  if (kind_ != Kind::QuadExt) return Elem{smul(a.x, b.x), 0};
  // (ax + ay*s)(bx + by*s) with s^2 = d
  mpq_class cross = smul(d_.x, smul(a.y, b.y));
  return Elem{sadd(smul(a.x, b.x), cross), sadd(smul(a.x, b.y), smul(a.y, b.x))};
}

Elem Field::neg(const Elem& a) const { return Elem{sneg(a.x), sneg(a.y)}; }

Elem Field::inv(const Elem& a) const {
  if (is_zero(a)) throw Error(ErrorCode::ZeroInput, "inverse of zero");
  if (kind_ != Kind::QuadExt) return Elem{sdiv(mpq_class(1), a.x), 0};
  // conj / norm; the norm is nonzero because d is a nonsquare
  mpq_class norm = ssub(smul(a.x, a.x), smul(d_.x, smul(a.y, a.y)));
  return Elem{sdiv(a.x, norm), sneg(sdiv(a.y, norm))};
}

Elem Field::div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

Elem Field::pow(const Elem& a, unsigned long e) const {
  Elem acc = one();
  Elem base_v = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base_v);
    base_v = mul(base_v, base_v);
    e >>= 1;
  }
  return acc;
}

bool Field::is_zero(const Elem& a) const { return sgn(a.x) == 0 && sgn(a.y) == 0; }

Elem Field::conj(const Elem& a) const {
  if (kind_ != Kind::QuadExt) return a;
  return Elem{a.x, sneg(a.y)};
}

std::string Field::str(const Elem& a) const {
  if (kind_ != Kind::QuadExt) return a.x.get_str();
  std::string d_str = base_->str(d_);
  if (sgn(a.y) == 0) return a.x.get_str();
  std::string yterm;
  if (cmp(a.y, 1) == 0) yterm = "sqrt(" + d_str + ")";
  else if (cmp(a.y, -1) == 0) yterm = "-sqrt(" + d_str + ")";
  else yterm = a.y.get_str() + "*sqrt(" + d_str + ")";
  if (sgn(a.x) == 0) return yterm;
  if (sgn(a.y) > 0) return a.x.get_str() + " + " + yterm;
  mpq_class abs_y = abs(a.y);
  std::string mag = cmp(abs_y, 1) == 0 ? "sqrt(" + d_str + ")"
                                       : abs_y.get_str() + "*sqrt(" + d_str + ")";
  return a.x.get_str() + " - " + mag;
}

// ---------------------------------------------------------------------------
// Integer utilities

unsigned long factor_bound() {
  static const unsigned long bound = [] {
    if (const char* s = std::getenv("BIQUAD_FACTOR_BOUND")) {
      char* end = nullptr;
      unsigned long v = std::strtoul(s, &end, 10);
      if (end != s && *end == '\0' && v >= 2) return v;
    }
    return 1000000ul;
  }();
  return bound;
}

namespace {

// |n| = squarefree * content^2
struct SquareSplit {
  mpz_class squarefree;
  mpz_class content;
};

SquareSplit split_square(mpz_class m) {
  SquareSplit out{1, 1};
  const unsigned long bound = factor_bound();
  unsigned long d = 2;
  while (true) {
    mpz_class dd(d);
    if (dd * dd > m) break;  // remaining cofactor is 1 or prime
    if (d > bound) {
      // cofactor survived trial division to the bound
      if (mpz_perfect_square_p(m.get_mpz_t())) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
        out.content *= r;
        m = 1;
        break;
      }
      throw Error(ErrorCode::UnfactorableInteger,
                  "cofactor " + m.get_str() + " exceeds the factor bound " +
                      std::to_string(bound));
    }
    if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      unsigned long e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
        ++e;
      }
      if (e & 1) out.squarefree *= d;
      for (unsigned long k = 0; k < e / 2; ++k) out.content *= d;
    }
    d = (d == 2) ? 3 : d + 2;
  }
  if (m > 1) out.squarefree *= m;
  return out;
}

}  // namespace

mpz_class squarefree_part(const mpz_class& n) {
  if (n == 0) throw Error(ErrorCode::ZeroInput, "square-free part of zero");
  SquareSplit s = split_square(abs(n));
  return sgn(n) < 0 ? mpz_class(-s.squarefree) : s.squarefree;
}

mpz_class square_content(const mpz_class& n) {
  if (n <= 0) throw Error(ErrorCode::ZeroInput, "square content needs a positive integer");
  return split_square(n).content;
}

mpz_class least_nonsquare_mod(const mpz_class& p) {
  mpz_class e = (p - 1) / 2;
  for (mpz_class r = 2; r < p; ++r) {
    mpz_class t;
    mpz_powm(t.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if (t != 1) return r;
  }
  throw Error(ErrorCode::InvalidField, "no nonsquare modulo " + p.get_str());
}

std::optional<mpz_class> sqrt_mod(const mpz_class& a, const mpz_class& p) {
  if (a == 0) return mpz_class(0);
  mpz_class half = (p - 1) / 2, t;
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), half.get_mpz_t(), p.get_mpz_t());
  if (t != 1) return std::nullopt;
  if (mod_reduce(p, 4) == 3) {
    mpz_class e = (p + 1) / 4, x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return x;
  }
  // Tonelli-Shanks, p = q * 2^s + 1 with q odd
  mpz_class q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q >>= 1;
    ++s;
  }
  mpz_class z = least_nonsquare_mod(p);
  mpz_class c, x, e1 = (q + 1) / 2;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), e1.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    mpz_class tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    mpz_class b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
    x = x * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  return x;
}

// ---------------------------------------------------------------------------
// Squares

bool is_square(const Field& F, const Elem& x) {
  if (F.is_zero(x)) throw Error(ErrorCode::ZeroInput, "square test on zero");
  switch (F.kind()) {
    case Field::Kind::Rationals:
      return rational_is_square(x.x);
    case Field::Kind::Prime: {
      mpz_class half = (F.modulus() - 1) / 2, t;
      mpz_class v = x.x.get_num();
      mpz_powm(t.get_mpz_t(), v.get_mpz_t(), half.get_mpz_t(), F.modulus().get_mpz_t());
      return t == 1;
    }
    case Field::Kind::QuadExt:
      break;
  }
  // x + y*sqrt(d): for y = 0 the element is a square iff x or x/d is a
  // base-field square; otherwise iff the norm x^2 - d y^2 has a base square
  // root n with (x + n)/2 or (x - n)/2 a base square.
  const Field& B = F.base();
  Elem a{x.x, 0}, b{x.y, 0};
  const Elem& d = F.radicand();
  if (B.is_zero(b)) return is_square(B, a) || is_square(B, B.div(a, d));
  Elem norm = B.sub(B.mul(a, a), B.mul(d, B.mul(b, b)));
  auto n = sqrt_canonical(B, norm);
  if (!n) return false;
  Elem two = B.make(2);
  Elem t1 = B.div(B.add(a, *n), two);
  Elem t2 = B.div(B.sub(a, *n), two);
  return (!B.is_zero(t1) && is_square(B, t1)) || (!B.is_zero(t2) && is_square(B, t2));
}

std::optional<Elem> sqrt_canonical(const Field& F, const Elem& x) {
  if (F.is_zero(x)) return F.zero();
  switch (F.kind()) {
    case Field::Kind::Rationals: {
      if (!rational_is_square(x.x)) return std::nullopt;
      mpz_class rn, rd;
      mpz_sqrt(rn.get_mpz_t(), x.x.get_num().get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), x.x.get_den().get_mpz_t());
      return F.make(mpq_class(rn, rd));
    }
    case Field::Kind::Prime: {
      auto r = sqrt_mod(x.x.get_num(), F.modulus());
      if (!r) return std::nullopt;
      mpz_class other = F.modulus() - *r;
      return F.make(mpq_class(*r < other ? *r : other));
    }
    case Field::Kind::QuadExt:
      break;
  }
  const Field& B = F.base();
  Elem a{x.x, 0}, b{x.y, 0};
  const Elem& d = F.radicand();
  std::optional<Elem> root;
  if (B.is_zero(b)) {
    if (auto s = sqrt_canonical(B, a); s && !B.is_zero(*s))
      root = Elem{s->x, 0};
    else if (auto t = sqrt_canonical(B, B.div(a, d)); t && !B.is_zero(*t))
      root = Elem{0, t->x};
    else
      return std::nullopt;
  } else {
    Elem norm = B.sub(B.mul(a, a), B.mul(d, B.mul(b, b)));
    auto n = sqrt_canonical(B, norm);
    if (!n) return std::nullopt;
    Elem two = B.make(2);
    for (const Elem& t : {B.div(B.add(a, *n), two), B.div(B.sub(a, *n), two)}) {
      if (B.is_zero(t) || !is_square(B, t)) continue;
      Elem s = *sqrt_canonical(B, t);
      Elem u = B.div(B.div(b, s), two);
      root = Elem{s.x, u.x};
      break;
    }
    if (!root) return std::nullopt;
  }
  Elem other = F.neg(*root);
  return elem_less(F, *root, other) ? *root : other;
}

// ---------------------------------------------------------------------------
// Square classes

SquareClass square_class(const Field& F, const Elem& x) {
  if (F.is_zero(x)) throw Error(ErrorCode::ZeroInput, "square class of zero");
  switch (F.kind()) {
    case Field::Kind::Rationals: {
      mpz_class n = x.x.get_num() * x.x.get_den();
      return SquareClass{F.make(mpq_class(squarefree_part(n)))};
    }
    case Field::Kind::Prime: {
      if (is_square(F, x)) return SquareClass{F.one()};
      return SquareClass{F.make(mpq_class(least_nonsquare_mod(F.modulus())))};
    }
    case Field::Kind::QuadExt:
      break;
  }
  if (F.base().kind() == Field::Kind::Prime) {
    // two classes only; residue pairs carry no content to strip
    if (is_square(F, x)) return SquareClass{F.one()};
    return SquareClass{x};
  }
  // scale by a square to integer coordinates, then strip the square part of
  // the coordinate gcd
  mpz_class m = lcm(x.x.get_den(), x.y.get_den());
  mpq_class xs = x.x * m * m, ys = x.y * m * m;
  mpz_class X = xs.get_num(), Y = ys.get_num();
  mpz_class g = gcd(X, Y);
  mpz_class k = square_content(g);
  mpz_class k2 = k * k;
  return SquareClass{Elem{mpq_class(X / k2), mpq_class(Y / k2)}};
}

bool same_class(const Field& F, const SquareClass& a, const SquareClass& b) {
  return is_square(F, F.div(a.rep, b.rep));
}

bool same_class(const Field& F, const Elem& a, const Elem& b) {
  return is_square(F, F.div(a, b));
}

SquareClass class_mul(const Field& F, const SquareClass& a, const SquareClass& b) {
  return square_class(F, F.mul(a.rep, b.rep));
}

bool class_is_one(const Field& F, const SquareClass& c) {
  return is_square(F, c.rep);
}

bool elem_less(const Field& F, const Elem& a, const Elem& b) {
  (void)F;
  int c = cmp(a.x, b.x);
  if (c != 0) return c < 0;
  return cmp(a.y, b.y) < 0;
}

bool class_less(const Field& F, const SquareClass& a, const SquareClass& b) {
  if (F.kind() == Field::Kind::Rationals) {
    mpq_class aa = abs(a.rep.x), ab = abs(b.rep.x);
    int c = cmp(aa, ab);
    if (c != 0) return c < 0;
    return sgn(a.rep.x) > sgn(b.rep.x);  // positive before negative
  }
  return elem_less(F, a.rep, b.rep);
}

// ---------------------------------------------------------------------------

bool quad_ext_iso(const Field& F, const Elem& a, const Elem& b) {
  if (F.is_zero(a) || F.is_zero(b))
    throw Error(ErrorCode::ZeroInput, "radicand is zero");
  if (is_square(F, a))
    throw Error(ErrorCode::SquareInput, "radicand " + F.str(a) + " is a square");
  if (is_square(F, b))
    throw Error(ErrorCode::SquareInput, "radicand " + F.str(b) + " is a square");
  return is_square(F, F.mul(a, b));
}

}  // namespace biquad
