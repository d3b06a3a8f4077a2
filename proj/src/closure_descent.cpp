#include "biquad/closure_descent.hpp"

#include <stdexcept>

#include "biquad/error.hpp"

namespace biquad {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

// u or w of a scalar-field polynomial moved into the quadratic extension
Elem lift(const Field& E, const Elem& x) { return E.make_quad(x, Elem{}); }

}  // namespace

const char* to_string(ClosureReport::Kind k) {
  switch (k) {
    case ClosureReport::Kind::Trivial: return "Trivial";
    case ClosureReport::Kind::Closure: return "Closure";
    case ClosureReport::Kind::NoneCyclic: return "NoneCyclic";
  }
  return "?";
}

ClosureReport elem_abelian_closure(const BiquadPoly& P) {
  const Field& F = P.field;
  AutResult aut = aut_type(P);
  ClosureReport rep;
  switch (aut.kind) {
    case AutKind::V4:
      rep.kind = ClosureReport::Kind::Trivial;
      return rep;
    case AutKind::C4:
      rep.kind = ClosureReport::Kind::NoneCyclic;
      return rep;
    case AutKind::C2:
      break;
  }
  if (F.is_quad_ext())
    throw Error(ErrorCode::InvalidField, "field towers limited to one quadratic step");
  rep.kind = ClosureReport::Kind::Closure;
  SquareClass s = square_class(F, P.w);
  Field E = Field::quad_ext(F, s.rep);
  BiquadPoly lifted{E, lift(E, P.u), lift(E, P.w)};
  require(is_irreducible_biquadratic(lifted), "closure keeps the polynomial irreducible");
  require(aut_type(lifted).kind == AutKind::V4, "closure makes the polynomial V4");
  rep.w_class = s;
  rep.closure_field = E;
  return rep;
}

const char* to_string(DescentBranch b) {
  switch (b) {
    case DescentBranch::OmegaSquare: return "OmegaSquare";
    case DescentBranch::OmegaZero_ra: return "OmegaZero_ra";
    case DescentBranch::OmegaZero_ra_over_w: return "OmegaZero_ra_over_w";
  }
  return "?";
}

NoncyclicVerdict noncyclic_iso(const BiquadPoly& P, const BiquadPoly& Q) {
  const Field& F = P.field;
  if (!(F == Q.field)) throw Error(ErrorCode::InvalidField, "mixed base fields");
  AutKind kp = aut_type(P).kind;
  AutKind kq = aut_type(Q).kind;
  if (kp == AutKind::C4 || kq == AutKind::C4)
    throw Error(ErrorCode::CyclicInput, "descent applies to non-cyclic extensions only");

  NoncyclicVerdict verdict;
  if (kp == AutKind::V4 && kq == AutKind::V4) {
    IsoVerdict v = elem_iso(P, Q);
    verdict.isomorphic = v.isomorphic;
    verdict.elem_condition = v.condition;
    verdict.mode = "elementary_abelian";
    return verdict;
  }
  if (kp != kq) {
    verdict.mode = "mixed";
    return verdict;
  }

  verdict.mode = "descent";
  const Elem& u = P.u;
  const Elem& w = P.w;
  const Elem& v = Q.u;
  const Elem& z = Q.w;
  Elem four = F.make(4);
  Elem disc_p = F.sub(F.mul(u, u), F.mul(four, w));
  Elem disc_q = F.sub(F.mul(v, v), F.mul(four, z));

  auto oc = sqrt_canonical(F, F.div(z, w));
  auto oa = sqrt_canonical(F, F.div(disc_q, disc_p));
  if (!oc || !oa) return verdict;

  Elem uv = F.mul(u, v);
  Elem two_w = F.add(w, w);
  for (int sc : {1, -1}) {
    Elem c = sc > 0 ? *oc : F.neg(*oc);
    for (int sa : {1, -1}) {
      Elem a = sa > 0 ? *oa : F.neg(*oa);
      for (int r : {1, -1}) {
        Elem ra = r > 0 ? a : F.neg(a);
        for (int s : {1, -1}) {
          Elem wcs = F.mul(F.mul(four, w), c);
          if (s < 0) wcs = F.neg(wcs);
          Elem q1 = F.div(F.sub(uv, wcs), disc_p);
          Elem omega = F.div(F.add(ra, q1), two_w);
          std::optional<DescentBranch> hit;
          if (!F.is_zero(omega)) {
            if (is_square(F, omega)) hit = DescentBranch::OmegaSquare;
          } else {
            Elem mra = F.neg(ra);
            if (is_square(F, mra))
              hit = DescentBranch::OmegaZero_ra;
            else if (is_square(F, F.div(mra, w)))
              hit = DescentBranch::OmegaZero_ra_over_w;
          }
          if (hit) {
            verdict.isomorphic = true;
            verdict.witness = DescentWitness{c, a, r, s, omega, *hit};
            return verdict;
          }
        }
      }
    }
  }
  return verdict;
}

NonGaloisKey nongalois_class_key(const BiquadPoly& P) {
  const Field& F = P.field;
  AutResult aut = aut_type(P);
  if (aut.kind != AutKind::C2)
    throw Error(ErrorCode::NotNonGalois,
                std::string("automorphism group is ") + to_string(aut.kind));
  if (F.is_quad_ext())
    throw Error(ErrorCode::InvalidField, "field towers limited to one quadratic step");

  SquareClass s = square_class(F, P.w);
  auto d = sqrt_canonical(F, F.div(P.w, s.rep));
  require(d.has_value(), "w over its class representative is a square");
  Field E = Field::quad_ext(F, s.rep);

  NonGaloisKey key{F, s, E, E.zero(), E.zero()};
  Elem minus_u = F.neg(P.u);
  Elem minus_2d = F.neg(F.add(*d, *d));
  key.rep = E.make_quad(minus_u, minus_2d);
  key.rep_conj = E.conj(key.rep);

  Elem norm = E.mul(key.rep, key.rep_conj);
  Elem four = F.make(4);
  Elem disc = F.sub(F.mul(P.u, P.u), F.mul(four, P.w));
  require(E.eq(norm, E.make_quad(disc, F.zero())), "rep norm equals u^2-4w");
  require(!is_square(E, norm), "rep norm stays nonsquare in the extension");
  return key;
}

bool nongalois_key_equal(const NonGaloisKey& k1, const NonGaloisKey& k2) {
  if (!(k1.base == k2.base)) throw Error(ErrorCode::InvalidField, "mixed base fields");
  if (!same_class(k1.base, k1.s.rep, k2.s.rep)) return false;
  require(k1.ext == k2.ext, "matching classes give the same extension field");
  const Field& E = k1.ext;
  return is_square(E, E.div(k1.rep, k2.rep)) ||
         is_square(E, E.div(k1.rep, k2.rep_conj));
}

ClassKey class_key(const BiquadPoly& P) {
  const Field& F = P.field;
  AutResult aut = aut_type(P);
  switch (aut.kind) {
    case AutKind::V4: {
      ElemAbelianExt E = canonical_ab(P);
      return ClassKey{ClassKey::Kind::ElemAbelian, F,
                      orbit(F, make_pair_class(F, E.a, E.b)), std::nullopt};
    }
    case AutKind::C2:
      return ClassKey{ClassKey::Kind::NonGalois, F, std::nullopt,
                      nongalois_class_key(P)};
    case AutKind::C4:
      throw Error(ErrorCode::CyclicInput, "cyclic extensions carry no descent key");
  }
  throw std::logic_error("unreachable");
}

bool class_key_equal(const ClassKey& k1, const ClassKey& k2) {
  if (!(k1.base == k2.base)) throw Error(ErrorCode::InvalidField, "mixed base fields");
  if (k1.kind != k2.kind) return false;
  if (k1.kind == ClassKey::Kind::ElemAbelian)
    return orbit_equal(k1.base, *k1.orbit_key, *k2.orbit_key);
  return nongalois_key_equal(*k1.nongalois_key, *k2.nongalois_key);
}

EmbeddedClass delta_embed(const ClassKey& key) {
  if (key.kind == ClassKey::Kind::ElemAbelian) {
    EmbeddedClass out{EmbeddedClass::Tag::Base, key.base, key.base, std::nullopt, {}};
    for (const PairClass& m : key.orbit_key->members)
      out.members.push_back(EmbeddedMember{m.a.rep, m.b.rep, true, true, false});
    return out;
  }

  const NonGaloisKey& ng = *key.nongalois_key;
  const Field& E = ng.ext;
  EmbeddedClass out{EmbeddedClass::Tag::Quad, ng.base, E, ng.s, {}};
  Elem triple[3] = {ng.rep, ng.rep_conj, E.mul(ng.rep, ng.rep_conj)};
  auto in_base = [](const Elem& x) { return sgn(x.y) == 0; };
  for (const Perm& g : s3_elements()) {
    EmbeddedMember m;
    m.first = triple[g[0]];
    m.second = triple[g[1]];
    m.first_in_base = in_base(m.first);
    m.second_in_base = in_base(m.second);
    m.conjugate_pair = !m.first_in_base && E.eq(m.second, E.conj(m.first));
    out.members.push_back(m);
  }
  return out;
}

namespace {

bool component_literal_equal(const EmbeddedClass& A, const Elem& x, bool x_base,
                             const EmbeddedClass& B, const Elem& y, bool y_base) {
  if (x_base != y_base) return false;
  if (x_base) return cmp(x.x, y.x) == 0;
  if (!A.s || !B.s || !same_class(A.base, A.s->rep, B.s->rep)) return false;
  return x == y;
}

bool member_equal(const EmbeddedClass& A, const EmbeddedMember& m1,
                  const EmbeddedClass& B, const EmbeddedMember& m2) {
  // literal equality inside the ambient union
  if (component_literal_equal(A, m1.first, m1.first_in_base, B, m2.first, m2.first_in_base) &&
      component_literal_equal(A, m1.second, m1.second_in_base, B, m2.second, m2.second_in_base))
    return true;
  // componentwise square ratios over the base field
  if (m1.first_in_base && m1.second_in_base && m2.first_in_base && m2.second_in_base) {
    const Field& F = A.base;
    Elem f1 = F.make(m1.first.x), s1 = F.make(m1.second.x);
    Elem f2 = F.make(m2.first.x), s2 = F.make(m2.second.x);
    if (is_square(F, F.div(f1, f2)) && is_square(F, F.div(s1, s2))) return true;
  }
  // conjugate pairs over a common quadratic extension
  if (m1.conjugate_pair && m2.conjugate_pair && A.s && B.s &&
      same_class(A.base, A.s->rep, B.s->rep)) {
    require(A.field == B.field, "matching classes give the same extension field");
    const Field& E = A.field;
    if (is_square(E, E.div(m1.first, m2.first))) return true;
  }
  return false;
}

}  // namespace

bool embedded_equal(const EmbeddedClass& A, const EmbeddedClass& B) {
  if (!(A.base == B.base)) throw Error(ErrorCode::InvalidField, "mixed base fields");
  for (const EmbeddedMember& m1 : A.members)
    for (const EmbeddedMember& m2 : B.members)
      if (member_equal(A, m1, B, m2)) return true;
  return false;
}

}  // namespace biquad
