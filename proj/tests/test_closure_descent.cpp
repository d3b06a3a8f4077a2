#include <functional>
#include <vector>

#include "doctest.h"

#include "biquad/biquad_analysis.hpp"
#include "biquad/closure_descent.hpp"
#include "biquad/elem_abelian.hpp"
#include "biquad/error.hpp"
#include "biquad/field.hpp"

using namespace biquad;

namespace {

BiquadPoly bq(const Field& F, long u, long w) {
  return make_biquad(F, F.make(u), F.make(w));
}

bool code_of(ErrorCode want, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == want;
  }
  return false;
}

// small pool of non-Galois quartics, all with the same closure field Q(sqrt -2)
std::vector<BiquadPoly> c2_pool_wm2(const Field& Q) {
  std::vector<BiquadPoly> pool;
  for (long u : {0L, 1L, -1L, 2L, -2L, 3L, 4L, 6L})
    for (long w : {-2L, -8L, -18L}) {
      BiquadPoly P = bq(Q, u, w);
      if (!is_irreducible_biquadratic(P)) continue;
      if (aut_type(P).kind != AutKind::C2) continue;
      pool.push_back(P);
    }
  return pool;
}

}  // namespace

TEST_CASE("closure field of the three automorphism shapes") {
  Field Q = Field::rationals();
  ClosureReport t = elem_abelian_closure(bq(Q, -10, 1));
  CHECK(t.kind == ClosureReport::Kind::Trivial);
  CHECK_FALSE(t.closure_field.has_value());

  ClosureReport n = elem_abelian_closure(bq(Q, -4, 2));
  CHECK(n.kind == ClosureReport::Kind::NoneCyclic);

  ClosureReport c = elem_abelian_closure(bq(Q, 0, -2));
  CHECK(c.kind == ClosureReport::Kind::Closure);
  REQUIRE(c.w_class.has_value());
  CHECK(c.w_class->rep.x == -2);
  REQUIRE(c.closure_field.has_value());
  CHECK(c.closure_field->kind() == Field::Kind::QuadExt);
  CHECK(c.closure_field->radicand().x == -2);

  // towers of height two are out of scope
  Field E = Field::quad_ext(Q, Q.make(2));
  Elem w = E.make_quad(Q.make(3), Q.one());  // 3 + sqrt 2, nonsquare
  CHECK(code_of(ErrorCode::InvalidField,
                [&] { elem_abelian_closure(BiquadPoly{E, E.zero(), E.neg(w)}); }));
}

TEST_CASE("descent finds the documented witness") {
  Field Q = Field::rationals();
  NoncyclicVerdict v = noncyclic_iso(bq(Q, 0, -2), bq(Q, 0, -8));
  CHECK(v.isomorphic);
  CHECK(v.mode == "descent");
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->c.x == 2);
  CHECK(v.witness->a.x == 2);
  CHECK(Q.is_zero(v.witness->omega));
  CHECK(v.witness->branch == DescentBranch::OmegaZero_ra_over_w);

  NoncyclicVerdict no = noncyclic_iso(bq(Q, 0, -2), bq(Q, 0, -3));
  CHECK_FALSE(no.isomorphic);
  CHECK_FALSE(no.witness.has_value());

  CHECK(code_of(ErrorCode::CyclicInput,
                [&] { noncyclic_iso(bq(Q, -4, 2), bq(Q, 0, -2)); }));
}

TEST_CASE("descent is reflexive and symmetric on a non-Galois pool") {
  Field Q = Field::rationals();
  std::vector<BiquadPoly> pool = {bq(Q, 0, -2), bq(Q, 0, -8), bq(Q, 0, -3),
                                  bq(Q, 2, 3),  bq(Q, -2, 2), bq(Q, 1, 2),
                                  bq(Q, 2, -2), bq(Q, 0, 3)};
  for (const auto& P : pool) REQUIRE(aut_type(P).kind == AutKind::C2);
  for (const auto& P : pool) CHECK(noncyclic_iso(P, P).isomorphic);
  for (const auto& P : pool)
    for (const auto& S : pool)
      CHECK(noncyclic_iso(P, S).isomorphic == noncyclic_iso(S, P).isomorphic);
}

TEST_CASE("descent soundness regression pairs") {
  Field Q = Field::rationals();
  // same closure class but distinct norm classes: must stay nonisomorphic
  CHECK_FALSE(noncyclic_iso(bq(Q, 1, 2), bq(Q, -1, 2)).isomorphic);
  // a poly whose self-test only succeeds through the omega = 0 branches
  CHECK(noncyclic_iso(bq(Q, 2, 3), bq(Q, 2, 3)).isomorphic);
}

TEST_CASE("mixed automorphism shapes never compare equal") {
  Field Q = Field::rationals();
  NoncyclicVerdict v = noncyclic_iso(bq(Q, -10, 1), bq(Q, 0, -2));
  CHECK_FALSE(v.isomorphic);
  CHECK(v.mode == "mixed");

  NoncyclicVerdict e = noncyclic_iso(bq(Q, -10, 1), bq(Q, -40, 16));
  CHECK(e.isomorphic);
  CHECK(e.mode == "elementary_abelian");
  CHECK(e.elem_condition == 3);
}

TEST_CASE("non-Galois classifying key") {
  Field Q = Field::rationals();
  NonGaloisKey k1 = nongalois_class_key(bq(Q, 0, -2));
  CHECK(k1.s.rep.x == -2);
  CHECK(k1.rep.x == 0);
  CHECK(k1.rep.y == -2);  // -2 sqrt(-2)
  NonGaloisKey k2 = nongalois_class_key(bq(Q, 0, -8));
  CHECK(k2.rep.y == -4);  // -4 sqrt(-2)

  CHECK(nongalois_key_equal(k1, k2));
  // the match runs through the conjugate: rep1/rep2 = 1/2 is no square in E
  CHECK_FALSE(is_square(k1.ext, k1.ext.div(k1.rep, k2.rep)));
  CHECK(is_square(k1.ext, k1.ext.div(k1.rep, k2.rep_conj)));

  NonGaloisKey k3 = nongalois_class_key(bq(Q, 0, -3));
  CHECK_FALSE(nongalois_key_equal(k1, k3));

  // rep times conjugate recovers the discriminant, and rep is no square
  Elem prod = k1.ext.mul(k1.rep, k1.rep_conj);
  CHECK(prod.x == 8);  // u^2 - 4w = 8
  CHECK(prod.y == 0);
  CHECK_FALSE(is_square(k1.ext, k1.rep));

  CHECK(code_of(ErrorCode::NotNonGalois, [&] { nongalois_class_key(bq(Q, -10, 1)); }));
}

TEST_CASE("uniform keys separate and join the two non-cyclic shapes") {
  Field Q = Field::rationals();
  ClassKey v4a = class_key(bq(Q, -10, 1));
  ClassKey v4b = class_key(compose_elem_abelian(Q, Q.make(12), Q.make(2)));
  ClassKey v4c = class_key(bq(Q, 0, 36));
  CHECK(v4a.kind == ClassKey::Kind::ElemAbelian);
  CHECK(class_key_equal(v4a, v4b));  // (12, 2) ~ (3, 2)
  CHECK_FALSE(class_key_equal(v4a, v4c));

  ClassKey c2a = class_key(bq(Q, 0, -2));
  ClassKey c2b = class_key(bq(Q, 0, -8));
  ClassKey c2c = class_key(bq(Q, 0, -3));
  CHECK(c2a.kind == ClassKey::Kind::NonGalois);
  CHECK(class_key_equal(c2a, c2b));
  CHECK_FALSE(class_key_equal(c2a, c2c));

  CHECK_FALSE(class_key_equal(v4a, c2a));
  CHECK(code_of(ErrorCode::CyclicInput, [&] { class_key(bq(Q, -4, 2)); }));
}

TEST_CASE("classifying keys agree with the descent decision") {
  Field Q = Field::rationals();
  auto pool = c2_pool_wm2(Q);
  REQUIRE(pool.size() >= 10);
  for (const auto& P : pool)
    for (const auto& S : pool) {
      bool by_descent = noncyclic_iso(P, S).isomorphic;
      bool by_key = class_key_equal(class_key(P), class_key(S));
      CHECK(by_descent == by_key);
    }
}

TEST_CASE("closure plus lifted isomorphism agrees with the descent decision") {
  Field Q = Field::rationals();
  auto pool = c2_pool_wm2(Q);
  pool.push_back(bq(Q, 0, -3));  // different closure class
  for (const auto& P : pool)
    for (const auto& S : pool) {
      bool by_descent = noncyclic_iso(P, S).isomorphic;
      ClosureReport cp = elem_abelian_closure(P);
      ClosureReport cs = elem_abelian_closure(S);
      bool by_closure = false;
      if (same_class(Q, *cp.w_class, *cs.w_class)) {
        const Field& E = *cp.closure_field;
        auto lift = [&](const BiquadPoly& T) {
          return BiquadPoly{E, E.make_quad(T.u, Q.zero()), E.make_quad(T.w, Q.zero())};
        };
        by_closure = elem_iso(lift(P), lift(S)).isomorphic;
      }
      CHECK(by_descent == by_closure);
    }
}

TEST_CASE("embedded classes compare exactly like the classifying keys") {
  Field Q = Field::rationals();
  std::vector<BiquadPoly> pool = c2_pool_wm2(Q);
  pool.push_back(bq(Q, -10, 1));
  pool.push_back(compose_elem_abelian(Q, Q.make(12), Q.make(2)));
  pool.push_back(bq(Q, 0, 36));
  pool.push_back(bq(Q, 0, -3));

  std::vector<ClassKey> keys;
  std::vector<EmbeddedClass> emb;
  for (const auto& P : pool) {
    keys.push_back(class_key(P));
    emb.push_back(delta_embed(keys.back()));
  }
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = 0; j < pool.size(); ++j)
      CHECK(embedded_equal(emb[i], emb[j]) == class_key_equal(keys[i], keys[j]));
}

TEST_CASE("embedded class shapes") {
  Field Q = Field::rationals();
  EmbeddedClass base = delta_embed(class_key(bq(Q, -10, 1)));
  CHECK(base.tag == EmbeddedClass::Tag::Base);
  CHECK(base.members.size() == 6);
  for (const auto& m : base.members) {
    CHECK(m.first_in_base);
    CHECK(m.second_in_base);
    CHECK_FALSE(m.conjugate_pair);
  }

  EmbeddedClass quad = delta_embed(class_key(bq(Q, 0, -2)));
  CHECK(quad.tag == EmbeddedClass::Tag::Quad);
  CHECK(quad.members.size() == 6);
  int conj = 0, in_base = 0;
  for (const auto& m : quad.members) {
    if (m.conjugate_pair) ++conj;
    if (m.first_in_base && m.second_in_base) ++in_base;
  }
  CHECK(conj > 0);
  CHECK(conj < 6);
  CHECK(in_base == 0);  // every pair touches a strictly quadratic generator
}

TEST_CASE("conjugate-norm ratios never alias distinct norm classes") {
  // the embedded comparison may only use the conjugate-pair clause when the
  // ratio of the paired generators is a square; check it cannot fire across
  // distinct keys sharing the closure class, and never against a product
  // with its own conjugate
  Field Q = Field::rationals();
  NonGaloisKey k1 = nongalois_class_key(bq(Q, 1, 2));
  NonGaloisKey k2 = nongalois_class_key(bq(Q, -1, 2));
  CHECK(same_class(Q, k1.s, k2.s));
  CHECK_FALSE(nongalois_key_equal(k1, k2));
  const Field& E = k1.ext;
  CHECK_FALSE(is_square(E, E.div(k1.rep, k2.rep)));
  CHECK_FALSE(is_square(E, E.div(k1.rep, k2.rep_conj)));
  CHECK_FALSE(is_square(E, E.div(k1.rep, E.mul(k2.rep, k2.rep_conj))));
  CHECK_FALSE(is_square(E, E.div(k1.rep, E.mul(k1.rep, k1.rep_conj))));
}
