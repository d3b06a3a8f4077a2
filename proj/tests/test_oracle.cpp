#include <functional>

#include "doctest.h"

#include "biquad/error.hpp"
#include "biquad/field.hpp"
#include "biquad/oracle.hpp"
#include "biquad/poly.hpp"

using namespace biquad;

namespace {

bool code_of(ErrorCode want, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == want;
  }
  return false;
}

Poly rebuild(const FactorReport& r, const Field& F) {
  Poly acc = Poly::constant(F, F.one());
  for (const auto& [f, mult] : r.factors)
    for (int k = 0; k < mult; ++k) acc = acc.mul(f);
  return acc;
}

}  // namespace

TEST_CASE("rational biquadratic factorizations") {
  Field Q = Field::rationals();
  auto bq4 = [&](long u, long w) {
    return make_quartic(Q, Q.zero(), Q.make(u), Q.zero(), Q.make(w));
  };

  SUBCASE("split into two quadratics with cross terms") {
    FactorReport r = factor_quartic(bq4(0, 4));  // X^4 + 4
    CHECK_FALSE(r.irreducible);
    CHECK(r.pattern == "2+2");
    REQUIRE(r.factors.size() == 2);
    // (X^2 - 2X + 2)(X^2 + 2X + 2) in some order
    bool seen_minus = false, seen_plus = false;
    for (const auto& [f, mult] : r.factors) {
      CHECK(mult == 1);
      CHECK(f.degree() == 2);
      CHECK(f.coeff(0).x == 2);
      if (f.coeff(1).x == -2) seen_minus = true;
      if (f.coeff(1).x == 2) seen_plus = true;
    }
    CHECK(seen_minus);
    CHECK(seen_plus);
  }

  SUBCASE("split into quadratics without cross terms") {
    FactorReport r = factor_quartic(bq4(0, -4));  // (X^2-2)(X^2+2)
    CHECK(r.pattern == "2+2");
    FactorReport r2 = factor_quartic(bq4(-10, 9));  // roots +-1, +-3
    CHECK(r2.pattern == "1+1+1+1");
    REQUIRE(r2.factors.size() == 4);
  }

  SUBCASE("repeated factors carry multiplicities") {
    FactorReport r = factor_quartic(bq4(2, 1));  // (X^2+1)^2
    CHECK(r.pattern == "2+2");
    REQUIRE(r.factors.size() == 1);
    CHECK(r.factors[0].second == 2);

    FactorReport r2 = factor_quartic(bq4(-2, 1));  // (X-1)^2 (X+1)^2
    CHECK(r2.pattern == "1+1+1+1");
    REQUIRE(r2.factors.size() == 2);
    CHECK(r2.factors[0].second == 2);
    CHECK(r2.factors[1].second == 2);
  }

  SUBCASE("degenerate constant terms") {
    FactorReport r = factor_quartic(bq4(1, 0));  // X^2 (X^2+1)
    CHECK(r.pattern == "2+1+1");
    FactorReport r2 = factor_quartic(bq4(-1, 0));  // X^2 (X-1)(X+1)
    CHECK(r2.pattern == "1+1+1+1");
    FactorReport r3 = factor_quartic(bq4(0, 0));  // X^4
    CHECK(r3.pattern == "1+1+1+1");
    REQUIRE(r3.factors.size() == 1);
    CHECK(r3.factors[0].second == 4);
  }

  SUBCASE("irreducible inputs") {
    CHECK(factor_quartic(bq4(-10, 1)).irreducible);
    CHECK(factor_quartic(bq4(0, 2)).irreducible);
    CHECK(factor_quartic(bq4(0, 36)).irreducible);
    CHECK(factor_quartic(bq4(-10, 1)).pattern == "4");
  }

  SUBCASE("factors multiply back to the input") {
    for (long u : {-10L, -2L, 0L, 1L, 2L, 5L})
      for (long w : {-4L, -1L, 0L, 1L, 2L, 4L, 9L, 36L}) {
        QuarticPoly P = bq4(u, w);
        FactorReport r = factor_quartic(P);
        CHECK(rebuild(r, Q).equals(P.to_poly()));
        for (const auto& [f, mult] : r.factors) CHECK(f.is_monic());
      }
  }
}

TEST_CASE("prime-field factorizations") {
  Field F5 = Field::prime(5);
  auto gen5 = [&](long u, long v, long w, long z) {
    return make_quartic(F5, F5.make(u), F5.make(v), F5.make(w), F5.make(z));
  };
  CHECK(factor_quartic(gen5(0, 0, 0, 2)).irreducible);  // X^4 + 2

  FactorReport wheel = factor_quartic(gen5(0, 0, 0, 4));  // X^4 - 1 mod 5
  CHECK(wheel.pattern == "1+1+1+1");  // every unit is a fourth root of 1

  FactorReport r = factor_quartic(gen5(0, 2, 0, 0));  // X^2 (X^2 + 2)
  CHECK(r.pattern == "2+1+1");

  // full product reconstruction across every quartic over F_3
  Field F3 = Field::prime(3);
  for (long u = 0; u < 3; ++u)
    for (long v = 0; v < 3; ++v)
      for (long w = 0; w < 3; ++w)
        for (long z = 0; z < 3; ++z) {
          QuarticPoly P = make_quartic(F3, F3.make(u), F3.make(v), F3.make(w), F3.make(z));
          FactorReport fr = factor_quartic(P);
          CHECK(rebuild(fr, F3).equals(P.to_poly()));
          int degsum = 0;
          for (const auto& [f, mult] : fr.factors) degsum += f.degree() * mult;
          CHECK(degsum == 4);
        }
}

TEST_CASE("oracle scope limits") {
  Field Q = Field::rationals();
  // general rational quartics are outside the oracle's scope
  CHECK(code_of(ErrorCode::OracleScopeExceeded, [&] {
    factor_quartic(make_quartic(Q, Q.make(4), Q.zero(), Q.make(8), Q.make(4)));
  }));
  CHECK(code_of(ErrorCode::OracleScopeExceeded, [] {
    Field F = Field::prime(1009);
    factor_quartic(make_quartic(F, F.zero(), F.zero(), F.zero(), F.make(2)));
  }));
  CHECK(code_of(ErrorCode::OracleScopeExceeded, [] {
    Field Q2 = Field::rationals();
    Field E = Field::quad_ext(Q2, Q2.make(2));
    factor_quartic(make_quartic(E, E.zero(), E.zero(), E.zero(),
                                E.make_quad(Q2.make(3), Q2.one())));
  }));
}

TEST_CASE("finite Galois group oracle") {
  Field F5 = Field::prime(5);
  QuarticPoly P = make_quartic(F5, F5.zero(), F5.zero(), F5.zero(), F5.make(2));
  CHECK(galois_group_finite(P) == "C4");

  Field F7 = Field::prime(7);
  // every irreducible biquadratic over F_7 reports C4
  int seen = 0;
  for (long u = 0; u < 7; ++u)
    for (long w = 1; w < 7; ++w) {
      QuarticPoly B = make_quartic(F7, F7.zero(), F7.make(u), F7.zero(), F7.make(w));
      if (!factor_quartic(B).irreducible) continue;
      ++seen;
      CHECK(galois_group_finite(B) == "C4");
    }
  CHECK(seen > 0);

  CHECK(code_of(ErrorCode::ReducibleInput, [&] {
    galois_group_finite(make_quartic(F5, F5.zero(), F5.zero(), F5.zero(), F5.make(-1)));
  }));
}

TEST_CASE("subfield search in the quotient ring") {
  Field Q = Field::rationals();
  auto subs = subfields_oracle(make_biquad(Q, Q.make(-10), Q.make(1)));
  REQUIRE(subs.size() == 3);
  CHECK(subs[0].rep.x == 2);
  CHECK(subs[1].rep.x == 3);
  CHECK(subs[2].rep.x == 6);

  auto c2 = subfields_oracle(make_biquad(Q, Q.zero(), Q.make(-2)));
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].rep.x == 2);

  Field F5 = Field::prime(5);
  auto fin = subfields_oracle(make_biquad(F5, F5.zero(), F5.make(2)));
  REQUIRE(fin.size() == 1);
  CHECK(fin[0].rep.x == 2);
}
