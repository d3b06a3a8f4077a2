#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biquad/elem_abelian.hpp"
#include "biquad/moduli.hpp"

namespace biquad {

// Smallest extension of the base field over which the quartic becomes
// elementary abelian: the base field itself (V4), a quadratic extension
// F(sqrt w) (C2), or none at all (C4).
struct ClosureReport {
  enum class Kind { Trivial, Closure, NoneCyclic };
  Kind kind;
  std::optional<SquareClass> w_class;
  std::optional<Field> closure_field;
};

const char* to_string(ClosureReport::Kind k);

ClosureReport elem_abelian_closure(const BiquadPoly& P);

// Outcome branch of the descent criterion at a given sign combination.
enum class DescentBranch { OmegaSquare, OmegaZero_ra, OmegaZero_ra_over_w };

const char* to_string(DescentBranch b);

struct DescentWitness {
  Elem c, a;
  int r = 1, s = 1;
  Elem omega;
  DescentBranch branch;
};

struct NoncyclicVerdict {
  bool isomorphic = false;
  std::optional<DescentWitness> witness;  // set in descent mode on success
  int elem_condition = 0;                 // set in elementary abelian mode
  std::string mode;  // "descent", "elementary_abelian", or "mixed"
};

// Isomorphism test for irreducible non-cyclic biquadratic quartics.  Two V4
// inputs delegate to elem_iso; two C2 inputs run the sign-combination
// descent search; a V4 paired with a C2 is never isomorphic.  C4 input
// raises CyclicInput.
//
// Descent search: with c0 = sqrt(z/w) and a0 = sqrt((v^2-4z)/(u^2-4w))
// (both must exist), try c = +-c0, a = +-a0, r, s in {1,-1} in that nesting
// order, plus sign first.  Each combination computes
//   omega = (r*a + (u*v - 4*w*c*s)/(u^2 - 4*w)) / (2*w)
// and succeeds when omega is a nonzero square, or when omega = 0 and -r*a
// or -r*a/w is a square.
NoncyclicVerdict noncyclic_iso(const BiquadPoly& P, const BiquadPoly& Q);

// Classifying data of a non-Galois (C2) quartic: the class s of w, the
// quadratic extension E = F(sqrt s), and the norm-subgroup representative
// -u - 2d*sqrt(s) where w = d^2 s.
struct NonGaloisKey {
  Field base;
  SquareClass s;
  Field ext;
  Elem rep;       // element of ext
  Elem rep_conj;  // conjugate of rep
};

NonGaloisKey nongalois_class_key(const BiquadPoly& P);

// Keys agree when the radicand classes match and rep1/rep2 or
// rep1/conj(rep2) is a square in the common quadratic extension.
bool nongalois_key_equal(const NonGaloisKey& k1, const NonGaloisKey& k2);

// Uniform classifying key across the two non-cyclic shapes.
struct ClassKey {
  enum class Kind { ElemAbelian, NonGalois };
  Kind kind;
  Field base;
  std::optional<OrbitKey> orbit_key;
  std::optional<NonGaloisKey> nongalois_key;
};

ClassKey class_key(const BiquadPoly& P);
bool class_key_equal(const ClassKey& k1, const ClassKey& k2);

// Image of a classifying key inside the common moduli of pairs: the orbit
// of (a, b) for the elementary abelian shape, and the orbit of
// (rep, conj(rep)) over E for the non-Galois shape.
struct EmbeddedMember {
  Elem first, second;
  bool first_in_base = true;
  bool second_in_base = true;
  bool conjugate_pair = false;
};

struct EmbeddedClass {
  enum class Tag { Base, Quad };
  Tag tag;
  Field base;
  Field field;  // equals base for Base, the quadratic extension for Quad
  std::optional<SquareClass> s;
  std::vector<EmbeddedMember> members;
};

EmbeddedClass delta_embed(const ClassKey& key);

// Orbit equality in the common moduli: the two member lists share a pair
// equivalent under the pair relation (literal equality, componentwise
// square ratios over the base, or a square ratio of conjugate pairs over
// the quadratic extension).
bool embedded_equal(const EmbeddedClass& A, const EmbeddedClass& B);

}  // namespace biquad
