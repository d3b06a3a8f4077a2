#pragma once

#include <array>
#include <vector>

#include "biquad/field.hpp"

namespace biquad {

// Ordered pair of square classes; the raw-element relations below are
// invariant under replacing entries by class representatives.
struct PairClass {
  SquareClass a, b;
};

PairClass make_pair_class(const Field& F, const Elem& a, const Elem& b);
bool pair_equal(const Field& F, const PairClass& p, const PairClass& q);
bool pair_less(const Field& F, const PairClass& p, const PairClass& q);

// Componentwise relation: a*b and a2*b2 both squares.
bool sim1_equal(const Field& F, const Elem& a, const Elem& a2, const Elem& b, const Elem& b2);

// Six-condition coarser relation; returns the first matching condition
// index (1..6) or 0 when the pairs are inequivalent.
int sim_condition(const Field& F, const Elem& a, const Elem& a2, const Elem& b, const Elem& b2);
bool sim_equal(const Field& F, const Elem& a, const Elem& a2, const Elem& b, const Elem& b2);

// Permutations of {0,1,2}: perm[i] is the image of i.
using Perm = std::array<int, 3>;

// Fixed order: id, (01), (02), (12), (012), (021).
const std::array<Perm, 6>& s3_elements();
Perm perm_compose(const Perm& g, const Perm& h);  // (g o h)[i] = g[h[i]]
Perm perm_inverse(const Perm& g);

// Action on a pair through the triple (a, b, ab): the image pair picks the
// triple entries at positions g[0] and g[1].
PairClass s3_act(const Field& F, const Perm& g, const PairClass& p);

struct OrbitKey {
  std::vector<PairClass> members;  // sorted by pair_less
  PairClass canonical_rep;         // members.front()
};

OrbitKey orbit(const Field& F, const PairClass& p);
bool orbit_equal(const Field& F, const OrbitKey& k1, const OrbitKey& k2);

// Pairs with a square entry or square product index no extension; they are
// excluded from enumeration.
bool in_excluded_S(const Field& F, const Elem& a, const Elem& a2);

// All orbit keys of valid pairs drawn from the square-class subgroup
// generated by gens.  Throws GeneratorIsSquare for a square generator.
std::vector<OrbitKey> enumerate_elem_abelian_classes(const Field& F,
                                                     const std::vector<Elem>& gens);

}  // namespace biquad
