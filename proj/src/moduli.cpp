#include "biquad/moduli.hpp"

#include <algorithm>

#include "biquad/error.hpp"

namespace biquad {

PairClass make_pair_class(const Field& F, const Elem& a, const Elem& b) {
  return PairClass{square_class(F, a), square_class(F, b)};
}

bool pair_equal(const Field& F, const PairClass& p, const PairClass& q) {
  return same_class(F, p.a.rep, q.a.rep) && same_class(F, p.b.rep, q.b.rep);
}

bool pair_less(const Field& F, const PairClass& p, const PairClass& q) {
  if (!same_class(F, p.a.rep, q.a.rep)) return class_less(F, p.a, q.a);
  if (!same_class(F, p.b.rep, q.b.rep)) return class_less(F, p.b, q.b);
  return false;
}

bool sim1_equal(const Field& F, const Elem& a, const Elem& a2, const Elem& b, const Elem& b2) {
  return is_square(F, F.mul(a, b)) && is_square(F, F.mul(a2, b2));
}

int sim_condition(const Field& F, const Elem& a, const Elem& a2, const Elem& b, const Elem& b2) {
  Elem bb2 = F.mul(b, b2);
  // first factor tested against a, second against a2
  const Elem* first[6] = {&b, &b2, &b, &bb2, &b2, &bb2};
  const Elem* second[6] = {&b2, &b, &bb2, &b, &bb2, &b2};
  for (int i = 0; i < 6; ++i) {
    if (is_square(F, F.mul(a, *first[i])) && is_square(F, F.mul(a2, *second[i])))
      return i + 1;
  }
  return 0;
}

bool sim_equal(const Field& F, const Elem& a, const Elem& a2, const Elem& b, const Elem& b2) {
  return sim_condition(F, a, a2, b, b2) != 0;
}

const std::array<Perm, 6>& s3_elements() {
  static const std::array<Perm, 6> elems = {{
      {0, 1, 2},  // id
      {1, 0, 2},  // (01)
      {2, 1, 0},  // (02)
      {0, 2, 1},  // (12)
      {1, 2, 0},  // (012)
      {2, 0, 1},  // (021)
  }};
  return elems;
}

Perm perm_compose(const Perm& g, const Perm& h) {
  return Perm{g[h[0]], g[h[1]], g[h[2]]};
}

Perm perm_inverse(const Perm& g) {
  Perm r{};
  for (int i = 0; i < 3; ++i) r[g[i]] = i;
  return r;
}

PairClass s3_act(const Field& F, const Perm& g, const PairClass& p) {
  SquareClass triple[3] = {p.a, p.b, class_mul(F, p.a, p.b)};
  return PairClass{triple[g[0]], triple[g[1]]};
}

OrbitKey orbit(const Field& F, const PairClass& p) {
  OrbitKey key;
  for (const Perm& g : s3_elements()) {
    PairClass img = s3_act(F, g, p);
    bool seen = false;
    for (const PairClass& m : key.members)
      if (pair_equal(F, m, img)) seen = true;
    if (!seen) key.members.push_back(img);
  }
  std::sort(key.members.begin(), key.members.end(),
            [&F](const PairClass& l, const PairClass& r) { return pair_less(F, l, r); });
  key.canonical_rep = key.members.front();
  return key;
}

bool orbit_equal(const Field& F, const OrbitKey& k1, const OrbitKey& k2) {
  if (k1.members.size() != k2.members.size()) return false;
  for (size_t i = 0; i < k1.members.size(); ++i)
    if (!pair_equal(F, k1.members[i], k2.members[i])) return false;
  return true;
}

bool in_excluded_S(const Field& F, const Elem& a, const Elem& a2) {
  return is_square(F, a) || is_square(F, a2) || is_square(F, F.mul(a, a2));
}

std::vector<OrbitKey> enumerate_elem_abelian_classes(const Field& F,
                                                     const std::vector<Elem>& gens) {
  std::vector<SquareClass> group;
  group.push_back(square_class(F, F.one()));
  for (const Elem& g : gens) {
    if (F.is_zero(g)) throw Error(ErrorCode::ZeroInput, "zero generator");
    if (is_square(F, g))
      throw Error(ErrorCode::GeneratorIsSquare, "generator " + F.str(g));
    // close the current list under multiplication by g
    size_t n = group.size();
    for (size_t i = 0; i < n; ++i) {
      SquareClass prod = class_mul(F, group[i], square_class(F, g));
      bool seen = false;
      for (const SquareClass& c : group)
        if (same_class(F, c.rep, prod.rep)) seen = true;
      if (!seen) group.push_back(prod);
    }
  }

  std::vector<PairClass> valid;
  for (const SquareClass& a : group) {
    for (const SquareClass& b : group) {
      if (class_is_one(F, a) || class_is_one(F, b)) continue;
      if (class_is_one(F, class_mul(F, a, b))) continue;
      valid.push_back(PairClass{a, b});
    }
  }
  std::sort(valid.begin(), valid.end(),
            [&F](const PairClass& l, const PairClass& r) { return pair_less(F, l, r); });

  std::vector<OrbitKey> orbits;
  std::vector<bool> covered(valid.size(), false);
  for (size_t i = 0; i < valid.size(); ++i) {
    if (covered[i]) continue;
    OrbitKey key = orbit(F, valid[i]);
    for (size_t j = i; j < valid.size(); ++j) {
      if (covered[j]) continue;
      for (const PairClass& m : key.members)
        if (pair_equal(F, m, valid[j])) covered[j] = true;
    }
    orbits.push_back(std::move(key));
  }
  return orbits;
}

}  // namespace biquad
