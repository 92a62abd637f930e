#pragma once
// The collineation group used to coordinatize the regular point orbit.
//
// An element is a triple (r, a, b) with r != 0, standing for the upper
// 4x4 matrix M(r;a,b) below.  Composition obeys
//   (r,a,b) * (s,c,d) = (rs, as + c, b s^(omega+1) + d + a c^omega s)
// which matches literal matrix multiplication (checked in the tests).
// The group acts on row vectors from the right and has five point orbits;
// it is regular on the open orbit of [1,1,0,0].

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "moore3/geometry.hpp"
#include "moore3/gf2m.hpp"
#include "moore3/polarity.hpp"

namespace moore3 {

struct GroupElem {
  Felt r = 1, a = 0, b = 0;
  bool operator==(const GroupElem&) const = default;
};

inline GroupElem g_identity() { return GroupElem{1, 0, 0}; }

inline void g_validate(const FieldCtx& F, const GroupElem& g) {
  if (g.r == 0 || g.r >= F.q || g.a >= F.q || g.b >= F.q)
    throw std::invalid_argument("group element out of range");
}

inline std::uint64_t group_order(const FieldCtx& F) {
  return (std::uint64_t)F.q * F.q * (F.q - 1);
}

// dense index ((r-1) q + a) q + b
inline std::uint64_t gidx(const FieldCtx& F, const GroupElem& g) {
  return ((std::uint64_t)(g.r - 1) * F.q + g.a) * F.q + g.b;
}

inline GroupElem gelem_from_gidx(const FieldCtx& F, std::uint64_t i) {
  if (i >= group_order(F)) throw std::invalid_argument("group index out of range");
  GroupElem g;
  g.b = (Felt)(i % F.q);
  i /= F.q;
  g.a = (Felt)(i % F.q);
  g.r = (Felt)(i / F.q + 1);
  return g;
}

inline GroupElem g_mul(const FieldCtx& F, const GroupElem& g, const GroupElem& h) {
  const Felt s = h.r;
  const Felt sw1 = F.mul(F.sigma(s), s); // s^(omega+1)
  GroupElem out;
  out.r = F.mul(g.r, s);
  out.a = F.mul(g.a, s) ^ h.a;
  out.b = F.mul(g.b, sw1) ^ h.b ^ F.mul(g.a, F.mul(F.sigma(h.a), s));
  return out;
}

inline GroupElem g_inv(const FieldCtx& F, const GroupElem& g) {
  const Felt ri = F.inv(g.r);
  const Felt riw1 = F.mul(F.sigma(ri), ri); // r^-(omega+1)
  GroupElem out;
  out.r = ri;
  out.a = F.mul(g.a, ri);
  out.b = F.mul(g.b ^ F.mul(F.sigma(g.a), g.a), riw1);
  return out;
}

using Mat4 = std::array<std::array<Felt, 4>, 4>;

inline Mat4 g_matrix(const FieldCtx& F, const GroupElem& g) {
  const Felt r = g.r, a = g.a, b = g.b;
  const Felt rw1 = F.mul(F.sigma(r), r);        // r^(omega+1)
  const Felt rw2 = F.mul(rw1, r);               // r^(omega+2)
  const Felt aw1 = F.mul(F.sigma(a), a);        // a^(omega+1)
  return Mat4{std::array<Felt, 4>{1, F.ovoid_form(a, b), a, b},
              std::array<Felt, 4>{0, rw2, 0, 0},
              std::array<Felt, 4>{0, F.mul(aw1 ^ b, r), r, F.mul(F.sigma(a), r)},
              std::array<Felt, 4>{0, F.mul(a, rw1), 0, rw1}};
}

inline Mat4 mat_mul(const FieldCtx& F, const Mat4& A, const Mat4& B) {
  Mat4 C{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const Felt aik = A[i][k];
      if (!aik) continue;
      for (int j = 0; j < 4; ++j) C[i][j] ^= F.mul(aik, B[k][j]);
    }
  return C;
}

// row-vector action u -> u M(g), canonicalized
inline ProjPoint g_act(const FieldCtx& F, const ProjPoint& u, const GroupElem& g) {
  const Mat4 M = g_matrix(F, g);
  std::array<Felt, 4> v{};
  for (int i = 0; i < 4; ++i) {
    const Felt ui = u.x[i];
    if (!ui) continue;
    for (int j = 0; j < 4; ++j) v[j] ^= F.mul(ui, M[i][j]);
  }
  return pp_canon(F, v);
}

// ---- orbits ------------------------------------------------------------------

enum class Orbit { o1, o2, o3, o4, o5 };

// membership by canonical coordinates:
//   o4 = {[0,1,0,0]}, o3 = {x0 = x2 = 0, x3 != 0}, o2 = {x0 = 0, x2 != 0},
//   o1 = {x0 != 0, x1 = f(x2,x3)} (the affine ovoid part), o5 = the rest
inline Orbit orbit_classify(const FieldCtx& F, const ProjPoint& u) {
  if (u.x[0] == 0) {
    if (u.x[2] != 0) return Orbit::o2;
    if (u.x[3] != 0) return Orbit::o3;
    return Orbit::o4;
  }
  return u.x[1] == F.ovoid_form(u.x[2], u.x[3]) ? Orbit::o1 : Orbit::o5;
}

inline ProjPoint orbit_rep(const FieldCtx&, Orbit o) {
  switch (o) {
    case Orbit::o1: return ProjPoint{{1, 0, 0, 0}};
    case Orbit::o2: return ProjPoint{{0, 0, 1, 0}};
    case Orbit::o3: return ProjPoint{{0, 0, 0, 1}};
    case Orbit::o4: return ProjPoint{{0, 1, 0, 0}};
    case Orbit::o5: return ProjPoint{{1, 1, 0, 0}};
  }
  throw std::invalid_argument("bad orbit tag");
}

inline std::uint64_t orbit_size(const FieldCtx& F, Orbit o) {
  const std::uint64_t q = F.q;
  switch (o) {
    case Orbit::o1: return q * q;           // affine ovoid points
    case Orbit::o2: return q * q;
    case Orbit::o3: return q;
    case Orbit::o4: return 1;
    case Orbit::o5: return q * q * (q - 1); // the regular orbit
  }
  throw std::invalid_argument("bad orbit tag");
}

inline ProjPoint base_point(const FieldCtx&) { return ProjPoint{{1, 1, 0, 0}}; }

// regular correspondence between the group and the open orbit:
// (r,a,b) <-> [1, f(a,b) + r^(omega+2), a, b]
inline ProjPoint point_of(const FieldCtx& F, const GroupElem& g) {
  const Felt rw2 = F.pow(g.r, (long long)F.omega + 2);
  return ProjPoint{{1, F.ovoid_form(g.a, g.b) ^ rw2, g.a, g.b}};
}

inline GroupElem gelem_of(const FieldCtx& F, const ProjPoint& u) {
  if (orbit_classify(F, u) != Orbit::o5)
    throw std::invalid_argument("point is outside the regular orbit");
  GroupElem g;
  g.a = u.x[2];
  g.b = u.x[3];
  const Felt rw2 = u.x[1] ^ F.ovoid_form(g.a, g.b); // nonzero on the open orbit
  // invert x -> x^(omega+2) on F*: gcd(omega+2, q-1) = 1
  long long e = (long long)F.omega + 2, ord = (long long)F.q - 1;
  long long t0 = 0, t1 = 1, r0 = ord, r1 = e % ord;
  while (r1) {
    const long long k = r0 / r1;
    t0 -= k * t1; std::swap(t0, t1);
    r0 -= k * r1; std::swap(r0, r1);
  }
  g.r = F.pow(rw2, t0);
  return g;
}

// ---- marked points and stabilizers -------------------------------------------

struct MarkedPoints {
  ProjPoint u;   // [1,1,0,0], the base of the regular orbit
  ProjPoint u1;  // [1,1,1,1]
  ProjPoint u2;  // [0,1,1,0]
  ProjPoint u1p; // [1,1,0,1]
  ProjPoint u2p; // [0,0,1,1]
  ProjPoint u3;  // [0,0,0,1]
  ProjPoint u3p; // [0,1,0,1]
};

inline MarkedPoints marked_points(const FieldCtx&) {
  return MarkedPoints{ProjPoint{{1, 1, 0, 0}}, ProjPoint{{1, 1, 1, 1}},
                      ProjPoint{{0, 1, 1, 0}}, ProjPoint{{1, 1, 0, 1}},
                      ProjPoint{{0, 0, 1, 1}}, ProjPoint{{0, 0, 0, 1}},
                      ProjPoint{{0, 1, 0, 1}}};
}

enum class StabKind { h1, h2 };

// one-parameter stabilizer families, both isomorphic to F* :
//   h1: r -> (r, r+1, r+1)           fixes u1 and u2'
//   h2: r -> (r, 0, 1 + r^(omega+1)) fixes u2 and u1'
inline GroupElem stab_elem(const FieldCtx& F, StabKind k, Felt r) {
  if (r == 0 || r >= F.q) throw std::invalid_argument("stabilizer parameter must be in F*");
  if (k == StabKind::h1) return GroupElem{r, (Felt)(r ^ 1), (Felt)(r ^ 1)};
  return GroupElem{r, 0, (Felt)(1 ^ F.mul(F.sigma(r), r))};
}

inline std::vector<GroupElem> stabilizer(const FieldCtx& F, StabKind k) {
  std::vector<GroupElem> out;
  out.reserve(F.q - 1u);
  for (Felt r = 1; r < F.q; ++r) out.push_back(stab_elem(F, k, r));
  return out;
}

// neighbourhood of v in the polarity graph: points of its image line, v
// itself dropped when absolute
inline std::vector<ProjPoint> pol_neighbors(const FieldCtx& F, const ProjPoint& v) {
  std::vector<ProjPoint> out;
  for (const ProjPoint& w : line_points(F, pol_point_to_line(F, v)))
    if (!(w == v)) out.push_back(w);
  return out;
}

// the four deleted neighbourhoods driving the distance-3 repair:
//   l_u1  = N(u1)  minus {u, u2'}   (size q-2)
//   l_u2  = N(u2)  minus {u, u3, u1'} (size q-2)
//   l_u1p = N(u1') minus {u2}       (size q-1)
//   l_u2p = N(u2') minus {u1, u3'}  (size q-1)
struct LossSets {
  std::vector<ProjPoint> l_u1, l_u2, l_u1p, l_u2p;
};

inline LossSets loss_sets(const FieldCtx& F) {
  const MarkedPoints mp = marked_points(F);
  auto minus = [&](std::vector<ProjPoint> v, std::initializer_list<ProjPoint> drop) {
    std::vector<ProjPoint> out;
    for (const ProjPoint& p : v) {
      bool keep = true;
      for (const ProjPoint& d : drop)
        if (p == d) { keep = false; break; }
      if (keep) out.push_back(p);
    }
    return out;
  };
  LossSets ls;
  ls.l_u1 = minus(pol_neighbors(F, mp.u1), {mp.u, mp.u2p});
  ls.l_u2 = minus(pol_neighbors(F, mp.u2), {mp.u, mp.u3, mp.u1p});
  ls.l_u1p = minus(pol_neighbors(F, mp.u1p), {mp.u2});
  ls.l_u2p = minus(pol_neighbors(F, mp.u2p), {mp.u1, mp.u3p});
  return ls;
}

// ---- equivariance of the polarity under the group ----------------------------

struct EquivReport {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  bool ok() const { return violations == 0 && checked > 0; }
};

// pol(u g) must equal the pointwise image of pol(u) under g
inline bool equivariant_at(const FieldCtx& F, const ProjPoint& u, const GroupElem& g) {
  const IsoLine img = pol_point_to_line(F, g_act(F, u, g));
  std::vector<std::uint32_t> moved;
  for (const ProjPoint& w : line_points(F, pol_point_to_line(F, u)))
    moved.push_back(point_index(F, g_act(F, w, g)));
  std::sort(moved.begin(), moved.end());
  return moved == line_key(F, img);
}

inline EquivReport equivariance_check_exhaustive(const FieldCtx& F) {
  EquivReport rep;
  const std::uint64_t npts = point_count(F), ng = group_order(F);
  for (std::uint64_t pi = 0; pi < npts; ++pi) {
    const ProjPoint u = point_from_index(F, (std::uint32_t)pi);
    for (std::uint64_t gi = 0; gi < ng; ++gi) {
      ++rep.checked;
      if (!equivariant_at(F, u, gelem_from_gidx(F, gi))) ++rep.violations;
    }
  }
  return rep;
}

inline EquivReport equivariance_check_sampled(const FieldCtx& F, std::uint64_t trials,
                                              std::uint64_t seed) {
  EquivReport rep;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> gdist(0, group_order(F) - 1);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const ProjPoint u = random_point(F, rng);
    const GroupElem g = gelem_from_gidx(F, gdist(rng));
    ++rep.checked;
    if (!equivariant_at(F, u, g)) ++rep.violations;
  }
  return rep;
}

} // namespace moore3
