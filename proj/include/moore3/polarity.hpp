#pragma once
// The polarity of the symplectic quadrangle: an order-2 correspondence
// between points and totally isotropic lines.  Its absolute points (those
// on their own image line) form an ovoid of size q^2 + 1.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "moore3/geometry.hpp"
#include "moore3/gf2m.hpp"

namespace moore3 {

// image line of a point: the span of the nonzero members of four derived
// vectors built from c = x0 x1 + x2 x3 and the half-twist exponent omega/2
inline IsoLine pol_point_to_line(const FieldCtx& F, const ProjPoint& p) {
  const Felt c = F.mul(p.x[0], p.x[1]) ^ F.mul(p.x[2], p.x[3]);
  const long long h = F.omega / 2;
  const Felt ch = F.pow(c, h);
  auto tw = [&](Felt v) { return F.sigma(v); };
  const std::array<std::array<Felt, 4>, 4> cand{
      std::array<Felt, 4>{0, ch, tw(p.x[0]), tw(p.x[2])},
      std::array<Felt, 4>{ch, 0, tw(p.x[3]), tw(p.x[1])},
      std::array<Felt, 4>{tw(p.x[0]), tw(p.x[3]), 0, ch},
      std::array<Felt, 4>{tw(p.x[2]), tw(p.x[1]), ch, 0}};

  // the four vectors span exactly two dimensions; pick the first nonzero
  // and the first later one not proportional to it
  ProjPoint first;
  bool have_first = false;
  for (const auto& v : cand) {
    if (!(v[0] || v[1] || v[2] || v[3])) continue;
    const ProjPoint w = pp_canon(F, v);
    if (!have_first) {
      first = w;
      have_first = true;
    } else if (!(w == first)) {
      return line_from_span(F, first, w);
    }
  }
  throw std::logic_error("polarity image degenerated below two dimensions");
}

// image point of a line, from the pairwise 2x2 minors of any two spanning
// vectors; independent of the chosen span pair
inline ProjPoint pol_line_to_point(const FieldCtx& F, const IsoLine& l) {
  const auto& x = l.a.x;
  const auto& y = l.b.x;
  auto minor = [&](int i, int j) { return F.mul(x[i], y[j]) ^ F.mul(x[j], y[i]); };
  const long long h = F.omega / 2;
  const std::array<Felt, 4> z{F.pow(minor(0, 2), h), F.pow(minor(3, 1), h),
                              F.pow(minor(0, 3), h), F.pow(minor(2, 1), h)};
  return pp_canon(F, z);
}

inline bool is_absolute(const FieldCtx& F, const ProjPoint& p) {
  return line_contains(F, pol_point_to_line(F, p), p);
}

// the ovoid {[0,1,0,0]} union {[1, f(x,y), x, y]}; q^2 + 1 points
inline std::vector<ProjPoint> enumerate_ovoid(const FieldCtx& F) {
  std::vector<ProjPoint> out;
  out.reserve((std::size_t)F.q * F.q + 1);
  out.push_back(ProjPoint{{0, 1, 0, 0}});
  for (Felt x = 0; x < F.q; ++x)
    for (Felt y = 0; y < F.q; ++y)
      out.push_back(ProjPoint{{1, F.ovoid_form(x, y), x, y}});
  return out;
}

} // namespace moore3
