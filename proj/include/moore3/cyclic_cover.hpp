#pragma once
// Inverse-closed subsets X of Z_m with {0} union X union (X+X) = Z_m;
// equivalently, Cayley graphs of Z_m with connection set X and diameter
// at most 2.  c(m) denotes the minimum size.  Two construction modes:
//
//   exact:   smallest X by exhaustive search over inverse-closed sets,
//            certified minimal, lexicographically least witness
//   bounded: {+-b} union {+-a t} for t = ceil(sqrt(m)), greedily pruned;
//            size at most 4 ceil(sqrt(m)), usually close to 2 ceil(sqrt(m))

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "moore3/gf2m.hpp"

namespace moore3 {

inline bool cover_ok(std::uint32_t m, const std::vector<std::uint32_t>& x) {
  std::vector<char> hit(m, 0);
  hit[0] = 1;
  for (std::uint32_t a : x) hit[a % m] = 1;
  for (std::uint32_t a : x)
    for (std::uint32_t b : x) hit[(a + b) % m] = 1;
  for (char h : hit)
    if (!h) return false;
  return true;
}

inline bool inverse_closed(std::uint32_t m, const std::vector<std::uint32_t>& x) {
  std::vector<char> in(m, 0);
  for (std::uint32_t a : x) {
    if (a == 0 || a >= m) return false;
    in[a] = 1;
  }
  for (std::uint32_t a : x)
    if (!in[(m - a) % m]) return false;
  return true;
}

inline std::uint32_t isqrt_ceil(std::uint32_t m) {
  auto t = (std::uint32_t)std::sqrt((double)m);
  while (t * t < m) ++t; // smallest t with t^2 >= m, immune to fp rounding
  while (t > 1 && (t - 1) * (t - 1) >= m) --t;
  return t;
}

struct CyclicCover {
  std::uint32_t m = 0;
  std::vector<std::uint32_t> x; // sorted residues, inverse-closed
  bool exact = false;           // minimality certified by exhaustive search
  std::uint32_t c() const { return (std::uint32_t)x.size(); }
  bool meets_2sqrt() const { return c() <= 2 * isqrt_ceil(m); }
};

// exhaustive search by increasing size; X is determined by its "positive
// half" A within {1..floor(m/2)}, plus m/2 itself when m is even
inline CyclicCover cyclic_cover_exact(std::uint32_t m) {
  if (m < 3) throw std::invalid_argument("cover search needs m >= 3");
  if (m > 512) throw std::invalid_argument("exact cover search capped at m = 512");
  const std::uint32_t half = (m - 1) / 2;    // strict positive-half range
  const bool has_self = (m % 2 == 0);        // m/2 is its own inverse

  std::vector<std::uint32_t> pool;
  for (std::uint32_t v = 1; v <= half; ++v) pool.push_back(v);

  auto expand = [&](const std::vector<std::uint32_t>& a, bool with_self) {
    std::vector<std::uint32_t> x;
    for (std::uint32_t v : a) {
      x.push_back(v);
      x.push_back(m - v);
    }
    if (with_self) x.push_back(m / 2);
    std::sort(x.begin(), x.end());
    return x;
  };

  for (std::uint32_t size = 1; size <= m - 1; ++size) {
    for (int with_self = 0; with_self <= (has_self ? 1 : 0); ++with_self) {
      const std::uint32_t paired = size - with_self;
      if (paired % 2) continue;
      const std::uint32_t k = paired / 2;
      if (k > pool.size()) continue;
      // k-subsets of pool in lexicographic order
      std::vector<std::uint32_t> idx(k);
      for (std::uint32_t i = 0; i < k; ++i) idx[i] = i;
      for (;;) {
        std::vector<std::uint32_t> a(k);
        for (std::uint32_t i = 0; i < k; ++i) a[i] = pool[idx[i]];
        const std::vector<std::uint32_t> x = expand(a, with_self);
        if (cover_ok(m, x)) return CyclicCover{m, x, true};
        if (k == 0) break;
        int i = (int)k - 1;
        while (i >= 0 && idx[i] == pool.size() - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (std::uint32_t j = (std::uint32_t)i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  throw std::logic_error("no cover found"); // X = Z_m \ {0} always covers
}

// seed {+-b : b <= t} union {+-a t : a <= t}, then drop inverse pairs
// greedily (ascending) while the cover property survives
inline CyclicCover cyclic_cover_bounded(std::uint32_t m) {
  if (m < 3) throw std::invalid_argument("cover search needs m >= 3");
  const std::uint32_t t = isqrt_ceil(m);
  std::vector<char> in(m, 0);
  for (std::uint32_t b = 1; b <= t; ++b) {
    in[b % m] = in[(m - b % m) % m] = 1;
    const std::uint32_t at = (std::uint64_t)b * t % m;
    if (at) in[at] = in[m - at] = 1;
  }
  in[0] = 0;
  std::vector<std::uint32_t> x;
  for (std::uint32_t v = 1; v < m; ++v)
    if (in[v]) x.push_back(v);
  if (!cover_ok(m, x)) throw std::logic_error("seed set failed to cover");

  // prune: try removing {v, m-v} for v ascending over the positive half
  for (std::uint32_t v = 1; v <= m / 2; ++v) {
    if (!in[v]) continue;
    std::vector<std::uint32_t> trial;
    for (std::uint32_t w = 1; w < m; ++w)
      if (in[w] && w != v && w != m - v) trial.push_back(w);
    if (cover_ok(m, trial)) {
      in[v] = 0;
      in[m - v] = 0;
    }
  }
  x.clear();
  for (std::uint32_t v = 1; v < m; ++v)
    if (in[v]) x.push_back(v);
  return CyclicCover{m, x, false};
}

inline CyclicCover cyclic_cover_find(std::uint32_t m, bool exact) {
  return exact ? cyclic_cover_exact(m) : cyclic_cover_bounded(m);
}

// transplant the cover into the multiplicative group F*: residue j maps to
// g0^j.  The image Y satisfies F* = {1} union Y union Y*Y and inherits
// inverse-closedness.
inline std::vector<Felt> realize_in_fstar(const FieldCtx& F, const CyclicCover& cv) {
  if (cv.m != F.q - 1u)
    throw std::invalid_argument("cover modulus must equal q - 1");
  std::vector<Felt> out;
  out.reserve(cv.x.size());
  for (std::uint32_t j : cv.x) out.push_back(F.exp_of(j));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace moore3
