#pragma once
// Named verification suites over a field context.  Each check re-derives a
// structural fact and reports pass/fail with a short detail string; suites
// never throw on mathematical failure, only on misuse.
//
// Exhaustive where the object is small enough, deterministic sampling
// otherwise.  The split per q is noted at each check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "moore3/analysis.hpp"
#include "moore3/cyclic_cover.hpp"
#include "moore3/geometry.hpp"
#include "moore3/gf2m.hpp"
#include "moore3/graphs.hpp"
#include "moore3/group.hpp"
#include "moore3/polarity.hpp"

namespace moore3 {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string suite;
  std::uint32_t q = 0;
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string detail = "") {
    checks.push_back(Check{std::move(name), pass, std::move(detail)});
  }
  bool ok() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
};

namespace detail {

inline Felt rand_felt(const FieldCtx& F, std::mt19937_64& rng) {
  return (Felt)(rng() % F.q);
}
inline Felt rand_unit(const FieldCtx& F, std::mt19937_64& rng) {
  return (Felt)(rng() % (F.q - 1) + 1);
}
inline GroupElem rand_gelem(const FieldCtx& F, std::mt19937_64& rng) {
  return gelem_from_gidx(F, rng() % group_order(F));
}

inline std::string counts(std::uint64_t bad, std::uint64_t total) {
  return "violations=" + std::to_string(bad) + " checked=" + std::to_string(total);
}

} // namespace detail

// ---- field ----------------------------------------------------------------------

inline Report verify_field(const FieldCtx& F, std::uint64_t seed) {
  using namespace detail;
  Report rep{"field", F.q, {}};
  std::mt19937_64 rng(seed);

  { // ring axioms; exhaustive triples for q = 8, sampled beyond
    std::uint64_t bad = 0, total = 0;
    auto probe = [&](Felt x, Felt y, Felt z) {
      ++total;
      const bool ok = F.mul(x, y) == F.mul(y, x) &&
                      F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)) &&
                      F.mul(x, (Felt)(y ^ z)) == (F.mul(x, y) ^ F.mul(x, z)) &&
                      F.mul(x, 1) == x && (x ^ 0) == x;
      if (!ok) ++bad;
    };
    if (F.q <= 8) {
      for (Felt x = 0; x < F.q; ++x)
        for (Felt y = 0; y < F.q; ++y)
          for (Felt z = 0; z < F.q; ++z) probe(x, y, z);
    } else {
      for (int t = 0; t < 100000; ++t)
        probe(rand_felt(F, rng), rand_felt(F, rng), rand_felt(F, rng));
    }
    rep.add("ring axioms", bad == 0, counts(bad, total));
  }
  { // multiplicative inverses, all of F*
    std::uint64_t bad = 0;
    for (Felt x = 1; x < F.q; ++x)
      if (F.mul(x, F.inv(x)) != 1) ++bad;
    rep.add("inverses", bad == 0, counts(bad, F.q - 1));
  }
  { // table product against the polynomial definition
    std::uint64_t bad = 0, total = 0;
    if (F.q <= 32) {
      for (Felt x = 0; x < F.q; ++x)
        for (Felt y = 0; y < F.q; ++y) {
          ++total;
          if (F.mul(x, y) != F.mul_ref(x, y)) ++bad;
        }
    } else {
      for (int t = 0; t < 100000; ++t) {
        const Felt x = rand_felt(F, rng), y = rand_felt(F, rng);
        ++total;
        if (F.mul(x, y) != F.mul_ref(x, y)) ++bad;
      }
    }
    rep.add("product vs polynomial reference", bad == 0, counts(bad, total));
  }
  { // sigma(sigma(x)) = x^2 and sqrt(x)^2 = x, all x
    std::uint64_t bad = 0;
    for (Felt x = 0; x < F.q; ++x) {
      if (F.sigma(F.sigma(x)) != F.mul(x, x)) ++bad;
      const Felt s = F.sqrt(x);
      if (F.mul(s, s) != x) ++bad;
    }
    rep.add("twist squares to Frobenius; sqrt roundtrip", bad == 0, counts(bad, 2u * F.q));
  }
  { // sigma is an automorphism: additive and multiplicative
    std::uint64_t bad = 0, total = 0;
    auto probe = [&](Felt x, Felt y) {
      ++total;
      if (F.sigma((Felt)(x ^ y)) != (F.sigma(x) ^ F.sigma(y))) ++bad;
      if (F.sigma(F.mul(x, y)) != F.mul(F.sigma(x), F.sigma(y))) ++bad;
    };
    if (F.q <= 32) {
      for (Felt x = 0; x < F.q; ++x)
        for (Felt y = 0; y < F.q; ++y) probe(x, y);
    } else {
      for (int t = 0; t < 100000; ++t) probe(rand_felt(F, rng), rand_felt(F, rng));
    }
    rep.add("twist is an automorphism", bad == 0, counts(bad, total));
  }
  { // sigma agrees with pow(., omega) and sqrt with pow(., 2^(m-1))
    std::uint64_t bad = 0;
    for (Felt x = 0; x < F.q; ++x) {
      if (F.sigma(x) != F.pow(x, F.omega)) ++bad;
      if (F.sqrt(x) != F.pow(x, 1ll << (F.m - 1))) ++bad;
    }
    rep.add("twist and sqrt agree with pow", bad == 0, counts(bad, 2u * F.q));
  }
  { // x -> x^(omega+2) permutes F* (the exponent is a unit mod q-1)
    std::vector<char> seen(F.q, 0);
    bool ok = F.pow(0, (long long)F.omega + 2) == 0;
    for (Felt x = 1; x < F.q; ++x) {
      const Felt y = F.pow(x, (long long)F.omega + 2);
      if (y == 0 || seen[y]) ok = false;
      seen[y] = 1;
    }
    rep.add("omega+2 power map is a permutation", ok);
  }
  { // 0^0 = 1 and generator order
    bool ok = F.pow(0, 0) == 1 && F.pow(F.generator(), (long long)F.q - 1) == 1;
    for (Felt e = 1; ok && e < F.q - 1u; ++e)
      if (F.pow(F.generator(), e) == 1) ok = false;
    rep.add("generator has full order", ok);
  }
  return rep;
}

// ---- geometry -------------------------------------------------------------------

inline Report verify_geometry(const FieldCtx& F, std::uint64_t seed) {
  using namespace detail;
  Report rep{"geometry", F.q, {}};
  std::mt19937_64 rng(seed);
  const std::uint64_t npts = point_count(F);

  { // index codec roundtrip
    std::uint64_t bad = 0;
    for (std::uint64_t i = 0; i < npts; ++i) {
      const ProjPoint p = point_from_index(F, (std::uint32_t)i);
      if (point_index(F, p) != i || !(pp_canon(F, p.x) == p)) ++bad;
    }
    rep.add("point index roundtrip", bad == 0, counts(bad, npts));
  }
  { // alternating form: B(u,u) = 0, B symmetric (char 2)
    std::uint64_t bad = 0, total = 0;
    for (int t = 0; t < 20000; ++t) {
      const ProjPoint u = random_point(F, rng), v = random_point(F, rng);
      ++total;
      if (iso_form(F, u, u) != 0 || iso_form(F, u, v) != iso_form(F, v, u)) ++bad;
    }
    rep.add("form alternating and symmetric", bad == 0, counts(bad, total));
  }

  if (F.q <= 32) {
    const std::vector<IsoLine> lines = enumerate_lines(F);
    rep.add("line count equals point count",
            lines.size() == npts,
            std::to_string(lines.size()) + " lines, " + std::to_string(npts) + " points");
    { // each line carries q+1 points, all pairwise non-collinear... isotropic
      std::uint64_t bad = 0;
      for (const IsoLine& l : lines) {
        const auto pts = line_points(F, l);
        std::unordered_set<std::uint32_t> distinct;
        for (const ProjPoint& p : pts) distinct.insert(point_index(F, p));
        if (distinct.size() != F.q + 1u) ++bad;
        for (const ProjPoint& p : pts)
          if (iso_form(F, l.a, p) != 0 || iso_form(F, l.b, p) != 0) ++bad;
      }
      rep.add("lines have q+1 isotropic points", bad == 0, counts(bad, lines.size()));
    }
    { // each point lies on exactly q+1 lines
      std::vector<std::uint32_t> incid(npts, 0);
      for (const IsoLine& l : lines)
        for (const ProjPoint& p : line_points(F, l)) ++incid[point_index(F, p)];
      std::uint64_t bad = 0;
      for (std::uint32_t c : incid)
        if (c != F.q + 1u) ++bad;
      rep.add("points lie on q+1 lines", bad == 0, counts(bad, npts));
    }
    { // collinear isotropic pairs span lines of the system
      std::uint64_t bad = 0, total = 0;
      for (int t = 0; t < 20000; ++t) {
        const IsoLine l = random_line(F, rng);
        const auto pts = line_points(F, l);
        const ProjPoint& x = pts[rng() % pts.size()];
        const ProjPoint& y = pts[rng() % pts.size()];
        if (x == y) continue;
        ++total;
        if (!line_eq(F, line_from_span(F, x, y), l)) ++bad;
      }
      rep.add("spans independent of the chosen pair", bad == 0, counts(bad, total));
    }
    { // quadrangle axiom, complete via line kernels
      const GqAxiomReport r = gq_axiom_check(F, lines);
      rep.add("quadrangle axiom (kernel sweep)", r.ok(), counts(r.violations, r.pairs_checked));
    }
    { // quadrangle axiom, literal counting; full at q = 8, sampled at q = 32
      GqAxiomReport r;
      if (F.q <= 8) {
        r = gq_axiom_count(F, enumerate_points(F), lines);
      } else {
        std::vector<ProjPoint> ps;
        std::vector<IsoLine> ls;
        for (int t = 0; t < 1000; ++t) {
          ps.push_back(random_point(F, rng));
          ls.push_back(lines[rng() % lines.size()]);
        }
        r = gq_axiom_count(F, ps, ls);
      }
      rep.add("quadrangle axiom (literal count)", r.ok(), counts(r.violations, r.pairs_checked));
    }
  } else {
    { // lines through sampled points: q+1 of them, pairwise distinct, isotropic
      std::uint64_t bad = 0, total = 0;
      for (int t = 0; t < 20; ++t) {
        const ProjPoint p = random_point(F, rng);
        const auto ls = lines_through(F, p);
        ++total;
        if (ls.size() != F.q + 1u) ++bad;
        for (const IsoLine& l : ls)
          if (!line_contains(F, l, p) || iso_form(F, l.a, l.b) != 0) ++bad;
      }
      rep.add("pencils of sampled points", bad == 0, counts(bad, total));
    }
    { // quadrangle axiom on sampled (point, line) pairs
      std::uint64_t bad = 0, total = 0;
      for (int t = 0; t < 10000; ++t) {
        const IsoLine l = random_line(F, rng);
        const ProjPoint u = random_point(F, rng);
        const auto pts = line_points(F, l);
        bool on = false;
        int coll = 0;
        for (const ProjPoint& w : pts) {
          if (w == u) { on = true; break; }
          if (iso_form(F, u, w) == 0) ++coll;
        }
        if (on) continue;
        ++total;
        if (coll != 1) ++bad;
      }
      rep.add("quadrangle axiom (sampled)", bad == 0, counts(bad, total));
    }
  }
  return rep;
}

// ---- polarity -------------------------------------------------------------------

inline Report verify_polarity(const FieldCtx& F, std::uint64_t seed) {
  using namespace detail;
  Report rep{"polarity", F.q, {}};
  std::mt19937_64 rng(seed);
  const std::uint64_t npts = point_count(F);
  std::vector<IsoLine> all_lines;
  if (F.q <= 32) all_lines = enumerate_lines(F);

  { // involution on points
    std::uint64_t bad = 0, total = 0;
    if (F.q <= 32) {
      for (std::uint64_t i = 0; i < npts; ++i) {
        const ProjPoint p = point_from_index(F, (std::uint32_t)i);
        ++total;
        if (!(pol_line_to_point(F, pol_point_to_line(F, p)) == p)) ++bad;
      }
    } else {
      for (int t = 0; t < 100000; ++t) {
        const ProjPoint p = random_point(F, rng);
        ++total;
        if (!(pol_line_to_point(F, pol_point_to_line(F, p)) == p)) ++bad;
      }
    }
    rep.add("involution on points", bad == 0, counts(bad, total));
  }
  { // involution on lines
    std::uint64_t bad = 0, total = 0;
    auto probe = [&](const IsoLine& l) {
      ++total;
      if (!line_eq(F, pol_point_to_line(F, pol_line_to_point(F, l)), l)) ++bad;
    };
    if (F.q <= 32)
      for (const IsoLine& l : all_lines) probe(l);
    else
      for (int t = 0; t < 20000; ++t) probe(random_line(F, rng));
    rep.add("involution on lines", bad == 0, counts(bad, total));
  }
  { // incidence reversal: u on l implies pol(l) on pol(u)
    std::uint64_t bad = 0, total = 0;
    auto probe = [&](const IsoLine& l) {
      const ProjPoint w = pol_line_to_point(F, l);
      for (const ProjPoint& u : line_points(F, l)) {
        ++total;
        if (!line_contains(F, pol_point_to_line(F, u), w)) ++bad;
      }
    };
    if (F.q <= 32)
      for (const IsoLine& l : all_lines) probe(l);
    else
      for (int t = 0; t < 2000; ++t) probe(random_line(F, rng));
    rep.add("incidence reversal", bad == 0, counts(bad, total));
  }
  { // image lines pass through their source iff the source is absolute,
    // and the absolute set is exactly the ovoid
    std::vector<char> in_ovoid(npts, 0);
    const auto ovoid = enumerate_ovoid(F);
    for (const ProjPoint& p : ovoid) in_ovoid[point_index(F, p)] = 1;
    std::uint64_t bad = 0, total = 0;
    const bool size_ok = ovoid.size() == (std::uint64_t)F.q * F.q + 1;
    if (F.q <= 32) {
      for (std::uint64_t i = 0; i < npts; ++i) {
        ++total;
        if (is_absolute(F, point_from_index(F, (std::uint32_t)i)) != (bool)in_ovoid[i]) ++bad;
      }
    } else {
      for (const ProjPoint& p : ovoid) {
        ++total;
        if (!is_absolute(F, p)) ++bad;
      }
      for (int t = 0; t < 100000; ++t) {
        const ProjPoint p = random_point(F, rng);
        ++total;
        if (is_absolute(F, p) != (bool)in_ovoid[point_index(F, p)]) ++bad;
      }
    }
    rep.add("absolute points = ovoid of size q^2+1", bad == 0 && size_ok,
            counts(bad, total) + " ovoid=" + std::to_string(ovoid.size()));
  }
  if (F.q <= 32) { // every line carries exactly one absolute point
    std::vector<char> absolute(npts, 0);
    for (std::uint64_t i = 0; i < npts; ++i)
      absolute[i] = is_absolute(F, point_from_index(F, (std::uint32_t)i));
    std::uint64_t bad = 0, total = 0;
    for (const IsoLine& l : all_lines) {
      int cnt = 0;
      for (const ProjPoint& p : line_points(F, l)) cnt += absolute[point_index(F, p)];
      ++total;
      if (cnt != 1) ++bad;
    }
    rep.add("one absolute point per line", bad == 0, counts(bad, total));
  }
  { // polarity property: images of two collinear points meet in the image
    // of their joining line; all pairs at q = 8, sampled pairs beyond
    std::uint64_t bad = 0, total = 0;
    auto probe_pair = [&](const IsoLine& l, const ProjPoint& w, const ProjPoint& x,
                          const ProjPoint& y) {
      ++total;
      // intersection of the two image lines must be exactly {w = pol(l)}
      const IsoLine li = pol_point_to_line(F, x);
      const IsoLine lj = pol_point_to_line(F, y);
      int common = 0;
      bool hits_w = false;
      for (const ProjPoint& z : line_points(F, li))
        if (line_contains(F, lj, z)) {
          ++common;
          if (z == w) hits_w = true;
        }
      if (common != 1 || !hits_w) ++bad;
      (void)l;
    };
    if (F.q <= 8) {
      for (const IsoLine& l : all_lines) {
        const ProjPoint w = pol_line_to_point(F, l);
        const auto pts = line_points(F, l);
        for (std::size_t i = 0; i < pts.size(); ++i)
          for (std::size_t j = i + 1; j < pts.size(); ++j) probe_pair(l, w, pts[i], pts[j]);
      }
    } else {
      for (int t = 0; t < 40; ++t) {
        const IsoLine l = all_lines.empty() ? random_line(F, rng)
                                            : all_lines[rng() % all_lines.size()];
        const ProjPoint w = pol_line_to_point(F, l);
        const auto pts = line_points(F, l);
        for (int s = 0; s < 25; ++s) {
          const std::size_t i = rng() % pts.size(), j = rng() % pts.size();
          if (i == j) continue;
          probe_pair(l, w, pts[i], pts[j]);
        }
      }
    }
    rep.add("collinear images meet at the line image", bad == 0, counts(bad, total));
  }
  return rep;
}

// ---- group ----------------------------------------------------------------------

inline Report verify_group(const FieldCtx& F, std::uint64_t seed) {
  using namespace detail;
  Report rep{"group", F.q, {}};
  std::mt19937_64 rng(seed);
  const std::uint64_t ng = group_order(F);

  { // index codec is a bijection onto q^2(q-1) triples
    std::uint64_t bad = 0;
    if (F.q <= 32) {
      std::vector<char> seen(ng, 0);
      for (Felt r = 1; r < F.q; ++r)
        for (Felt a = 0; a < F.q; ++a)
          for (Felt b = 0; b < F.q; ++b) {
            const std::uint64_t i = gidx(F, GroupElem{r, a, b});
            if (i >= ng || seen[i]) ++bad;
            else seen[i] = 1;
            if (!(gelem_from_gidx(F, i) == GroupElem{r, a, b})) ++bad;
          }
      rep.add("element enumeration", bad == 0,
              "order=" + std::to_string(ng) + " " + counts(bad, ng));
    } else {
      for (int t = 0; t < 100000; ++t) {
        const std::uint64_t i = rng() % ng;
        if (gidx(F, gelem_from_gidx(F, i)) != i) ++bad;
      }
      rep.add("element enumeration (sampled)", bad == 0, counts(bad, 100000));
    }
  }
  { // triple law vs literal matrix product; exhaustive pairs at q = 8
    std::uint64_t bad = 0, total = 0;
    auto probe = [&](const GroupElem& g, const GroupElem& h) {
      ++total;
      if (!(g_matrix(F, g_mul(F, g, h)) == mat_mul(F, g_matrix(F, g), g_matrix(F, h)))) ++bad;
    };
    if (F.q <= 8) {
      for (std::uint64_t i = 0; i < ng; ++i)
        for (std::uint64_t j = 0; j < ng; ++j)
          probe(gelem_from_gidx(F, i), gelem_from_gidx(F, j));
    } else {
      for (int t = 0; t < 100000; ++t) probe(rand_gelem(F, rng), rand_gelem(F, rng));
    }
    rep.add("composition matches matrix product", bad == 0, counts(bad, total));
  }
  { // inverses: both sides, plus matrix inverse sanity via action
    std::uint64_t bad = 0, total = 0;
    auto probe = [&](const GroupElem& g) {
      ++total;
      const GroupElem gi = g_inv(F, g);
      if (!(g_mul(F, g, gi) == g_identity()) || !(g_mul(F, gi, g) == g_identity())) ++bad;
    };
    if (F.q <= 8)
      for (std::uint64_t i = 0; i < ng; ++i) probe(gelem_from_gidx(F, i));
    else
      for (int t = 0; t < 100000; ++t) probe(rand_gelem(F, rng));
    rep.add("two-sided inverses", bad == 0, counts(bad, total));
  }
  { // associativity on sampled triples
    std::uint64_t bad = 0, total = 0;
    for (int t = 0; t < 100000; ++t) {
      const GroupElem x = rand_gelem(F, rng), y = rand_gelem(F, rng), z = rand_gelem(F, rng);
      ++total;
      if (!(g_mul(F, g_mul(F, x, y), z) == g_mul(F, x, g_mul(F, y, z)))) ++bad;
    }
    rep.add("associativity (sampled)", bad == 0, counts(bad, total));
  }
  { // orbit partition: classified sizes match the formulas
    std::uint64_t sz[5] = {0, 0, 0, 0, 0};
    for (std::uint64_t i = 0; i < point_count(F); ++i)
      ++sz[(int)orbit_classify(F, point_from_index(F, (std::uint32_t)i))];
    bool ok = true;
    for (Orbit o : {Orbit::o1, Orbit::o2, Orbit::o3, Orbit::o4, Orbit::o5})
      ok = ok && sz[(int)o] == orbit_size(F, o);
    rep.add("orbit sizes", ok,
            std::to_string(sz[0]) + "/" + std::to_string(sz[1]) + "/" + std::to_string(sz[2]) +
                "/" + std::to_string(sz[3]) + "/" + std::to_string(sz[4]));
  }
  { // class function is invariant under the action
    std::uint64_t bad = 0, total = 0;
    for (int t = 0; t < 100000; ++t) {
      const ProjPoint u = random_point(F, rng);
      const GroupElem g = rand_gelem(F, rng);
      ++total;
      if (orbit_classify(F, g_act(F, u, g)) != orbit_classify(F, u)) ++bad;
    }
    rep.add("orbit labels invariant (sampled)", bad == 0, counts(bad, total));
  }
  if (F.q == 8) { // closure of each representative under all of G
    bool ok = true;
    for (Orbit o : {Orbit::o1, Orbit::o2, Orbit::o3, Orbit::o4, Orbit::o5}) {
      std::unordered_set<std::uint32_t> hit;
      const ProjPoint rep_pt = orbit_rep(F, o);
      for (std::uint64_t i = 0; i < ng; ++i)
        hit.insert(point_index(F, g_act(F, rep_pt, gelem_from_gidx(F, i))));
      if (hit.size() != orbit_size(F, o)) ok = false;
      for (std::uint32_t pi : hit)
        if (orbit_classify(F, point_from_index(F, pi)) != o) ok = false;
    }
    rep.add("orbit closure from representatives", ok);
  }
  { // regular correspondence on the open orbit
    std::uint64_t bad = 0;
    for (std::uint64_t i = 0; i < ng; ++i) {
      const GroupElem g = gelem_from_gidx(F, i);
      const ProjPoint p = point_of(F, g);
      if (!(g_act(F, base_point(F), g) == p)) ++bad;
      if (!(gelem_of(F, p) == g)) ++bad;
    }
    rep.add("base-point bijection", bad == 0, counts(bad, 2 * ng));
  }
  { // the polarity commutes with the action
    std::uint64_t bad = 0, total = F.q <= 32 ? 10000u : 1000u;
    EquivReport r = equivariance_check_sampled(F, total, seed + 1);
    bad = r.violations;
    rep.add("polarity equivariance (sampled)", bad == 0, counts(bad, r.checked));
  }
  return rep;
}

// ---- reference neighbourhoods ----------------------------------------------------

struct ReferenceRow {
  ProjPoint u;
  std::vector<ProjPoint> expected;
};

// nine curated vertices with closed-form neighbour lists, used as regression
// data for the polarity graph
inline std::vector<ReferenceRow> reference_neighborhoods(const FieldCtx& F) {
  std::vector<ReferenceRow> rows;
  auto row = [&](std::array<Felt, 4> u, ProjPoint iso, auto family, bool star) {
    ReferenceRow r;
    r.u = pp_canon(F, u);
    r.expected.push_back(iso);
    for (Felt z = star ? 1 : 0; z < F.q; ++z) r.expected.push_back(family(z));
    rows.push_back(std::move(r));
  };
  const Felt one = 1;
  row({1, 0, 0, 0}, ProjPoint{{0, 0, 1, 0}},
      [&](Felt z) { return ProjPoint{{1, 0, z, 0}}; }, true);
  // [0,1,0,0]: the whole list is one family, {[0,z,0,1] : z in F}
  {
    ReferenceRow r;
    r.u = ProjPoint{{0, 1, 0, 0}};
    for (Felt z = 0; z < F.q; ++z) r.expected.push_back(pp_canon(F, {0, z, 0, 1}));
    rows.push_back(std::move(r));
  }
  row({0, 0, 1, 0}, ProjPoint{{0, 0, 0, 1}},
      [&](Felt z) { return ProjPoint{{1, 0, 0, z}}; }, false);
  row({0, 0, 0, 1}, ProjPoint{{0, 1, 0, 0}},
      [&](Felt z) { return pp_canon(F, {0, z, 1, 0}); }, false);
  row({1, 1, 0, 0}, ProjPoint{{0, 1, 1, 0}},
      [&](Felt z) { return ProjPoint{{1, z, z, 1}}; }, false);
  row({0, 1, 1, 0}, ProjPoint{{0, 0, 0, 1}},
      [&](Felt z) { return ProjPoint{{1, 1, 0, z}}; }, false);
  row({0, 0, 1, 1}, ProjPoint{{0, 1, 0, 1}},
      [&](Felt z) { return ProjPoint{{1, z, 1, z}}; }, false);
  row({1, 1, 0, 1}, ProjPoint{{0, 1, 1, 0}},
      [&](Felt z) { return ProjPoint{{1, (Felt)(one ^ z), z, 1}}; }, true);
  row({1, 1, 1, 1}, ProjPoint{{0, 0, 1, 1}},
      [&](Felt z) { return ProjPoint{{1, 1, (Felt)(z ^ 1), (Felt)(z ^ 1)}}; }, true);
  return rows;
}

inline Report verify_table1(const FieldCtx& F) {
  Report rep{"table1", F.q, {}};
  for (const ReferenceRow& row : reference_neighborhoods(F)) {
    std::vector<std::uint32_t> want;
    for (const ProjPoint& p : row.expected) want.push_back(point_index(F, p));
    std::sort(want.begin(), want.end());
    std::vector<std::uint32_t> got;
    for (const ProjPoint& p : pol_neighbors(F, row.u)) got.push_back(point_index(F, p));
    std::sort(got.begin(), got.end());
    std::string label = "N([" + std::to_string(row.u.x[0]) + "," + std::to_string(row.u.x[1]) +
                        "," + std::to_string(row.u.x[2]) + "," + std::to_string(row.u.x[3]) + "])";
    rep.add(label, want == got,
            std::to_string(got.size()) + " neighbours, expected " + std::to_string(want.size()));
  }
  return rep;
}

// ---- stabilizers ------------------------------------------------------------------

inline Report verify_stabilizers(const FieldCtx& F) {
  using namespace detail;
  Report rep{"stabilizers", F.q, {}};
  const MarkedPoints mp = marked_points(F);
  const std::uint64_t ng = group_order(F);

  { // both families fix their two designated points, for every parameter
    std::uint64_t bad = 0;
    for (Felt r = 1; r < F.q; ++r) {
      const GroupElem h1 = stab_elem(F, StabKind::h1, r);
      const GroupElem h2 = stab_elem(F, StabKind::h2, r);
      if (!(g_act(F, mp.u1, h1) == mp.u1)) ++bad;
      if (!(g_act(F, mp.u2p, h1) == mp.u2p)) ++bad;
      if (!(g_act(F, mp.u2, h2) == mp.u2)) ++bad;
      if (!(g_act(F, mp.u1p, h2) == mp.u1p)) ++bad;
    }
    rep.add("families fix their designated points", bad == 0, counts(bad, 4u * (F.q - 1)));
  }
  { // the parameter map is an isomorphism from F*
    std::uint64_t bad = 0;
    for (Felt r = 1; r < F.q; ++r)
      for (Felt s = 1; s < F.q; ++s) {
        const Felt rs = F.mul(r, s);
        if (!(g_mul(F, stab_elem(F, StabKind::h1, r), stab_elem(F, StabKind::h1, s)) ==
              stab_elem(F, StabKind::h1, rs))) ++bad;
        if (!(g_mul(F, stab_elem(F, StabKind::h2, r), stab_elem(F, StabKind::h2, s)) ==
              stab_elem(F, StabKind::h2, rs))) ++bad;
      }
    rep.add("parameter maps are homomorphisms", bad == 0,
            counts(bad, 2ull * (F.q - 1) * (F.q - 1)));
  }
  if (F.q <= 32) { // the families are the full stabilizers, by sweep over G
    std::unordered_set<std::uint64_t> h1set, h2set;
    for (Felt r = 1; r < F.q; ++r) {
      h1set.insert(gidx(F, stab_elem(F, StabKind::h1, r)));
      h2set.insert(gidx(F, stab_elem(F, StabKind::h2, r)));
    }
    std::uint64_t bad = 0;
    for (std::uint64_t i = 0; i < ng; ++i) {
      const GroupElem g = gelem_from_gidx(F, i);
      const bool fix1 = g_act(F, mp.u1, g) == mp.u1;
      const bool fix1b = g_act(F, mp.u2p, g) == mp.u2p;
      const bool fix2 = g_act(F, mp.u2, g) == mp.u2;
      const bool fix2b = g_act(F, mp.u1p, g) == mp.u1p;
      if (fix1 != (h1set.count(i) > 0) || fix1b != fix1) ++bad;
      if (fix2 != (h2set.count(i) > 0) || fix2b != fix2) ++bad;
    }
    rep.add("families exhaust the stabilizers", bad == 0, counts(bad, 2 * ng));
  }
  { // closed-form actions in the z-parameter, for all z, r in F*
    std::uint64_t bad = 0, total = 0;
    for (Felt z = 1; z < F.q; ++z)
      for (Felt r = 1; r < F.q; ++r) {
        const GroupElem h1 = stab_elem(F, StabKind::h1, r);
        const GroupElem h2 = stab_elem(F, StabKind::h2, r);
        const Felt zr = F.mul(z, r);
        const Felt zrw = F.mul(z, F.mul(F.sigma(r), r)); // z r^(omega+1)
        total += 4;
        if (!(g_act(F, ProjPoint{{1, 1, (Felt)(z ^ 1), (Felt)(z ^ 1)}}, h1) ==
              ProjPoint{{1, 1, (Felt)(zr ^ 1), (Felt)(zr ^ 1)}})) ++bad;
        if (!(g_act(F, ProjPoint{{1, (Felt)(z ^ 1), 1, (Felt)(z ^ 1)}}, h1) ==
              ProjPoint{{1, (Felt)(zrw ^ 1), 1, (Felt)(zrw ^ 1)}})) ++bad;
        if (!(g_act(F, ProjPoint{{1, 1, 0, (Felt)(z ^ 1)}}, h2) ==
              ProjPoint{{1, 1, 0, (Felt)(zrw ^ 1)}})) ++bad;
        if (!(g_act(F, ProjPoint{{1, (Felt)(z ^ 1), z, 1}}, h2) ==
              ProjPoint{{1, (Felt)(zr ^ 1), zr, 1}})) ++bad;
      }
    rep.add("closed-form actions", bad == 0, counts(bad, total));
  }
  { // loss sets have sizes q-2, q-2, q-1, q-1 and match their closed forms
    const LossSets ls = loss_sets(F);
    auto keyed = [&](const std::vector<ProjPoint>& v) {
      std::vector<std::uint32_t> k;
      for (const ProjPoint& p : v) k.push_back(point_index(F, p));
      std::sort(k.begin(), k.end());
      return k;
    };
    auto family = [&](auto make, bool drop_z1) {
      std::vector<ProjPoint> v;
      for (Felt z = 1; z < F.q; ++z) {
        if (drop_z1 && z == 1) continue;
        v.push_back(make(z));
      }
      return v;
    };
    const bool ok =
        keyed(ls.l_u1) == keyed(family([&](Felt z) {
          return ProjPoint{{1, 1, (Felt)(z ^ 1), (Felt)(z ^ 1)}};
        }, true)) &&
        keyed(ls.l_u2) == keyed(family([&](Felt z) {
          return ProjPoint{{1, 1, 0, (Felt)(z ^ 1)}};
        }, true)) &&
        keyed(ls.l_u1p) == keyed(family([&](Felt z) {
          return ProjPoint{{1, (Felt)(z ^ 1), z, 1}};
        }, false)) &&
        keyed(ls.l_u2p) == keyed(family([&](Felt z) {
          return ProjPoint{{1, (Felt)(z ^ 1), 1, (Felt)(z ^ 1)}};
        }, false)) &&
        ls.l_u1.size() == F.q - 2u && ls.l_u2.size() == F.q - 2u &&
        ls.l_u1p.size() == F.q - 1u && ls.l_u2p.size() == F.q - 1u;
    rep.add("loss sets match closed forms", ok);
  }
  { // regular actions: transitive with trivial point stabilizer on each set
    const LossSets ls = loss_sets(F);
    auto regular_on = [&](StabKind k, std::vector<ProjPoint> set) {
      std::unordered_set<std::uint32_t> members;
      for (const ProjPoint& p : set) members.insert(point_index(F, p));
      // closure, transitivity from the first element, freeness
      std::unordered_set<std::uint32_t> orbit;
      for (const ProjPoint& p : set)
        for (Felt r = 1; r < F.q; ++r) {
          const ProjPoint img = g_act(F, p, stab_elem(F, k, r));
          if (!members.count(point_index(F, img))) return false;
          if (p == set[0]) orbit.insert(point_index(F, img));
          if (img == p && r != 1) return false; // nontrivial fixer
        }
      return orbit.size() == set.size() && set.size() == F.q - 1u;
    };
    auto with_u = [&](std::vector<ProjPoint> v) {
      v.push_back(marked_points(F).u);
      return v;
    };
    const bool ok = regular_on(StabKind::h1, with_u(ls.l_u1)) &&
                    regular_on(StabKind::h1, ls.l_u2p) &&
                    regular_on(StabKind::h2, with_u(ls.l_u2)) &&
                    regular_on(StabKind::h2, ls.l_u1p);
    rep.add("regular actions on the four repair sets", ok);
  }
  return rep;
}

inline std::vector<Report> verify_all(const FieldCtx& F, std::uint64_t seed) {
  return {verify_field(F, seed),     verify_geometry(F, seed), verify_polarity(F, seed),
          verify_group(F, seed),     verify_table1(F),         verify_stabilizers(F)};
}

} // namespace moore3
