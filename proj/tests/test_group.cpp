#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "moore3/group.hpp"
#include "moore3/verify.hpp"

using namespace moore3;

namespace {

// raw row-vector image, no projective canonicalization
std::array<Felt, 4> row_mul(const FieldCtx& F, const std::array<Felt, 4>& u, const Mat4& M) {
  std::array<Felt, 4> v{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) v[j] ^= F.mul(u[i], M[i][j]);
  return v;
}

std::vector<GroupElem> all_elems(const FieldCtx& F) {
  std::vector<GroupElem> out;
  out.reserve(group_order(F));
  for (std::uint64_t i = 0; i < group_order(F); ++i) out.push_back(gelem_from_gidx(F, i));
  return out;
}

} // namespace

TEST_CASE("triple law agrees with literal matrix multiplication") {
  const FieldCtx F(3);
  const auto G = all_elems(F);
  for (const GroupElem& g : G)
    for (const GroupElem& h : G)
      REQUIRE(g_matrix(F, g_mul(F, g, h)) == mat_mul(F, g_matrix(F, g), g_matrix(F, h)));
}

TEST_CASE("identity and two-sided inverses") {
  for (int m : {3, 5}) {
    const FieldCtx F(m);
    const GroupElem e = g_identity();
    for (std::uint64_t i = 0; i < group_order(F); ++i) {
      const GroupElem g = gelem_from_gidx(F, i);
      REQUIRE(g_mul(F, g, e) == g);
      REQUIRE(g_mul(F, e, g) == g);
      const GroupElem gi = g_inv(F, g);
      REQUIRE(g_mul(F, g, gi) == e);
      REQUIRE(g_mul(F, gi, g) == e);
    }
  }
}

TEST_CASE("associativity, sampled") {
  const FieldCtx F(5);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::uint64_t> d(0, group_order(F) - 1);
  for (int t = 0; t < 20000; ++t) {
    const GroupElem g = gelem_from_gidx(F, d(rng));
    const GroupElem h = gelem_from_gidx(F, d(rng));
    const GroupElem k = gelem_from_gidx(F, d(rng));
    REQUIRE(g_mul(F, g_mul(F, g, h), k) == g_mul(F, g, g_mul(F, h, k)));
  }
}

TEST_CASE("dense index round trip") {
  const FieldCtx F(3);
  for (std::uint64_t i = 0; i < group_order(F); ++i)
    REQUIRE(gidx(F, gelem_from_gidx(F, i)) == i);
  CHECK_THROWS_AS(gelem_from_gidx(F, group_order(F)), std::invalid_argument);
  CHECK_THROWS_AS(g_validate(F, GroupElem{0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(g_validate(F, GroupElem{1, 8, 0}), std::invalid_argument);
}

TEST_CASE("matrices are symplectic similitudes with multiplier r^(omega+2)") {
  const FieldCtx F(5);
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::uint64_t> d(0, group_order(F) - 1);
  for (int t = 0; t < 2000; ++t) {
    const GroupElem g = gelem_from_gidx(F, d(rng));
    const Mat4 M = g_matrix(F, g);
    const Felt lam = F.pow(g.r, (long long)F.omega + 2);
    std::array<Felt, 4> u{}, v{};
    for (int i = 0; i < 4; ++i) { u[i] = (Felt)(rng() % F.q); v[i] = (Felt)(rng() % F.q); }
    const ProjPoint pu{u}, pv{v};
    const std::array<Felt, 4> uM = row_mul(F, u, M), vM = row_mul(F, v, M);
    REQUIRE(iso_form(F, ProjPoint{uM}, ProjPoint{vM}) == F.mul(lam, iso_form(F, pu, pv)));
  }
}

TEST_CASE("five orbits partition the points with the stated sizes") {
  const FieldCtx F(3);
  std::array<std::uint64_t, 5> counts{};
  for (std::uint64_t i = 0; i < point_count(F); ++i)
    ++counts[(int)orbit_classify(F, point_from_index(F, (std::uint32_t)i))];
  for (Orbit o : {Orbit::o1, Orbit::o2, Orbit::o3, Orbit::o4, Orbit::o5}) {
    REQUIRE(counts[(int)o] == orbit_size(F, o));
    REQUIRE(orbit_classify(F, orbit_rep(F, o)) == o);
  }
  REQUIRE(counts[0] + counts[1] + counts[2] + counts[3] + counts[4] == point_count(F));
}

TEST_CASE("group is transitive on each orbit class") {
  const FieldCtx F(3);
  const auto G = all_elems(F);
  for (Orbit o : {Orbit::o1, Orbit::o2, Orbit::o3, Orbit::o4, Orbit::o5}) {
    const ProjPoint rep = orbit_rep(F, o);
    std::set<std::uint32_t> seen;
    for (const GroupElem& g : G) {
      const ProjPoint img = g_act(F, rep, g);
      REQUIRE(orbit_classify(F, img) == o); // classes are invariant
      seen.insert(point_index(F, img));
    }
    REQUIRE(seen.size() == orbit_size(F, o)); // and reached entirely
  }
}

TEST_CASE("action composes on the right") {
  const FieldCtx F(5);
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<std::uint64_t> d(0, group_order(F) - 1);
  for (int t = 0; t < 3000; ++t) {
    const ProjPoint p = random_point(F, rng);
    const GroupElem g = gelem_from_gidx(F, d(rng));
    const GroupElem h = gelem_from_gidx(F, d(rng));
    REQUIRE(g_act(F, g_act(F, p, g), h) == g_act(F, p, g_mul(F, g, h)));
  }
}

TEST_CASE("regular correspondence with the open orbit") {
  for (int m : {3, 5}) {
    const FieldCtx F(m);
    REQUIRE(point_of(F, g_identity()) == base_point(F));
    std::set<std::uint32_t> hit;
    for (std::uint64_t i = 0; i < group_order(F); ++i) {
      const GroupElem g = gelem_from_gidx(F, i);
      const ProjPoint p = point_of(F, g);
      REQUIRE(orbit_classify(F, p) == Orbit::o5);
      REQUIRE(gelem_of(F, p) == g);
      hit.insert(point_index(F, p));
    }
    REQUIRE(hit.size() == group_order(F));
  }
  const FieldCtx F(3);
  CHECK_THROWS_AS(gelem_of(F, ProjPoint{{0, 1, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(gelem_of(F, ProjPoint{{1, 0, 0, 0}}), std::invalid_argument);
}

TEST_CASE("the correspondence is the orbit map of the base vertex") {
  const FieldCtx F(3);
  for (std::uint64_t i = 0; i < group_order(F); ++i) {
    const GroupElem g = gelem_from_gidx(F, i);
    REQUIRE(point_of(F, g) == g_act(F, base_point(F), g));
  }
}

TEST_CASE("one-parameter stabilizers fix their designated points") {
  for (int m : {3, 5}) {
    const FieldCtx F(m);
    const MarkedPoints mp = marked_points(F);
    for (Felt r = 1; r < F.q; ++r) {
      const GroupElem t1 = stab_elem(F, StabKind::h1, r);
      const GroupElem t2 = stab_elem(F, StabKind::h2, r);
      g_validate(F, t1);
      g_validate(F, t2);
      REQUIRE(g_act(F, mp.u1, t1) == mp.u1);
      REQUIRE(g_act(F, mp.u2p, t1) == mp.u2p);
      REQUIRE(g_act(F, mp.u2, t2) == mp.u2);
      REQUIRE(g_act(F, mp.u1p, t2) == mp.u1p);
    }
  }
  CHECK_THROWS_AS(stab_elem(FieldCtx(3), StabKind::h1, 0), std::invalid_argument);
}

TEST_CASE("both stabilizer families are homomorphic images of F*") {
  const FieldCtx F(3);
  for (StabKind k : {StabKind::h1, StabKind::h2})
    for (Felt r = 1; r < F.q; ++r)
      for (Felt s = 1; s < F.q; ++s)
        REQUIRE(g_mul(F, stab_elem(F, k, r), stab_elem(F, k, s)) ==
                stab_elem(F, k, F.mul(r, s)));
}

TEST_CASE("stabilizer families exhaust the point stabilizers") {
  const FieldCtx F(3);
  const MarkedPoints mp = marked_points(F);
  auto sweep = [&](const ProjPoint& p) {
    std::set<std::uint64_t> fix;
    for (std::uint64_t i = 0; i < group_order(F); ++i)
      if (g_act(F, p, gelem_from_gidx(F, i)) == p) fix.insert(i);
    return fix;
  };
  std::set<std::uint64_t> h1, h2;
  for (const GroupElem& g : stabilizer(F, StabKind::h1)) h1.insert(gidx(F, g));
  for (const GroupElem& g : stabilizer(F, StabKind::h2)) h2.insert(gidx(F, g));
  REQUIRE(sweep(mp.u1) == h1);
  REQUIRE(sweep(mp.u2) == h2);
}

TEST_CASE("polarity-graph neighbourhood sizes") {
  const FieldCtx F(3);
  std::uint64_t big = 0, small = 0;
  std::vector<std::set<std::uint32_t>> adj(point_count(F));
  for (std::uint64_t i = 0; i < point_count(F); ++i) {
    const ProjPoint p = point_from_index(F, (std::uint32_t)i);
    const auto nb = pol_neighbors(F, p);
    if (is_absolute(F, p)) {
      REQUIRE(nb.size() == F.q); // own point dropped from its image line
      ++small;
    } else {
      REQUIRE(nb.size() == F.q + 1u);
      ++big;
    }
    for (const ProjPoint& w : nb) adj[i].insert(point_index(F, w));
    REQUIRE(adj[i].count((std::uint32_t)i) == 0);
  }
  REQUIRE(small == (std::uint64_t)F.q * F.q + 1);
  REQUIRE(big + small == point_count(F));
  // polarity makes the relation symmetric
  for (std::uint32_t i = 0; i < point_count(F); ++i)
    for (std::uint32_t j : adj[i]) REQUIRE(adj[j].count(i) == 1);
}

TEST_CASE("deleted neighbourhood sizes") {
  for (int m : {3, 5}) {
    const FieldCtx F(m);
    const LossSets ls = loss_sets(F);
    REQUIRE(ls.l_u1.size() == F.q - 2u);
    REQUIRE(ls.l_u2.size() == F.q - 2u);
    REQUIRE(ls.l_u1p.size() == F.q - 1u);
    REQUIRE(ls.l_u2p.size() == F.q - 1u);
  }
}

TEST_CASE("polarity commutes with the action, sampled") {
  const FieldCtx F(3);
  const EquivReport rep = equivariance_check_sampled(F, 2000, 31);
  REQUIRE(rep.checked == 2000);
  REQUIRE(rep.ok());
}

TEST_CASE("group suite passes") {
  for (int m : {3, 5}) {
    const Report rep = verify_group(FieldCtx(m), 0);
    for (const Check& c : rep.checks) {
      INFO(rep.suite << "/" << c.name << " " << c.detail);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("stabilizer suite passes") {
  for (int m : {3, 5}) {
    const Report rep = verify_stabilizers(FieldCtx(m));
    for (const Check& c : rep.checks) {
      INFO(rep.suite << "/" << c.name << " " << c.detail);
      CHECK(c.pass);
    }
  }
}
