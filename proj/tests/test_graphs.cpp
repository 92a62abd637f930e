#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "moore3/graphs.hpp"

using namespace moore3;

TEST_CASE("csr assembly") {
  std::vector<std::vector<std::uint32_t>> rows{{1}, {2, 0}, {1}};
  const Csr g = csr_from_rows(std::move(rows));
  REQUIRE(g.order == 3);
  REQUIRE(g.offsets == std::vector<std::uint64_t>{0, 1, 3, 4});
  REQUIRE(g.nbrs == std::vector<std::uint32_t>{1, 0, 2, 1}); // rows sorted
  REQUIRE(g.degree(1) == 2);
  REQUIRE(g.row(1)[0] == 0);
  REQUIRE(g.edge_count() == 2);
}

TEST_CASE("polarity graph on all points, q = 8") {
  const FieldCtx F(3);
  const PolarityGraph pg = build_polarity_graph(F);
  REQUIRE(pg.g.order == 585);
  REQUIRE(pg.g.edge_count() == 2600);
  std::uint64_t deg_q = 0, deg_q1 = 0;
  for (std::uint64_t v = 0; v < pg.g.order; ++v) {
    const std::uint64_t d = pg.g.degree(v);
    if (d == F.q) ++deg_q;
    else if (d == F.q + 1u) ++deg_q1;
    else FAIL("unexpected degree " << d);
    for (std::uint64_t k = 0; k < d; ++k) {
      const std::uint32_t w = pg.g.row(v)[k];
      REQUIRE(w != v); // image-line loops are cut
      const auto* wr = pg.g.row(w);
      REQUIRE(std::binary_search(wr, wr + pg.g.degree(w), (std::uint32_t)v));
    }
  }
  REQUIRE(deg_q == 65);   // one vertex per absolute point
  REQUIRE(deg_q1 == 520);
}

TEST_CASE("explicit constructions reject large fields") {
  const FieldCtx F(7);
  CHECK_THROWS_AS(build_polarity_graph(F), std::invalid_argument);
  CHECK_THROWS_AS(build_orbit_graph(F), std::invalid_argument);
}

TEST_CASE("induced subgraph on the open orbit, q = 8") {
  const FieldCtx F(3);
  const OrbitGraph og = build_orbit_graph(F);
  REQUIRE(og.points.size() == group_order(F));
  REQUIRE(og.g.order == group_order(F));
  REQUIRE(og.g.edge_count() == 448 * 7 / 2);
  REQUIRE(std::is_sorted(og.points.begin(), og.points.end()));
  for (std::uint32_t pi : og.points)
    REQUIRE(orbit_classify(F, point_from_index(F, pi)) == Orbit::o5);
  std::uint64_t mapped = 0;
  for (std::uint64_t pi = 0; pi < point_count(F); ++pi)
    if (og.vertex_of[pi] >= 0) {
      REQUIRE(og.points[(std::size_t)og.vertex_of[pi]] == pi);
      ++mapped;
    }
  REQUIRE(mapped == og.points.size());
  for (std::uint64_t v = 0; v < og.g.order; ++v) REQUIRE(og.g.degree(v) == F.q - 1u);
}

TEST_CASE("base connection coefficient a(r)") {
  for (int m : {3, 5}) {
    const FieldCtx F(m);
    REQUIRE(a_of(F, 1) == 0);
    for (Felt r = 1; r < F.q; ++r) {
      const Felt a = a_of(F, r);
      REQUIRE(F.pow(a, (long long)F.omega + 2) ==
              (Felt)(1 ^ F.pow(r, (long long)F.omega + 2)));
    }
  }
  const FieldCtx F(3);
  CHECK(a_of(F, 2) == 7);
  CHECK_THROWS_AS(a_of(F, 0), std::invalid_argument);
}

TEST_CASE("base connection set is inverse-closed with matched parameters") {
  for (int m : {3, 5}) {
    const FieldCtx F(m);
    const auto S = orbit_gens(F);
    REQUIRE(S.size() == F.q - 1u);
    for (const GroupElem& w : S) {
      REQUIRE(w.b == 1);
      REQUIRE(w.a == a_of(F, w.r));
      const GroupElem wi = g_inv(F, w);
      REQUIRE(wi == GroupElem{F.inv(w.r), a_of(F, F.inv(w.r)), 1});
    }
  }
  const FieldCtx F(3);
  const auto S = orbit_gens(F);
  CHECK(std::count(S.begin(), S.end(), GroupElem{1, 0, 1}) == 1);
  CHECK(std::count(S.begin(), S.end(), GroupElem{2, 7, 1}) == 1);
}

TEST_CASE("generator bundle, q = 8") {
  const FieldCtx F(3);
  const GenSetBundle b = gen_bundle(F, cyclic_cover_exact(7));
  REQUIRE(b.base.size() == 7);
  REQUIRE(b.stab1.size() == 4);
  REQUIRE(b.stab2.size() == 4);
  REQUIRE(b.link == std::vector<GroupElem>{GroupElem{1, 1, 0}, GroupElem{1, 1, 1}});
  REQUIRE(b.extended.size() == 17); // the four parts never overlap
  REQUIRE(b.degree() == 17);
  std::set<std::uint64_t> ids;
  for (const GroupElem& g : b.extended) {
    ids.insert(gidx(F, g));
    REQUIRE(!(g == g_identity()));
  }
  REQUIRE(ids.size() == 17);
  for (std::size_t i = 1; i < b.extended.size(); ++i)
    REQUIRE(gidx(F, b.extended[i - 1]) < gidx(F, b.extended[i]));
  // stabilizer parts evaluate the one-parameter families on the realized cover
  const auto y = realize_in_fstar(F, b.cover);
  for (std::size_t i = 0; i < y.size(); ++i) {
    REQUIRE(b.stab1[i] == stab_elem(F, StabKind::h1, y[i]));
    REQUIRE(b.stab2[i] == stab_elem(F, StabKind::h2, y[i]));
  }
  CHECK_THROWS_AS(gen_bundle(FieldCtx(5), cyclic_cover_exact(7)), std::invalid_argument);
}

TEST_CASE("cayley adjacency validates its connection set") {
  const FieldCtx F(3);
  CHECK_THROWS_AS(CayleyGraph(F, {}, AdjMode::explicit_csr), std::invalid_argument);
  CHECK_THROWS_AS(CayleyGraph(F, {g_identity()}, AdjMode::explicit_csr),
                  std::invalid_argument);
  CHECK_THROWS_AS(CayleyGraph(F, {GroupElem{1, 1, 1}, GroupElem{1, 1, 1}},
                              AdjMode::explicit_csr),
                  std::invalid_argument);
  CHECK_THROWS_AS(CayleyGraph(F, {GroupElem{1, 1, 1}}, AdjMode::explicit_csr),
                  std::invalid_argument); // inverse (1,1,0) missing
  CHECK_NOTHROW(CayleyGraph(F, {GroupElem{1, 1, 1}, GroupElem{1, 1, 0}},
                            AdjMode::explicit_csr));
}

TEST_CASE("explicit and implicit adjacency agree") {
  const FieldCtx F(3);
  const GenSetBundle b = gen_bundle(F, cyclic_cover_exact(7));
  const CayleyGraph ex(F, b.extended, AdjMode::explicit_csr);
  const CayleyGraph im(F, b.extended, AdjMode::implicit_gen);
  REQUIRE(ex.order() == 448);
  REQUIRE(im.order() == 448);
  REQUIRE(ex.mode() == AdjMode::explicit_csr);
  CHECK_THROWS_AS(im.csr(), std::logic_error);
  std::vector<std::uint64_t> nb;
  for (std::uint64_t v = 0; v < ex.order(); ++v) {
    REQUIRE(ex.csr().degree(v) == b.extended.size());
    im.neighbors(v, nb);
    std::sort(nb.begin(), nb.end());
    for (std::size_t k = 0; k < nb.size(); ++k)
      REQUIRE(nb[k] == ex.csr().row(v)[k]);
  }
}

TEST_CASE("implicit neighbors are left translates by the generators") {
  const FieldCtx F(5);
  const auto S = orbit_gens(F);
  const CayleyGraph cg(F, S, AdjMode::implicit_gen);
  std::vector<std::uint64_t> nb;
  std::mt19937_64 rng(37);
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t v = rng() % cg.order();
    const GroupElem g = gelem_from_gidx(F, v);
    cg.neighbors(v, nb);
    REQUIRE(nb.size() == S.size());
    for (std::size_t k = 0; k < S.size(); ++k)
      REQUIRE(nb[k] == gidx(F, g_mul(F, S[k], g)));
  }
}

TEST_CASE("cayley graph of the base set is the open-orbit subgraph") {
  const FieldCtx F(3);
  const OrbitGraph og = build_orbit_graph(F);
  const CayleyGraph cg(F, orbit_gens(F), AdjMode::explicit_csr);
  REQUIRE(cg.order() == og.g.order);
  std::vector<std::uint64_t> nb;
  for (std::uint64_t v = 0; v < cg.order(); ++v) {
    const GroupElem g = gelem_from_gidx(F, v);
    const std::int64_t ov = og.vertex_of[point_index(F, point_of(F, g))];
    REQUIRE(ov >= 0);
    cg.neighbors(v, nb);
    std::vector<std::uint32_t> mapped;
    for (std::uint64_t w : nb) {
      const ProjPoint p = point_of(F, gelem_from_gidx(F, w));
      mapped.push_back((std::uint32_t)og.vertex_of[point_index(F, p)]);
    }
    std::sort(mapped.begin(), mapped.end());
    const auto* row = og.g.row((std::uint64_t)ov);
    REQUIRE(mapped == std::vector<std::uint32_t>(row, row + og.g.degree((std::uint64_t)ov)));
  }
}

TEST_CASE("bundle shape is independent of the field representation") {
  const FieldCtx Fa(3, 0xB), Fb(3, 0xD);
  const GenSetBundle ba = gen_bundle(Fa, cyclic_cover_exact(7));
  const GenSetBundle bb = gen_bundle(Fb, cyclic_cover_exact(7));
  REQUIRE(ba.extended.size() == bb.extended.size());
  REQUIRE(ba.stab1.size() == bb.stab1.size());
  const PolarityGraph pa = build_polarity_graph(Fa), pb = build_polarity_graph(Fb);
  REQUIRE(pa.g.order == pb.g.order);
  REQUIRE(pa.g.edge_count() == pb.g.edge_count());
  std::multiset<std::uint64_t> da, db;
  for (std::uint64_t v = 0; v < pa.g.order; ++v) {
    da.insert(pa.g.degree(v));
    db.insert(pb.g.degree(v));
  }
  REQUIRE(da == db);
}

TEST_CASE("large-field mode gates") {
  const FieldCtx F(7);
  const GenSetBundle b = gen_bundle(F, cyclic_cover_bounded(127));
  CHECK_THROWS_AS(CayleyGraph(F, b.extended, AdjMode::explicit_csr),
                  std::invalid_argument);
  const CayleyGraph cg(F, b.extended, AdjMode::implicit_gen);
  REQUIRE(cg.order() == 128ull * 128 * 127);
  std::vector<std::uint64_t> nb;
  cg.neighbors(0, nb);
  REQUIRE(nb.size() == b.extended.size());
}
