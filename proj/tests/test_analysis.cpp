#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <vector>

#include "moore3/analysis.hpp"

using namespace moore3;

namespace {

Csr path4() {
  std::vector<std::vector<std::uint32_t>> rows{{1}, {0, 2}, {1, 3}, {2}};
  return csr_from_rows(std::move(rows));
}

} // namespace

TEST_CASE("bfs level structure on a path") {
  const Csr g = path4();
  const BfsResult r0 = bfs_csr(g, 0);
  REQUIRE(r0.reached == 4);
  REQUIRE(r0.covers(g.order));
  REQUIRE(r0.level_counts == std::vector<std::uint64_t>{1, 1, 1, 1});
  REQUIRE(r0.ecc() == 3);
  REQUIRE(r0.farthest == 3);
  const BfsResult r1 = bfs_csr(g, 1);
  REQUIRE(r1.level_counts == std::vector<std::uint64_t>{1, 2, 1});
  REQUIRE(r1.ecc() == 2);
}

TEST_CASE("bfs on a six-cycle") {
  std::vector<std::vector<std::uint32_t>> rows(6);
  for (std::uint32_t v = 0; v < 6; ++v) rows[v] = {(v + 1) % 6, (v + 5) % 6};
  const BfsResult r = bfs_csr(csr_from_rows(std::move(rows)), 0);
  REQUIRE(r.level_counts == std::vector<std::uint64_t>{1, 2, 2, 1});
  REQUIRE(r.farthest == 3);
}

TEST_CASE("bfs flags a disconnected graph") {
  std::vector<std::vector<std::uint32_t>> rows{{1}, {0}, {3}, {2}};
  const Csr g = csr_from_rows(std::move(rows));
  const BfsResult r = bfs_csr(g, 0);
  REQUIRE(r.reached == 2);
  REQUIRE(!r.covers(g.order));
  const DiameterCert cert =
      certify_diameter("two-paths", g.order, {0, 2}, DiamMethod::spot_checked,
                       [&](std::uint64_t s) { return bfs_csr(g, s); });
  REQUIRE(!cert.connected);
}

TEST_CASE("polarity graph diameter, representatives vs full sweep") {
  const FieldCtx F(3);
  const PolarityGraph pg = build_polarity_graph(F);
  const DiameterCert by_reps = diameter_polarity_graph(F, pg, false);
  REQUIRE(by_reps.method == DiamMethod::orbit_reps);
  REQUIRE(by_reps.sources.size() == 5);
  REQUIRE(by_reps.connected);
  REQUIRE(by_reps.diameter == 3);
  const DiameterCert by_sweep = diameter_polarity_graph(F, pg, true);
  REQUIRE(by_sweep.method == DiamMethod::full);
  REQUIRE(by_sweep.sources.size() == pg.g.order);
  REQUIRE(by_sweep.diameter == 3); // the five orbit sources already saw the max
  for (const EccEntry& e : by_sweep.sources) REQUIRE(e.ecc <= 3);
  const std::uint64_t total = std::accumulate(by_reps.level_counts.begin(),
                                              by_reps.level_counts.end(), std::uint64_t{0});
  REQUIRE(total == pg.g.order);
}

TEST_CASE("extended connection set reaches everything in three steps, q = 8") {
  const FieldCtx F(3);
  const GenSetBundle b = gen_bundle(F, cyclic_cover_exact(7));
  const CayleyGraph cg(F, b.extended, AdjMode::explicit_csr);

  const DiameterCert one = diameter_cayley(cg);
  REQUIRE(one.method == DiamMethod::identity_only);
  REQUIRE(one.connected);
  REQUIRE(one.diameter == 3);
  REQUIRE(one.level_counts.size() == 4);
  REQUIRE(one.level_counts[0] == 1);
  REQUIRE(one.level_counts[1] == b.extended.size());

  const DiameterCert spot = diameter_cayley(cg, {5, 99, 447});
  REQUIRE(spot.method == DiamMethod::spot_checked);
  REQUIRE(spot.diameter == 3);
  for (const EccEntry& e : spot.sources) REQUIRE(e.ecc == 3); // vertex-transitive

  // full sweep: every source sees eccentricity exactly 3
  std::vector<std::uint64_t> all(cg.order());
  std::iota(all.begin(), all.end(), 0);
  const DiameterCert sweep =
      certify_diameter("cayley-ext", cg.order(), all, DiamMethod::full,
                       [&](std::uint64_t s) { return bfs_cayley(cg, s); });
  REQUIRE(sweep.connected);
  REQUIRE(sweep.diameter == 3);
  for (const EccEntry& e : sweep.sources) REQUIRE(e.ecc == 3);
}

TEST_CASE("base connection set alone does not reach distance three, q = 8") {
  const FieldCtx F(3);
  const CayleyGraph cg(F, orbit_gens(F), AdjMode::explicit_csr);
  const DiameterCert cert = diameter_cayley(cg);
  REQUIRE(cert.connected);
  REQUIRE(cert.diameter == 5); // the repair sets close this to 3
}

TEST_CASE("implicit traversal matches explicit, q = 8") {
  const FieldCtx F(3);
  const GenSetBundle b = gen_bundle(F, cyclic_cover_exact(7));
  const CayleyGraph ex(F, b.extended, AdjMode::explicit_csr);
  const CayleyGraph im(F, b.extended, AdjMode::implicit_gen);
  const BfsResult re = bfs_cayley(ex, 0), ri = bfs_cayley(im, 0);
  REQUIRE(re.level_counts == ri.level_counts);
  REQUIRE(re.reached == ri.reached);
}

TEST_CASE("moore bound values") {
  CHECK(moore_bound3(3) == 22);
  CHECK(moore_bound3(7) == 302);
  CHECK(moore_bound3(17) == 4642);
}

TEST_CASE("moore gap row") {
  const MooreRow r = moore_row(8, 17, 448);
  CHECK(r.moore3 == 4642);
  CHECK(r.gap == 4194);
  CHECK(r.ratio == Catch::Approx(448.0 / 4642.0));
  CHECK(r.normalized_gap == Catch::Approx((4913.0 - 448.0) / std::pow(17.0, 2.5)));
  CHECK(std::isfinite(r.normalized_gap));
}

TEST_CASE("density ratio grows with the field") {
  const FieldCtx F8(3), F32(5);
  const GenSetBundle b8 = gen_bundle(F8, cyclic_cover_exact(7));
  const GenSetBundle b32 = gen_bundle(F32, cyclic_cover_exact(31));
  const MooreRow r8 = moore_row(8, b8.degree(), group_order(F8));
  const MooreRow r32 = moore_row(32, b32.degree(), group_order(F32));
  REQUIRE(r8.ratio < r32.ratio);
}
