#pragma once
// Level-synchronous BFS, diameter certification, and Moore-bound gap rows.
//
// All traversals are deterministic: the frontier is an append-only queue
// and neighbors are visited in generator (or CSR) order, so witnesses and
// level counts reproduce exactly across runs.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "moore3/graphs.hpp"

namespace moore3 {

struct BfsResult {
  std::uint64_t source = 0;
  std::uint64_t reached = 0;
  std::vector<std::uint64_t> level_counts; // level_counts[d] = #vertices at distance d
  std::uint64_t farthest = 0;              // first vertex found in the last level
  int ecc() const { return (int)level_counts.size() - 1; }
  bool covers(std::uint64_t order) const { return reached == order; }
};

// NbrFn: void(uint64_t v, std::vector<uint64_t>& out)
template <class NbrFn>
BfsResult bfs_generic(std::uint64_t order, std::uint64_t source, NbrFn&& nbrs) {
  BfsResult res;
  res.source = source;
  std::vector<char> visited(order, 0);
  std::vector<std::uint32_t> queue;
  queue.reserve(order);
  visited[source] = 1;
  queue.push_back((std::uint32_t)source);
  std::size_t level_begin = 0;
  std::vector<std::uint64_t> scratch;
  while (level_begin < queue.size()) {
    const std::size_t level_end = queue.size();
    res.level_counts.push_back(level_end - level_begin);
    res.farthest = queue[level_begin];
    for (std::size_t i = level_begin; i < level_end; ++i) {
      nbrs(queue[i], scratch);
      for (std::uint64_t w : scratch)
        if (!visited[w]) {
          visited[w] = 1;
          queue.push_back((std::uint32_t)w);
        }
    }
    level_begin = level_end;
  }
  res.reached = queue.size();
  return res;
}

inline BfsResult bfs_csr(const Csr& g, std::uint64_t source) {
  return bfs_generic(g.order, source, [&](std::uint64_t v, std::vector<std::uint64_t>& out) {
    out.assign(g.row(v), g.row(v) + g.degree(v));
  });
}

inline BfsResult bfs_cayley(const CayleyGraph& g, std::uint64_t source) {
  if (g.mode() == AdjMode::explicit_csr) return bfs_csr(g.csr(), source);
  return bfs_generic(g.order(), source,
                     [&](std::uint64_t v, std::vector<std::uint64_t>& out) { g.neighbors(v, out); });
}

// ---- diameter certificates -----------------------------------------------------

enum class DiamMethod { full, orbit_reps, identity_only, spot_checked };

struct EccEntry {
  std::uint64_t source = 0;
  int ecc = 0;
  std::uint64_t farthest = 0;
};

struct DiameterCert {
  std::string graph_id;
  DiamMethod method = DiamMethod::full;
  std::uint64_t order = 0;
  bool connected = false;
  int diameter = -1; // max eccentricity among certified sources
  std::vector<EccEntry> sources;
  std::vector<std::uint64_t> level_counts; // from the first source
  double seconds = 0.0;
};

template <class BfsFn>
DiameterCert certify_diameter(std::string graph_id, std::uint64_t order,
                              const std::vector<std::uint64_t>& sources,
                              DiamMethod method, BfsFn&& run) {
  const auto t0 = std::chrono::steady_clock::now();
  DiameterCert cert;
  cert.graph_id = std::move(graph_id);
  cert.method = method;
  cert.order = order;
  cert.connected = true;
  for (std::uint64_t s : sources) {
    const BfsResult r = run(s);
    if (!r.covers(order)) cert.connected = false;
    cert.sources.push_back(EccEntry{s, r.ecc(), r.farthest});
    if (r.ecc() > cert.diameter) cert.diameter = r.ecc();
    if (cert.level_counts.empty()) cert.level_counts = r.level_counts;
  }
  cert.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return cert;
}

// vertex-transitive graphs: one source certifies the diameter; extra sources
// act as consistency spot checks
inline DiameterCert diameter_cayley(const CayleyGraph& g,
                                    const std::vector<std::uint64_t>& extra_sources = {},
                                    std::string graph_id = "cayley") {
  std::vector<std::uint64_t> sources{gidx(g.field(), g_identity())};
  sources.insert(sources.end(), extra_sources.begin(), extra_sources.end());
  return certify_diameter(std::move(graph_id), g.order(), sources,
                          extra_sources.empty() ? DiamMethod::identity_only
                                                : DiamMethod::spot_checked,
                          [&](std::uint64_t s) { return bfs_cayley(g, s); });
}

// the polarity graph is not vertex-transitive, but the group acts with five
// orbits and the polarity is equivariant, so five representatives certify
// the diameter; full=true sweeps every vertex instead
inline DiameterCert diameter_polarity_graph(const FieldCtx& F, const PolarityGraph& pg,
                                            bool full = false) {
  std::vector<std::uint64_t> sources;
  if (full) {
    for (std::uint64_t v = 0; v < pg.g.order; ++v) sources.push_back(v);
  } else {
    for (Orbit o : {Orbit::o1, Orbit::o2, Orbit::o3, Orbit::o4, Orbit::o5})
      sources.push_back(point_index(F, orbit_rep(F, o)));
  }
  return certify_diameter("polarity", pg.g.order, sources,
                          full ? DiamMethod::full : DiamMethod::orbit_reps,
                          [&](std::uint64_t s) { return bfs_csr(pg.g, s); });
}

// ---- Moore bound ----------------------------------------------------------------

inline std::uint64_t moore_bound3(std::uint64_t d) {
  return 1 + d + d * (d - 1) + d * (d - 1) * (d - 1);
}

struct MooreRow {
  std::uint32_t q = 0;
  std::uint64_t degree = 0;
  std::uint64_t order = 0;
  std::uint64_t moore3 = 0;
  std::uint64_t gap = 0;        // moore3 - order
  double ratio = 0.0;           // order / moore3
  double normalized_gap = 0.0;  // (d^3 - order) / d^2.5
};

inline MooreRow moore_row(std::uint32_t q, std::uint64_t degree, std::uint64_t order) {
  MooreRow r;
  r.q = q;
  r.degree = degree;
  r.order = order;
  r.moore3 = moore_bound3(degree);
  r.gap = r.moore3 - order;
  r.ratio = (double)order / (double)r.moore3;
  const double d = (double)degree;
  r.normalized_gap = (d * d * d - (double)order) / std::pow(d, 2.5);
  return r;
}

} // namespace moore3
