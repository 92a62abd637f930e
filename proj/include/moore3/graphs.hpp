#pragma once
// Graph constructions: the polarity graph on all points, the (q-1)-regular
// subgraph induced on the open orbit, and Cayley graphs of the matrix group
// with either explicit CSR adjacency or implicit neighbor generation.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "moore3/cyclic_cover.hpp"
#include "moore3/geometry.hpp"
#include "moore3/gf2m.hpp"
#include "moore3/group.hpp"
#include "moore3/polarity.hpp"

namespace moore3 {

struct Csr {
  std::uint64_t order = 0;
  std::vector<std::uint64_t> offsets; // size order + 1
  std::vector<std::uint32_t> nbrs;    // concatenated sorted adjacency rows

  std::uint64_t degree(std::uint64_t v) const { return offsets[v + 1] - offsets[v]; }
  const std::uint32_t* row(std::uint64_t v) const { return nbrs.data() + offsets[v]; }
  std::uint64_t edge_count() const { return nbrs.size() / 2; }
};

inline Csr csr_from_rows(std::vector<std::vector<std::uint32_t>>&& rows) {
  Csr g;
  g.order = rows.size();
  g.offsets.assign(g.order + 1, 0);
  std::uint64_t total = 0;
  for (std::size_t v = 0; v < rows.size(); ++v) {
    std::sort(rows[v].begin(), rows[v].end());
    g.offsets[v] = total;
    total += rows[v].size();
  }
  g.offsets[g.order] = total;
  g.nbrs.reserve(total);
  for (auto& r : rows) g.nbrs.insert(g.nbrs.end(), r.begin(), r.end());
  return g;
}

// ---- polarity graph: u ~ v iff u lies on the image line of v (loops cut) -----

struct PolarityGraph {
  Csr g; // vertex i is point_from_index(F, i)
};

inline PolarityGraph build_polarity_graph(const FieldCtx& F) {
  if (F.q > 32)
    throw std::invalid_argument("explicit polarity graph capped at q = 32; "
                                "use pol_neighbors for larger fields");
  const std::uint64_t n = point_count(F);
  std::vector<std::vector<std::uint32_t>> rows(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const ProjPoint v = point_from_index(F, (std::uint32_t)i);
    for (const ProjPoint& w : pol_neighbors(F, v))
      rows[i].push_back(point_index(F, w));
  }
  // adjacency is symmetric because the relation is a polarity; keep rows as
  // generated (tests confirm symmetry rather than forcing it here)
  return PolarityGraph{csr_from_rows(std::move(rows))};
}

// ---- induced subgraph on the open orbit ---------------------------------------

struct OrbitGraph {
  Csr g;                               // vertex j is points[j]
  std::vector<std::uint32_t> points;   // sorted point indices of the orbit
  std::vector<std::int64_t> vertex_of; // point index -> vertex or -1
};

inline OrbitGraph build_orbit_graph(const FieldCtx& F) {
  if (F.q > 32)
    throw std::invalid_argument("explicit orbit graph capped at q = 32");
  OrbitGraph og;
  const std::uint64_t n = point_count(F);
  og.vertex_of.assign(n, -1);
  for (std::uint64_t i = 0; i < n; ++i)
    if (orbit_classify(F, point_from_index(F, (std::uint32_t)i)) == Orbit::o5) {
      og.vertex_of[i] = (std::int64_t)og.points.size();
      og.points.push_back((std::uint32_t)i);
    }
  std::vector<std::vector<std::uint32_t>> rows(og.points.size());
  for (std::size_t j = 0; j < og.points.size(); ++j) {
    const ProjPoint v = point_from_index(F, og.points[j]);
    for (const ProjPoint& w : pol_neighbors(F, v)) {
      const std::int64_t t = og.vertex_of[point_index(F, w)];
      if (t >= 0) rows[j].push_back((std::uint32_t)t);
    }
  }
  og.g = csr_from_rows(std::move(rows));
  return og;
}

// ---- generator sets ------------------------------------------------------------

// a(r) with a(1) = 0: the unique solution of a^(omega+2) = 1 + r^(omega+2),
// so that (r, a(r), 1) moves the base point within distance 1
inline Felt a_of(const FieldCtx& F, Felt r) {
  if (r == 0 || r >= F.q) throw std::invalid_argument("r must lie in F*");
  if (r == 1) return 0;
  const Felt w = F.pow(r, (long long)F.omega + 2);
  return F.pow((Felt)(1 ^ w), 1 - (long long)(F.omega / 2));
}

// S = {(r, a(r), 1) : r in F*}; inverse-closed, identity-free, size q-1;
// the connection set that makes the orbit graph a Cayley graph
inline std::vector<GroupElem> orbit_gens(const FieldCtx& F) {
  std::vector<GroupElem> out;
  out.reserve(F.q - 1u);
  for (Felt r = 1; r < F.q; ++r) out.push_back(GroupElem{r, a_of(F, r), 1});
  return out;
}

struct GenSetBundle {
  std::vector<GroupElem> base;     // S, one generator per r in F*
  std::vector<GroupElem> stab1;    // h1 image of the cover, reaches into l(u1')
  std::vector<GroupElem> stab2;    // h2 image of the cover, reaches into l(u2')
  std::vector<GroupElem> link;     // {(1,1,1), (1,1,0)}, a mutually inverse pair
  std::vector<GroupElem> extended; // union of the above, dedup, sorted by index
  CyclicCover cover;

  std::uint32_t degree() const { return (std::uint32_t)extended.size(); }
};

inline GenSetBundle gen_bundle(const FieldCtx& F, const CyclicCover& cover) {
  if (cover.m != F.q - 1u)
    throw std::invalid_argument("cover modulus must equal q - 1");
  GenSetBundle b;
  b.cover = cover;
  b.base = orbit_gens(F);
  for (Felt y : realize_in_fstar(F, cover)) {
    b.stab1.push_back(stab_elem(F, StabKind::h1, y));
    b.stab2.push_back(stab_elem(F, StabKind::h2, y));
  }
  b.link = {GroupElem{1, 1, 1}, GroupElem{1, 1, 0}};
  {
    // close under inversion and drop duplicates (the pair is already closed;
    // recompute rather than assume)
    std::vector<GroupElem> closed = b.link;
    for (const GroupElem& g : b.link) closed.push_back(g_inv(F, g));
    std::sort(closed.begin(), closed.end(), [&](const GroupElem& x, const GroupElem& y) {
      return gidx(F, x) < gidx(F, y);
    });
    closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
    b.link = closed;
  }
  std::vector<GroupElem> all;
  for (const auto* part : {&b.base, &b.stab1, &b.stab2, &b.link})
    all.insert(all.end(), part->begin(), part->end());
  std::sort(all.begin(), all.end(), [&](const GroupElem& x, const GroupElem& y) {
    return gidx(F, x) < gidx(F, y);
  });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  b.extended = std::move(all);
  return b;
}

// ---- Cayley graphs --------------------------------------------------------------

enum class AdjMode { explicit_csr, implicit_gen };

class CayleyGraph {
public:
  CayleyGraph(const FieldCtx& F, std::vector<GroupElem> gens, AdjMode mode)
      : F_(&F), gens_(std::move(gens)), mode_(mode) {
    validate_gens();
    order_ = group_order(F);
    if (mode_ == AdjMode::explicit_csr) {
      if (F.q > 32)
        throw std::invalid_argument("explicit Cayley adjacency capped at q = 32; "
                                    "switch to implicit mode");
      std::vector<std::vector<std::uint32_t>> rows(order_);
      std::vector<std::uint64_t> nb;
      for (std::uint64_t v = 0; v < order_; ++v) {
        neighbors(v, nb);
        rows[v].assign(nb.begin(), nb.end());
      }
      csr_ = csr_from_rows(std::move(rows));
    } else if (order_ > (std::uint64_t{1} << 31)) {
      throw std::invalid_argument("implicit Cayley order exceeds traversal budget");
    }
  }

  const FieldCtx& field() const { return *F_; }
  const std::vector<GroupElem>& gens() const { return gens_; }
  std::uint64_t order() const { return order_; }
  AdjMode mode() const { return mode_; }
  const Csr& csr() const {
    if (mode_ != AdjMode::explicit_csr) throw std::logic_error("no CSR in implicit mode");
    return csr_;
  }

  // neighbor multiset {w * v : w in gens}; vertex ids are group indices
  void neighbors(std::uint64_t v, std::vector<std::uint64_t>& out) const {
    const FieldCtx& F = *F_;
    const GroupElem g = gelem_from_gidx(F, v);
    const Felt s = g.r, c = g.a, d = g.b;
    const Felt sw1 = F.mul(F.sigma(s), s);   // s^(omega+1)
    const Felt cs = F.mul(F.sigma(c), s);    // c^omega s, reused per generator
    out.clear();
    out.reserve(gens_.size());
    for (const GroupElem& w : gens_) {
      const Felt r2 = F.mul(w.r, s);
      const Felt a2 = F.mul(w.a, s) ^ c;
      const Felt b2 = F.mul(w.b, sw1) ^ d ^ F.mul(w.a, cs);
      out.push_back(((std::uint64_t)(r2 - 1) * F.q + a2) * F.q + b2);
    }
  }

private:
  void validate_gens() {
    if (gens_.empty()) throw std::invalid_argument("empty generator set");
    std::unordered_set<std::uint64_t> seen;
    for (const GroupElem& g : gens_) {
      g_validate(*F_, g);
      if (g == g_identity())
        throw std::invalid_argument("identity is not a valid generator");
      seen.insert(gidx(*F_, g));
    }
    if (seen.size() != gens_.size())
      throw std::invalid_argument("duplicate generators");
    for (const GroupElem& g : gens_)
      if (!seen.count(gidx(*F_, g_inv(*F_, g))))
        throw std::invalid_argument("generator set is not inverse-closed");
  }

  const FieldCtx* F_;
  std::vector<GroupElem> gens_;
  AdjMode mode_;
  std::uint64_t order_ = 0;
  Csr csr_;
};

inline CayleyGraph build_cayley(const FieldCtx& F, const std::vector<GroupElem>& gens,
                                AdjMode mode) {
  return CayleyGraph(F, gens, mode);
}

} // namespace moore3
