#pragma once
// JSON and flat-file serialization.  All JSON payloads carry schema_version.
// Flat files are byte-stable for a fixed field context: vertices ascend by
// index, edges ascend lexicographically with i < j.

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "moore3/analysis.hpp"
#include "moore3/cyclic_cover.hpp"
#include "moore3/graphs.hpp"

namespace moore3 {

inline constexpr int kSchemaVersion = 1;

inline std::string hex_str(std::uint64_t v) {
  if (v == 0) return "0";
  static const char* digits = "0123456789abcdef";
  std::string s;
  while (v) {
    s.insert(s.begin(), digits[v & 0xf]);
    v >>= 4;
  }
  return s;
}

inline std::uint64_t parse_hex(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty hex literal");
  std::uint64_t v = 0;
  for (char c : s) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw std::invalid_argument("bad hex digit");
    v = v * 16 + (std::uint64_t)d;
  }
  return v;
}

inline nlohmann::json gelem_json(const GroupElem& g) {
  return nlohmann::json{{"r", hex_str(g.r)}, {"a", hex_str(g.a)}, {"b", hex_str(g.b)}};
}

inline nlohmann::json cover_json(const CyclicCover& cv) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["m"] = cv.m;
  j["c"] = cv.c();
  j["exact"] = cv.exact;
  j["x"] = cv.x; // sorted residues
  j["two_sqrt_bound"] = 2 * isqrt_ceil(cv.m);
  j["four_sqrt_bound"] = 4 * isqrt_ceil(cv.m);
  j["meets_two_sqrt"] = cv.meets_2sqrt();
  return j;
}

inline const char* diam_method_name(DiamMethod m) {
  switch (m) {
    case DiamMethod::full: return "full";
    case DiamMethod::orbit_reps: return "orbit_reps";
    case DiamMethod::identity_only: return "identity_only";
    case DiamMethod::spot_checked: return "spot_checked";
  }
  return "?";
}

inline nlohmann::json cert_json(const DiameterCert& c) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["graph"] = c.graph_id;
  j["method"] = diam_method_name(c.method);
  j["order"] = c.order;
  j["connected"] = c.connected;
  j["diameter"] = c.diameter;
  j["level_counts"] = c.level_counts;
  j["seconds"] = c.seconds;
  nlohmann::json src = nlohmann::json::array();
  for (const EccEntry& e : c.sources)
    src.push_back({{"source", e.source}, {"ecc", e.ecc}, {"farthest", e.farthest}});
  // cap the per-source dump for full sweeps of big graphs
  if (src.size() > 64) {
    nlohmann::json head = nlohmann::json::array();
    for (std::size_t i = 0; i < 64; ++i) head.push_back(src[i]);
    j["sources_truncated"] = src.size();
    src = std::move(head);
  }
  j["sources"] = src;
  return j;
}

inline nlohmann::json moore_row_json(const MooreRow& r) {
  return nlohmann::json{{"q", r.q},         {"degree", r.degree},
                        {"order", r.order}, {"moore3", r.moore3},
                        {"gap", r.gap},     {"ratio", r.ratio},
                        {"normalized_gap", r.normalized_gap}};
}

inline nlohmann::json moore_table_json(const std::vector<MooreRow>& rows) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["rows"] = nlohmann::json::array();
  for (const MooreRow& r : rows) j["rows"].push_back(moore_row_json(r));
  return j;
}

// ---- flat files -----------------------------------------------------------------

inline void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << body;
  if (!out) throw std::runtime_error("short write to " + path);
}

// header "# moore3 q=<q> order=<N> degree=<d>", then one "i j" per edge,
// i < j, rows ascending
inline std::string edge_list_text(const FieldCtx& F, const Csr& g, std::uint64_t degree) {
  std::string s = "# moore3 q=" + std::to_string(F.q) + " order=" + std::to_string(g.order) +
                  " degree=" + std::to_string(degree) + "\n";
  for (std::uint64_t v = 0; v < g.order; ++v)
    for (std::uint64_t k = g.offsets[v]; k < g.offsets[v + 1]; ++k)
      if (v < g.nbrs[k])
        s += std::to_string(v) + " " + std::to_string(g.nbrs[k]) + "\n";
  return s;
}

// one "<index> <r> <a> <b>" line per group element, hex coordinates
inline std::string cayley_vertex_map_text(const FieldCtx& F) {
  std::string s;
  for (std::uint64_t i = 0; i < group_order(F); ++i) {
    const GroupElem g = gelem_from_gidx(F, i);
    s += std::to_string(i) + " " + hex_str(g.r) + " " + hex_str(g.a) + " " +
         hex_str(g.b) + "\n";
  }
  return s;
}

// one "<index> <x0> <x1> <x2> <x3>" line per point, hex coordinates
inline std::string point_vertex_map_text(const FieldCtx& F,
                                         const std::vector<std::uint32_t>& points) {
  std::string s;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const ProjPoint p = point_from_index(F, points[i]);
    s += std::to_string(i);
    for (int k = 0; k < 4; ++k) s += " " + hex_str(p.x[k]);
    s += "\n";
  }
  return s;
}

// one "<r> <a> <b>" line per generator, hex, in stored order
inline std::string generator_list_text(const std::vector<GroupElem>& gens) {
  std::string s;
  for (const GroupElem& g : gens)
    s += hex_str(g.r) + " " + hex_str(g.a) + " " + hex_str(g.b) + "\n";
  return s;
}

} // namespace moore3
