// moore3: build and verify Cayley graphs of diameter 3 whose order
// approaches the degree-diameter bound.
//
// Subcommands:
//   build   construct C(G,S*) for q = 2^(2n+1), certify diameter 3, export
//   verify  run a named verification suite for a given q
//   cm      minimum-size diameter-2 cover of Z_m (exact or bounded)
//   table   degree/order/Moore-bound gap table across a list of q
//   export  write one of the explicit graphs as an edge list
//
// Exit codes: 0 success, 1 verification/diameter failure, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "moore3/analysis.hpp"
#include "moore3/cyclic_cover.hpp"
#include "moore3/graphs.hpp"
#include "moore3/serialize.hpp"
#include "moore3/verify.hpp"

namespace {

using namespace moore3;

bool stretch_budget() {
  const char* b = std::getenv("MOORE3_BUDGET");
  return b && std::string(b) == "stretch";
}

int exponent_of(std::uint32_t q) {
  if (q < 8 || (q & (q - 1)) != 0) return -1;
  int m = 0;
  while ((q >> m) != 1) ++m;
  return m % 2 ? m : -1;
}

std::uint32_t resolve_q(std::uint32_t q, std::uint32_t n) {
  if ((q == 0) == (n == 0))
    throw CLI::ValidationError("pass exactly one of --q and --n");
  if (n) {
    if (n > 10) throw CLI::ValidationError("--n must be in [1, 10]");
    return 1u << (2 * n + 1);
  }
  if (exponent_of(q) < 0)
    throw CLI::ValidationError("--q must be 2^(2n+1) for n >= 1 (8, 32, 128, ...)");
  return q;
}

struct BuildArgs {
  std::uint32_t q = 0, n = 0;
  std::string out = "";
  std::string mode = "auto";  // explicit | implicit | auto
  std::string cover = "auto"; // exact | bounded | auto
};

CyclicCover pick_cover(std::uint32_t m_dim, const std::string& mode) {
  const bool exact = mode == "exact" || (mode == "auto" && m_dim <= 31);
  if (exact && m_dim > 31 && !stretch_budget())
    throw CLI::ValidationError("exact cover search for m > 31 needs MOORE3_BUDGET=stretch");
  return cyclic_cover_find(m_dim, exact);
}

int run_build(const BuildArgs& args) {
  const std::uint32_t q = resolve_q(args.q, args.n);
  if (q > 512) throw CLI::ValidationError("build supports q up to 512");
  if (q == 512 && !stretch_budget())
    throw CLI::ValidationError("q = 512 needs MOORE3_BUDGET=stretch");
  const bool explicit_mode =
      args.mode == "explicit" || (args.mode == "auto" && q <= 32);
  if (explicit_mode && q > 32)
    throw CLI::ValidationError("explicit adjacency supports q up to 32; use --mode implicit");

  const auto t0 = std::chrono::steady_clock::now();
  const FieldCtx F(exponent_of(q));
  const CyclicCover cover = pick_cover(q - 1, args.cover);
  const GenSetBundle bundle = gen_bundle(F, cover);
  std::cout << "q=" << q << " m=" << F.m << " red_poly=0x" << hex_str(F.red_poly)
            << " cover c=" << cover.c() << (cover.exact ? " (exact)" : " (bounded)")
            << " degree=" << bundle.degree() << "\n";

  const CayleyGraph graph(F, bundle.extended,
                          explicit_mode ? AdjMode::explicit_csr : AdjMode::implicit_gen);
  std::cout << "order=" << graph.order()
            << " mode=" << (explicit_mode ? "explicit" : "implicit") << ", running BFS...\n";
  const DiameterCert cert = diameter_cayley(graph, {}, "cayley_star");
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const std::string dir = args.out.empty() ? ("moore3_q" + std::to_string(q)) : args.out;
  std::filesystem::create_directories(dir);
  write_file(dir + "/generators.txt", generator_list_text(bundle.extended));
  if (explicit_mode)
    write_file(dir + "/edges.txt", edge_list_text(F, graph.csr(), bundle.degree()));
  if (graph.order() <= (1u << 22))
    write_file(dir + "/vertex_map.txt", cayley_vertex_map_text(F));

  nlohmann::json meta;
  meta["schema_version"] = kSchemaVersion;
  meta["q"] = q;
  meta["n"] = (F.m - 1) / 2;
  meta["m"] = F.m;
  meta["red_poly"] = hex_str(F.red_poly);
  meta["mode"] = explicit_mode ? "explicit" : "implicit";
  meta["order"] = graph.order();
  meta["achieved_degree"] = bundle.degree();
  meta["c_achieved"] = cover.c();
  meta["cover_exact"] = cover.exact;
  meta["diameter"] = cert.diameter;
  meta["connected"] = cert.connected;
  meta["runtime_seconds"] = seconds;
  write_file(dir + "/metadata.json", meta.dump(2) + "\n");
  write_file(dir + "/certificate.json", cert_json(cert).dump(2) + "\n");

  const bool ok = cert.connected && cert.diameter == 3;
  std::cout << "diameter=" << cert.diameter << " connected=" << (cert.connected ? "yes" : "no")
            << " runtime=" << seconds << "s -> " << dir << "\n";
  if (!ok) std::cerr << "FAIL: expected a connected graph of diameter 3\n" << cert_json(cert).dump(2) << "\n";
  return ok ? 0 : 1;
}

int run_verify(std::uint32_t q_raw, std::uint32_t n_raw, const std::string& suite,
               std::uint64_t seed, const std::string& json_path) {
  const std::uint32_t q = resolve_q(q_raw, n_raw);
  if (q > 128) throw CLI::ValidationError("verify supports q in {8, 32, 128}");
  const FieldCtx F(exponent_of(q));
  std::vector<Report> reports;
  if (suite == "all") reports = verify_all(F, seed);
  else if (suite == "field") reports = {verify_field(F, seed)};
  else if (suite == "geometry") reports = {verify_geometry(F, seed)};
  else if (suite == "polarity") reports = {verify_polarity(F, seed)};
  else if (suite == "group") reports = {verify_group(F, seed)};
  else if (suite == "table1") reports = {verify_table1(F)};
  else if (suite == "stabilizers") reports = {verify_stabilizers(F)};
  else throw CLI::ValidationError("unknown suite: " + suite);

  std::uint64_t failures = 0, checks = 0;
  nlohmann::json jr = nlohmann::json::array();
  for (const Report& rep : reports) {
    for (const Check& c : rep.checks) {
      ++checks;
      if (!c.pass) ++failures;
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << rep.suite << ": " << c.name
                << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
      jr.push_back({{"suite", rep.suite}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
  }
  std::cout << "verify: q=" << q << " suite=" << suite << " checks=" << checks
            << " failures=" << failures << "\n";
  if (!json_path.empty()) {
    nlohmann::json out;
    out["schema_version"] = kSchemaVersion;
    out["q"] = q;
    out["suite"] = suite;
    out["seed"] = seed;
    out["checks"] = jr;
    out["failures"] = failures;
    write_file(json_path, out.dump(2) + "\n");
  }
  return failures == 0 ? 0 : 1;
}

int run_cm(std::uint32_t m_dim, bool exact_flag, bool bounded_flag) {
  if (m_dim < 3) throw CLI::ValidationError("--m must be at least 3");
  if (m_dim > 65536) throw CLI::ValidationError("cover constructions capped at m = 65536");
  if (exact_flag && bounded_flag)
    throw CLI::ValidationError("--exact and --bounded are mutually exclusive");
  bool exact = exact_flag || (!bounded_flag && m_dim <= 31);
  if (exact && m_dim > 512)
    throw CLI::ValidationError("exact cover search supports m up to 512");
  if (exact && m_dim > 31 && !stretch_budget())
    throw CLI::ValidationError("exact cover search for m > 31 needs MOORE3_BUDGET=stretch");
  const CyclicCover cv = cyclic_cover_find(m_dim, exact);
  if (!cover_ok(m_dim, cv.x) || !inverse_closed(m_dim, cv.x)) {
    std::cerr << "FAIL: produced set is not a valid cover\n";
    return 1;
  }
  std::cout << cover_json(cv).dump(2) << "\n";
  return 0;
}

int run_table(std::vector<std::uint32_t> qs, const std::string& json_path) {
  if (qs.empty()) qs = {8, 32, 128};
  std::vector<MooreRow> rows;
  for (std::uint32_t q : qs) {
    if (exponent_of(q) < 0)
      throw CLI::ValidationError("table: q must be 2^(2n+1), got " + std::to_string(q));
    if (q > 512) throw CLI::ValidationError("table supports q up to 512");
    const FieldCtx F(exponent_of(q));
    const CyclicCover cover = pick_cover(q - 1, "auto");
    const GenSetBundle bundle = gen_bundle(F, cover);
    rows.push_back(moore_row(q, bundle.degree(), group_order(F)));
  }
  std::printf("%6s %8s %12s %14s %10s %10s\n", "q", "degree", "order", "moore3", "ratio",
              "norm_gap");
  for (const MooreRow& r : rows)
    std::printf("%6u %8llu %12llu %14llu %10.6f %10.4f\n", r.q,
                (unsigned long long)r.degree, (unsigned long long)r.order,
                (unsigned long long)r.moore3, r.ratio, r.normalized_gap);
  if (!json_path.empty()) write_file(json_path, moore_table_json(rows).dump(2) + "\n");
  return 0;
}

int run_export(std::uint32_t q_raw, std::uint32_t n_raw, const std::string& which,
               const std::string& out) {
  const std::uint32_t q = resolve_q(q_raw, n_raw);
  if (q > 32) throw CLI::ValidationError("export writes explicit graphs only (q <= 32)");
  const FieldCtx F(exponent_of(q));
  std::filesystem::create_directories(out);
  if (which == "polarity") {
    const PolarityGraph pg = build_polarity_graph(F);
    std::uint64_t dmax = 0;
    for (std::uint64_t v = 0; v < pg.g.order; ++v) dmax = std::max(dmax, pg.g.degree(v));
    write_file(out + "/edges.txt", edge_list_text(F, pg.g, dmax));
    std::vector<std::uint32_t> ids(pg.g.order);
    for (std::uint32_t i = 0; i < pg.g.order; ++i) ids[i] = i;
    write_file(out + "/vertex_map.txt", point_vertex_map_text(F, ids));
  } else if (which == "orbit") {
    const OrbitGraph og = build_orbit_graph(F);
    write_file(out + "/edges.txt", edge_list_text(F, og.g, F.q - 1));
    write_file(out + "/vertex_map.txt", point_vertex_map_text(F, og.points));
  } else if (which == "cayley" || which == "cayley-star") {
    std::vector<GroupElem> gens;
    if (which == "cayley") {
      gens = orbit_gens(F);
    } else {
      gens = gen_bundle(F, pick_cover(q - 1, "auto")).extended;
    }
    const CayleyGraph g(F, gens, AdjMode::explicit_csr);
    write_file(out + "/edges.txt", edge_list_text(F, g.csr(), gens.size()));
    write_file(out + "/vertex_map.txt", cayley_vertex_map_text(F));
    write_file(out + "/generators.txt", generator_list_text(gens));
  } else {
    throw CLI::ValidationError("unknown graph: " + which);
  }
  std::cout << "wrote " << which << " for q=" << q << " to " << out << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley graphs of diameter 3 near the degree-diameter bound"};
  app.require_subcommand(1);

  BuildArgs bargs;
  CLI::App* build = app.add_subcommand("build", "construct and certify C(G,S*)");
  build->add_option("--q", bargs.q, "field size 2^(2n+1)");
  build->add_option("--n", bargs.n, "exponent parameter (q = 2^(2n+1))");
  build->add_option("--out", bargs.out, "output directory (default moore3_q<q>)");
  build->add_option("--mode", bargs.mode, "explicit | implicit | auto")
      ->check(CLI::IsMember({"explicit", "implicit", "auto"}));
  build->add_option("--cover", bargs.cover, "exact | bounded | auto")
      ->check(CLI::IsMember({"exact", "bounded", "auto"}));

  std::uint32_t vq = 0, vn = 0;
  std::string suite = "all", vjson;
  std::uint64_t seed = 0;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--q", vq, "field size");
  verify->add_option("--n", vn, "exponent parameter");
  verify->add_option("--suite", suite,
                     "field | geometry | polarity | group | table1 | stabilizers | all");
  verify->add_option("--seed", seed, "seed for sampled checks (default 0)");
  verify->add_option("--json", vjson, "write the report as JSON to this path");

  std::uint32_t cm_m = 0;
  bool cm_exact = false, cm_bounded = false;
  CLI::App* cm = app.add_subcommand("cm", "diameter-2 cover of Z_m");
  cm->add_option("--m", cm_m, "modulus")->required();
  cm->add_flag("--exact", cm_exact, "certified minimum (default for m <= 31)");
  cm->add_flag("--bounded", cm_bounded, "pruned 4*ceil(sqrt(m)) construction");

  std::vector<std::uint32_t> tqs;
  std::string tjson;
  CLI::App* table = app.add_subcommand("table", "Moore-bound gap table");
  table->add_option("--q", tqs, "list of field sizes (default 8 32 128)");
  table->add_option("--json", tjson, "write the table as JSON to this path");

  std::uint32_t eq = 0, en = 0;
  std::string egraph = "cayley-star", eout = "export";
  CLI::App* exp = app.add_subcommand("export", "write an explicit graph");
  exp->add_option("--q", eq, "field size");
  exp->add_option("--n", en, "exponent parameter");
  exp->add_option("--graph", egraph, "polarity | orbit | cayley | cayley-star")
      ->check(CLI::IsMember({"polarity", "orbit", "cayley", "cayley-star"}));
  exp->add_option("--out", eout, "output directory");

  try {
    app.parse(argc, argv);
    if (build->parsed()) return run_build(bargs);
    if (verify->parsed()) return run_verify(vq, vn, suite, seed, vjson);
    if (cm->parsed()) return run_cm(cm_m, cm_exact, cm_bounded);
    if (table->parsed()) return run_table(tqs, tjson);
    if (exp->parsed()) return run_export(eq, en, egraph, eout);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
