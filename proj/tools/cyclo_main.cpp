#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "cyclo/catalog.hpp"
#include "cyclo/enumerate.hpp"
#include "cyclo/io.hpp"
#include "cyclo/roots.hpp"

using namespace cyclo;
using nlohmann::json;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

RingId parse_ring(const std::string& s) {
  auto r = ring_from_name(s);
  if (!r) throw CLI::ValidationError("--ring", "unknown ring: " + s);
  return *r;
}

void log_level(const EnumerationLevel& lvl) {
  int integral = 0;
  for (const auto& m : lvl.members) integral += m.integral;
  std::fprintf(stderr, "[%s] level %d: %zu classes (%d integral)\n",
               ring_name(lvl.ring), lvl.n, lvl.members.size(), integral);
}

void write_output(const json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write to " + out);
  f << j.dump(2) << '\n';
}

int cmd_enumerate(const std::string& ring_s, int max_n, const std::string& set,
                  const std::string& out) {
  RingId ring = parse_ring(ring_s);
  if (set != "sprime" && set != "s")
    throw CLI::ValidationError("--set", "must be sprime or s");
  auto levels = enumerate_s_prime(ring, max_n, log_level);
  write_output(levels_to_json(levels, set == "s"), out);
  return 0;
}

int cmd_table1(bool as_json, const std::string& out) {
  auto rows = table1();
  if (as_json) {
    json j = json::array();
    for (const auto& r : rows)
      j.push_back({{"n", r.n},
                   {"total", r.total},
                   {"zphi", r.zphi},
                   {"zsqrt2", r.zsqrt2},
                   {"zsqrt3", r.zsqrt3}});
    write_output(j, out);
    return 0;
  }
  std::printf("non-cyclotomic classes of S'_n (spectra in [-2,2], "
              "non-integral char poly), up to equivalence\n");
  std::printf("%3s | %5s | %5s | %6s | %6s\n", "n", "total", "Z[phi]",
              "Z[rt2]", "Z[rt3]");
  for (const auto& r : rows)
    std::printf("%3d | %5d | %6d | %6d | %6d\n", r.n, r.total, r.zphi,
                r.zsqrt2, r.zsqrt3);
  return 0;
}

int cmd_verify_catalog(int max_k) {
  CatalogReport report = verify_catalog(max_k);
  int failures = 0;
  for (const auto& c : report.checks) {
    if (!c.pass) ++failures;
    std::printf("%-8s %-10s %s\n", c.pass ? "ok" : "FAIL", c.graph.c_str(),
                c.check.c_str());
  }
  std::printf("%zu checks, %d failures\n", report.checks.size(), failures);
  return failures == 0 ? 0 : kExitVerifyFailure;
}

int cmd_check(const std::string& file) {
  RGraph g = load_graph_file(file);
  CharPoly p = char_poly(g.matrix());
  std::printf("n: %d\n", g.n());
  std::printf("ring: %s (smallest: %s)\n", ring_name(g.ring()),
              ring_name(g.matrix().minimal_ring()));
  std::printf("connected: %s\n", g.connected() ? "yes" : "no");
  std::printf("degrees <= 4 (all conjugates): %s\n",
              degree_bound_ok(g.matrix()) ? "yes" : "no");
  std::string poly;
  for (int k = p.degree(); k >= 0; --k) {
    if (p.c[k].is_zero()) continue;
    if (!poly.empty()) poly += " + ";
    poly += "(" + p.c[k].str() + ")x^" + std::to_string(k);
  }
  std::printf("char poly: %s\n", poly.c_str());
  std::printf("integral char poly: %s\n", is_integral(p) ? "yes" : "no");
  bool sp = in_s_prime(g.matrix());
  std::printf("in S': %s; in S: %s\n", sp ? "yes" : "no",
              in_s(g.matrix()) ? "yes" : "no");
  try {
    if (auto spec = match_family(g))
      std::printf("catalog match: %s\n", spec->str().c_str());
  } catch (const std::exception&) {
    // graphs outside the catalog encoding limits simply go unmatched
  }
  return 0;
}

int cmd_canon(const std::string& file, const std::string& out) {
  RGraph g = load_graph_file(file);
  CanonicalKey key = canonical_key(g);
  SymMatrix rep = key_to_matrix(key, g.ring());
  json j;
  j["key"] = key_to_hex(key);
  j["representative"] = graph_to_json(RGraph(rep));
  write_output(j, out);
  return 0;
}

int cmd_maximal(const std::string& ring_s, int max_n, const std::string& out) {
  RingId ring = parse_ring(ring_s);
  auto levels = enumerate_s_prime(ring, max_n, log_level);
  json j = json::array();
  for (const auto& lvl : levels) {
    for (const auto& m : lvl.members) {
      MaximalityEntry e = classify_maximality(m.graph, ring);
      json row;
      row["n"] = lvl.n;
      row["key"] = key_to_hex(m.key);
      row["in_s"] = m.integral;
      row["status"] = max_status_name(e.status);
      std::string catalog_name;
      if (auto spec = match_family(m.graph)) {
        catalog_name = spec->str();
        row["catalog"] = catalog_name;
      }
      if (e.witness) row["witness_n"] = e.witness->n();
      std::printf("n=%d %s %s%s\n", lvl.n, max_status_name(e.status),
                  catalog_name.c_str(), m.integral ? "" : " [non-integral]");
      j.push_back(std::move(row));
    }
  }
  if (!out.empty()) write_output(j, out);
  return 0;
}

int cmd_export(const std::string& format, const std::string& file) {
  if (format != "dot")
    throw CLI::ValidationError("--format", "only dot is supported");
  RGraph g = load_graph_file(file);
  std::cout << to_dot(g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration and classification of cyclotomic matrices "
               "over real quadratic integer rings"};
  app.require_subcommand(1);

  std::string ring = "z", set = "sprime", out, file, format = "dot";
  int max_n = 6, max_k = 6;
  bool as_json = false;

  auto* enumerate = app.add_subcommand("enumerate", "grow S'_n level by level");
  enumerate->add_option("--ring", ring, "z|zsqrt2|zsqrt3|zphi|compositum");
  enumerate->add_option("--max-n", max_n, "largest matrix dimension")
      ->check(CLI::Range(1, 16));
  enumerate->add_option("--set", set, "sprime (all) or s (integral only)");
  enumerate->add_option("--out", out, "output file (default stdout)");

  auto* t1 = app.add_subcommand("table1", "count non-cyclotomic classes per ring");
  t1->add_flag("--json", as_json, "machine-readable output");
  t1->add_option("--out", out, "output file");

  auto* vc = app.add_subcommand("verify-catalog", "check every catalog graph");
  vc->add_option("--max-k", max_k, "largest family parameter")
      ->check(CLI::Range(2, 8));

  auto* check = app.add_subcommand("check", "membership report for one graph");
  check->add_option("file", file, "graph JSON document")->required();

  auto* canon = app.add_subcommand("canon", "canonical key and representative");
  canon->add_option("file", file, "graph JSON document")->required();
  canon->add_option("--out", out, "output file");

  auto* maximal = app.add_subcommand("maximal", "maximality classification");
  maximal->add_option("--ring", ring, "z|zsqrt2|zsqrt3|zphi|compositum");
  maximal->add_option("--max-n", max_n, "largest matrix dimension")
      ->check(CLI::Range(1, 16));
  maximal->add_option("--out", out, "output file");

  auto* exp = app.add_subcommand("export", "render a graph document");
  exp->add_option("--format", format, "output format (dot)");
  exp->add_option("file", file, "graph JSON document")->required();

  try {
    app.parse(argc, argv);
    if (enumerate->parsed()) return cmd_enumerate(ring, max_n, set, out);
    if (t1->parsed()) return cmd_table1(as_json, out);
    if (vc->parsed()) return cmd_verify_catalog(max_k);
    if (check->parsed()) return cmd_check(file);
    if (canon->parsed()) return cmd_canon(file, out);
    if (maximal->parsed()) return cmd_maximal(ring, max_n, out);
    if (exp->parsed()) return cmd_export(format, file);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
