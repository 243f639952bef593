// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: charpoly, classify, scan, certify, verify.
// Exit codes: 0 ok, 1 internal failure, 2 parse error, 3 dimension cap,
// 4 resource cap, 5 no certificate.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "csa/csa.hpp"

namespace {

using csa::Json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitDimCap = 3;
constexpr int kExitResourceCap = 4;
constexpr int kExitNoCertificate = 5;

struct ExitWith {
  int code;
  std::string message;
};

int exit_code_for(csa::ErrorCode code) {
  switch (code) {
    case csa::ErrorCode::kParse: return kExitParse;
    case csa::ErrorCode::kDimensionTooLarge: return kExitDimCap;
    case csa::ErrorCode::kResourceCap: return kExitResourceCap;
    default: return kExitInternal;
  }
}

csa::Graph read_graph(const std::string& spec, const std::string& edges, bool edges_given) {
  if (edges_given) return csa::parse_edge_list(edges);
  if (spec.empty()) throw csa::Error(csa::ErrorCode::kParse, "no graph given");
  return csa::parse_graph_spec(spec);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ExitWith{kExitInternal, "cannot write " + path};
  out << text;
}

// ---------------------------------------------------------------------------
// charpoly

struct CharpolyOptions {
  std::string spec;
  std::string edges;
  std::string engine = "lattice";
  int max_dim_ff = csa::kDefaultFiniteFieldMaxDim;
  bool json = false;
};

int run_charpoly(const CharpolyOptions& o, bool edges_given) {
  csa::Graph g = read_graph(o.spec, o.edges, edges_given);
  csa::Arrangement a = csa::csa_from_graph(g);
  Json engines = Json::object();
  csa::IntPolynomial chi;
  bool have = false;
  bool agree = true;
  auto record = [&](const std::string& name, const csa::IntPolynomial& p) {
    engines[name] = p.to_string();
    if (have && !(p == chi)) agree = false;
    if (!have) chi = p;
    have = true;
  };
  const bool all = o.engine == "all";
  if (all || o.engine == "lattice") record("lattice", csa::charpoly_lattice(a));
  if (all || o.engine == "delres") record("delres", csa::charpoly_delres(a));
  if (all || o.engine == "ff") {
    if (a.dim() > o.max_dim_ff && all) {
      engines["ff"] = "skipped: dimension above --max-dim-ff";
    } else {
      record("ff", csa::charpoly_finite_field(a, o.max_dim_ff));
    }
  }
  if (!agree) throw ExitWith{kExitInternal, "engines disagree: " + engines.dump()};
  const std::int64_t regions = csa::chambers(chi, a.dim());
  if (o.json) {
    Json j{{"graph6", csa::to_graph6(g)}, {"edges", g.edge_string()}, {"dim", a.dim()}, {"hyperplanes", a.size()},
           {"charpoly", csa::to_json(chi)}, {"chambers", regions}, {"engines", engines}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "hyperplanes: " << a.size() << "\n"
              << "chi: " << chi << "\n"
              << "factored: " << csa::factored_string(chi) << "\n"
              << "chambers: " << regions << "\n";
    if (all) std::cout << "engines: " << engines.dump() << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// classify

Json classify_json(const csa::Graph& g) {
  Json j{{"graph6", csa::to_graph6(g)}, {"edges", g.edge_string()}};
  csa::ClassificationResult fr = csa::classify_free(g);
  if (fr.status == csa::FreeStatus::kUnresolved) {
    j["free"] = nullptr;
  } else {
    j["free"] = fr.free();
  }
  j["freeness"] = csa::to_json(fr);
  csa::FactoredResult fa = csa::classify_factored(g);
  if (!fa.factored && !fa.witness) {
    j["factored"] = nullptr;
  } else {
    j["factored"] = fa.factored;
  }
  Json fd{{"reason", fa.reason}};
  if (fa.partition) {
    csa::Arrangement a = csa::csa_from_graph(g);
    Json blocks = Json::array();
    for (const auto& b : csa::partition_subsets(a, *fa.partition)) {
      Json block = Json::array();
      for (auto s : b) block.push_back(csa::subset_json(s));
      blocks.push_back(block);
    }
    fd["blocks"] = blocks;
  }
  if (fa.witness) {
    Json ops = Json::array();
    for (const auto& op : fa.witness->ops) ops.push_back(csa::to_json(op));
    fd["witness"] = {{"ops", ops}, {"target", fa.witness_name}};
  }
  j["factored_detail"] = fd;
  j["supersolvable"] = csa::classify_supersolvable(g);
  j["simplicial"] = csa::classify_simplicial(g);
  return j;
}

// ---------------------------------------------------------------------------
// scan

struct ScanOptions {
  int max_n = 5;
  std::vector<std::string> checks{"engines"};
  int jobs = 1;
  std::string graph6_file;
  std::string out;
  int max_dim_ff = csa::kDefaultFiniteFieldMaxDim;
};

struct ScanRow {
  std::vector<std::string> cells;
  bool incomplete = false;
  bool disagreement = false;
  bool counterexample = false;
};

std::vector<std::string> scan_header(const ScanOptions& o) {
  std::vector<std::string> h{"graph6", "n", "edges"};
  for (const auto& c : o.checks) {
    if (c == "engines") h.insert(h.end(), {"lattice_chi", "delres_agree", "ff_agree", "mobius_alternates"});
    if (c == "conjecture") h.insert(h.end(), {"family", "free", "integral", "charpoly"});
    if (c == "classify") h.insert(h.end(), {"free_status", "factored", "supersolvable", "simplicial"});
  }
  return h;
}

ScanRow scan_row(const csa::Graph& g, const ScanOptions& o) {
  ScanRow r;
  r.cells = {csa::to_graph6(g), std::to_string(g.n()), std::to_string(g.edge_count())};
  csa::Arrangement a = csa::csa_from_graph(g);
  for (const auto& c : o.checks) {
    if (c == "engines") {
      csa::IntPolynomial del = csa::charpoly_delres(a);
      try {
        csa::IntersectionLattice L = csa::build_lattice(a);
        csa::IntPolynomial lat = csa::charpoly_lattice(L);
        r.cells.push_back(lat.to_string());
        r.cells.push_back(lat == del ? "yes" : "no");
        r.disagreement = r.disagreement || !(lat == del);
        if (a.dim() <= o.max_dim_ff) {
          bool ok = csa::charpoly_finite_field(a, o.max_dim_ff) == lat;
          r.cells.push_back(ok ? "yes" : "no");
          r.disagreement = r.disagreement || !ok;
        } else {
          r.cells.push_back("skip");
        }
        bool alt = csa::mobius_signs_alternate(L);
        r.cells.push_back(alt ? "yes" : "no");
        r.disagreement = r.disagreement || !alt;
      } catch (const csa::Error& e) {
        if (e.code() != csa::ErrorCode::kResourceCap) throw;
        r.cells.insert(r.cells.end(), {"cap", "cap", "cap", "cap"});
        r.incomplete = true;
      }
    }
    if (c == "conjecture") {
      csa::ConjectureRow row = csa::conjecture_row(g, csa::ChiEngine::kDelRes);
      r.cells.insert(r.cells.end(), {row.family, row.free ? "yes" : "no", row.integral ? "yes" : "no", row.charpoly.to_string()});
      r.counterexample = row.free != row.integral;
    }
    if (c == "classify") {
      csa::ClassificationResult fr = csa::classify_free(g);
      csa::FactoredResult fa = csa::classify_factored(g);
      r.cells.insert(r.cells.end(), {csa::to_string(fr.status), fa.factored ? "yes" : (fa.witness ? "no" : "unresolved"),
                                     csa::classify_supersolvable(g) ? "yes" : "no", csa::classify_simplicial(g) ? "yes" : "no"});
      r.incomplete = r.incomplete || fr.status == csa::FreeStatus::kUnresolved || (!fa.factored && !fa.witness);
    }
  }
  return r;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ",";
    const bool quote = cells[i].find_first_of(",\"") != std::string::npos;
    if (!quote) {
      line += cells[i];
      continue;
    }
    line += '"';
    for (char ch : cells[i]) {
      if (ch == '"') line += '"';
      line += ch;
    }
    line += '"';
  }
  return line + "\n";
}

std::vector<csa::Graph> scan_graphs(const ScanOptions& o) {
  if (o.graph6_file.empty()) return csa::connected_graphs_up_to(o.max_n);
  std::ifstream in(o.graph6_file);
  if (!in) throw csa::Error(csa::ErrorCode::kParse, "cannot read " + o.graph6_file);
  std::vector<csa::Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (csa::detail::trim(line).empty()) continue;
    csa::Graph g = csa::from_graph6(line);
    if (g.n() > o.max_n) throw csa::Error(csa::ErrorCode::kResourceCap, "graph in file exceeds the vertex limit");
    if (!g.is_connected()) throw csa::Error(csa::ErrorCode::kParse, "graph " + line + " is not connected");
    out.push_back(std::move(g));
  }
  return out;
}

int run_scan(ScanOptions o) {
  if (o.max_n > 7) throw ExitWith{kExitResourceCap, "scan is limited to 7 vertices"};
  if (o.max_n < 1) throw ExitWith{kExitParse, "scan needs max_n >= 1"};
  for (const auto& c : o.checks) {
    if (c != "engines" && c != "conjecture" && c != "classify") throw ExitWith{kExitParse, "unknown check '" + c + "'"};
  }
  std::vector<csa::Graph> graphs = scan_graphs(o);
  std::vector<ScanRow> rows(graphs.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::string> errors(graphs.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      try {
        rows[i] = scan_row(graphs[i], o);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  const int jobs = std::max(1, o.jobs);
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i].empty()) throw ExitWith{kExitInternal, csa::to_graph6(graphs[i]) + ": " + errors[i]};
  }

  std::string csv = csv_line(scan_header(o));
  Json disagreements = Json::array();
  Json counterexamples = Json::array();
  bool incomplete = false;
  for (const auto& r : rows) {
    csv += csv_line(r.cells);
    incomplete = incomplete || r.incomplete;
    if (r.disagreement) disagreements.push_back(r.cells[0]);
    if (r.counterexample) counterexamples.push_back(r.cells[0]);
  }
  Json summary{{"max_n", o.max_n}, {"graphs", rows.size()}, {"checks", o.checks}, {"incomplete", incomplete}};
  if (std::count(o.checks.begin(), o.checks.end(), "engines")) summary["engine_disagreements"] = disagreements;
  if (std::count(o.checks.begin(), o.checks.end(), "conjecture")) {
    std::size_t table[2][2] = {{0, 0}, {0, 0}};
    const auto h = scan_header(o);
    const auto fi = static_cast<std::size_t>(std::find(h.begin(), h.end(), "free") - h.begin());
    for (const auto& r : rows) ++table[r.cells[fi] == "yes"][r.cells[fi + 1] == "yes"];
    summary["conjecture"] = {{"free_integral", table[1][1]},
                             {"free_nonintegral", table[1][0]},
                             {"nonfree_integral", table[0][1]},
                             {"nonfree_nonintegral", table[0][0]},
                             {"counterexamples", counterexamples}};
  }
  if (o.out.empty()) {
    std::cout << csv;
    std::cerr << summary.dump(2) << "\n";
  } else {
    write_output(o.out, csv);
    std::cout << summary.dump(2) << "\n";
  }
  return incomplete ? kExitResourceCap : kExitOk;
}

// ---------------------------------------------------------------------------
// certify / verify

Json build_certificate(const csa::Graph& g, const std::string& kind) {
  csa::Arrangement a = csa::csa_from_graph(g);
  if (kind == "mat") {
    csa::MatChainResult r = csa::mat_chain_cardinality(g);
    if (!r.ok) throw ExitWith{kExitNoCertificate, "no MAT certificate: cardinality filtration fails at " + r.message};
    return csa::mat_certificate(g, r.chain);
  }
  if (kind == "nice") {
    csa::FactoredResult f = csa::classify_factored(g);
    if (!f.factored) throw ExitWith{kExitNoCertificate, "not factored (" + f.reason + ")"};
    if (!f.partition) throw ExitWith{kExitNoCertificate, "nice partitions are only emitted for connected graphs"};
    return csa::nice_certificate(g, *f.partition);
  }
  if (kind == "modular") {
    auto chain = csa::supersolvable_chain(a);
    if (!chain) throw ExitWith{kExitNoCertificate, "not supersolvable: no maximal chain of modular flats"};
    return csa::modular_certificate(g, *chain);
  }
  if (kind == "regions") return csa::regions_certificate(g, csa::enumerate_regions(a));
  throw ExitWith{kExitParse, "unknown certificate kind '" + kind + "'"};
}

int run_certify(const std::string& spec, const std::string& kind, const std::string& out) {
  csa::Graph g = csa::parse_graph_spec(spec);
  Json cert = build_certificate(g, kind);
  const std::string text = cert.dump(2) + "\n";
  csa::CertificateCheck check = csa::verify_certificate(Json::parse(text));
  if (!check.ok) throw ExitWith{kExitInternal, "emitted certificate fails re-verification: " + check.message};
  write_output(out, text);
  return kExitOk;
}

int run_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ExitWith{kExitParse, "cannot read " + path};
  std::stringstream buf;
  buf << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buf.str());
  } catch (const Json::exception& e) {
    throw ExitWith{kExitParse, std::string("invalid JSON: ") + e.what()};
  }
  csa::CertificateCheck check = csa::verify_certificate(j);
  std::cout << (check.ok ? "verified" : "rejected: " + check.message) << "\n";
  return check.ok ? kExitOk : kExitNoCertificate;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected subgraph arrangement engine"};
  app.require_subcommand(1);

  CharpolyOptions cp;
  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial and chamber count");
  charpoly->add_option("graph", cp.spec, "graph spec: family shorthand, edge list or graph6");
  auto* edges_opt = charpoly->add_option("--edges", cp.edges, "edge list such as 1-2,2-3");
  charpoly->add_option("--engine", cp.engine, "lattice, delres, ff or all")->check(CLI::IsMember({"lattice", "delres", "ff", "all"}));
  charpoly->add_option("--max-dim-ff", cp.max_dim_ff, "dimension cap of the finite-field engine");
  charpoly->add_flag("--json", cp.json, "JSON output");

  std::string classify_spec;
  auto* classify = app.add_subcommand("classify", "freeness, factoredness, supersolvability, simpliciality");
  classify->add_option("graph", classify_spec, "graph spec")->required();
  classify->add_flag("--json", "JSON output (always on)");

  ScanOptions so;
  auto* scan = app.add_subcommand("scan", "exhaustive checks over connected graphs");
  scan->add_option("max_n", so.max_n, "largest vertex count")->required();
  scan->add_option("--check", so.checks, "engines, conjecture, classify")->expected(1, 3);
  scan->add_option("--jobs", so.jobs, "worker threads");
  scan->add_option("--graph6-file", so.graph6_file, "read graphs from a graph6 file");
  scan->add_option("--out", so.out, "CSV output file");
  scan->add_option("--max-dim-ff", so.max_dim_ff, "dimension cap of the finite-field engine");

  std::string cert_spec;
  std::string cert_kind;
  std::string cert_out;
  auto* certify = app.add_subcommand("certify", "emit a verified certificate");
  certify->add_option("graph", cert_spec, "graph spec")->required();
  certify->add_option("kind", cert_kind, "mat, nice, modular or regions")->required();
  certify->add_option("--out", cert_out, "output file");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "re-verify a certificate file");
  verify->add_option("file", verify_path, "certificate JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*charpoly) return run_charpoly(cp, edges_opt->count() > 0);
    if (*classify) {
      std::cout << classify_json(csa::parse_graph_spec(classify_spec)).dump(2) << "\n";
      return kExitOk;
    }
    if (*scan) return run_scan(so);
    if (*certify) return run_certify(cert_spec, cert_kind, cert_out);
    if (*verify) return run_verify(verify_path);
  } catch (const ExitWith& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const csa::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
