// Copyright 2026 The haalab Authors.
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

// Acceptance runner: `haa_acceptance <id>` evaluates one criterion and
// prints a single "criterion <id> PASS|FAIL|ERROR: ..." verdict line
// (indented detail lines precede it). Exit status 0 when every requested
// criterion passes, 1 on a failure, 3 when a criterion could not run.
//
// Optimizations are memoized in acceptance_cache.json (working directory,
// or $HAALAB_ACCEPTANCE_CACHE) so later criteria reuse earlier runs. The
// slow tier runs only with HAALAB_SLOW=1.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <json.hpp>

#include "haa/ansatz.hpp"
#include "haa/cli.hpp"
#include "haa/descriptors.hpp"
#include "haa/exact.hpp"
#include "haa/fermion.hpp"
#include "haa/simulator.hpp"
#include "haa/workflow.hpp"
#include "support/oracles.hpp"

namespace {

using namespace haa;
namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char* kCacheVersion = "haa-acceptance-1";

bool slow_tier() {
  const char* v = std::getenv("HAALAB_SLOW");
  return v != nullptr && std::string(v) == "1";
}

struct Verdict {
  bool pass = false;
  std::string summary;
};

void detail(const std::string& line) { std::cout << "  " << line << '\n' << std::flush; }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string sci(double v) { return fmt("%.3e", v); }

// ---------------------------------------------------------------------------
// Memoized optimization cells.

fs::path cache_path() {
  const char* v = std::getenv("HAALAB_ACCEPTANCE_CACHE");
  return v != nullptr ? fs::path(v) : fs::path("acceptance_cache.json");
}

json load_cache() {
  std::ifstream in(cache_path());
  if (!in) return json::object();
  try {
    json j = json::parse(in);
    if (j.value("version", "") == kCacheVersion) return j;
  } catch (const json::exception&) {
  }
  return json::object();
}

void store_cache_entry(const std::string& key, const json& value) {
  // Re-read before writing so concurrent criteria do not drop each other's cells.
  json j = load_cache();
  j["version"] = kCacheVersion;
  j["cells"][key] = value;
  const fs::path path = cache_path();
  const fs::path tmp = path.string() + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    out << j.dump(1) << '\n';
  }
  fs::rename(tmp, path);
}

const Problem& problem(const std::string& relative) {
  static std::map<std::string, Problem> loaded;
  auto it = loaded.find(relative);
  if (it == loaded.end()) it = loaded.emplace(relative, load_problem(oracle::data_path(relative))).first;
  return it->second;
}

// Lowest eigenvalue over every particle-number sector: the floor for any
// penalized optimization.
Real full_space_ground(const std::string& relative) {
  static std::map<std::string, Real> cache;
  auto it = cache.find(relative);
  if (it != cache.end()) return it->second;
  const Problem& p = problem(relative);
  const Real e = ground_state(p.hamiltonian.qubit_op, p.hamiltonian.n_qubits).energy;
  cache.emplace(relative, e);
  return e;
}

struct CellSpec {
  std::string file;
  Family family = Family::HAA;
  std::size_t n_ancilla = 0;
  std::size_t layers = 1;
  std::size_t restarts = 20;
  std::size_t max_iterations = 5000;
  // Restarts after the first one within this error of FCI are skipped.
  std::optional<Real> stop_error;
  Real lambda_spin = 0.0;
  // When set, the second half of the restarts draws gaussian(0, sigma)
  // starts on the seeds following the uniform half.
  std::optional<Real> split_sigma;
};

struct Cell {
  std::string label;
  std::string file;
  Real energy = 0.0;
  Real fci = 0.0;
  Real error = 0.0;
  Real purity = 0.0;
  Real min_restart_energy = 0.0;
  Real full_space_e0 = 0.0;
  std::size_t restarts_run = 0;
  std::vector<Real> params;

  bool accurate() const { return std::abs(error) < kChemicalAccuracy; }
};

AnsatzSpec ansatz_of(const CellSpec& s) {
  return molecular_ansatz(problem(s.file), s.family, s.n_ancilla, s.layers);
}

std::string cell_key(const CellSpec& s) {
  std::ostringstream k;
  k << s.file << '|' << ansatz_of(s).label() << "|r" << s.restarts << "|it" << s.max_iterations
    << "|stop" << (s.stop_error ? sci(*s.stop_error) : std::string("none")) << "|ls"
    << s.lambda_spin;
  if (s.split_sigma) k << "|split" << *s.split_sigma;
  return k.str();
}

Cell from_json(const json& j) {
  Cell c;
  c.label = j.at("label");
  c.file = j.at("file");
  c.energy = j.at("energy");
  c.fci = j.at("fci");
  c.error = j.at("error");
  c.purity = j.at("purity");
  c.min_restart_energy = j.at("min_restart_energy");
  c.full_space_e0 = j.at("full_space_e0");
  c.restarts_run = j.at("restarts_run");
  c.params = j.at("params").get<std::vector<Real>>();
  return c;
}

json to_json(const Cell& c) {
  return {{"label", c.label},
          {"file", c.file},
          {"energy", c.energy},
          {"fci", c.fci},
          {"error", c.error},
          {"purity", c.purity},
          {"min_restart_energy", c.min_restart_energy},
          {"full_space_e0", c.full_space_e0},
          {"restarts_run", c.restarts_run},
          {"params", c.params}};
}

Cell solve(const CellSpec& s) {
  const std::string key = cell_key(s);
  const json cache = load_cache();
  if (cache.contains("cells") && cache["cells"].contains(key)) return from_json(cache["cells"][key]);

  const Problem& p = problem(s.file);
  const AnsatzSpec spec = ansatz_of(s);
  const LossSpec loss = molecular_loss(p, 1.0, s.lambda_spin);
  VqeConfig cfg;
  cfg.restarts = s.split_sigma ? s.restarts / 2 : s.restarts;
  cfg.max_iterations = s.max_iterations;
  if (s.stop_error) cfg.stop_at_loss = p.fci.energy + *s.stop_error;
  const auto t0 = std::chrono::steady_clock::now();
  PointResult r = solve_point(p, spec, loss, cfg);
  std::vector<RestartRecord> all = r.vqe.restarts;
  const bool reached = cfg.stop_at_loss && !r.vqe.all_failed && r.vqe.best_loss <= *cfg.stop_at_loss;
  if (s.split_sigma && !reached) {
    VqeConfig second = cfg;
    second.restarts = s.restarts - cfg.restarts;
    second.base_seed = cfg.restarts;
    second.init = InitDistribution::Gaussian;
    second.init_sigma = *s.split_sigma;
    PointResult g = solve_point(p, spec, loss, second);
    all.insert(all.end(), g.vqe.restarts.begin(), g.vqe.restarts.end());
    if (r.vqe.all_failed || (!g.vqe.all_failed && g.vqe.best_loss < r.vqe.best_loss)) r = std::move(g);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.vqe.all_failed) throw std::runtime_error("every restart failed for " + key);

  Cell c;
  c.label = spec.label();
  c.file = s.file;
  c.energy = r.vqe.best_energy;
  c.fci = r.fci_energy;
  c.error = r.error;
  c.purity = r.purity;
  c.full_space_e0 = full_space_ground(s.file);
  c.min_restart_energy = r.vqe.best_energy;
  for (const auto& rec : all) {
    if (!rec.failed) c.min_restart_energy = std::min(c.min_restart_energy, rec.final_energy);
  }
  c.restarts_run = all.size();
  c.params.assign(r.vqe.best_params.data(), r.vqe.best_params.data() + r.vqe.best_params.size());
  std::fprintf(stderr, "[cell] %s %s error %.3e restarts %zu (%.1f s)\n", s.file.c_str(),
               c.label.c_str(), c.error, c.restarts_run, secs);
  store_cache_entry(key, to_json(c));
  return c;
}

std::string describe(const Cell& c) {
  return c.file + " " + c.label + ": error " + sci(c.error) + " Ha, purity " +
         fmt("%.9f", c.purity) + ", restarts run " + std::to_string(c.restarts_run);
}

// ---------------------------------------------------------------------------
// Cell lists shared between criteria.

std::vector<std::string> h2_scan_files() {
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(oracle::data_path("h2_scan"))) {
    if (e.path().extension() == ".fcidump") files.push_back("h2_scan/" + e.path().filename().string());
  }
  std::sort(files.begin(), files.end());
  return files;
}

CellSpec haa_cell(const std::string& file, std::size_t n, std::size_t layers, std::size_t restarts,
                  std::optional<Real> stop, std::size_t max_iterations = 5000) {
  return {file, Family::HAA, n, layers, restarts, max_iterations, stop, 0.0};
}

CellSpec hea_cell(const std::string& file, std::size_t layers, std::size_t restarts,
                  std::optional<Real> stop, std::size_t max_iterations = 5000) {
  return {file, Family::HEA, 0, layers, restarts, max_iterations, stop, 0.0};
}

std::vector<CellSpec> criterion1_cells() {
  std::vector<CellSpec> cells;
  for (const auto& f : h2_scan_files()) cells.push_back(haa_cell(f, 1, 1, 10, std::nullopt));
  return cells;
}

std::vector<CellSpec> criterion2_cells() {
  return {hea_cell("h2_0.7414.fcidump", 1, 20, kChemicalAccuracy),
          haa_cell("h2_0.7414.fcidump", 1, 1, 20, kChemicalAccuracy),
          haa_cell("h3p_chain.fcidump", 2, 1, 20, kChemicalAccuracy),
          haa_cell("h4_chain.fcidump", 5, 1, 20, kChemicalAccuracy)};
}

std::vector<CellSpec> criterion3_cells() {
  return {haa_cell("beh2_1.33.fcidump", 1, 8, 20, kChemicalAccuracy, 10000),
          hea_cell("beh2_1.33.fcidump", 8, 20, kChemicalAccuracy, 10000)};
}

constexpr std::size_t kGridAncilla = 4;
constexpr std::size_t kGridLayers = 6;

// Truncating once a restart is within 1e-9 of FCI cannot change any grid
// verdict: the bounds are 1e-4 and 1e-8, and the monotonicity check floors
// errors at 1e-9. Uniform starts on the wide registers stall on flat,
// strongly mixed regions and small-angle starts stay near Hartree-Fock on
// the narrow ones, so each cell spends half its restarts on each.
CellSpec grid_cell(std::size_t n, std::size_t layers) {
  CellSpec s = haa_cell("h4_chain.fcidump", n, layers, 50, 1e-9);
  s.split_sigma = 0.1;
  return s;
}

std::vector<CellSpec> criterion4_cells() {
  std::vector<CellSpec> cells;
  for (std::size_t n = 1; n <= kGridAncilla; ++n) {
    for (std::size_t l = 1; l <= kGridLayers; ++l) cells.push_back(grid_cell(n, l));
  }
  return cells;
}

std::vector<CellSpec> energy_cells() {
  std::vector<CellSpec> all;
  for (const auto& list : {criterion1_cells(), criterion2_cells(), criterion3_cells(), criterion4_cells()}) {
    all.insert(all.end(), list.begin(), list.end());
  }
  return all;
}

// ---------------------------------------------------------------------------
// Criteria.

Verdict criterion_1() {
  bool ok = true;
  Real worst = 0.0;
  for (const auto& spec : criterion1_cells()) {
    const Cell c = solve(spec);
    detail(describe(c));
    worst = std::max(worst, std::abs(c.error));
    ok = ok && std::abs(c.error) < 1e-6;
  }
  // Diagnostic only: the two-ancilla circuit on the same scan.
  for (const auto& f : h2_scan_files()) {
    const Cell c = solve(haa_cell(f, 2, 1, 10, std::nullopt));
    detail("diagnostic " + describe(c));
  }
  return {ok, "H2 HAA(1,1) over 5 bond lengths, worst |E - E_FCI| = " + sci(worst) +
                  " Ha (bound 1e-6)"};
}

Verdict criterion_2() {
  bool ok = true;
  std::string summary;
  for (const auto& spec : criterion2_cells()) {
    const Cell c = solve(spec);
    detail(describe(c) + (c.accurate() ? " [accurate]" : " [not accurate]"));
    ok = ok && c.accurate();
    summary += (summary.empty() ? "" : ", ") + c.label + " " + sci(c.error);
  }
  if (slow_tier()) {
    const Cell hea = solve(hea_cell("h5p_chain.fcidump", 5, 20, kChemicalAccuracy));
    const Cell haa = solve(haa_cell("h5p_chain.fcidump", 8, 1, 20, kChemicalAccuracy));
    detail("slow tier " + describe(hea));
    detail("slow tier " + describe(haa));
    ok = ok && !hea.accurate() && haa.accurate();
    summary += ", H5+ HEA(5) " + sci(hea.error) + ", H5+ HAA(8,1) " + sci(haa.error);
  } else {
    detail("slow tier (H5+) skipped; set HAALAB_SLOW=1");
  }
  return {ok, "single-layer chemical accuracy, best of 20: " + summary};
}

Verdict criterion_3() {
  const auto cells = criterion3_cells();
  const Cell haa = solve(cells[0]);
  const Cell hea = solve(cells[1]);
  detail(describe(haa));
  detail(describe(hea));
  bool ok = haa.accurate() && !hea.accurate();
  std::string summary = "BeH2 HAA(1,8) error " + sci(haa.error) + ", HEA(8) error " + sci(hea.error);
  if (slow_tier()) {
    const Cell deep = solve(hea_cell("beh2_1.33.fcidump", 25, 20, kChemicalAccuracy, 10000));
    detail("slow tier " + describe(deep));
    ok = ok && deep.accurate();
    summary += ", HEA(25) error " + sci(deep.error);
  } else {
    detail("slow tier (HEA(25)) skipped; set HAALAB_SLOW=1");
  }
  return {ok, summary};
}

Verdict criterion_4() {
  std::vector<std::vector<Real>> err(kGridAncilla + 1, std::vector<Real>(kGridLayers + 1, 0.0));
  for (std::size_t n = 1; n <= kGridAncilla; ++n) {
    std::string row = "n=" + std::to_string(n) + ":";
    for (std::size_t l = 1; l <= kGridLayers; ++l) {
      err[n][l] = std::abs(solve(grid_cell(n, l)).error);
      row += " " + sci(err[n][l]);
    }
    detail(row);
  }
  bool ok = err[1][6] <= 1e-4 && err[4][2] <= 1e-4 && err[4][6] <= 1e-8;
  std::size_t violations = 0;
  for (std::size_t n = 1; n < kGridAncilla; ++n) {
    for (std::size_t l = 1; l <= kGridLayers; ++l) {
      if (err[n + 1][l] > 10.0 * std::max(err[n][l], 1e-9)) {
        ++violations;
        detail("monotonicity violated at L=" + std::to_string(l) + ": n=" + std::to_string(n) +
               " " + sci(err[n][l]) + " -> n=" + std::to_string(n + 1) + " " + sci(err[n + 1][l]));
      }
    }
  }
  ok = ok && violations == 0;
  return {ok, "H4 grid best of 50: err(1,6) " + sci(err[1][6]) + ", err(4,2) " + sci(err[4][2]) +
                  ", err(4,6) " + sci(err[4][6]) + ", monotonicity violations " +
                  std::to_string(violations)};
}

Verdict criterion_5() {
  std::size_t checked = 0, bad = 0;
  Real lowest = 1.0;
  for (const auto& spec : energy_cells()) {
    const Cell c = solve(spec);
    if (!c.accurate()) continue;
    ++checked;
    lowest = std::min(lowest, c.purity);
    if (c.purity <= 1.0 - 1e-6) {
      ++bad;
      detail("impure accurate state: " + describe(c));
    }
  }
  return {bad == 0, std::to_string(checked) + " chemically accurate states, lowest purity " +
                        fmt("%.12f", lowest) + " (bound 1 - 1e-6)"};
}

Verdict criterion_6() {
  const Problem& p = problem("h4_chain.fcidump");
  SectorConstraint sector;
  sector.electron_count = p.integrals.n_elec;
  sector.sz = 0.5 * p.integrals.ms2;
  const ConfigurationTable fci_table = configuration_table(p.fci.state, sector);
  {
    std::ofstream out("h4_fci_configurations.csv");
    write_configuration_csv(out, fci_table);
  }
  struct Target {
    std::size_t n, layers;
    Real bound;
  };
  bool ok = true;
  std::string summary;
  for (const Target t : {Target{4, 6, 1e-6}, Target{1, 6, 1e-3}, Target{4, 2, 1e-3}}) {
    const CellSpec spec = grid_cell(t.n, t.layers);
    const Cell c = solve(spec);
    const Circuit circuit = build_ansatz(ansatz_of(spec));
    const DensityMatrix rho = output_state(circuit, c.params);
    const Real overlap = state_overlap(rho, p.fci.state);
    const ConfigurationTable table = configuration_table(principal_state(rho), sector);
    const Real deviation = max_coefficient_deviation(table, fci_table);
    const std::string csv =
        "h4_haa_" + std::to_string(t.n) + "_" + std::to_string(t.layers) + "_configurations.csv";
    std::ofstream out(csv);
    write_configuration_csv(out, table);
    detail(c.label + ": overlap " + fmt("%.12f", overlap) + ", max coefficient deviation " +
           sci(deviation) + ", table " + csv);
    ok = ok && overlap > 1.0 - t.bound;
    summary += (summary.empty() ? "" : ", ") + c.label + " 1-overlap " + sci(1.0 - overlap) +
               " (max dev " + sci(deviation) + ")";
  }
  return {ok, "H4 overlaps with FCI: " + summary};
}

// Expressibility at 4 system qubits. Unitary circuits use the pure-state
// fidelity over their whole register; channel circuits only have the
// system state. The system-register value is printed alongside: there,
// qrQNN(1,L) and HAA(L,1) are the same channel and extra ancillas only add
// mixedness, so it cannot express the ancilla trends.
struct Expr {
  Real d, sigma;
};

Expr expr_of(const AnsatzSpec& s) {
  const Circuit c = build_ansatz(s);
  ExpressibilityConfig cfg;
  cfg.n_pairs = 5000;
  cfg.n_bins = 75;
  cfg.bootstrap = 200;
  cfg.target = c.channel ? FidelityTarget::System : FidelityTarget::Full;
  const DescriptorResult r = expressibility(c, cfg);
  std::string line = s.label() + " (" + std::string(target_name(cfg.target)) + "): D_KL " +
                     fmt("%.5f", r.d_kl) + " +- " + fmt("%.5f", r.d_kl_sigma);
  if (!c.channel && c.n_ancilla > 0) {
    cfg.target = FidelityTarget::System;
    line += ", system register " + fmt("%.5f", expressibility(c, cfg).d_kl);
  }
  detail(line);
  return {r.d_kl, r.d_kl_sigma};
}

AnsatzSpec four_qubit(Family f, std::size_t n, std::size_t layers) {
  AnsatzSpec s;
  s.family = f;
  s.n_system = 4;
  s.n_ancilla = n;
  s.layers = layers;
  if (f == Family::HEA) s.coupling = Coupling::Adjacent;
  if (f == Family::UCCSD) s.n_electrons = 2;
  return s;
}

// b is no larger than a, allowing two combined standard deviations.
bool not_larger(const Expr& a, const Expr& b) {
  return b.d <= a.d + 2.0 * std::hypot(a.sigma, b.sigma);
}

Verdict criterion_7() {
  bool ok = true;
  std::vector<Expr> by_n, by_l;
  for (std::size_t n = 1; n <= 4; ++n) by_n.push_back(expr_of(four_qubit(Family::HAA, n, 1)));
  for (std::size_t l = 1; l <= 4; ++l) by_l.push_back(expr_of(four_qubit(Family::HAA, 1, l)));
  for (std::size_t i = 1; i < by_n.size(); ++i) ok = ok && not_larger(by_n[i - 1], by_n[i]);
  for (std::size_t i = 1; i < by_l.size(); ++i) ok = ok && not_larger(by_l[i - 1], by_l[i]);
  const bool trends = ok;
  bool beats_qrqnn = true;
  std::string versus;
  for (std::size_t l = 1; l <= 3; ++l) {
    const Expr q = expr_of(four_qubit(Family::QRQNN, 1, l));
    const bool below = by_l[l - 1].d < q.d;
    beats_qrqnn = beats_qrqnn && below;
    versus += " L=" + std::to_string(l) + " " + fmt("%.3f", by_l[l - 1].d) + (below ? " < " : " >= ") +
              fmt("%.3f", q.d) + ";";
  }
  const Expr ucc = expr_of(four_qubit(Family::UCCSD, 0, 1));
  const bool ucc_ok = ucc.d > 5.0 && ucc.d > 10.0 * by_l[0].d;
  ok = trends && beats_qrqnn && ucc_ok;
  return {ok, std::string("D_KL trends in n and L ") + (trends ? "hold" : "broken") +
                  "; HAA(1,L) vs qrQNN(1,L):" + versus + " UCCSD " + fmt("%.3f", ucc.d) +
                  (ucc_ok ? " exceeds" : " does not exceed") + " 5 and 10 x HAA(1,1) " +
                  fmt("%.4f", by_l[0].d)};
}

Verdict criterion_8() {
  const PauliOperator obs = default_gradient_observable();
  std::map<Family, std::vector<Real>> var;
  for (Family f : {Family::HEA, Family::HAA, Family::QRQNN}) {
    for (std::size_t l = 1; l <= 6; ++l) {
      const AnsatzSpec s = four_qubit(f, f == Family::HEA ? 0 : 1, l);
      const auto r = gradient_variance(build_ansatz(s), obs, 2000, 0);
      detail(s.label() + ": Var " + sci(r.variance) + " +- " + sci(r.variance_sigma));
      var[f].push_back(r.variance);
    }
  }
  bool ok = true;
  std::string versus;
  for (std::size_t l : {2, 4, 6}) {
    const Real q = var[Family::QRQNN][l - 1];
    const bool above = var[Family::HEA][l - 1] > q && var[Family::HAA][l - 1] > q;
    ok = ok && above;
    versus += " L=" + std::to_string(l) + (above ? " yes" : " no") + " (HEA " +
              sci(var[Family::HEA][l - 1]) + ", HAA " + sci(var[Family::HAA][l - 1]) + ", qrQNN " +
              sci(q) + ");";
  }
  // Least-squares slope of ln Var against L.
  auto slope = [](const std::vector<Real>& v) {
    const Real n = static_cast<Real>(v.size());
    Real sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Real x = static_cast<Real>(i + 1), y = std::log(v[i]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
  };
  const Real s_haa = slope(var[Family::HAA]), s_qr = slope(var[Family::QRQNN]);
  ok = ok && s_haa > s_qr;
  return {ok, "Var(HEA) and Var(HAA) above Var(qrQNN):" + versus + " ln-Var slope HAA " +
                  fmt("%.4f", s_haa) + " vs qrQNN " + fmt("%.4f", s_qr) +
                  (s_haa > s_qr ? " (shallower)" : " (not shallower)")};
}

json cli_json(const std::vector<std::string>& args, int* code = nullptr) {
  std::vector<const char*> argv{"haalab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int c = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (code != nullptr) *code = c;
  if (c != kExitOk) throw std::runtime_error("haalab failed: " + err.str());
  return json::parse(out.str());
}

Verdict criterion_9() {
  AnsatzSpec hea = four_qubit(Family::HEA, 0, 25);
  hea.n_system = 8;
  AnsatzSpec haa = four_qubit(Family::HAA, 1, 8);
  haa.n_system = 10;
  const std::size_t n_hea = parameter_count(hea), n_haa = parameter_count(haa);
  detail("HEA(25) on 8 qubits: " + std::to_string(n_hea) + " parameters");
  detail("HAA(1,8) on 10 system qubits: " + std::to_string(n_haa) + " parameters");
  // Published counts that the formulas do not reproduce are reported, not asserted.
  for (const auto& args : {std::vector<std::string>{"gates", "--ansatz", "haa", "--system", "8",
                                                    "--ancilla", "1", "--layers", "8"},
                           std::vector<std::string>{"gates", "--ansatz", "haa", "--system", "12",
                                                    "--ancilla", "2", "--layers", "1"}}) {
    const json j = cli_json(args);
    for (const auto& note : j.at("notes")) {
      detail("note " + j.at("ansatz").get<std::string>() + " " + note.at("field").get<std::string>() +
             ": value " + note.at("value").dump() + ", reference " +
             note.at("reference_value").dump() + " (" + note.at("detail").get<std::string>() + ")");
    }
  }
  return {n_hea == 600 && n_haa == 240,
          "HEA(8 qubits, 25) has " + std::to_string(n_hea) + " parameters, HAA(10 system, 1, 8) has " +
              std::to_string(n_haa)};
}

Verdict criterion_10() {
  std::mt19937_64 rng(2026);
  bool ok = true;
  std::string summary;

  // Shift rule against central differences, 20 random points per family.
  const Problem& h2 = problem("h2_0.7414.fcidump");
  const Observable obs(h2.hamiltonian.qubit_op, 4);
  Real worst_grad = 0.0;
  for (Family f : {Family::HEA, Family::HAA, Family::QRQNN, Family::UCCSD}) {
    AnsatzSpec s = four_qubit(f, f == Family::HAA || f == Family::QRQNN ? 2 : 0, 2);
    if (f == Family::UCCSD) s.layers = 1;
    const Circuit c = build_ansatz(s);
    const Program program(c);
    Real family_worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = oracle::random_angles(c.n_params, rng);
      const VectorXr shift = program.parameter_shift(x, obs);
      const auto fd = oracle::finite_difference(
          [&](const std::vector<Real>& v) { return program.energy(v, obs); }, x);
      for (std::size_t i = 0; i < fd.size(); ++i) {
        family_worst = std::max(family_worst, std::abs(shift(static_cast<Eigen::Index>(i)) - fd[i]));
      }
    }
    detail(s.label() + ": max |shift - FD| " + sci(family_worst));
    worst_grad = std::max(worst_grad, family_worst);
  }
  ok = ok && worst_grad < 1e-6;
  summary += "gradient " + sci(worst_grad);

  // Jordan-Wigner canonical anti-commutation on up to 3 modes.
  Real worst_car = 0.0;
  for (std::size_t modes = 1; modes <= 3; ++modes) {
    const auto dense = [&](const FermionOperator& op) {
      return MatrixXc(to_matrix(jordan_wigner(op, modes), modes));
    };
    const auto dim = static_cast<Eigen::Index>(dimension_of(modes));
    for (std::uint32_t p = 0; p < modes; ++p) {
      for (std::uint32_t q = 0; q < modes; ++q) {
        const MatrixXc ap = dense(FermionOperator::term(1.0, {annihilate(p)}));
        const MatrixXc aq = dense(FermionOperator::term(1.0, {annihilate(q)}));
        const MatrixXc aq_dag = dense(FermionOperator::term(1.0, {create(q)}));
        const MatrixXc delta = (p == q ? 1.0 : 0.0) * MatrixXc::Identity(dim, dim);
        worst_car = std::max(worst_car, (ap * aq_dag + aq_dag * ap - delta).norm());
        worst_car = std::max(worst_car, (ap * aq + aq * ap).norm());
        worst_car = std::max(
            worst_car, (ap - oracle::fermion_dense(FermionOperator::term(1.0, {annihilate(p)}), modes)).norm());
      }
    }
  }
  detail("JW anti-commutation, max deviation " + sci(worst_car));
  ok = ok && worst_car < 1e-12;
  summary += ", JW " + sci(worst_car);

  // Partial trace and channel against the dense oracles.
  Real worst_ptrace = 0.0, worst_channel = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const StateVector psi(5, oracle::random_state(5, rng));
    const std::vector<std::size_t> keep{0, 2, 3};
    const MatrixXc full = psi.amplitudes() * psi.amplitudes().adjoint();
    worst_ptrace = std::max(
        worst_ptrace, (partial_trace(psi, keep).matrix() - oracle::partial_trace_sum(full, 5, keep)).norm());
    const Circuit c = build_ansatz(four_qubit(Family::QRQNN, 1 + trial % 2, 2));
    const auto x = oracle::random_angles(c.n_params, rng);
    const DensityMatrix rho(4, oracle::random_density(4, 2, rng));
    worst_channel = std::max(
        worst_channel, (run_channel(c, x, rho).matrix() - oracle::kraus_channel(c, x, rho.matrix())).norm());
  }
  detail("partial trace " + sci(worst_ptrace) + ", channel " + sci(worst_channel));
  ok = ok && worst_ptrace < 1e-12 && worst_channel < 1e-12;
  summary += ", partial trace " + sci(worst_ptrace) + ", channel " + sci(worst_channel);

  // Variational bound over every optimization of criteria 1-4.
  Real worst_bound = -1e300;
  for (const auto& spec : energy_cells()) {
    const Cell c = solve(spec);
    worst_bound = std::max(worst_bound, c.full_space_e0 - c.min_restart_energy);
  }
  detail("largest E0 - E_VQE over all restarts " + sci(worst_bound));
  ok = ok && worst_bound <= 1e-9;
  summary += ", bound " + sci(worst_bound);

  // Byte-stable CLI output under a fixed seed.
  const auto strip = [](const std::string& s) {
    return std::regex_replace(s, std::regex(R"("wall_seconds":\s*[-0-9.eE+]+)"), "\"wall_seconds\":0");
  };
  bool stable = true;
  for (const auto& args :
       {std::vector<std::string>{"energy", "-f", oracle::data_path("h2_0.7414.fcidump"), "--ansatz",
                                 "haa", "--ancilla", "2", "--restarts", "3", "--seed", "11",
                                 "--format", "json"},
        std::vector<std::string>{"descriptors", "--ansatz", "haa", "--system", "2", "--layer-range",
                                 "1:2", "--pairs", "300", "--samples", "200", "--seed", "5"}}) {
    std::string first;
    for (int rep = 0; rep < 2; ++rep) {
      std::vector<const char*> argv{"haalab"};
      for (const auto& a : args) argv.push_back(a.c_str());
      std::ostringstream out, err;
      run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
      if (rep == 0) first = strip(out.str());
      else stable = stable && !first.empty() && strip(out.str()) == first;
    }
  }
  detail(std::string("CLI output byte-stable: ") + (stable ? "yes" : "no"));
  ok = ok && stable;
  summary += stable ? ", CLI stable" : ", CLI unstable";
  return {ok, "property suite: " + summary};
}

Verdict criterion_11() {
  const char* r = std::getenv("HAALAB_C9H12_REACTANT");
  const char* t = std::getenv("HAALAB_C9H12_TS");
  const bool real = r != nullptr && t != nullptr;
  const std::string reactant = real ? r : oracle::data_path("barrier_standin/reactant.fcidump");
  const std::string ts = real ? t : oracle::data_path("barrier_standin/transition_state.fcidump");
  detail(real ? "using the supplied C9H12 FCIDUMP files"
              : "no C9H12 files supplied (HAALAB_C9H12_REACTANT, HAALAB_C9H12_TS); using the "
                "12-qubit H6 stand-ins");
  bool ok = true;
  std::string summary;
  for (const char* layers : {"1", "2"}) {
    const json j = cli_json({"barrier", "--reactant", reactant, "--transition-state", ts, "--ansatz",
                             "haa", "--ancilla", "2", "--layers", layers, "--restarts", "4",
                             "--max-iterations", "5000"});
    const Real e_r = j.at("reactant").at("best_energy");
    const Real e_t = j.at("transition_state").at("best_energy");
    const Real hartree = j.at("barrier_hartree");
    const Real kcal = j.at("barrier_kcal_per_mol");
    // 12 system qubits x 2 ancillas x 3 angles per layer.
    const std::size_t n_params = j.at("reactant").at("n_params");
    const bool consistent = std::abs(hartree - (e_t - e_r)) < 1e-12 &&
                            std::abs(kcal - 627.509474 * hartree) < 1e-9 * std::max(1.0, std::abs(kcal));
    detail(std::string("HAA(2,") + layers + "): reactant " + fmt("%.8f", e_r) + ", transition state " +
           fmt("%.8f", e_t) + ", barrier " + fmt("%.4f", kcal) + " kcal/mol (FCI " +
           fmt("%.4f", j.at("fci_barrier_kcal_per_mol").get<Real>()) + ")");
    ok = ok && consistent && n_params == 72 * static_cast<std::size_t>(std::stoi(layers));
    summary += (summary.empty() ? "" : ", ") + std::string("HAA(2,") + layers + ") " +
               fmt("%.3f", kcal) + " kcal/mol";
  }
  return {ok, "barrier pipeline ran (functional check, no numeric target): " + summary};
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::function<Verdict()>> criteria = {
      {1, criterion_1}, {2, criterion_2}, {3, criterion_3},  {4, criterion_4},
      {5, criterion_5}, {6, criterion_6}, {7, criterion_7},  {8, criterion_8},
      {9, criterion_9}, {10, criterion_10}, {11, criterion_11}};
  std::vector<int> ids;
  if (argc < 2 || std::string(argv[1]) == "all") {
    for (const auto& [id, fn] : criteria) ids.push_back(id);
  } else {
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  }
  int failures = 0, errors = 0;
  for (int id : ids) {
    const auto it = criteria.find(id);
    if (it == criteria.end()) {
      std::cerr << "unknown criterion " << id << '\n';
      return 2;
    }
    try {
      const Verdict v = it->second();
      std::cout << "criterion " << id << (v.pass ? " PASS: " : " FAIL: ") << v.summary << '\n'
                << std::flush;
      failures += v.pass ? 0 : 1;
    } catch (const std::exception& e) {
      std::cout << "criterion " << id << " ERROR: " << e.what() << '\n' << std::flush;
      errors += 1;
    }
  }
  if (errors > 0) return 3;
  return failures == 0 ? 0 : 1;
}
