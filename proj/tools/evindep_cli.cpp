// Copyright 2026 The evindep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// evindep command-line front end. Talks to the library through the C API only.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "evindep/evindep.h"
#include "reference_tables.hpp"

namespace {

namespace ref = evindep::reference;

enum Exit { kOk = 0, kMismatch = 1, kBadFlags = 2, kIo = 3, kDataMismatch = 4 };

struct Failure {
  int exit_code;
  std::string message;
};

[[noreturn]] void fail(int exit_code, std::string message) {
  throw Failure{exit_code, std::move(message)};
}

int exit_for(evd_status s) {
  switch (s) {
    case EVD_OK:
      return kOk;
    case EVD_ERR_PARSE:
    case EVD_ERR_IO:
      return kIo;
    case EVD_ERR_FRAME_MISMATCH:
    case EVD_ERR_LENGTH_MISMATCH:
    case EVD_ERR_PARTITION_MISMATCH:
      return kDataMismatch;
    default:
      return kBadFlags;
  }
}

void check(evd_status s) {
  if (s != EVD_OK) fail(exit_for(s), evd_last_error());
}

// Loading failures of any kind are input problems.
void check_load(evd_status s, const std::string& path) {
  if (s != EVD_OK) fail(kIo, path + ": " + evd_last_error());
}

struct MassDeleter {
  void operator()(evd_mass* m) const { evd_mass_free(m); }
};
struct DatasetDeleter {
  void operator()(evd_dataset* d) const { evd_dataset_free(d); }
};
struct ReportDeleter {
  void operator()(evd_report* r) const { evd_report_free(r); }
};
using Mass = std::unique_ptr<evd_mass, MassDeleter>;
using Dataset = std::unique_ptr<evd_dataset, DatasetDeleter>;
using Report = std::unique_ptr<evd_report, ReportDeleter>;

struct Trace {
  evd_adjust_trace t{};
  ~Trace() { evd_adjust_trace_free(&t); }
};

std::string owned(char* s) {
  std::string out(s);
  evd_string_free(s);
  return out;
}

std::string num(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) fail(kIo, "cannot read " + path);
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(kIo, "cannot write " + path);
    out << content;
    out.flush();
    if (!out) fail(kIo, "cannot write " + path);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    fail(kIo, "cannot write " + path);
  }
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

Mass load_mass(const std::string& path) {
  evd_mass* m = nullptr;
  check_load(evd_mass_from_json(read_file(path).c_str(), &m), path);
  return Mass(m);
}

Dataset load_dataset(const std::string& path) {
  evd_dataset* d = nullptr;
  check_load(evd_dataset_from_json(read_file(path).c_str(), &d), path);
  return Dataset(d);
}

std::string format_set(const evd_mass* m, uint32_t set) {
  std::string out = "{";
  bool first = true;
  for (size_t i = 0; i < evd_mass_frame_size(m); ++i) {
    if (((set >> i) & 1u) == 0) continue;
    if (!first) out += ",";
    out += evd_mass_label(m, i);
    first = false;
  }
  return out + "}";
}

std::string mass_text(const evd_mass* m) {
  std::string out;
  for (size_t i = 0; i < evd_mass_focal_count(m); ++i) {
    uint32_t set = 0;
    double v = 0.0;
    check(evd_mass_focal(m, i, &set, &v));
    out += "  " + format_set(m, set) + "  " + num(v) + "\n";
  }
  return out;
}

std::string mass_json(const evd_mass* m) {
  char* s = nullptr;
  check(evd_mass_to_json(m, &s));
  return owned(s) + "\n";
}

Mass make_mass(const std::vector<std::string>& labels,
               const std::vector<ref::Cell>& cells) {
  std::vector<const char*> names;
  for (const auto& l : labels) names.push_back(l.c_str());
  std::vector<uint32_t> sets;
  std::vector<double> masses;
  for (const auto& c : cells) {
    sets.push_back(c.set);
    masses.push_back(c.mass);
  }
  evd_mass* m = nullptr;
  check(evd_mass_create(names.data(), names.size(), sets.data(), masses.data(),
                        cells.size(), &m));
  return Mass(m);
}

const std::vector<std::string> kExampleFrame{"w1", "w2", "w3"};

template <size_t N>
Mass make_mass(const std::array<ref::Cell, N>& cells) {
  return make_mass(kExampleFrame,
                   std::vector<ref::Cell>(cells.begin(), cells.end()));
}

Mass adjust(const evd_mass* m, const evd_dependence& dep) {
  evd_mass* out = nullptr;
  check(evd_independence_adjust(m, &dep, &out));
  return Mass(out);
}

Mass conjunctive(const evd_mass* a, const evd_mass* b) {
  const evd_mass* both[] = {a, b};
  evd_mass* out = nullptr;
  check(evd_combine(EVD_RULE_CONJUNCTIVE, both, 2, &out));
  return Mass(out);
}

evd_dependence from_parameters(double alpha, double beta, double gamma) {
  evd_dependence d{};
  check(evd_dependence_from_parameters(alpha, beta, gamma, &d));
  return d;
}

// ---- generate ------------------------------------------------------------

struct GenerateArgs {
  size_t frame_size = 5;
  size_t n = 100;
  uint64_t seed = 0;
  std::string scenario = "independent";
  std::vector<size_t> contradiction;
  std::string out;
};

evd_scenario parse_scenario(const std::string& s) {
  if (s == "independent") return EVD_SCENARIO_INDEPENDENT;
  if (s == "positive") return EVD_SCENARIO_POSITIVE;
  if (s == "negative") return EVD_SCENARIO_NEGATIVE;
  fail(kBadFlags, "unknown scenario " + s);
}

int run_generate(const GenerateArgs& a) {
  evd_generate_config cfg{a.frame_size, a.n, a.seed, parse_scenario(a.scenario),
                          nullptr};
  if (!a.contradiction.empty()) {
    if (a.contradiction.size() != a.frame_size)
      fail(kBadFlags, "--contradiction needs one entry per frame element");
    cfg.contradiction = a.contradiction.data();
  }
  evd_dataset* first = nullptr;
  evd_dataset* second = nullptr;
  check(evd_generate(&cfg, &first, &second));
  Dataset d1(first), d2(second);
  const std::string p1 = a.out + "_s1.json", p2 = a.out + "_s2.json";
  char* s1 = nullptr;
  char* s2 = nullptr;
  check(evd_dataset_to_json(d1.get(), &s1));
  const std::string j1 = owned(s1);
  check(evd_dataset_to_json(d2.get(), &s2));
  const std::string j2 = owned(s2);
  write_file(p1, j1 + "\n");
  write_file(p2, j2 + "\n");
  std::cout << "wrote " << p1 << " and " << p2 << " (" << a.n << " masses each, "
            << a.scenario << ", seed " << a.seed << ")\n";
  return kOk;
}

// ---- analyze -------------------------------------------------------------

struct AnalyzeArgs {
  std::string first, second;
  size_t clusters = 0;
  uint64_t seed = 0;
  std::string alpha_policy = "one";
  std::string format = "text";
  std::string out;
};

evd_direction_summary summary(const evd_report* r, evd_direction dir) {
  evd_direction_summary s{};
  check(evd_report_direction(r, dir, &s));
  return s;
}

std::string analyze_text(const evd_report* r) {
  std::ostringstream os;
  os << "clusters: " << evd_report_clusters(r) << "\n";
  const char* names[] = {"S1 relative to S2", "S2 relative to S1"};
  for (int d = 0; d < 2; ++d) {
    const auto dir = static_cast<evd_direction>(d);
    const auto s = summary(r, dir);
    os << "\n" << names[d] << "\n";
    os << "  independence mass  I " << num(s.m_independent) << "  Ibar "
       << num(s.m_dependent) << "  I u Ibar " << num(s.m_ignorance) << "\n";
    os << "  I_d " << num(s.independence_degree) << "  Ibar_d "
       << num(s.dependence_degree) << "\n";
    os << "  dependence mass  I " << num(s.dependence.independent) << "  P "
       << num(s.dependence.positive) << "  Pbar " << num(s.dependence.negative)
       << "  I u P " << num(s.dependence.indep_or_pos) << "  I u Pbar "
       << num(s.dependence.indep_or_neg) << "  I u P u Pbar "
       << num(s.dependence.ignorance) << "\n";
    os << "  BetP  I " << num(s.betp_independent) << "  P "
       << num(s.betp_positive) << "  Pbar " << num(s.betp_negative) << "\n";
    os << "  linked clusters (row col beta alpha conf)\n";
    for (size_t i = 0; i < s.n_pairs; ++i) {
      evd_pair_link l{};
      check(evd_report_pair(r, dir, i, &l));
      os << "    " << l.row << " " << l.col << " " << num(l.beta) << " "
         << num(l.alpha) << " " << num(l.conf) << "\n";
    }
  }
  return os.str();
}

std::string analyze_csv(const evd_report* r) {
  std::ostringstream os;
  os << "direction,m_I,m_Ibar,m_I_or_Ibar,I_d,Ibar_d,dep_I,dep_P,dep_Pbar,"
        "dep_I_or_P,dep_I_or_Pbar,dep_I_or_P_or_Pbar,BetP_I,BetP_P,BetP_Pbar\n";
  const char* names[] = {"S1|S2", "S2|S1"};
  for (int d = 0; d < 2; ++d) {
    const auto s = summary(r, static_cast<evd_direction>(d));
    const double v[] = {s.m_independent,           s.m_dependent,
                        s.m_ignorance,             s.independence_degree,
                        s.dependence_degree,       s.dependence.independent,
                        s.dependence.positive,     s.dependence.negative,
                        s.dependence.indep_or_pos, s.dependence.indep_or_neg,
                        s.dependence.ignorance,    s.betp_independent,
                        s.betp_positive,           s.betp_negative};
    os << names[d];
    for (double x : v) os << "," << num(x);
    os << "\n";
  }
  return os.str();
}

int run_analyze(const AnalyzeArgs& a) {
  evd_analysis_config cfg{a.clusters, a.seed,
                          a.alpha_policy == "cluster-size" ? EVD_ALPHA_CLUSTER_SIZE
                                                           : EVD_ALPHA_ONE};
  Dataset d1 = load_dataset(a.first);
  Dataset d2 = load_dataset(a.second);
  evd_report* r = nullptr;
  check(evd_analyze(d1.get(), d2.get(), &cfg, &r));
  Report report(r);
  std::string content;
  if (a.format == "csv") {
    content = analyze_csv(report.get());
  } else if (a.format == "json") {
    char* s = nullptr;
    check(evd_report_to_json(report.get(), &s));
    content = owned(s) + "\n";
  } else {
    content = analyze_text(report.get());
  }
  emit(a.out, content);
  return kOk;
}

// ---- adjust --------------------------------------------------------------

struct AdjustArgs {
  std::string input;
  std::optional<double> i, p, n, ip, in, ipn;
  std::optional<double> alpha, beta, gamma;
  bool trace = false;
  bool closed_form = false;
  std::string out;
};

evd_dependence dependence_from(const AdjustArgs& a) {
  const bool explicit_masses = a.i || a.p || a.n || a.ip || a.in || a.ipn;
  const bool parameters = a.alpha || a.beta || a.gamma;
  if (explicit_masses && parameters)
    fail(kBadFlags, "give either --I/--P/--N masses or --alpha/--beta/--gamma");
  if (!explicit_masses && !parameters)
    fail(kBadFlags, "a dependence mass is required");
  if (parameters)
    return from_parameters(a.alpha.value_or(1.0), a.beta.value_or(0.0),
                           a.gamma.value_or(0.0));
  return evd_dependence{a.i.value_or(0), a.p.value_or(0),  a.n.value_or(0),
                        a.ip.value_or(0), a.in.value_or(0), a.ipn.value_or(0)};
}

std::string trace_text(const evd_adjust_trace& t) {
  std::ostringstream os;
  const std::pair<const char*, const evd_mass*> columns[] = {
      {"dependence mass, vacuous extension", t.extended},
      {"m[I], deconditioned", t.deconditioned_indep},
      {"m[Pbar], deconditioned", t.deconditioned_neg},
      {"conjunctive combination", t.combined},
      {"marginal", t.marginal}};
  for (const auto& [name, m] : columns) os << name << "\n" << mass_text(m);
  return os.str();
}

int run_adjust(const AdjustArgs& a) {
  const evd_dependence dep = dependence_from(a);
  const std::string text = read_file(a.input);
  int is_dataset = 0;
  check_load(evd_is_dataset_json(text.c_str(), &is_dataset), a.input);
  auto adjust_one = [&](const evd_mass* m) {
    evd_mass* out = nullptr;
    check(a.closed_form ? evd_closed_form_adjust(m, &dep, &out)
                        : evd_independence_adjust(m, &dep, &out));
    return Mass(out);
  };

  if (is_dataset) {
    if (a.trace) fail(kBadFlags, "--trace needs a single mass function");
    evd_dataset* raw = nullptr;
    check_load(evd_dataset_from_json(text.c_str(), &raw), a.input);
    Dataset d(raw);
    std::vector<Mass> adjusted;
    for (size_t i = 0; i < evd_dataset_size(d.get()); ++i) {
      evd_mass* m = nullptr;
      check(evd_dataset_mass(d.get(), i, &m));
      Mass original(m);
      adjusted.push_back(adjust_one(original.get()));
    }
    std::vector<const evd_mass*> ptrs;
    for (const auto& m : adjusted) ptrs.push_back(m.get());
    evd_dataset* result = nullptr;
    check(evd_dataset_create(evd_dataset_source(d.get()), ptrs.data(),
                             ptrs.size(), &result));
    Dataset out(result);
    char* s = nullptr;
    check(evd_dataset_to_json(out.get(), &s));
    emit(a.out, owned(s) + "\n");
    return kOk;
  }

  evd_mass* raw = nullptr;
  check_load(evd_mass_from_json(text.c_str(), &raw), a.input);
  Mass m(raw);
  if (a.trace) {
    Trace t;
    check(evd_independence_adjust_trace(m.get(), &dep, &t.t));
    std::cout << trace_text(t.t);
    if (!a.out.empty()) write_file(a.out, mass_json(t.t.marginal));
    return kOk;
  }
  Mass adjusted = adjust_one(m.get());
  if (a.out.empty()) {
    std::cout << mass_text(adjusted.get());
  } else {
    write_file(a.out, mass_json(adjusted.get()));
  }
  return kOk;
}

// ---- combine -------------------------------------------------------------

struct CombineArgs {
  std::vector<std::string> inputs;
  std::string rule = "conjunctive";
  std::string out;
};

int run_combine(const CombineArgs& a) {
  if (a.inputs.size() < 2) fail(kBadFlags, "combine needs at least two masses");
  const evd_rule rule = a.rule == "disjunctive" ? EVD_RULE_DISJUNCTIVE
                        : a.rule == "mean"      ? EVD_RULE_MEAN
                                                : EVD_RULE_CONJUNCTIVE;
  std::vector<Mass> masses;
  for (const auto& path : a.inputs) masses.push_back(load_mass(path));
  std::vector<const evd_mass*> ptrs;
  for (const auto& m : masses) ptrs.push_back(m.get());
  evd_mass* out = nullptr;
  check(evd_combine(rule, ptrs.data(), ptrs.size(), &out));
  Mass combined(out);
  if (a.out.empty())
    std::cout << mass_text(combined.get());
  else
    write_file(a.out, mass_json(combined.get()));
  return kOk;
}

// ---- sweep ---------------------------------------------------------------

struct Grid {
  double start, stop, step;
};

Grid parse_grid(const std::string& spec) {
  Grid g{};
  char tail = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &g.start, &g.stop, &g.step,
                  &tail) != 3)
    fail(kBadFlags, "grid must be start:stop:step, got " + spec);
  if (!(g.step > 0) || !(g.start <= g.stop) || g.start < 0 || g.stop > 1)
    fail(kBadFlags, "grid needs 0 <= start <= stop <= 1 and step > 0");
  return g;
}

std::vector<double> grid_points(const Grid& g) {
  std::vector<double> out;
  for (size_t i = 0;; ++i) {
    double v = g.start + static_cast<double>(i) * g.step;
    if (v > g.stop + 1e-9) break;
    if (std::abs(v - g.stop) <= 1e-9) v = g.stop;
    out.push_back(std::round(v * 1e12) / 1e12);
  }
  return out;
}

struct SweepArgs {
  std::string mass;
  std::string grid = "0:1:0.1";
  std::optional<double> alpha, beta, gamma;
  std::string out;
};

std::string sweep_csv(const evd_mass* m, const Grid& grid,
                      std::optional<double> alpha, std::optional<double> beta,
                      std::optional<double> gamma) {
  const auto points = grid_points(grid);
  auto axis = [&](std::optional<double> fixed) {
    return fixed ? std::vector<double>{*fixed} : points;
  };
  const size_t k = evd_mass_frame_size(m);
  const uint32_t omega = static_cast<uint32_t>((uint64_t{1} << k) - 1);
  std::vector<uint32_t> columns{0, omega};
  for (uint32_t s = 1; s < omega; ++s) columns.push_back(s);

  std::ostringstream os;
  os << "alpha,beta,gamma";
  for (uint32_t s : columns) os << ",m" << format_set(m, s);
  os << "\n";
  for (double a : axis(alpha))
    for (double b : axis(beta))
      for (double g : axis(gamma)) {
        Mass adjusted = adjust(m, from_parameters(a, b, g));
        os << num(a) << "," << num(b) << "," << num(g);
        for (uint32_t s : columns) os << "," << num(evd_mass_value(adjusted.get(), s));
        os << "\n";
      }
  return os.str();
}

int run_sweep(const SweepArgs& a) {
  const Grid g = parse_grid(a.grid);
  for (auto v : {a.alpha, a.beta, a.gamma})
    if (v && (*v < 0 || *v > 1)) fail(kBadFlags, "parameters must lie in [0, 1]");
  Mass m = load_mass(a.mass);
  emit(a.out, sweep_csv(m.get(), g, a.alpha, a.beta, a.gamma));
  return kOk;
}

// ---- cluster -------------------------------------------------------------

struct ClusterArgs {
  std::string input;
  size_t clusters = 0;
  uint64_t seed = 0;
  std::string out;
};

int run_cluster(const ClusterArgs& a) {
  Dataset d = load_dataset(a.input);
  const size_t n = evd_dataset_size(d.get());
  size_t c = a.clusters;
  if (c == 0) {
    evd_mass* m = nullptr;
    check(evd_dataset_mass(d.get(), 0, &m));
    c = evd_mass_frame_size(m);
    evd_mass_free(m);
  }
  std::vector<size_t> assignment(n);
  check(evd_cluster(d.get(), c, a.seed, assignment.data(), assignment.size()));
  std::ostringstream os;
  os << "clusters " << c << "\n";
  for (size_t i = 0; i < n; ++i) os << i << " " << assignment[i] << "\n";
  emit(a.out, os.str());
  return kOk;
}

// ---- reproduce -----------------------------------------------------------

struct Checker {
  int failures = 0;
  void cell(const std::string& what, double expected, double got,
            double tolerance) {
    const double diff = std::abs(expected - got);
    const bool ok = diff <= tolerance;
    if (!ok) ++failures;
    std::cout << "  " << (ok ? "ok  " : "FAIL") << "  " << what << "  expected "
              << num(expected) << "  got " << num(got) << "\n";
  }
  void flag(const std::string& what, bool ok) {
    if (!ok) ++failures;
    std::cout << "  " << (ok ? "ok  " : "FAIL") << "  " << what << "\n";
  }
};

const char* kRowNames[] = {"{}", "{w1}", "{w2}", "{w1,w2}", "{w1,w2,w3}"};

template <size_t N>
void check_cells(Checker& c, const std::string& column, const evd_mass* m,
                 const std::array<ref::Cell, N>& cells, double tolerance) {
  for (const auto& cell : cells)
    c.cell(column + " " + format_set(m, cell.set), cell.mass,
           evd_mass_value(m, cell.set), tolerance);
}

int reproduce_table1() {
  Checker c;
  const char* names[] = {"independent", "positive", "negative"};
  const evd_scenario scenarios[] = {EVD_SCENARIO_INDEPENDENT, EVD_SCENARIO_POSITIVE,
                                    EVD_SCENARIO_NEGATIVE};
  auto run = [](evd_scenario sc, uint64_t seed) {
    evd_generate_config g{ref::kRegimeFrameSize, ref::kRegimeObjects, seed, sc,
                          nullptr};
    evd_dataset* a = nullptr;
    evd_dataset* b = nullptr;
    check(evd_generate(&g, &a, &b));
    Dataset d1(a), d2(b);
    evd_analysis_config cfg{ref::kRegimeFrameSize, seed, EVD_ALPHA_ONE};
    evd_report* r = nullptr;
    check(evd_analyze(d1.get(), d2.get(), &cfg, &r));
    return Report(r);
  };
  auto argmax = [](const evd_direction_summary& s) {
    if (s.betp_independent >= s.betp_positive &&
        s.betp_independent >= s.betp_negative)
      return 0;
    return s.betp_positive >= s.betp_negative ? 1 : 2;
  };
  std::cout << "source dependence regimes, seed " << ref::kRegimeSeed << ", n "
            << ref::kRegimeObjects << ", |Omega| " << ref::kRegimeFrameSize << "\n";
  for (int k = 0; k < 3; ++k) {
    Report r = run(scenarios[k], ref::kRegimeSeed);
    std::cout << names[k] << "\n";
    for (int d = 0; d < 2; ++d) {
      const auto s = summary(r.get(), static_cast<evd_direction>(d));
      const char* dir = d == 0 ? "S1|S2" : "S2|S1";
      std::cout << "  " << dir << "  I_d " << num(s.independence_degree)
                << "  m(I) " << num(s.dependence.independent) << "  m(P) "
                << num(s.dependence.positive) << "  m(Pbar) "
                << num(s.dependence.negative);
      if (k == 0) {
        std::cout << "  (reference run: I_d " << num(ref::kPublishedIndependence[d])
                  << ")\n";
        c.flag(std::string(dir) + " I_d > 0.5", s.independence_degree > 0.5);
      } else {
        const auto& pub = k == 1 ? ref::kPublishedPositive[d]
                                 : ref::kPublishedNegative[d];
        std::cout << "  (reference run: " << num(pub[0]) << " " << num(pub[1])
                  << " " << num(pub[2]) << ")\n";
        c.flag(std::string(dir) + " argmax " + (k == 1 ? "P" : "Pbar"),
               argmax(s) == k);
      }
    }
  }
  double total = 0.0;
  for (size_t i = 0; i < ref::kRegimeSeedCount; ++i) {
    Report r = run(EVD_SCENARIO_INDEPENDENT, ref::kRegimeSeed + i);
    total += summary(r.get(), EVD_FORWARD).independence_degree +
             summary(r.get(), EVD_BACKWARD).independence_degree;
  }
  const double mean = total / (2.0 * ref::kRegimeSeedCount);
  std::cout << "mean independent I_d over " << ref::kRegimeSeedCount
            << " seeds: " << num(mean) << "\n";
  c.flag("mean within [" + num(ref::kRegimeMeanLow) + ", " +
             num(ref::kRegimeMeanHigh) + "]",
         mean >= ref::kRegimeMeanLow && mean <= ref::kRegimeMeanHigh);
  return c.failures ? kMismatch : kOk;
}

int reproduce_table2() {
  Checker c;
  Mass m1 = make_mass(ref::kM1);
  const evd_dependence dep{ref::kExampleI, ref::kExampleP, ref::kExamplePbar, 0, 0, 0};
  Trace t;
  check(evd_independence_adjust_trace(m1.get(), &dep, &t.t));
  const evd_mass* columns[] = {t.t.extended, t.t.deconditioned_indep,
                               t.t.deconditioned_neg, t.t.combined};
  const char* names[] = {"extension", "m[I]", "m[Pbar]", "combined"};
  std::array<double, 4> listed{};
  for (const auto& row : ref::kProductTable) {
    uint32_t set = 0;
    for (const auto& part : row.parts)
      if (part.right != 0) set |= evd_product_rectangle(3, part.left, part.right);
    for (size_t k = 0; k < 4; ++k) {
      const double got = evd_mass_value(columns[k], set);
      listed[k] += got;
      c.cell(std::string(names[k]) + " " + row.name, row.columns[k], got, 1e-9);
    }
  }
  for (size_t k = 0; k < 4; ++k)
    c.cell(std::string(names[k]) + " total on listed rows", 1.0, listed[k], 1e-9);
  return c.failures ? kMismatch : kOk;
}

int reproduce_table3() {
  Checker c;
  Mass m1 = make_mass(ref::kM1);
  Mass m2 = make_mass(ref::kM2);
  const evd_dependence dep{ref::kExampleI, ref::kExampleP, ref::kExamplePbar, 0, 0, 0};
  Mass adjusted = adjust(m1.get(), dep);
  check_cells(c, "marginal", adjusted.get(), ref::kAdjustedM1, 1e-9);
  check_cells(c, "m2", m2.get(), ref::kM2, 1e-9);
  Mass combined = conjunctive(adjusted.get(), m2.get());
  check_cells(c, "combined", combined.get(), ref::kAdjustedM1CombinedM2, 1e-9);
  return c.failures ? kMismatch : kOk;
}

int reproduce_table4() {
  Checker c;
  Mass m1 = make_mass(ref::kM1);
  Mass m2 = make_mass(ref::kM2);
  for (size_t i = 0; i < 3; ++i) {
    const auto& pi = ref::kSourceICases[i];
    Mass a1 = adjust(m1.get(), from_parameters(pi.alpha, pi.beta, pi.gamma));
    const std::string block = "S_i(" + num(pi.alpha) + "," + num(pi.beta) + "," +
                              num(pi.gamma) + ")";
    std::cout << block << "\n";
    for (size_t r = 0; r < 5; ++r)
      c.cell("m1' " + std::string(kRowNames[r]), ref::kAdjustedI[i][r],
             evd_mass_value(a1.get(), ref::kCombinationRows[r]),
             ref::kPrintedTolerance);
    for (size_t j = 0; j < 3; ++j) {
      const auto& pj = ref::kSourceJCases[j];
      Mass a2 = adjust(m2.get(), from_parameters(pj.alpha, pj.beta, pj.gamma));
      Mass both = conjunctive(a1.get(), a2.get());
      const std::string tag = " S_j(" + num(pj.alpha) + "," + num(pj.beta) + "," +
                              num(pj.gamma) + ") ";
      for (size_t r = 0; r < 5; ++r) {
        c.cell("m2'" + tag + kRowNames[r], ref::kAdjustedJ[j][r],
               evd_mass_value(a2.get(), ref::kCombinationRows[r]),
               ref::kPrintedTolerance);
        c.cell("m1'&m2'" + tag + kRowNames[r], ref::kCombined[i][j][r],
               evd_mass_value(both.get(), ref::kCombinationRows[r]),
               ref::kPrintedTolerance);
      }
    }
  }
  return c.failures ? kMismatch : kOk;
}

// Dogmatic input for the figure sweeps.
Mass figure_mass() {
  return make_mass(kExampleFrame, {{ref::kW1, 0.6}, {ref::kW1W2, 0.4}});
}

int reproduce_figure(int which) {
  Checker c;
  Mass m = figure_mass();
  const Grid grid{0, 1, 0.1};
  const auto points = grid_points(grid);
  std::cout << (which == 1 ? sweep_csv(m.get(), grid, 1.0, std::nullopt, std::nullopt)
                           : sweep_csv(m.get(), grid, std::nullopt, std::nullopt, 1.0));
  const uint32_t omega = 0b111;
  int bad_empty = 0, bad_omega = 0, bad_monotone = 0;
  for (double x : points) {
    double previous = -1.0;
    for (double y : points) {
      // Figure 1 varies (beta, gamma) at alpha = 1, figure 2 (alpha, beta) at
      // gamma = 1; the inner loop runs over beta in both.
      const double a = which == 1 ? 1.0 : x;
      const double b = y;
      const double g = which == 1 ? x : 1.0;
      Mass adjusted = adjust(m.get(), from_parameters(a, b, g));
      const double empty = evd_mass_value(adjusted.get(), 0);
      if (std::abs(empty - a * b * g) > 1e-12) ++bad_empty;
      if (which == 2 && std::abs(evd_mass_value(adjusted.get(), omega)) > 1e-12)
        ++bad_omega;
      if (empty < previous) ++bad_monotone;
      previous = empty;
    }
  }
  c.flag("m({}) = alpha*beta*gamma on every grid point", bad_empty == 0);
  c.flag("m({}) non-decreasing in beta", bad_monotone == 0);
  if (which == 2) c.flag("m(Omega) = 0 for a dogmatic input at gamma = 1", bad_omega == 0);
  return c.failures ? kMismatch : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Estimate and use the independence of belief-function sources"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate two seeded sources");
  generate->add_option("--frame-size", gen.frame_size, "Frame cardinality")
      ->check(CLI::Range(1, 16))
      ->capture_default_str();
  generate->add_option("--n", gen.n, "Masses per source")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  generate->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  generate->add_option("--scenario", gen.scenario, "Dependence scenario")
      ->check(CLI::IsMember({"independent", "positive", "negative"}))
      ->capture_default_str();
  generate->add_option("--contradiction", gen.contradiction,
                       "Contradictory class of each class (negative scenario)")
      ->delimiter(',');
  generate->add_option("--out", gen.out, "Output prefix: <out>_s1.json, <out>_s2.json")
      ->required();

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Estimate source independence");
  analyze->add_option("first", an.first, "Dataset of source S1")->required();
  analyze->add_option("second", an.second, "Dataset of source S2")->required();
  analyze->add_option("--clusters", an.clusters, "Cluster count (default |Omega|)")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--seed", an.seed, "Clustering seed")->capture_default_str();
  analyze->add_option("--alpha-policy", an.alpha_policy, "Pair reliability")
      ->check(CLI::IsMember({"one", "cluster-size"}))
      ->capture_default_str();
  analyze->add_option("--format", an.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  analyze->add_option("--out", an.out, "Write to file instead of stdout");

  AdjustArgs ad;
  auto* adjust_cmd = app.add_subcommand("adjust", "Weaken masses by a dependence mass");
  adjust_cmd->add_option("input", ad.input, "Mass or dataset file")->required();
  const auto unit = CLI::Range(0.0, 1.0);
  adjust_cmd->add_option("--I", ad.i, "m(I)")->check(unit);
  adjust_cmd->add_option("--P", ad.p, "m(P)")->check(unit);
  adjust_cmd->add_option("--N", ad.n, "m(Pbar)")->check(unit);
  adjust_cmd->add_option("--IP", ad.ip, "m(I u P)")->check(unit);
  adjust_cmd->add_option("--IN", ad.in, "m(I u Pbar)")->check(unit);
  adjust_cmd->add_option("--IPN", ad.ipn, "m(I u P u Pbar)")->check(unit);
  adjust_cmd->add_option("--alpha", ad.alpha, "Reliability")->check(unit);
  adjust_cmd->add_option("--beta", ad.beta, "Dependence rate")->check(unit);
  adjust_cmd->add_option("--gamma", ad.gamma, "Negative dependence rate")->check(unit);
  adjust_cmd->add_flag("--trace", ad.trace, "Print the product-frame steps");
  adjust_cmd->add_flag("--closed-form", ad.closed_form, "Use the closed form");
  adjust_cmd->add_option("--out", ad.out, "Write JSON to file");

  CombineArgs co;
  auto* combine = app.add_subcommand("combine", "Combine mass functions");
  combine->add_option("inputs", co.inputs, "Mass files")->required();
  combine->add_option("--rule", co.rule, "Combination rule")
      ->check(CLI::IsMember({"conjunctive", "disjunctive", "mean"}))
      ->capture_default_str();
  combine->add_option("--out", co.out, "Write JSON to file");

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "Adjusted masses over a parameter grid");
  sweep->add_option("--mass", sw.mass, "Mass file")->required();
  sweep->add_option("--grid", sw.grid, "start:stop:step for unfixed parameters")
      ->capture_default_str();
  sweep->add_option("--alpha", sw.alpha, "Fix alpha");
  sweep->add_option("--beta", sw.beta, "Fix beta");
  sweep->add_option("--gamma", sw.gamma, "Fix gamma");
  sweep->add_option("--out", sw.out, "Write CSV to file");

  ClusterArgs cl;
  auto* cluster = app.add_subcommand("cluster", "Cluster one source's masses");
  cluster->add_option("input", cl.input, "Dataset file")->required();
  cluster->add_option("--clusters", cl.clusters, "Cluster count (default |Omega|)")
      ->check(CLI::PositiveNumber);
  cluster->add_option("--seed", cl.seed, "Seed")->capture_default_str();
  cluster->add_option("--out", cl.out, "Write partition to file");

  int table = 0, figure = 0;
  auto* reproduce = app.add_subcommand("reproduce", "Check a reference table or figure");
  auto* table_opt = reproduce->add_option("--table", table, "Table 1-4")
                        ->check(CLI::Range(1, 4));
  auto* figure_opt = reproduce->add_option("--figure", figure, "Figure 1-2")
                         ->check(CLI::Range(1, 2));
  table_opt->excludes(figure_opt);
  reproduce->require_option(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadFlags;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*analyze) return run_analyze(an);
    if (*adjust_cmd) return run_adjust(ad);
    if (*combine) return run_combine(co);
    if (*sweep) return run_sweep(sw);
    if (*cluster) return run_cluster(cl);
    if (*reproduce) {
      int code = kOk;
      switch (table) {
        case 1: code = reproduce_table1(); break;
        case 2: code = reproduce_table2(); break;
        case 3: code = reproduce_table3(); break;
        case 4: code = reproduce_table4(); break;
        default: code = reproduce_figure(figure); break;
      }
      std::cout << (code == kOk ? "PASS" : "FAIL") << "\n";
      return code;
    }
  } catch (const Failure& f) {
    std::cerr << "evindep: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "evindep: " << e.what() << "\n";
    return kBadFlags;
  }
  return kOk;
}
