#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pstlab/analysis.hpp"
#include "pstlab/catalog.hpp"
#include "pstlab/errors.hpp"
#include "pstlab/graph_spec.hpp"
#include "pstlab/verify.hpp"

using json = nlohmann::ordered_json;
using namespace pstlab;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

int default_grid() {
  if (const char* env = std::getenv("PSTLAB_GRID")) {
    const int parsed = std::atoi(env);
    if (parsed >= 2) return parsed;
  }
  return 20000;
}

std::string spectrum_summary(const IntegralCertificate& cert) {
  std::string out;
  for (const auto& [lambda, mult] : cert.roots) {
    if (!out.empty()) out += " ";
    out += std::to_string(lambda) + ":" + std::to_string(mult);
  }
  return out;
}

json certificate_json(const Graph& g, const IntegralityResult& result) {
  json j;
  j["graph"] = g.name();
  j["n"] = g.order();
  j["edges"] = g.edge_count();
  j["integral"] = result.is_integral();
  if (result.is_integral()) {
    json roots = json::array();
    for (const auto& [lambda, mult] : result.certificate->roots)
      roots.push_back({{"lambda", lambda}, {"multiplicity", mult}});
    j["spectrum"] = roots;
    json coeffs = json::array();
    for (const Int& c : result.certificate->charpoly) coeffs.push_back(c.get_str());
    j["charpoly"] = coeffs;
  } else {
    j["residual"] = format_poly(result.residual);
  }
  return j;
}

json pair_json(const FidelityMax& fm) {
  return {{"i", fm.i}, {"j", fm.j}, {"t_star", fm.t_star}, {"f_star", fm.f_star}};
}

json report_json(const PstReport& report) {
  json j;
  j["graph"] = report.graph;
  json pairs = json::array();
  for (const FidelityMax& fm : report.pairs) pairs.push_back(pair_json(fm));
  j["pairs"] = pairs;
  j["integral"] = report.integral;
  j["periodic"] = report.periodic;
  if (report.period)
    j["period"] = *report.period;
  else
    j["period"] = nullptr;
  j["verdict"] = report.pst ? "PST" : "no-PST";
  return j;
}

int cmd_spectrum(const std::string& spec, bool as_json, bool integral_mode) {
  const Graph g = resolve_graph_spec(spec);
  const IntegralityResult result = integral_certificate(g);
  if (as_json) {
    std::cout << certificate_json(g, result).dump(2) << "\n";
    return 0;
  }
  std::cout << "graph: " << (g.name().empty() ? spec : g.name()) << "  n=" << g.order()
            << "  edges=" << g.edge_count() << "\n";
  if (integral_mode) {
    std::cout << format_certificate(result);
  } else if (result.is_integral()) {
    std::cout << "spectrum: " << spectrum_summary(*result.certificate) << "\n";
    std::cout << "charpoly: " << format_poly(result.certificate->charpoly) << "\n";
  } else {
    std::cout << "not integral; residual " << format_poly(result.residual) << "\n";
  }
  return 0;
}

int cmd_maxfid(const std::string& spec, std::optional<std::pair<int, int>> pair, bool all_pairs,
               std::optional<double> tmax, int grid, bool as_json) {
  const Graph g = resolve_graph_spec(spec);
  if (all_pairs) {
    const PstReport report = pst_report(g, tmax, 1e-6, grid);
    if (as_json) {
      std::cout << report_json(report).dump(2) << "\n";
      return 0;
    }
    std::cout << "graph: " << report.graph << "  pairs=" << report.pairs.size()
              << "  t_max=" << fmt6(report.t_max) << "\n";
    std::cout << "best: (" << report.best.i << "," << report.best.j
              << ")  f*=" << fmt6(report.best.f_star) << "  t*=" << fmt6(report.best.t_star)
              << "  [" << (report.pst ? "PST" : "no-PST") << "]\n";
    for (const FidelityMax& fm : report.pairs)
      std::cout << "  (" << fm.i << "," << fm.j << ")  f*=" << fmt6(fm.f_star)
                << "  t*=" << fmt6(fm.t_star) << "\n";
    return 0;
  }

  const auto [i, j] = *pair;
  const IntegralityResult integrality = integral_certificate(g);
  const bool periodic =
      integrality.is_integral() && g.regular_degree().has_value() && g.connected();
  std::optional<double> graph_period;
  if (periodic && g.order() > 1) graph_period = period(g, *integrality.certificate);
  const double window = tmax.value_or(graph_period.value_or(6.0 * kPi));
  const FidelityMax fm = max_fidelity(g, i, j, window, grid);
  if (as_json) {
    json j_out;
    j_out["graph"] = g.name().empty() ? spec : g.name();
    j_out["pairs"] = json::array({pair_json(fm)});
    j_out["integral"] = integrality.is_integral();
    j_out["periodic"] = periodic;
    if (graph_period)
      j_out["period"] = *graph_period;
    else
      j_out["period"] = nullptr;
    j_out["verdict"] = (i != j && fm.f_star >= 1.0 - 1e-6) ? "PST" : "no-PST";
    std::cout << j_out.dump(2) << "\n";
    return 0;
  }
  std::cout << "pair (" << fm.i << "," << fm.j << ")  f*=" << fmt6(fm.f_star)
            << "  t*=" << fmt6(fm.t_star) << "  grid=" << fm.grid_size << "\n";
  return 0;
}

int cmd_verify_theorem(int grid, bool as_json) {
  const TheoremReport report = verify_theorem(grid);
  if (as_json) {
    json j;
    json rows = json::array();
    for (const TheoremRow& row : report.rows) {
      json r;
      r["key"] = row.key;
      r["n"] = row.n;
      r["integral"] = row.integral;
      r["cubic"] = row.cubic;
      r["periodic"] = row.periodic;
      r["max"] = pair_json(row.best);
      r["expected"] = row.expected_max;
      r["tol"] = row.tol;
      r["pst"] = row.pst;
      r["ok"] = row.ok;
      rows.push_back(r);
    }
    j["graphs"] = rows;
    j["verdict"] = report.pass ? "pass" : "fail";
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("%-16s %3s %9s %9s %10s %9s %5s %3s\n", "graph", "n", "max f*", "t*", "expected",
                "tol", "PST", "ok");
    for (const TheoremRow& row : report.rows)
      std::printf("%-16s %3d %9.6f %9.6f %10.6f %9.1e %5s %3s\n", row.key.c_str(), row.n,
                  row.best.f_star, row.best.t_star, row.expected_max, row.tol,
                  row.pst ? "PST" : "-", row.ok ? "ok" : "FAIL");
    if (report.pass)
      std::printf("theorem verified: cube is the only periodic connected cubic graph with PST "
                  "(%.1f s)\n",
                  report.elapsed_seconds);
    else
      std::printf("THEOREM VERIFICATION FAILED\n");
  }
  return report.pass ? 0 : 3;
}

int cmd_entry(const std::string& spec, int i, int j, int samples, double tmax) {
  const Graph g = resolve_graph_spec(spec);
  std::cout << entry_csv(g, i, j, samples, tmax);
  return 0;
}

int cmd_persistency(const std::string& spec, int i, int j, double eps, int grid, bool as_json) {
  const Graph g = resolve_graph_spec(spec);
  const PersistencyResult res = persistency(g, i, j, eps, grid);
  if (as_json) {
    json out;
    out["graph"] = g.name().empty() ? spec : g.name();
    out["i"] = res.i;
    out["j"] = res.j;
    out["epsilon"] = res.epsilon;
    out["level"] = res.level;
    out["t0"] = res.t0;
    out["t1"] = res.t1;
    out["length"] = res.length;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "pair (" << res.i << "," << res.j << ")  eps=" << fmt6(res.epsilon)
            << "  level=" << fmt6(res.level) << "  window=[" << fmt6(res.t0) << ", "
            << fmt6(res.t1) << "]  length=" << fmt6(res.length) << "\n";
  return 0;
}

int cmd_hadamard(const std::string& spec, double t, double tol, bool as_json) {
  const Graph g = resolve_graph_spec(spec);
  const ComplexMatrix u = propagator(g, t);
  const std::optional<double> scale = is_scaled_complex_hadamard(u, tol);
  if (as_json) {
    json out;
    out["graph"] = g.name().empty() ? spec : g.name();
    out["t"] = t;
    out["hadamard"] = scale.has_value();
    if (scale)
      out["scale"] = *scale;
    else
      out["scale"] = nullptr;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (scale)
    std::cout << "scaled complex Hadamard, scale " << fmt6(*scale) << "\n";
  else
    std::cout << "not a scaled complex Hadamard matrix at t=" << fmt6(t) << "\n";
  return 0;
}

int cmd_probtransfer(int steps, bool as_json) {
  const ProbabilityTransferResult res = probability_transfer_search_exact(w_k4_seed(), 3, steps);
  if (as_json) {
    json out;
    out["unitary"] = "w_k4";
    out["steps"] = steps;
    if (res.transfer) {
      const auto [t, i, j] = *res.transfer;
      out["transfer"] = {{"t", t}, {"i", i}, {"j", j}};
    } else {
      out["transfer"] = nullptr;
    }
    out["pattern_count"] = res.patterns.size();
    json pats = json::array();
    for (const ZeroPattern& pat : res.patterns) {
      std::string rows;
      for (int r = 0; r < pat.n; ++r) {
        for (int c = 0; c < pat.n; ++c) rows += pat.nonzero[r * pat.n + c] ? '*' : '0';
        if (r + 1 < pat.n) rows += '/';
      }
      pats.push_back(rows);
    }
    out["patterns"] = pats;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (res.transfer) {
    const auto [t, i, j] = *res.transfer;
    std::cout << "perfect probability transfer at step " << t << " from " << i << " to " << j
              << "\n";
  } else {
    std::cout << "no perfect probability transfer; " << res.patterns.size()
              << " zero-patterns\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"continuous-time quantum walk analysis on graphs"};
  app.require_subcommand(1);
  const int grid_default = default_grid();

  std::string spec;
  bool as_json = false;
  int grid = grid_default;

  auto* sc_spectrum = app.add_subcommand("spectrum", "exact spectrum / integrality certificate");
  sc_spectrum->add_option("spec", spec, "graph spec, e.g. name:k33")->required();
  sc_spectrum->add_flag("--json", as_json);

  auto* sc_integral = app.add_subcommand("integral", "integrality decision with residual");
  sc_integral->add_option("spec", spec)->required();
  sc_integral->add_flag("--json", as_json);

  auto* sc_maxfid = app.add_subcommand("maxfid", "global fidelity maximization");
  std::vector<int> pair_flags;
  bool all_pairs = false;
  std::optional<double> tmax;
  double tmax_raw = 0.0;
  sc_maxfid->add_option("spec", spec)->required();
  auto* pair_opt = sc_maxfid->add_option("--pair", pair_flags, "vertex pair i j")->expected(2);
  sc_maxfid->add_flag("--all-pairs", all_pairs);
  auto* tmax_opt = sc_maxfid->add_option("--tmax", tmax_raw, "search window upper end");
  sc_maxfid->add_option("--grid", grid, "grid sample count");
  sc_maxfid->add_flag("--json", as_json);

  auto* sc_verify = app.add_subcommand("verify-theorem", "check the cubic PST classification");
  sc_verify->add_option("--grid", grid);
  sc_verify->add_flag("--json", as_json);

  auto* sc_entry = app.add_subcommand("entry", "CSV time series of one propagator entry");
  int vi = 0, vj = 0, samples = 1000;
  double entry_tmax = 2.0 * kPi;
  sc_entry->add_option("spec", spec)->required();
  sc_entry->add_option("i", vi)->required();
  sc_entry->add_option("j", vj)->required();
  sc_entry->add_option("--samples", samples);
  sc_entry->add_option("--tmax", entry_tmax);

  auto* sc_persistency = app.add_subcommand("persistency", "longest stable-fidelity window");
  double eps = 0.0;
  int pgrid = 20001;
  sc_persistency->add_option("spec", spec)->required();
  sc_persistency->add_option("i", vi)->required();
  sc_persistency->add_option("j", vj)->required();
  sc_persistency->add_option("--eps", eps)->required();
  sc_persistency->add_option("--grid", pgrid);
  sc_persistency->add_flag("--json", as_json);

  auto* sc_hadamard = app.add_subcommand("hadamard", "scaled complex Hadamard snapshot test");
  double had_t = 0.0, had_tol = 1e-2;
  sc_hadamard->add_option("spec", spec)->required();
  sc_hadamard->add_option("--t", had_t)->required();
  sc_hadamard->add_option("--tol", had_tol, "acceptance tolerance (library default 1e-10)");
  sc_hadamard->add_flag("--json", as_json);

  auto* sc_prob = app.add_subcommand("probtransfer", "discrete probability transfer on K4");
  int steps = 1000;
  sc_prob->add_option("--steps", steps);
  sc_prob->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (sc_spectrum->parsed()) return cmd_spectrum(spec, as_json, false);
    if (sc_integral->parsed()) return cmd_spectrum(spec, as_json, true);
    if (sc_maxfid->parsed()) {
      if (tmax_opt->count()) tmax = tmax_raw;
      std::optional<std::pair<int, int>> pair;
      if (pair_opt->count()) pair = std::make_pair(pair_flags.at(0), pair_flags.at(1));
      if (pair.has_value() == all_pairs)
        throw invalid_input("maxfid needs exactly one of --pair or --all-pairs");
      return cmd_maxfid(spec, pair, all_pairs, tmax, grid, as_json);
    }
    if (sc_verify->parsed()) return cmd_verify_theorem(grid, as_json);
    if (sc_entry->parsed()) return cmd_entry(spec, vi, vj, samples, entry_tmax);
    if (sc_persistency->parsed()) return cmd_persistency(spec, vi, vj, eps, pgrid, as_json);
    if (sc_hadamard->parsed()) return cmd_hadamard(spec, had_t, had_tol, as_json);
    if (sc_prob->parsed()) return cmd_probtransfer(steps, as_json);
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
