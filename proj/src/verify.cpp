#include "pstlab/verify.hpp"

#include <chrono>
#include <cmath>

#include "pstlab/catalog.hpp"

namespace pstlab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPstTol = 1e-6;
constexpr double kNonCubeCeiling = 0.95;

struct GoldenRow {
  const char* key;
  double expected;
  double tol;
};

// All-pairs fidelity maxima. Exact closed forms carry 1e-6; rows known only
// approximately carry 0.02; the tutte-coxeter value is frozen from an
// independent dense-grid maximization of |6 sin 2t + sin 3t| / 15.
constexpr GoldenRow kGolden[] = {
    {"k4", 0.5, 1e-6},
    {"k33", 2.0 / 3.0, 1e-6},
    {"prism3", 0.9, 0.02},
    {"prism6", 64.0 / 81.0, 0.02},
    {"cube", 1.0, 1e-9},
    {"petersen", 8.0 / 15.0, 1e-6},
    {"z10", 0.85, 0.02},
    {"trunctet", 2.0 / 3.0, 1e-6},
    {"dk23", 0.90450849718747373, 1e-6},  // (5 + sqrt 5) / 8
    {"desargues", 0.83, 0.02},
    {"desargues-mate", 0.83, 0.02},
    {"nauru", 2.0 / 3.0, 1e-6},
    {"tutte-coxeter", 0.452019990683, 1e-6},
};

const GoldenRow& golden_for(const std::string& key) {
  for (const GoldenRow& row : kGolden)
    if (key == row.key) return row;
  throw std::logic_error("no golden row for " + key);
}

}  // namespace

TheoremReport verify_theorem(int grid) {
  const auto start = std::chrono::steady_clock::now();
  TheoremReport report;
  report.pass = true;
  int pst_count = 0;

  for (const CatalogEntry& entry : thirteen()) {
    const PstReport pst = pst_report(entry.graph, std::nullopt, kPstTol, grid);

    TheoremRow row;
    row.key = entry.key;
    row.n = entry.graph.order();
    row.integral = pst.integral;
    row.cubic = pst.regular_degree && *pst.regular_degree == 3;
    row.periodic = pst.periodic;
    row.best = pst.best;
    row.pst = pst.pst;

    const GoldenRow& golden = golden_for(entry.key);
    row.expected_max = golden.expected;
    row.tol = golden.tol;

    row.ok = row.integral && row.cubic && row.periodic &&
             std::abs(row.best.f_star - row.expected_max) <= row.tol;
    if (entry.key == "cube") {
      row.ok = row.ok && row.pst && row.best.f_star >= 1.0 - 1e-9 &&
               std::abs(row.best.t_star - kPi / 2.0) <= 1e-9;
    } else {
      row.ok = row.ok && !row.pst && row.best.f_star <= kNonCubeCeiling;
    }
    if (row.pst) ++pst_count;
    report.pass = report.pass && row.ok;
    report.rows.push_back(row);
  }

  report.pass = report.pass && pst_count == 1;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace pstlab
