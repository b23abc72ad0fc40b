#pragma once
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "wskg/spectrum.hpp"

namespace wskg {

enum class OracleDomain {
  mathematical,  // t in (-inf, inf), decaying boundary conditions both sides
  physical,      // r in [0, r_max], u(0) = 0
};

struct OracleConfig {
  OracleDomain domain = OracleDomain::mathematical;
  // Explicit domain half-length in t-units (mathematical) — 0 means automatic
  // per-energy asymptotic cutoffs chosen so the boundary-condition error is
  // below eigenvalue resolution.
  double L = 0;
  // Explicit right edge in fm (physical); 0 means automatic cutoffs.
  double r_max = 0;
  double step = 1e-3;      // integration step in t-units
  double match_t = 0;      // matching point (t = 0 is r = R0)
  int scan_points = 20000;
  double refine_tol = 1e-9;  // MeV, bisection width
};

struct OracleReport {
  std::vector<double> eigenvalues;  // strictly increasing
  std::vector<std::pair<double, double>> brackets;
  // For each eigenvalue matched to an analytic valid state within 1e-4 MeV:
  std::vector<double> analytic_deltas;
  std::vector<double> unmatched_oracle;    // oracle E with no analytic partner
  std::vector<double> unmatched_analytic;  // analytic valid E with no oracle partner
};

// Shooting mismatch at the match point: integrates the transformed radial
// equation u'' = [eps2 - z*(beta2 - gamma2*z)] u outward from the left
// boundary and inward from the right, and returns the scaled Wronskian
// dL*uR - dR*uL at match_t — a continuous function of E whose zeros are
// eigenvalues. Throws NonDecayingAsymptotics when eps2 <= 0 (and, on the
// mathematical domain, when the left exponent q^2 <= 0).
double matching_residual(const WoodsSaxonSystem& system, int l, double E,
                         const OracleConfig& config);

// Matching residual for an exact square-well profile (V = -V0 for r < R0,
// 0 beyond) under the same relativistic kinematics, integrated on a uniform
// r-grid with the junction node averaged and matched inside the well. This
// anchors the integrator against the textbook transcendental ground-state
// condition k cot(k R0) = -kappa.
double square_well_residual(double m0c2, double V0, double R0, double E,
                            double step_fm, double hbar_c);

// Scans the admissible energy window, brackets sign changes of the matching
// residual, refines each bracket by bisection, and pairs the eigenvalues with
// the analytic valid states.
OracleReport oracle_eigenvalues(const WoodsSaxonSystem& system, int l,
                                const OracleConfig& config);

struct SpectrumComparison {
  struct Pair {
    double analytic_E = 0, oracle_E = 0, delta = 0;
    int n = 0, l = 0;
  };
  struct UnmatchedAnalytic {
    double E = 0;
    int n = 0, l = 0;
    bool valid = false;
    std::string classification;  // e.g. "spurious quadratic root"
  };
  std::vector<Pair> pairs;
  std::vector<UnmatchedAnalytic> unmatched_analytic;
  std::vector<double> unmatched_oracle;
};

// Pairs analytic rows and oracle eigenvalues by nearest energy within tol.
// Invalid analytic states absent from the oracle set are classified
// "spurious quadratic root".
SpectrumComparison compare_spectra(const SpectrumTable& analytic,
                                   const OracleReport& oracle, double tol);

}  // namespace wskg
