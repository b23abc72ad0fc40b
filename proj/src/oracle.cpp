#include "wskg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wskg {

namespace {

constexpr double kPairTol = 1e-4;  // MeV, oracle <-> analytic pairing radius

// Uniform grid with the match point exactly on a node. For the Woods-Saxon
// profile the node coordinate is t = (r - R0)/a and z(t) depends only on the
// grid, not on E, so one grid serves a whole energy scan.
struct GridInfo {
  double h = 0;
  int m = 0;          // match index
  int last = 0;       // final index
  bool wall = false;  // left boundary: hard wall u=0 vs decaying tail
};

GridInfo layout_grid(double t_left, double t_right, double match_t,
                     double step, bool wall) {
  if (!(step > 0)) throw Error(ErrorCode::InvalidArgument, "step must be > 0");
  if (!(t_left < match_t && match_t < t_right)) {
    throw Error(ErrorCode::InvalidArgument,
                "match point must lie strictly inside the domain");
  }
  const int mL = std::max(
      3, static_cast<int>(std::lround((match_t - t_left) / step)));
  const int mR = std::max(
      3, static_cast<int>(std::ceil((t_right - match_t) / step - 1e-9)));
  GridInfo g;
  g.h = (match_t - t_left) / mL;  // keeps the left edge (the wall) exact
  g.m = mL;
  g.last = mL + mR;
  g.wall = wall;
  return g;
}

// Scaled Wronskian of the outward and inward Numerov solutions of
// u'' = w(i) u at the match node; derivative by five-point stencil, so each
// sweep runs two nodes past the match. The result is normalized per side and
// therefore invariant under the overflow renormalizations. The recurrence
// accumulates in extended precision: over ~10^6 nodes the double-precision
// drift reaches ~1e-8 in the residual, which would dominate the grid error.
template <typename WFn>
double match_core(const GridInfo& g, WFn&& w_at, double left_rate,
                  double right_rate) {
  using LD = long double;
  const LD h = g.h, h2 = h * h;

  LD win_l[5] = {0, 0, 0, 0, 0};  // grid indices m-2 .. m+2
  auto store_l = [&](int i, LD v) {
    if (i >= g.m - 2 && i <= g.m + 2) win_l[i - (g.m - 2)] = v;
  };
  LD u0, u1;
  if (g.wall) {
    u0 = 0.0L;
    u1 = h * (1.0L + w_at(1) * h2 / 6.0L);
  } else {
    u0 = 1e-150L;
    u1 = u0 * std::exp(left_rate * h);
  }
  store_l(0, u0);
  store_l(1, u1);
  LD wm1 = w_at(0), wi = w_at(1);
  for (int i = 1; i < g.m + 2; ++i) {
    const LD wp1 = w_at(i + 1);
    const LD unew = (2.0L * u1 * (1.0L + 5.0L * h2 / 12.0L * wi) -
                     u0 * (1.0L - h2 / 12.0L * wm1)) /
                    (1.0L - h2 / 12.0L * wp1);
    u0 = u1;
    u1 = unew;
    wm1 = wi;
    wi = wp1;
    if (std::fabs(u1) > 1e250L) {
      u0 *= 1e-250L;
      u1 *= 1e-250L;
      for (LD& v : win_l) v *= 1e-250L;
    }
    store_l(i + 1, u1);
  }

  LD win_r[5] = {0, 0, 0, 0, 0};
  auto store_r = [&](int i, LD v) {
    if (i >= g.m - 2 && i <= g.m + 2) win_r[i - (g.m - 2)] = v;
  };
  LD v1 = 1e-150L;                          // at index last
  LD v0 = v1 * std::exp(right_rate * h);    // at last-1 (grows leftward)
  store_r(g.last, v1);
  store_r(g.last - 1, v0);
  LD wp1 = w_at(g.last), wj = w_at(g.last - 1);
  for (int i = g.last - 1; i > g.m - 2; --i) {
    const LD wm = w_at(i - 1);
    const LD vnew = (2.0L * v0 * (1.0L + 5.0L * h2 / 12.0L * wj) -
                     v1 * (1.0L - h2 / 12.0L * wp1)) /
                    (1.0L - h2 / 12.0L * wm);
    v1 = v0;
    v0 = vnew;
    wp1 = wj;
    wj = wm;
    if (std::fabs(v0) > 1e250L) {
      v0 *= 1e-250L;
      v1 *= 1e-250L;
      for (LD& v : win_r) v *= 1e-250L;
    }
    store_r(i - 1, v0);
  }

  // Each window is rescaled to unit magnitude first: the sides reach the
  // match point at wildly different (often subnormal-squared) scales, and
  // the residual is invariant under per-side scaling anyway.
  for (LD* win : {win_l, win_r}) {
    LD mx = 0.0L;
    for (int i = 0; i < 5; ++i) mx = std::max(mx, std::fabs(win[i]));
    if (mx > 0.0L) {
      for (int i = 0; i < 5; ++i) win[i] /= mx;
    }
  }
  const LD uL = win_l[2];
  const LD dL =
      (-win_l[4] + 8.0L * win_l[3] - 8.0L * win_l[1] + win_l[0]) / (12.0L * h);
  const LD uR = win_r[2];
  const LD dR =
      (-win_r[4] + 8.0L * win_r[3] - 8.0L * win_r[1] + win_r[0]) / (12.0L * h);
  const LD nl = uL * uL + dL * dL;
  const LD nr = uR * uR + dR * dR;
  return static_cast<double>((dL * uR - dR * uL) /
                             (std::sqrt(nl) * std::sqrt(nr)));
}

struct Admissibility {
  bool ok = false;
  double eps2 = 0, beta2 = 0, gamma2 = 0, q2 = 0;
};

Admissibility admissible(const WoodsSaxonSystem& system, int l, double E,
                         bool mathematical) {
  Admissibility a;
  const DimensionlessParams d = dimensionless_parameters(system, E, l);
  a.eps2 = d.eps2;
  a.beta2 = d.beta2;
  a.gamma2 = d.gamma2;
  a.q2 = d.eps2 - d.beta2 + d.gamma2;
  a.ok = d.eps2 > 0 && (!mathematical || a.q2 > 0);
  return a;
}

double wave_scale(const Admissibility& a) {
  return std::fabs(a.beta2) + 2.0 * std::fabs(a.gamma2);
}

// Tail cutoff T such that starting the sweep with the pure exponential at
// |t| = T carries a log-derivative error ~ e^{-46}: the residual coupling
// decays like z(t) ~ e^{-|t|} regardless of the decay exponent.
double tail_cutoff(double expo, double scale) {
  return std::max(46.0, 46.0 + std::log(scale / (2.0 * expo)));
}

double residual_over_z(const GridInfo& g, const std::vector<double>& z,
                       const Admissibility& a, bool math) {
  auto w_at = [&](int i) {
    const double zi = z[i];
    return a.eps2 - zi * (a.beta2 - a.gamma2 * zi);
  };
  return match_core(g, w_at, math ? std::sqrt(a.q2) : 0.0,
                    std::sqrt(a.eps2));
}

std::vector<double> logistic_profile(const GridInfo& g, double match_t) {
  std::vector<double> z(g.last + 1);
  for (int i = 0; i <= g.last; ++i) {
    const double t = match_t + (i - g.m) * g.h;
    z[i] = 1.0 / (1.0 + std::exp(t));
  }
  return z;
}

}  // namespace

double matching_residual(const WoodsSaxonSystem& system, int l, double E,
                         const OracleConfig& config) {
  const bool math = config.domain == OracleDomain::mathematical;
  const Admissibility a = admissible(system, l, E, math);
  if (a.eps2 <= 0) {
    throw Error(ErrorCode::NonDecayingAsymptotics,
                "eps^2 <= 0: no decaying tail at large r for this energy");
  }
  if (math && a.q2 <= 0) {
    throw Error(ErrorCode::NonDecayingAsymptotics,
                "q^2 <= 0: no decaying tail at t -> -infinity for this "
                "energy");
  }
  const double scale = wave_scale(a);
  double t_left, t_right;
  if (math) {
    t_left =
        config.L > 0 ? -config.L : -tail_cutoff(std::sqrt(a.q2), scale);
    t_right =
        config.L > 0 ? config.L : tail_cutoff(std::sqrt(a.eps2), scale);
  } else {
    t_left = -system.alpha();
    t_right = config.r_max > 0
                  ? (config.r_max - system.R0) / system.a
                  : tail_cutoff(std::sqrt(a.eps2), scale);
  }
  const GridInfo g =
      layout_grid(t_left, t_right, config.match_t, config.step, !math);
  const std::vector<double> z = logistic_profile(g, config.match_t);
  return residual_over_z(g, z, a, math);
}

double square_well_residual(double m0c2, double V0, double R0, double E,
                            double step_fm, double hbar_c) {
  if (!(m0c2 > 0 && V0 > 0 && R0 > 0 && hbar_c > 0)) {
    throw Error(ErrorCode::InvalidArgument,
                "m0c2, V0, R0, hbar_c must all be > 0");
  }
  const double hc2 = hbar_c * hbar_c;
  const double kappa2 = (m0c2 * m0c2 - E * E) / hc2;  // outside decay
  const double k2 = ((E + V0) * (E + V0) - m0c2 * m0c2) / hc2;  // inside
  if (kappa2 <= 0) {
    throw Error(ErrorCode::NonDecayingAsymptotics,
                "eps^2 <= 0: no decaying tail at large r for this energy");
  }
  const double kappa = std::sqrt(kappa2);
  const double r_max = R0 + 46.0 / kappa;
  const double match_r = R0 / 2.0;  // inside the well
  const GridInfo g = layout_grid(0.0, r_max, match_r, step_fm, true);
  auto w_at = [&](int i) {
    const double r = match_r + (i - g.m) * g.h;
    const double d = r - R0;
    if (std::fabs(d) < 0.5 * g.h) return 0.5 * (kappa2 - k2);  // junction node
    return d < 0 ? -k2 : kappa2;
  };
  return match_core(g, w_at, 0.0, kappa);
}

OracleReport oracle_eigenvalues(const WoodsSaxonSystem& system, int l,
                                const OracleConfig& config) {
  if (config.scan_points < 100 || config.refine_tol <= 0) {
    throw Error(ErrorCode::InvalidArgument,
                "scan needs scan_points >= 100 and refine_tol > 0");
  }
  const bool math = config.domain == OracleDomain::mathematical;
  const double e_hi = energy_max(system, l);
  const double margin = 1e-9 * std::max(1.0, e_hi);
  const double lo = -e_hi + margin;
  const double hi = e_hi - margin;

  const int N = config.scan_points;
  std::vector<double> energies(N + 1);
  for (int i = 0; i <= N; ++i) energies[i] = lo + (hi - lo) * i / N;

  // The admissible set is cut by smooth curves in E, and a near-threshold
  // eigenvalue can sit between the last uniform node and such an edge, where
  // a uniform scan sees no sign change. Bisect every admissibility
  // transition and add a scan node just inside the edge.
  {
    std::vector<double> extra;
    bool prev_ok = admissible(system, l, energies[0], math).ok;
    for (int i = 1; i <= N; ++i) {
      const bool ok = admissible(system, l, energies[i], math).ok;
      if (ok != prev_ok) {
        double in = ok ? energies[i] : energies[i - 1];
        double out = ok ? energies[i - 1] : energies[i];
        for (int it = 0;
             it < 80 &&
             std::fabs(in - out) > 1e-12 * std::max(1.0, std::fabs(in));
             ++it) {
          const double mid = 0.5 * (in + out);
          (admissible(system, l, mid, math).ok ? in : out) = mid;
        }
        extra.push_back(in);
      }
      prev_ok = ok;
    }
    energies.insert(energies.end(), extra.begin(), extra.end());
    std::sort(energies.begin(), energies.end());
  }

  // One shared grid for the whole scan: take the widest per-energy cutoff.
  const int M = static_cast<int>(energies.size()) - 1;
  std::vector<Admissibility> adm(M + 1);
  double t_right_auto = 46.0, t_left_auto = 46.0;
  for (int i = 0; i <= M; ++i) {
    adm[i] = admissible(system, l, energies[i], math);
    if (!adm[i].ok) continue;
    const double scale = wave_scale(adm[i]);
    t_right_auto =
        std::max(t_right_auto, tail_cutoff(std::sqrt(adm[i].eps2), scale));
    if (math) {
      t_left_auto =
          std::max(t_left_auto, tail_cutoff(std::sqrt(adm[i].q2), scale));
    }
  }
  double t_left, t_right;
  if (math) {
    t_left = config.L > 0 ? -config.L : -t_left_auto;
    t_right = config.L > 0 ? config.L : t_right_auto;
  } else {
    t_left = -system.alpha();
    t_right = config.r_max > 0 ? (config.r_max - system.R0) / system.a
                               : t_right_auto;
  }
  const GridInfo g =
      layout_grid(t_left, t_right, config.match_t, config.step, !math);
  const std::vector<double> z = logistic_profile(g, config.match_t);

  OracleReport report;
  double prev_e = 0, prev_f = std::numeric_limits<double>::quiet_NaN();
  for (int i = 0; i <= M; ++i) {
    if (!adm[i].ok) {
      prev_f = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    const double e = energies[i];
    const double fe = residual_over_z(g, z, adm[i], math);
    if (std::isfinite(prev_f) && std::isfinite(fe) &&
        ((prev_f < 0 && fe > 0) || (prev_f > 0 && fe < 0) || fe == 0)) {
      report.brackets.emplace_back(prev_e, e);
      double a = prev_e, b = e, fa = prev_f;
      while (b - a > config.refine_tol) {
        const double mid = 0.5 * (a + b);
        const Admissibility am = admissible(system, l, mid, math);
        if (!am.ok) break;  // the admissible window is an interval in E
        const double fm = residual_over_z(g, z, am, math);
        if ((fa < 0 && fm <= 0) || (fa > 0 && fm >= 0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      const double root = 0.5 * (a + b);
      if (report.eigenvalues.empty() ||
          root - report.eigenvalues.back() >
              std::max(10.0 * config.refine_tol, 1e-7)) {
        report.eigenvalues.push_back(root);
      }
    }
    prev_e = e;
    prev_f = fe;
  }

  // Analytic valid states at this l, for pairing.
  std::vector<double> analytic;
  try {
    const int count = allowed_radial_count(system, l);
    for (int n = 0; n < count; ++n) {
      try {
        const auto roots = energy_roots(system, n, l);
        if (roots.first.valid) analytic.push_back(roots.first.energy);
        if (roots.second.valid) analytic.push_back(roots.second.energy);
      } catch (const Error&) {
        // excluded (n, l) cell: nothing to pair
      }
    }
  } catch (const Error&) {
  }
  std::sort(analytic.begin(), analytic.end());

  std::vector<bool> used_a(analytic.size(), false);
  for (double ev : report.eigenvalues) {
    int best = -1;
    double best_d = kPairTol;
    for (std::size_t j = 0; j < analytic.size(); ++j) {
      if (used_a[j]) continue;
      const double d = std::fabs(analytic[j] - ev);
      if (d <= best_d) {
        best_d = d;
        best = static_cast<int>(j);
      }
    }
    if (best >= 0) {
      used_a[best] = true;
      report.analytic_deltas.push_back(best_d);
    } else {
      report.unmatched_oracle.push_back(ev);
    }
  }
  for (std::size_t j = 0; j < analytic.size(); ++j) {
    if (!used_a[j]) report.unmatched_analytic.push_back(analytic[j]);
  }
  return report;
}

SpectrumComparison compare_spectra(const SpectrumTable& analytic,
                                   const OracleReport& oracle, double tol) {
  if (!(tol > 0)) throw Error(ErrorCode::InvalidArgument, "tol must be > 0");
  SpectrumComparison cmp;
  std::vector<bool> used_o(oracle.eigenvalues.size(), false);
  // Valid analytic rows claim the nearest free oracle eigenvalue within tol.
  for (const BoundState& s : analytic.rows) {
    if (!s.valid) continue;
    int best = -1;
    double best_d = tol;
    for (std::size_t j = 0; j < oracle.eigenvalues.size(); ++j) {
      if (used_o[j]) continue;
      const double d = std::fabs(oracle.eigenvalues[j] - s.energy);
      if (d <= best_d) {
        best_d = d;
        best = static_cast<int>(j);
      }
    }
    if (best >= 0) {
      used_o[best] = true;
      cmp.pairs.push_back(
          {s.energy, oracle.eigenvalues[best], best_d, s.n, s.l});
    } else {
      cmp.unmatched_analytic.push_back(
          {s.energy, s.n, s.l, true, "valid state missed by the oracle"});
    }
  }
  for (const BoundState& s : analytic.rows) {
    if (s.valid) continue;
    cmp.unmatched_analytic.push_back(
        {s.energy, s.n, s.l, false, "spurious quadratic root"});
  }
  for (std::size_t j = 0; j < oracle.eigenvalues.size(); ++j) {
    if (!used_o[j]) cmp.unmatched_oracle.push_back(oracle.eigenvalues[j]);
  }
  return cmp;
}

}  // namespace wskg
