#include "wskg/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wskg/pekeris.hpp"

namespace wskg {

namespace {

double ll_of(int l) {
  if (l < 0) throw Error(ErrorCode::InvalidArgument, "l must be >= 0");
  return static_cast<double>(l) * (static_cast<double>(l) + 1.0);
}

// a^2 / (hbar c)^2, the factor converting MeV^2 to the dimensionless scale.
double p_of(const WoodsSaxonSystem& s) {
  const double hc = s.constants.hbar_c;
  return s.a * s.a / (hc * hc);
}

struct LambdaTerms {
  double L0 = 0, L1 = 0, L2 = 0;  // l(l+1) C_i / alpha^2
};

LambdaTerms lambda_terms(const WoodsSaxonSystem& s, int l) {
  const double ll = ll_of(l);
  LambdaTerms t;
  if (ll == 0) return t;
  const PekerisCoefficients c = pekeris_coefficients(s.alpha());
  const double a2 = s.alpha() * s.alpha();
  t.L0 = ll * c.C0 / a2;
  t.L1 = ll * c.C1 / a2;
  t.L2 = ll * c.C2 / a2;
  return t;
}

}  // namespace

DimensionlessParams dimensionless_parameters(const WoodsSaxonSystem& system,
                                             double E, int l) {
  const double p = p_of(system);
  const LambdaTerms t = lambda_terms(system, l);
  const double m = system.m0c2;
  DimensionlessParams d;
  d.alpha = system.alpha();
  d.eps2 = -((E * E - m * m) * p - t.L0);
  d.beta2 = 2.0 * E * system.V0 * p - t.L1;
  d.gamma2 = -(system.V0 * system.V0 * p - t.L2);
  return d;
}

double n_prime_radicand(const WoodsSaxonSystem& system, int l) {
  const double ll = ll_of(l);
  const double R2 = system.R0 * system.R0;
  const double a2 = system.a * system.a;
  const double hc = system.constants.hbar_c;
  return 1.0 + 192.0 * a2 * a2 * ll / (R2 * R2) -
         4.0 * system.V0 * system.V0 * a2 / (hc * hc);
}

double n_prime(const WoodsSaxonSystem& system, int n, int l) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be >= 0");
  const double rad = n_prime_radicand(system, l);
  if (rad < 0) {
    throw Error(ErrorCode::OverDeepPotential,
                "potential depth outside the existence window: the index "
                "radicand 1 + 192 l(l+1) a^4/R0^4 - 4 V0^2 a^2/(hbar c)^2 "
                "is negative");
  }
  return -static_cast<double>(n) + (std::sqrt(rad) - 1.0) / 2.0;
}

int allowed_radial_count(const WoodsSaxonSystem& system, int l) {
  const double rad = n_prime_radicand(system, l);
  if (rad < 0) return 0;
  const double upper = (std::sqrt(rad) - 1.0) / 2.0;  // n' > 0 iff n < upper
  if (upper <= 0) return 0;
  return static_cast<int>(std::ceil(upper - 1e-12));
}

double depth_window_max(double R0, double a, int l, double hbar_c) {
  if (R0 <= 0 || a <= 0 || hbar_c <= 0) {
    throw Error(ErrorCode::InvalidArgument,
                "R0, a, hbar_c must all be > 0");
  }
  return 4.0 * hbar_c * a * std::sqrt(3.0 * ll_of(l)) / (R0 * R0);
}

double quantization_residual(const WoodsSaxonSystem& system, double E, int n,
                             int l) {
  const double np = n_prime(system, n, l);
  const DimensionlessParams d = dimensionless_parameters(system, E, l);
  if (d.eps2 <= 0) return std::numeric_limits<double>::infinity();
  const double q2 = d.eps2 - d.beta2 + d.gamma2;
  if (q2 < 0) return std::numeric_limits<double>::infinity();
  return std::fabs(std::sqrt(d.eps2) + std::sqrt(q2) - np);
}

std::array<double, 3> energy_quadratic(const WoodsSaxonSystem& system, int n,
                                       int l) {
  const double p = p_of(system);
  const LambdaTerms t = lambda_terms(system, l);
  const double np = n_prime(system, n, l);
  const double m = system.m0c2;
  const double A = np * np + p * system.V0 * system.V0;
  const double M = A - t.L1 - t.L2;
  const double B = system.V0 * M;
  const double C = M * M / (4.0 * p) - np * np * (m * m + t.L0 / p);
  return {A, B, C};
}

double energy_closed_form(const WoodsSaxonSystem& system, int n, int l,
                          int sign) {
  if (sign != 1 && sign != -1) {
    throw Error(ErrorCode::InvalidArgument, "sign must be +1 or -1");
  }
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be >= 0");
  const double ll = ll_of(l);
  const double a = system.a, R0 = system.R0, V0 = system.V0;
  const double hc = system.constants.hbar_c;
  const double m = system.m0c2;
  const double rad = n_prime_radicand(system, l);
  if (rad < 0) {
    throw Error(ErrorCode::OverDeepPotential,
                "potential depth outside the existence window: the index "
                "radicand is negative");
  }
  const double Y = std::sqrt(rad) - 2.0 * n - 1.0;
  const double D4 = Y * Y + 4.0 * V0 * V0 * a * a / (hc * hc);
  const double F = 1.0 - 32.0 * ll * a * a * a / (R0 * R0 * R0 * D4);
  const double C0 = 1.0 - 4.0 * a / R0 + 12.0 * a * a / (R0 * R0);
  const double inner =
      (m * m + hc * hc * ll * C0 / (R0 * R0)) / D4 -
      hc * hc / (16.0 * a * a) * F * F;
  if (inner < 0) {
    throw Error(ErrorCode::NoRealRoot,
                "energy expression radicand is negative");
  }
  return -V0 / 2.0 * F + sign * Y * std::sqrt(inner);
}

namespace {

BoundState make_candidate(const WoodsSaxonSystem& system, int n, int l,
                          double E, int root_sign) {
  BoundState s;
  s.n = n;
  s.l = l;
  s.energy = E;
  s.binding = binding_energy(E, system.m0c2);
  s.n_prime = n_prime(system, n, l);
  s.root_sign = root_sign;
  s.params = dimensionless_parameters(system, E, l);
  s.residual = quantization_residual(system, E, n, l);
  const double eps2 = s.params.eps2;
  const double eps = eps2 > 0 ? std::sqrt(eps2) : 0.0;
  s.valid = std::isfinite(s.residual) && s.residual <= 1e-9 && eps2 > 0 &&
            eps > 0 && eps <= s.n_prime + 1e-12;
  return s;
}

}  // namespace

std::pair<BoundState, BoundState> energy_roots(const WoodsSaxonSystem& system,
                                               int n, int l) {
  const double np = n_prime(system, n, l);
  if (np <= 0) {
    throw Error(ErrorCode::NoBoundState,
                "effective radial index n' = -n + (sqrt(radicand) - 1)/2 is "
                "<= 0; no level with this n");
  }
  const std::array<double, 3> q = energy_quadratic(system, n, l);
  const double A = q[0], B = q[1], C = q[2];
  const double disc = B * B - 4.0 * A * C;
  if (disc < 0) {
    throw Error(ErrorCode::NoRealRoot, "energy quadratic has no real roots");
  }
  const double sq = std::sqrt(disc);
  const double w = -(B + (B >= 0 ? sq : -sq)) / 2.0;
  const double r1 = w / A;
  const double r2 = (w != 0.0) ? C / w : -B / (2.0 * A);
  const double e_plus = std::max(r1, r2);
  const double e_minus = std::min(r1, r2);
  return {make_candidate(system, n, l, e_plus, +1),
          make_candidate(system, n, l, e_minus, -1)};
}

std::vector<BoundState> solve_quantization_scan(const WoodsSaxonSystem& system,
                                                int n, int l,
                                                ScanConfig config) {
  if (config.samples < 2 || config.tol <= 0) {
    throw Error(ErrorCode::InvalidArgument,
                "scan needs samples >= 2 and tol > 0");
  }
  const double np = n_prime(system, n, l);
  std::vector<BoundState> out;
  if (np <= 0) return out;
  const double e_hi = energy_max(system, l);
  const double margin = 1e-9 * std::max(1.0, e_hi);
  const double lo = -e_hi + margin;
  const double hi = e_hi - margin;
  if (!(hi > lo)) return out;

  // f(E) = eps + q - n', NaN where the square roots are undefined.
  auto f = [&](double E) -> double {
    const DimensionlessParams d = dimensionless_parameters(system, E, l);
    if (d.eps2 <= 0) return std::numeric_limits<double>::quiet_NaN();
    const double q2 = d.eps2 - d.beta2 + d.gamma2;
    if (q2 < 0) return std::numeric_limits<double>::quiet_NaN();
    return std::sqrt(d.eps2) + std::sqrt(q2) - np;
  };

  const int N = config.samples;
  double prev_e = lo;
  double prev_f = f(lo);
  for (int i = 1; i <= N; ++i) {
    const double e = lo + (hi - lo) * i / N;
    const double fe = f(e);
    if (std::isfinite(prev_f) && std::isfinite(fe) &&
        ((prev_f < 0 && fe > 0) || (prev_f > 0 && fe < 0) || fe == 0)) {
      double a = prev_e, b = e, fa = prev_f;
      while (b - a > config.tol) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if (!std::isfinite(fm)) break;  // domain boundary inside bracket
        if ((fa < 0 && fm <= 0) || (fa > 0 && fm >= 0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      const double root = 0.5 * (a + b);
      BoundState s = make_candidate(system, n, l, root, 0);
      if (s.valid) out.push_back(s);
    }
    prev_e = e;
    prev_f = fe;
  }
  std::sort(out.begin(), out.end(),
            [](const BoundState& x, const BoundState& y) {
              return x.energy < y.energy;
            });
  return out;
}

double binding_energy(double E, double m0c2) { return E - m0c2; }

double energy_max(const WoodsSaxonSystem& system, int l) {
  const double p = p_of(system);
  const LambdaTerms t = lambda_terms(system, l);
  const double m = system.m0c2;
  return std::sqrt(m * m + t.L0 / p);
}

double energy_nonrelativistic(const WoodsSaxonSystem& system, int n, int l) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be >= 0");
  const double ll = ll_of(l);
  const double a = system.a, R0 = system.R0, V0 = system.V0;
  const double hc = system.constants.hbar_c;
  const double m = system.m0c2;
  const double a2 = a * a, R2 = R0 * R0;
  const double T = std::sqrt(1.0 + 192.0 * ll * a2 * a2 / (R2 * R2)) -
                   2.0 * n - 1.0;
  if (T <= 0) {
    throw Error(ErrorCode::NoBoundState,
                "index factor sqrt(1 + 192 l(l+1) a^4/R0^4) - 2n - 1 is <= 0");
  }
  const double U = m * V0 * a2 / (hc * hc);  // m0 V0 a^2 / hbar^2
  const double W = U - 4.0 * ll * a * a2 / (R2 * R0);
  return hc * hc * ll / (2.0 * m * R2) * (1.0 + 12.0 * a2 / R2) -
         hc * hc / (2.0 * m * a2) *
             (T * T / 16.0 + 4.0 * W * W / (T * T) + U);
}

SpectrumTable enumerate_spectrum(const WoodsSaxonSystem& system, int l_max) {
  if (l_max < 0) throw Error(ErrorCode::InvalidArgument, "l_max must be >= 0");
  SpectrumTable table;
  table.system = system;
  for (int l = 0; l <= l_max; ++l) {
    const double rad = n_prime_radicand(system, l);
    if (rad < 0) {
      table.diagnostics.push_back(
          {-1, l,
           "over-deep potential: the index radicand is negative, no real n'"});
      continue;
    }
    if (l == 0) {
      table.diagnostics.push_back(
          {0, l,
           "zero angular momentum: the radial-index condition requires n < "
           "(sqrt(1 - 4 V0^2 a^2/(hbar c)^2) - 1)/2 < 0; no bound states"});
      continue;
    }
    const double gamma2 =
        dimensionless_parameters(system, system.m0c2, l).gamma2;
    if (gamma2 <= 0) {
      table.diagnostics.push_back(
          {-1, l,
           "depth outside the existence window 0 < V0 < 4 hbar_c a "
           "sqrt(3 l(l+1))/R0^2: gamma^2 <= 0"});
      continue;
    }
    const int count = allowed_radial_count(system, l);
    if (count == 0) {
      table.diagnostics.push_back(
          {0, l, "effective radial index n' <= 0 for every n >= 0"});
      continue;
    }
    for (int n = 0; n < count; ++n) {
      try {
        const auto roots = energy_roots(system, n, l);
        table.rows.push_back(roots.first);
        table.rows.push_back(roots.second);
      } catch (const Error& e) {
        table.diagnostics.push_back({n, l, e.what()});
      }
    }
    table.diagnostics.push_back(
        {count, l, "effective radial index n' <= 0 for n >= this value"});
  }
  std::sort(table.rows.begin(), table.rows.end(),
            [](const BoundState& x, const BoundState& y) {
              if (x.l != y.l) return x.l < y.l;
              if (x.n != y.n) return x.n < y.n;
              return x.energy < y.energy;
            });
  return table;
}

}  // namespace wskg
