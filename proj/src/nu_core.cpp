#include "wskg/nu_core.hpp"

#include <algorithm>
#include <cmath>

namespace wskg {

namespace {

// Half-difference h(z) = (sigma' - tau_tilde)/2, a linear polynomial.
Linear half_diff(const NUProblem& p) {
  return Linear{(2.0 * p.sigma.c2 - p.tau_tilde.d1) / 2.0,
                (p.sigma.c1 - p.tau_tilde.d0) / 2.0};
}

// Radicand under the square root of pi(z):
// R(z; k) = h(z)^2 - sigma_tilde(z) + k*sigma(z) = A z^2 + B z + C.
struct RadicandCoeffs {
  double A = 0, B = 0, C = 0;
};

RadicandCoeffs radicand(const NUProblem& p, double k) {
  const Linear h = half_diff(p);
  RadicandCoeffs r;
  r.A = h.d1 * h.d1 - p.sigma_tilde.c2 + k * p.sigma.c2;
  r.B = 2.0 * h.d1 * h.d0 - p.sigma_tilde.c1 + k * p.sigma.c1;
  r.C = h.d0 * h.d0 - p.sigma_tilde.c0 + k * p.sigma.c0;
  return r;
}

bool near_zero(double v, double scale) { return std::fabs(v) <= scale; }

}  // namespace

NUProblem woods_saxon_nu_problem(double eps2, double beta2, double gamma2) {
  NUProblem p;
  p.sigma = Quadratic{-1.0, 1.0, 0.0};                 // z(1-z)
  p.sigma_tilde = Quadratic{-gamma2, beta2, -eps2};
  p.tau_tilde = Linear{-2.0, 1.0};                     // 1 - 2z
  p.lo = 0.0;
  p.hi = 1.0;
  return p;
}

std::vector<double> nu_k_candidates(const NUProblem& p) {
  if (p.sigma.c2 == 0 && p.sigma.c1 == 0 && p.sigma.c0 == 0) {
    throw Error(ErrorCode::InvalidArgument, "sigma must not be zero");
  }
  const Linear h = half_diff(p);
  const double A0 = h.d1 * h.d1 - p.sigma_tilde.c2;
  const double B0 = 2.0 * h.d1 * h.d0 - p.sigma_tilde.c1;
  const double C0 = h.d0 * h.d0 - p.sigma_tilde.c0;
  const double c2 = p.sigma.c2, c1 = p.sigma.c1, c0 = p.sigma.c0;
  // Zero-discriminant condition of the radicand, as a quadratic in k:
  // disc(k) = a2 k^2 + a1 k + a0 = 0.
  const double a2 = c1 * c1 - 4.0 * c2 * c0;
  const double a1 = 2.0 * B0 * c1 - 4.0 * (A0 * c0 + C0 * c2);
  const double a0 = B0 * B0 - 4.0 * A0 * C0;
  const double scale =
      std::max({std::fabs(a2), std::fabs(a1), std::fabs(a0)});
  if (scale == 0.0) {
    throw Error(ErrorCode::DegenerateProblem,
                "the zero-discriminant condition holds for every k");
  }
  const double tol = 1e-14 * scale;
  std::vector<double> ks;
  if (near_zero(a2, tol)) {
    if (near_zero(a1, tol)) {
      return ks;  // a0 != 0: no real k
    }
    ks.push_back(-a0 / a1);
    return ks;
  }
  const double disc = a1 * a1 - 4.0 * a2 * a0;
  const double disc_scale = a1 * a1 + 4.0 * std::fabs(a2 * a0);
  if (near_zero(disc, 1e-13 * disc_scale)) {
    ks.push_back(-a1 / (2.0 * a2));  // double root, reported once
    return ks;
  }
  if (disc < 0) {
    return ks;
  }
  const double sq = std::sqrt(disc);
  // Numerically stable quadratic roots.
  const double w = -(a1 + (a1 >= 0 ? sq : -sq)) / 2.0;
  double r1 = w / a2;
  double r2 = (w != 0.0) ? a0 / w : -a1 / a2 - r1;
  if (r1 > r2) std::swap(r1, r2);
  ks.push_back(r1);
  ks.push_back(r2);
  return ks;
}

Linear nu_pi_for_k(const NUProblem& p, double k, int sign) {
  if (sign != 1 && sign != -1) {
    throw Error(ErrorCode::InvalidArgument, "sign must be +1 or -1");
  }
  const RadicandCoeffs r = radicand(p, k);
  const Linear h = half_diff(p);
  // A, B, C may each arise from heavy cancellation (e.g. A ~ (q - eps)^2 for
  // two nearly equal exponents), so the zero test must be scaled by the
  // magnitudes of the terms that built them, not by the cancelled results.
  const double sA = h.d1 * h.d1 + std::fabs(p.sigma_tilde.c2) +
                    std::fabs(k * p.sigma.c2);
  const double sB = std::fabs(2.0 * h.d1 * h.d0) +
                    std::fabs(p.sigma_tilde.c1) + std::fabs(k * p.sigma.c1);
  const double sC = h.d0 * h.d0 + std::fabs(p.sigma_tilde.c0) +
                    std::fabs(k * p.sigma.c0);
  const double disc = r.B * r.B - 4.0 * r.A * r.C;
  const double err_scale = std::fabs(r.B) * sB + std::fabs(r.A) * sC +
                           std::fabs(r.C) * sA;
  const double disc_scale = r.B * r.B + 4.0 * std::fabs(r.A * r.C);
  const double tol = std::max(4096.0 * 2.220446049250313e-16 * err_scale,
                              1e-13 * disc_scale);
  if (std::fabs(disc) > tol) {
    throw Error(ErrorCode::InvalidArgument,
                "k does not satisfy the zero-discriminant condition");
  }
  // Perfect-square reduction: R(z) = (r1 z + r0)^2 with r1 >= 0.
  const double coeff_scale =
      std::max({std::fabs(r.A), std::fabs(r.B), std::fabs(r.C), 1e-300});
  Linear root{0.0, 0.0};
  if (std::fabs(r.A) <= 1e-12 * coeff_scale) {
    // Constant radicand (B is forced ~0 by the zero discriminant).
    root.d0 = std::sqrt(std::max(r.C, 0.0));
  } else {
    if (r.A < 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "radicand is not the square of a real linear form");
    }
    const double sq = std::sqrt(r.A);
    root.d1 = sq;
    root.d0 = r.B / (2.0 * sq);
  }
  return Linear{h.d1 + sign * root.d1, h.d0 + sign * root.d0};
}

NUBranch nu_select_branch(const NUProblem& p) {
  const std::vector<double> ks = nu_k_candidates(p);
  if (ks.empty()) {
    throw Error(ErrorCode::NoValidBranch,
                "no real k satisfies the zero-discriminant condition");
  }
  const double sigma_scale = std::fabs(p.sigma.c2) + std::fabs(p.sigma.c1) +
                             std::fabs(p.sigma.c0);
  std::vector<NUBranch> passing;
  for (double k : ks) {
    for (int sign : {-1, +1}) {
      const Linear pi = nu_pi_for_k(p, k, sign);
      NUBranch b;
      b.k = k;
      b.pi = pi;
      b.sign = sign;
      b.tau = Linear{p.tau_tilde.d1 + 2.0 * pi.d1,
                     p.tau_tilde.d0 + 2.0 * pi.d0};
      b.lambda = k + pi.d1;
      if (!(b.tau.d1 < 0)) continue;
      const double root = -b.tau.d0 / b.tau.d1;
      if (!(root > p.lo && root < p.hi)) continue;
      // Endpoint-exponent admissibility: where sigma vanishes at an interval
      // endpoint, the local solution behaves like (z - e)^{pi(e)/sigma'(e)};
      // a negative exponent diverges there and cannot be a bound state.
      bool admissible = true;
      for (double e : {p.lo, p.hi}) {
        if (std::fabs(p.sigma.eval(e)) > 1e-12 * std::max(sigma_scale, 1.0)) {
          continue;
        }
        const double sp = p.sigma.deriv(e);
        if (sp == 0.0 || !(pi.eval(e) / sp > 0)) {
          admissible = false;
          break;
        }
      }
      if (!admissible) continue;
      // Deduplicate: both signs coincide when the square-root term vanishes.
      bool duplicate = false;
      for (const NUBranch& other : passing) {
        if (std::fabs(other.k - k) <= 1e-12 * (1.0 + std::fabs(k)) &&
            std::fabs(other.pi.d1 - pi.d1) <=
                1e-12 * (1.0 + std::fabs(pi.d1)) &&
            std::fabs(other.pi.d0 - pi.d0) <=
                1e-12 * (1.0 + std::fabs(pi.d0))) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) passing.push_back(b);
    }
  }
  if (passing.empty()) {
    throw Error(ErrorCode::NoValidBranch,
                "no (k, sign) candidate satisfies the selection rules");
  }
  if (passing.size() > 1) {
    throw Error(ErrorCode::AmbiguousBranch,
                "more than one (k, sign) candidate satisfies the selection "
                "rules");
  }
  return passing.front();
}

double nu_lambda_n(const NUBranch& branch, const NUProblem& problem, int n) {
  if (n < 0) {
    throw Error(ErrorCode::InvalidArgument, "n must be >= 0");
  }
  const double nn = static_cast<double>(n);
  return -nn * branch.tau.d1 - nn * (nn - 1.0) / 2.0 * (2.0 * problem.sigma.c2);
}

}  // namespace wskg
