#pragma once
#include <vector>

#include "wskg/errors.hpp"

namespace wskg {

// c2*z^2 + c1*z + c0
struct Quadratic {
  double c2 = 0, c1 = 0, c0 = 0;
  double eval(double z) const { return (c2 * z + c1) * z + c0; }
  double deriv(double z) const { return 2 * c2 * z + c1; }
};

// d1*z + d0
struct Linear {
  double d1 = 0, d0 = 0;
  double eval(double z) const { return d1 * z + d0; }
};

// Generalized hypergeometric-type equation
//   u'' + (tau_tilde/sigma) u' + (sigma_tilde/sigma^2) u = 0
// on the open interval (lo, hi); sigma and sigma_tilde at most quadratic,
// tau_tilde at most linear.
struct NUProblem {
  Quadratic sigma{};
  Quadratic sigma_tilde{};
  Linear tau_tilde{};
  double lo = 0, hi = 1;
};

// A concrete reduction branch: the constant k, the linear polynomial pi(z)
// (one square-root sign), tau = tau_tilde + 2*pi, and lambda = k + pi'.
struct NUBranch {
  double k = 0;
  Linear pi{};
  int sign = 0;  // +1 or -1: the root-sign choice
  Linear tau{};
  double lambda = 0;
};

// All real k for which the quadratic radicand of pi(z) has zero discriminant;
// 0, 1, or 2 values, sorted ascending (a double root is returned once).
// Throws DegenerateProblem when the condition holds identically in k.
std::vector<double> nu_k_candidates(const NUProblem& problem);

// pi(z) = (sigma' - tau_tilde)/2 + sign*sqrt(radicand), with the radicand
// reduced to a perfect-square linear form. Throws InvalidArgument when k does
// not satisfy the zero-discriminant condition (relative tolerance 1e-10).
Linear nu_pi_for_k(const NUProblem& problem, double k, int sign);

// Selects the unique admissible branch:
//   (1) tau' < 0,
//   (2) the root of tau lies strictly inside (lo, hi),
//   (3) at every interval endpoint e with sigma(e) = 0, the endpoint exponent
//       pi(e)/sigma'(e) is positive (integrability of the bound-state factor).
// Throws NoValidBranch / AmbiguousBranch.
NUBranch nu_select_branch(const NUProblem& problem);

// lambda_n = -n*tau' - n(n-1)/2 * sigma''.
double nu_lambda_n(const NUBranch& branch, const NUProblem& problem, int n);

// The Woods-Saxon radial instance on z in (0,1):
// sigma = z(1-z), sigma_tilde = -eps2 + beta2*z - gamma2*z^2, tau_tilde = 1-2z.
NUProblem woods_saxon_nu_problem(double eps2, double beta2, double gamma2);

}  // namespace wskg
