#pragma once
#include "wskg/errors.hpp"

namespace wskg {

// Three-term replacement of the centrifugal barrier near the nuclear surface:
// l(l+1)/r^2 is modeled by l(l+1)/R0^2 * [C0 + C1*y + C2*y^2] with
// y = 1/(1+exp(alpha*x)), x = (r-R0)/R0, chosen so the Taylor expansions about
// r = R0 agree through second order.
struct PekerisCoefficients {
  double C0 = 0;  // 1 - 4/alpha + 12/alpha^2
  double C1 = 0;  // 8/alpha - 48/alpha^2
  double C2 = 0;  // 48/alpha^2
  double alpha = 0;
};

// Throws InvalidArgument for alpha <= 0.
PekerisCoefficients pekeris_coefficients(double alpha);

// Exact dimensionless centrifugal shape l(l+1)*R0^2/r^2. r == 0 is a pole.
double centrifugal_exact(int l, double r, double R0);

// Approximated shape l(l+1)*[C0 + C1*y + C2*y^2], y = 1/(1+exp(alpha*x)).
double centrifugal_pekeris(const PekerisCoefficients& coeffs, int l, double x);

// Energy scale of the centrifugal term at the surface:
// (hbar_c)^2 l(l+1) / (2 m0c2 R0^2), in MeV.
double centrifugal_energy_scale(int l, double R0, double m0c2, double hbar_c);

}  // namespace wskg
