#include "wskg/pekeris.hpp"

#include <cmath>

namespace wskg {

PekerisCoefficients pekeris_coefficients(double alpha) {
  if (!(alpha > 0)) {
    throw Error(ErrorCode::InvalidArgument, "alpha must be > 0");
  }
  PekerisCoefficients c;
  c.alpha = alpha;
  c.C0 = 1.0 - 4.0 / alpha + 12.0 / (alpha * alpha);
  c.C1 = 8.0 / alpha - 48.0 / (alpha * alpha);
  c.C2 = 48.0 / (alpha * alpha);
  return c;
}

double centrifugal_exact(int l, double r, double R0) {
  if (l < 0) {
    throw Error(ErrorCode::InvalidArgument, "l must be >= 0");
  }
  if (!(r > 0)) {
    throw Error(ErrorCode::DomainError,
                "centrifugal shape has a pole at r = 0");
  }
  const double ll = static_cast<double>(l) * (l + 1);
  return ll * R0 * R0 / (r * r);
}

double centrifugal_pekeris(const PekerisCoefficients& coeffs, int l,
                           double x) {
  if (l < 0) {
    throw Error(ErrorCode::InvalidArgument, "l must be >= 0");
  }
  const double ll = static_cast<double>(l) * (l + 1);
  const double y = 1.0 / (1.0 + std::exp(coeffs.alpha * x));
  return ll * (coeffs.C0 + y * (coeffs.C1 + y * coeffs.C2));
}

double centrifugal_energy_scale(int l, double R0, double m0c2,
                                double hbar_c) {
  const double ll = static_cast<double>(l) * (l + 1);
  return hbar_c * hbar_c * ll / (2.0 * m0c2 * R0 * R0);
}

}  // namespace wskg
