#pragma once
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "wskg/model.hpp"

namespace wskg {

// The dimensionless triple of the transformed radial equation
//   u''(t) + [-eps2 + beta2*z - gamma2*z^2] u = 0,  z = 1/(1+e^t), t=(r-R0)/a.
struct DimensionlessParams {
  double eps2 = 0;    // -[(E^2 - m0c2^2) a^2/(hbar_c)^2 - l(l+1) C0/alpha^2]
  double beta2 = 0;   //  2 E V0 a^2/(hbar_c)^2 - l(l+1) C1/alpha^2
  double gamma2 = 0;  // -[V0^2 a^2/(hbar_c)^2 - l(l+1) C2/alpha^2]
  double alpha = 0;
};

struct BoundState {
  int n = 0;            // radial quantum number
  int l = 0;
  double energy = 0;    // E, MeV
  double binding = 0;   // E - m0c2, MeV
  double n_prime = 0;
  int root_sign = 0;    // which quadratic root (+1 / -1)
  double residual = 0;  // |eps + sqrt(eps2-beta2+gamma2) - n_prime| at energy
  bool valid = false;   // residual <= 1e-9 and eps2 > 0 and 0 < eps <= n_prime
  DimensionlessParams params{};
};

struct Diagnostic {
  int n = 0, l = 0;
  std::string reason;
};

struct SpectrumTable {
  WoodsSaxonSystem system{};
  std::vector<BoundState> rows;         // sorted by (l, n, energy)
  std::vector<Diagnostic> diagnostics;  // per-(n,l) exclusion reasons
};

DimensionlessParams dimensionless_parameters(const WoodsSaxonSystem& system,
                                             double E, int l);

// 1 + 192 a^4 l(l+1)/R0^4 - 4 V0^2 a^2/(hbar_c)^2.
double n_prime_radicand(const WoodsSaxonSystem& system, int l);

// -n + (sqrt(radicand) - 1)/2. Throws OverDeepPotential when radicand < 0.
double n_prime(const WoodsSaxonSystem& system, int n, int l);

// Number of n >= 0 with n_prime > 0.
int allowed_radial_count(const WoodsSaxonSystem& system, int l);

// Upper edge of the depth existence window: 4 hbar_c a sqrt(3 l(l+1)) / R0^2.
double depth_window_max(double R0, double a, int l, double hbar_c);

// |eps + sqrt(eps2 - beta2 + gamma2) - n_prime| at E; +infinity (with no
// throw) when eps2 < 0 or the inner radicand is negative.
double quantization_residual(const WoodsSaxonSystem& system, double E, int n,
                             int l);

// Coefficients {A, B, C} of A E^2 + B E + C = 0 assembled from the defining
// relations (independent route #1).
std::array<double, 3> energy_quadratic(const WoodsSaxonSystem& system, int n,
                                       int l);

// Literal final closed-form energy expression (independent route #2);
// sign = +1 or -1 selects the branch of the outer square root.
double energy_closed_form(const WoodsSaxonSystem& system, int n, int l,
                          int sign);

// Both quadratic roots as BoundState candidates with residuals and validity
// flags. Throws NoBoundState (naming the violated existence condition) or
// NoRealRoot.
std::pair<BoundState, BoundState> energy_roots(const WoodsSaxonSystem& system,
                                               int n, int l);

struct ScanConfig {
  int samples = 10000;
  double tol = 1e-10;  // MeV, bisection width
};

// Direct 1-D root scan of eps + sqrt(eps2-beta2+gamma2) - n_prime over the
// admissible energy window; every returned state has valid = true.
std::vector<BoundState> solve_quantization_scan(const WoodsSaxonSystem& system,
                                                int n, int l,
                                                ScanConfig config = {});

double binding_energy(double E, double m0c2);

// eps2 = 0 boundary: sqrt(m0c2^2 + l(l+1) C0 (hbar_c)^2/(alpha^2 a^2)).
double energy_max(const WoodsSaxonSystem& system, int l);

// Closed-form energy in the nonrelativistic limit. Throws NoBoundState when
// the index factor T = sqrt(1 + 192 l(l+1) a^4/R0^4) - 2n - 1 is <= 0.
double energy_nonrelativistic(const WoodsSaxonSystem& system, int n, int l);

// Drives energy_roots over all (n, l <= l_max); excluded cells get
// diagnostics naming the violated condition.
SpectrumTable enumerate_spectrum(const WoodsSaxonSystem& system, int l_max);

}  // namespace wskg
