#pragma once
#include <vector>

#include "wskg/spectrum.hpp"

namespace wskg {

// A bound state prepared for wavefunction evaluation:
// u(z) = norm * z^eps * (1-z)^q * P_n^{(2 eps, 2 q)}(1 - 2z).
struct WavefunctionSpec {
  WoodsSaxonSystem system{};
  BoundState state{};
  double eps = 0;   // sqrt(eps2)
  double q = 0;     // sqrt(eps2 - beta2 + gamma2)
  double norm = 1;  // C_nl, set by normalization_constant
};

// Requires state.valid; throws InvalidArgument otherwise.
WavefunctionSpec make_wavefunction_spec(const WoodsSaxonSystem& system,
                                        const BoundState& state);

// z = 1/(1 + exp((r-R0)/a)), strictly decreasing in r.
double z_of_r(const WoodsSaxonSystem& system, double r);

// Jacobi polynomial P_n^{(a,b)}(x) for real parameters a, b > -1, via the
// finite hypergeometric sum with log-Gamma coefficient ratios.
double jacobi(int n, double a_param, double b_param, double x);

// Independent evaluation through the Rodrigues formula expanded by the
// general Leibniz rule (test oracle for `jacobi`).
double jacobi_rodrigues(int n, double a_param, double b_param, double x);

// z^eps (1-z)^q P_n^{(2 eps, 2 q)}(1-2z), without the normalization constant.
// Throws DomainError for z outside (0,1).
double radial_u_unnormalized(const WavefunctionSpec& spec, double z);

// Same value computed in extended precision from the node coordinate t
// (z = 1/(1+e^t) and 1-z = 1/(1+e^{-t}) evaluated stably); used by
// residual checks where binary64 differencing noise would dominate.
long double radial_u_from_t(const WavefunctionSpec& spec, long double t);

struct QuadratureConfig {
  double step = 1e-3;  // trapezoid step in t
  double L = 0;        // half-length; 0 = auto max(40, 30/min(2 eps, 2 q))
};

// Sets spec.norm = C_nl so that a * integral z^{2eps-1}(1-z)^{2q-1} P^2 dz = 1
// over z in (0,1) (evaluated as a smooth t-integral). Throws NonNormalizable
// when q <= 0.
double normalization_constant(WavefunctionSpec& spec,
                              QuadratureConfig config = {});

// The same norm integral restricted to the physical half-line r in [0, inf),
// i.e. z in (0, z(0)); differs from the full-line value by surface terms.
double norm_integral_physical(const WavefunctionSpec& spec,
                              QuadratureConfig config = {});

struct RadialSample {
  double r = 0;  // fm
  double z = 0;  // in (0,1)
  double u = 0;  // fm^(-1/2)
};

// Samples norm * u at each grid point (monotone grid preserved).
std::vector<RadialSample> sample_wavefunction(const WavefunctionSpec& spec,
                                              const std::vector<double>& r_grid);

}  // namespace wskg
