#include "wskg/wavefunction.hpp"

#include <cmath>
#include <limits>

namespace wskg {

namespace {

void check_jacobi_args(int n, double a_param, double b_param) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be >= 0");
  if (!(a_param > -1.0) || !(b_param > -1.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "Jacobi parameters must both be > -1");
  }
}

// Finite hypergeometric sum
//   P_n^{(a,b)}(x) = sum_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^(n-s)
// with each binomial evaluated as a log-Gamma ratio; every Gamma argument is
// positive for a, b > -1, so no reflection is ever needed.
template <typename T>
T jacobi_series(int n, T a_param, T b_param, T x) {
  const T xm = (x - T(1)) / T(2);
  const T xp = (x + T(1)) / T(2);
  T total = 0;
  for (int s = 0; s <= n; ++s) {
    const T lc = std::lgamma(T(n) + a_param + T(1)) -
                 std::lgamma(a_param + T(s) + T(1)) -
                 std::lgamma(T(n - s) + T(1)) +
                 std::lgamma(T(n) + b_param + T(1)) -
                 std::lgamma(T(n) + b_param + T(1) - T(s)) -
                 std::lgamma(T(s) + T(1));
    total += std::exp(lc) * std::pow(xm, T(s)) * std::pow(xp, T(n - s));
  }
  return total;
}

// u(t) without the normalization constant. Both logistic factors enter in
// log form through softplus(t) = log(1 + e^t), evaluated one-sidedly so that
// log z = -softplus(t) and log(1-z) = t - softplus(t) stay exact far beyond
// the overflow point of e^t (slow tails can extend past |t| ~ 10^3);
// 1 - 2z = tanh(t/2) is cancellation-free on both tails.
template <typename T>
T u_from_t(int n, T eps, T q, T t) {
  const T sp = t > T(0) ? t + std::log1p(std::exp(-t))
                        : std::log1p(std::exp(t));
  const T x = std::tanh(t / T(2));  // = 1 - 2z
  const T poly = jacobi_series<T>(n, 2 * eps, 2 * q, x);
  return std::exp(eps * (-sp) + q * (t - sp)) * poly;
}

double auto_half_length(double eps, double q) {
  const double slowest = std::min(2.0 * eps, 2.0 * q);
  return std::max(40.0, 30.0 / slowest);
}

// Trapezoid of f over [lo, hi] with step <= step_hint (endpoints included).
template <typename F>
double trapezoid(F&& f, double lo, double hi, double step_hint) {
  const int N = std::max(2, static_cast<int>(std::ceil((hi - lo) / step_hint)));
  const double h = (hi - lo) / N;
  double acc = 0.5 * (f(lo) + f(hi));
  for (int i = 1; i < N; ++i) acc += f(lo + i * h);
  return acc * h;
}

}  // namespace

WavefunctionSpec make_wavefunction_spec(const WoodsSaxonSystem& system,
                                        const BoundState& state) {
  if (!state.valid) {
    throw Error(ErrorCode::InvalidArgument,
                "state does not satisfy the quantization condition (valid is "
                "false)");
  }
  WavefunctionSpec spec;
  spec.system = system;
  spec.state = state;
  spec.eps = std::sqrt(state.params.eps2);
  const double q2 =
      state.params.eps2 - state.params.beta2 + state.params.gamma2;
  spec.q = std::sqrt(q2);
  spec.norm = 1.0;
  return spec;
}

double z_of_r(const WoodsSaxonSystem& system, double r) {
  return 1.0 / (1.0 + std::exp((r - system.R0) / system.a));
}

double jacobi(int n, double a_param, double b_param, double x) {
  check_jacobi_args(n, a_param, b_param);
  return jacobi_series<double>(n, a_param, b_param, x);
}

double jacobi_rodrigues(int n, double a_param, double b_param, double x) {
  check_jacobi_args(n, a_param, b_param);
  // (1/n!) z^{-a} (1-z)^{-b} d^n/dz^n [ z^{n+a} (1-z)^{n+b} ], z = (1-x)/2,
  // expanded by the Leibniz rule; the fractional prefactors cancel against
  // the derivative factors symbolically, leaving integer powers only.
  const double z = (1.0 - x) / 2.0;
  double sum = 0;
  double binom = 1;  // C(n, k), updated incrementally
  for (int k = 0; k <= n; ++k) {
    double ffa = 1;  // falling factorial (n+a)(n+a-1)...(n+a-k+1)
    for (int j = 0; j < k; ++j) ffa *= (n + a_param - j);
    double ffb = 1;  // falling factorial over n-k factors of (n+b)
    for (int j = 0; j < n - k; ++j) ffb *= (n + b_param - j);
    const double sign = ((n - k) % 2 == 0) ? 1.0 : -1.0;
    sum += binom * ffa * ffb * sign * std::pow(z, n - k) * std::pow(1.0 - z, k);
    binom = binom * (n - k) / (k + 1.0);
  }
  double factorial = 1;
  for (int j = 2; j <= n; ++j) factorial *= j;
  return sum / factorial;
}

double radial_u_unnormalized(const WavefunctionSpec& spec, double z) {
  if (!(z > 0.0 && z < 1.0)) {
    throw Error(ErrorCode::DomainError, "z must lie strictly inside (0, 1)");
  }
  const double poly =
      jacobi(spec.state.n, 2.0 * spec.eps, 2.0 * spec.q, 1.0 - 2.0 * z);
  return std::pow(z, spec.eps) * std::pow(1.0 - z, spec.q) * poly;
}

long double radial_u_from_t(const WavefunctionSpec& spec, long double t) {
  return u_from_t<long double>(spec.state.n, static_cast<long double>(spec.eps),
                               static_cast<long double>(spec.q), t);
}

double normalization_constant(WavefunctionSpec& spec, QuadratureConfig config) {
  if (!(spec.q > 0.0) || !(spec.eps > 0.0)) {
    throw Error(ErrorCode::NonNormalizable,
                "the square-integrability exponents require eps > 0 and "
                "q > 0");
  }
  if (config.step <= 0) {
    throw Error(ErrorCode::InvalidArgument, "step must be > 0");
  }
  const double L =
      config.L > 0 ? config.L : auto_half_length(spec.eps, spec.q);
  const int n = spec.state.n;
  const double eps = spec.eps, q = spec.q;
  const double integral = trapezoid(
      [&](double t) {
        const double u = u_from_t<double>(n, eps, q, t);
        return u * u;
      },
      -L, L, config.step);
  if (!(integral > 0) || !std::isfinite(integral)) {
    throw Error(ErrorCode::NonNormalizable, "norm integral is not positive");
  }
  spec.norm = 1.0 / std::sqrt(spec.system.a * integral);
  return spec.norm;
}

double norm_integral_physical(const WavefunctionSpec& spec,
                              QuadratureConfig config) {
  if (config.step <= 0) {
    throw Error(ErrorCode::InvalidArgument, "step must be > 0");
  }
  const double L =
      config.L > 0 ? config.L : auto_half_length(spec.eps, spec.q);
  const int n = spec.state.n;
  const double eps = spec.eps, q = spec.q;
  // r in [0, inf) maps to t in [-alpha, +inf); the upper limit is truncated
  // where the integrand has decayed below double precision.
  const double integral = trapezoid(
      [&](double t) {
        const double u = u_from_t<double>(n, eps, q, t);
        return u * u;
      },
      -spec.system.alpha(), L, config.step);
  return spec.system.a * spec.norm * spec.norm * integral;
}

std::vector<RadialSample> sample_wavefunction(
    const WavefunctionSpec& spec, const std::vector<double>& r_grid) {
  std::vector<RadialSample> out;
  out.reserve(r_grid.size());
  for (double r : r_grid) {
    const double t = (r - spec.system.R0) / spec.system.a;
    RadialSample s;
    s.r = r;
    s.z = z_of_r(spec.system, r);
    s.u = spec.norm *
          u_from_t<double>(spec.state.n, spec.eps, spec.q, t);
    out.push_back(s);
  }
  return out;
}

}  // namespace wskg
