#include <cmath>

#include "doctest.h"
#include "frozen.hpp"
#include "wskg/model.hpp"
#include "wskg/pekeris.hpp"

using namespace wskg;

TEST_CASE("frozen coefficient triple at the A=40 surface ratio") {
  NuclearInput in;
  in.A = 40;
  const WoodsSaxonSystem sys = system_from_mass_number(in);
  const PekerisCoefficients k = pekeris_coefficients(sys.alpha());
  CHECK(k.C0 == doctest::Approx(frozen::pekeris_A40_C0).epsilon(1e-14));
  CHECK(k.C1 == doctest::Approx(frozen::pekeris_A40_C1).epsilon(1e-14));
  CHECK(k.C2 == doctest::Approx(frozen::pekeris_A40_C2).epsilon(1e-14));
}

TEST_CASE("sum rules pin the three coefficients") {
  for (double alpha : {3.0, 5.0, 6.7609818199370942502, 10.0, 100.0}) {
    const PekerisCoefficients k = pekeris_coefficients(alpha);
    // y = 1/2 surface value, first and second y-moments.
    CHECK(k.C0 + k.C1 / 2 + k.C2 / 4 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(k.C1 + k.C2 == doctest::Approx(8.0 / alpha).epsilon(1e-13));
    CHECK(k.C2 == doctest::Approx(48.0 / (alpha * alpha)).epsilon(1e-14));
  }
}

TEST_CASE("approximation matches the exact barrier through second order") {
  const double alpha = 6.7609818199370942502;
  const double R0 = 4.3946381829591112626;
  const PekerisCoefficients k = pekeris_coefficients(alpha);
  const int l = 1;
  auto deviation = [&](double x) {
    const double exact = centrifugal_exact(l, R0 * (1.0 + x), R0);
    const double approx = centrifugal_pekeris(k, l, x);
    return std::fabs(exact - approx);
  };
  // Agreement through x^2 means the deviation is cubic near the surface:
  // halving x must shrink it by about 8.
  const double d1 = deviation(0.02);
  const double d2 = deviation(0.01);
  CHECK(d1 / d2 > 5.0);
  CHECK(d1 / d2 < 12.0);
  // And the deviation itself is tiny on the surface scale l(l+1).
  CHECK(d2 < 3e-5 * l * (l + 1));
}

TEST_CASE("exact and approximate shapes coincide at the surface") {
  const PekerisCoefficients k = pekeris_coefficients(8.0);
  const double exact = centrifugal_exact(2, 5.0, 5.0);
  const double approx = centrifugal_pekeris(k, 2, 0.0);
  CHECK(exact == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(approx == doctest::Approx(exact).epsilon(1e-12));
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(pekeris_coefficients(0.0), Error);
  CHECK_THROWS_AS(pekeris_coefficients(-3.0), Error);
  CHECK_THROWS_AS(centrifugal_exact(1, 0.0, 4.0), Error);  // pole at r = 0
}

TEST_CASE("surface energy scale") {
  // (hbar_c)^2 l(l+1) / (2 m0c2 R0^2)
  const double got = centrifugal_energy_scale(1, 4.0, 139.57, 197.3269804);
  const double expect = 197.3269804 * 197.3269804 * 2.0 / (2.0 * 139.57 * 16.0);
  CHECK(got == doctest::Approx(expect).epsilon(1e-14));
}
