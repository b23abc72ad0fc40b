#include <cmath>

#include "doctest.h"
#include "frozen.hpp"
#include "wskg/model.hpp"

using namespace wskg;

namespace {
double rel(double got, double expect) {
  return std::fabs(got - expect) / std::max(1.0, std::fabs(expect));
}
}  // namespace

TEST_CASE("empirical mapping reproduces the frozen radius/depth table") {
  for (const frozen::ModelRow& row : frozen::model_rows) {
    NuclearInput in;
    in.A = row.A;
    const WoodsSaxonSystem sys = system_from_mass_number(in);
    CHECK(rel(sys.R0, row.R0) < 1e-14);
    CHECK(rel(sys.V0, row.V0) < 1e-14);
    CHECK(rel(sys.alpha(), row.alpha) < 1e-14);
    CHECK(sys.m0c2 == doctest::Approx(139.570));
    CHECK(sys.a == doctest::Approx(0.65));
  }
}

TEST_CASE("potential value and profile shape") {
  NuclearInput in;
  in.A = 40;
  const WoodsSaxonSystem sys = system_from_mass_number(in);

  // Frozen values at the origin.
  CHECK(rel(potential_value(sys, 0.0), frozen::V_at_r0_A40) < 1e-13);

  // Center depth approaches -V0; far field approaches 0; monotone increasing.
  CHECK(potential_value(sys, 0.0) > -sys.V0);
  CHECK(potential_value(sys, 40.0) < 0.0);
  CHECK(potential_value(sys, 40.0) > -1e-10);
  double prev = potential_value(sys, 0.0);
  for (double r = 0.5; r < 20.0; r += 0.5) {
    const double v = potential_value(sys, r);
    CHECK(v > prev);
    prev = v;
  }

  // At r = R0 the well is at exactly half depth.
  CHECK(potential_value(sys, sys.R0) == doctest::Approx(-sys.V0 / 2).epsilon(1e-14));
}

TEST_CASE("surface-thinness predicate") {
  NuclearInput heavy;
  heavy.A = 40;
  CHECK(system_from_mass_number(heavy).thin_surface_ok());
  NuclearInput light;
  light.A = 1;  // alpha ~ 1.98
  CHECK_FALSE(system_from_mass_number(light).thin_surface_ok());
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(make_system(0.0, 4.0, 0.65, 139.57), Error);
  CHECK_THROWS_AS(make_system(-5.0, 4.0, 0.65, 139.57), Error);
  CHECK_THROWS_AS(make_system(45.0, 0.0, 0.65, 139.57), Error);
  CHECK_THROWS_AS(make_system(45.0, 4.0, 0.0, 139.57), Error);
  CHECK_THROWS_AS(make_system(45.0, 4.0, 4.5, 139.57), Error);  // a >= R0
  CHECK_THROWS_AS(make_system(45.0, 4.0, 0.65, 0.0), Error);
  try {
    make_system(0.0, 4.0, 0.65, 139.57);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
  NuclearInput bad;
  bad.A = 0;
  CHECK_THROWS_AS(system_from_mass_number(bad), Error);
}

TEST_CASE("custom conversion constant propagates") {
  PhysicalConstants pc;
  pc.hbar_c = 200.0;
  const WoodsSaxonSystem sys = make_system(45.0, 4.0, 0.65, 139.57, pc);
  CHECK(sys.constants.hbar_c == doctest::Approx(200.0));
}
