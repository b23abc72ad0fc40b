#include "wskg/model.hpp"

#include <cmath>
#include <string>

namespace wskg {

WoodsSaxonSystem make_system(double V0, double R0, double a, double m0c2,
                             PhysicalConstants constants) {
  if (!(constants.hbar_c > 0)) {
    throw Error(ErrorCode::InvalidArgument, "hbar_c must be > 0");
  }
  if (!(V0 > 0)) {
    throw Error(ErrorCode::InvalidArgument, "potential depth V0 must be > 0");
  }
  if (!(R0 > 0)) {
    throw Error(ErrorCode::InvalidArgument, "radius R0 must be > 0");
  }
  if (!(a > 0)) {
    throw Error(ErrorCode::InvalidArgument, "diffuseness a must be > 0");
  }
  if (!(m0c2 > 0)) {
    throw Error(ErrorCode::InvalidArgument, "rest energy m0c2 must be > 0");
  }
  if (!(a < R0)) {
    throw Error(ErrorCode::InvalidArgument,
                "diffuseness a must be smaller than radius R0 (surface "
                "thinner than the well)");
  }
  return WoodsSaxonSystem{V0, R0, a, m0c2, constants};
}

WoodsSaxonSystem system_from_mass_number(const NuclearInput& input,
                                         PhysicalConstants constants) {
  if (input.A < 1) {
    throw Error(ErrorCode::InvalidArgument, "mass number must be >= 1");
  }
  if (!(input.r0 > 0) || !(input.a > 0) || !(input.m0c2 > 0)) {
    throw Error(ErrorCode::InvalidArgument,
                "r0, a, and m0c2 must all be > 0");
  }
  const double V0 = 40.5 + 0.13 * static_cast<double>(input.A);
  const double R0 = input.r0 * std::cbrt(static_cast<double>(input.A));
  return make_system(V0, R0, input.a, input.m0c2, constants);
}

double potential_value(const WoodsSaxonSystem& system, double r) {
  if (!(r >= 0)) {
    throw Error(ErrorCode::DomainError, "radius must be >= 0");
  }
  return -system.V0 / (1.0 + std::exp((r - system.R0) / system.a));
}

}  // namespace wskg
