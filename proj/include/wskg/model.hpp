#pragma once
#include "wskg/errors.hpp"

namespace wskg {

struct PhysicalConstants {
  double hbar_c = 197.3269804;  // MeV*fm
};

// Spherical Woods-Saxon well V(r) = -V0 / (1 + exp((r-R0)/a)) for a spin-0
// particle of rest energy m0c2. All quantities in MeV and fm; hbar_c is the
// only conversion constant.
struct WoodsSaxonSystem {
  double V0 = 0;    // depth, MeV, > 0
  double R0 = 0;    // radius, fm, > 0
  double a = 0;     // surface diffuseness, fm, > 0, < R0
  double m0c2 = 0;  // rest energy, MeV, > 0
  PhysicalConstants constants{};

  double alpha() const { return R0 / a; }
  // The surface-thinness assumption degrades below alpha ~ 3; callers may warn.
  bool thin_surface_ok() const { return alpha() >= 3.0; }
};

struct NuclearInput {
  long long A = 0;       // mass number, >= 1
  double r0 = 1.285;     // radius constant, fm
  double a = 0.65;       // diffuseness, fm
  double m0c2 = 139.570; // rest energy, MeV
};

// Validates invariants (all positive, a < R0) and returns the system.
WoodsSaxonSystem make_system(double V0, double R0, double a, double m0c2,
                             PhysicalConstants constants = {});

// Empirical parameterization: V0 = 40.5 + 0.13*A MeV, R0 = r0*A^(1/3) fm.
WoodsSaxonSystem system_from_mass_number(const NuclearInput& input,
                                         PhysicalConstants constants = {});

// -V0 / (1 + exp((r-R0)/a)); strictly increasing in r, range (-V0, 0).
double potential_value(const WoodsSaxonSystem& system, double r);

}  // namespace wskg
