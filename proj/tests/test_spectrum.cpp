#include <cmath>
#include <vector>

#include "doctest.h"
#include "frozen.hpp"
#include "wskg/model.hpp"
#include "wskg/spectrum.hpp"

using namespace wskg;

namespace {

double rel(double got, double expect) {
  return std::fabs(got - expect) / std::max(1.0, std::fabs(expect));
}

WoodsSaxonSystem sys_A(long long A) {
  NuclearInput in;
  in.A = A;
  return system_from_mass_number(in);
}

WoodsSaxonSystem sys_fixture(const frozen::Fixture& f) {
  return make_system(f.V0, f.R0, f.a, f.m0c2);
}

}  // namespace

TEST_CASE("dimensionless triple against frozen values") {
  const WoodsSaxonSystem a40 = sys_A(40);
  const DimensionlessParams d = dimensionless_parameters(a40, 100.0, 1);
  CHECK(rel(d.gamma2, frozen::gamma2_A40_l1) < 1e-13);
  CHECK(d.alpha == doctest::Approx(a40.alpha()).epsilon(1e-14));

  // eps2 and q2 at a frozen fixture eigenvalue.
  const frozen::Fixture& f = frozen::fixtures[0];  // T0
  const WoodsSaxonSystem sys = sys_fixture(f);
  const frozen::FixtureState& st = f.states[0];
  const DimensionlessParams p = dimensionless_parameters(sys, st.E, f.l);
  CHECK(rel(std::sqrt(p.eps2), st.eps) < 1e-12);
  CHECK(rel(std::sqrt(p.eps2 - p.beta2 + p.gamma2), st.q) < 1e-12);
}

TEST_CASE("effective radial index and level counting") {
  const WoodsSaxonSystem a40 = sys_A(40);
  CHECK(rel(n_prime(a40, 0, 1), frozen::nprime_A40_l1_n0) < 1e-12);
  CHECK(allowed_radial_count(a40, 1) == frozen::count_A40_l1);
  CHECK(allowed_radial_count(a40, 0) == 0);  // no l = 0 levels, ever

  const WoodsSaxonSystem a56 = sys_A(56);
  CHECK(rel(n_prime(a56, 0, 2), frozen::nprime_A56_l2_n0) < 1e-12);

  // n_prime decreases by exactly 1 per radial step.
  CHECK(n_prime(a40, 3, 1) == doctest::Approx(n_prime(a40, 0, 1) - 3.0));
  CHECK_THROWS_AS(n_prime(a40, -1, 1), Error);
  CHECK_THROWS_AS(n_prime(a40, 0, -1), Error);
}

TEST_CASE("depth existence window") {
  const WoodsSaxonSystem a40 = sys_A(40);
  CHECK(rel(depth_window_max(a40.R0, a40.a, 1, a40.constants.hbar_c),
            frozen::v0max_A40_l1) < 1e-12);
  const WoodsSaxonSystem a208 = sys_A(208);
  CHECK(rel(depth_window_max(a208.R0, a208.a, 5, a208.constants.hbar_c),
            frozen::v0max_A208_l5) < 1e-12);

  // gamma2 flips sign exactly at the window edge.
  const double cap = frozen::v0max_A40_l1;
  const WoodsSaxonSystem below =
      make_system(cap * 0.999, a40.R0, a40.a, a40.m0c2);
  const WoodsSaxonSystem above =
      make_system(cap * 1.001, a40.R0, a40.a, a40.m0c2);
  CHECK(dimensionless_parameters(below, 0.0, 1).gamma2 > 0);
  CHECK(dimensionless_parameters(above, 0.0, 1).gamma2 < 0);

  // At the edge the index radicand equals 1 exactly (the two existence
  // statements meet there).
  const WoodsSaxonSystem edge = make_system(cap, a40.R0, a40.a, a40.m0c2);
  CHECK(n_prime_radicand(edge, 1) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(depth_window_max(0.0, 0.65, 1, 197.0), Error);
}

TEST_CASE("energy window upper edge") {
  const WoodsSaxonSystem a40 = sys_A(40);
  CHECK(rel(energy_max(a40, 1), frozen::emax_A40_l1) < 1e-12);
  // eps2 vanishes there.
  const double emax = energy_max(a40, 1);
  CHECK(std::fabs(dimensionless_parameters(a40, emax, 1).eps2) < 1e-9);
}

TEST_CASE("quadratic roots against frozen values (A=40, n=0, l=1)") {
  const WoodsSaxonSystem a40 = sys_A(40);
  const auto roots = energy_roots(a40, 0, 1);
  CHECK(rel(roots.first.energy, frozen::roots_A40_n0_l1.E_plus) < 1e-10);
  CHECK(rel(roots.second.energy, frozen::roots_A40_n0_l1.E_minus) < 1e-10);
  CHECK(rel(roots.first.binding, frozen::roots_A40_n0_l1.Eb_plus) < 1e-10);
  CHECK(rel(roots.second.binding, frozen::roots_A40_n0_l1.Eb_minus) < 1e-10);
  CHECK(rel(roots.first.residual, frozen::roots_A40_n0_l1.res_plus) < 1e-9);
  CHECK(rel(roots.second.residual, frozen::roots_A40_n0_l1.res_minus) < 1e-9);
  // Neither root satisfies the quantization condition: both are flagged.
  CHECK_FALSE(roots.first.valid);
  CHECK_FALSE(roots.second.valid);
  CHECK(roots.first.root_sign == 1);
  CHECK(roots.second.root_sign == -1);
}

TEST_CASE("published-geometry table frozen end to end") {
  for (const frozen::Table1Row& row : frozen::table1) {
    const WoodsSaxonSystem sys = sys_A(row.A);
    CHECK(rel(sys.R0, row.R0) < 1e-13);
    CHECK(rel(sys.V0, row.V0) < 1e-13);
    CHECK(rel(n_prime(sys, row.n, row.l), row.n_prime) < 1e-12);
    CHECK(allowed_radial_count(sys, row.l) == row.count);
    const auto roots = energy_roots(sys, row.n, row.l);
    CHECK(rel(roots.first.energy, row.E_plus) < 1e-10);
    CHECK(rel(roots.second.energy, row.E_minus) < 1e-10);
    CHECK(rel(roots.first.binding, row.Eb_plus) < 1e-10);
    CHECK(rel(roots.second.binding, row.Eb_minus) < 1e-10);
    CHECK(rel(roots.first.residual, row.res_plus) < 1e-9);
    CHECK(rel(roots.second.residual, row.res_minus) < 1e-9);
  }
}

TEST_CASE("the two closed-form routes agree") {
  for (const frozen::Table1Row& row : frozen::table1) {
    const WoodsSaxonSystem sys = sys_A(row.A);
    const auto roots = energy_roots(sys, row.n, row.l);
    CHECK(rel(energy_closed_form(sys, row.n, row.l, +1), roots.first.energy) <
          1e-10);
    CHECK(rel(energy_closed_form(sys, row.n, row.l, -1), roots.second.energy) <
          1e-10);
    // And the assembled quadratic really vanishes at the closed-form roots.
    const auto q = energy_quadratic(sys, row.n, row.l);
    for (int sign : {+1, -1}) {
      const double e = energy_closed_form(sys, row.n, row.l, sign);
      const double val = (q[0] * e + q[1]) * e + q[2];
      const double scale =
          std::fabs(q[0] * e * e) + std::fabs(q[1] * e) + std::fabs(q[2]);
      CHECK(std::fabs(val) < 1e-10 * scale);
    }
  }
  const WoodsSaxonSystem a40 = sys_A(40);
  CHECK_THROWS_AS(energy_closed_form(a40, 0, 1, 2), Error);
}

TEST_CASE("fixture systems: scan states match frozen eigenvalues") {
  for (const frozen::Fixture& f : frozen::fixtures) {
    const WoodsSaxonSystem sys = sys_fixture(f);
    CHECK(allowed_radial_count(sys, f.l) == f.count);
    int found = 0, total = 0;
    for (int n = 0; n < f.count; ++n) {
      const std::vector<BoundState> states = solve_quantization_scan(sys, n, f.l);
      total += static_cast<int>(states.size());
      for (const BoundState& s : states) {
        // Find the frozen state with this n (fixtures store at most one per n).
        for (int i = 0; i < f.n_states; ++i) {
          if (f.states[i].n != n) continue;
          ++found;
          CHECK(rel(s.energy, f.states[i].E) < 1e-8);
          CHECK(rel(std::sqrt(s.params.eps2), f.states[i].eps) < 1e-8);
          CHECK(rel(s.n_prime, f.states[i].n_prime) < 1e-12);
          CHECK(s.valid);
          CHECK(s.residual <= 1e-9);
        }
      }
    }
    CHECK(found == f.n_states);
    CHECK(total == f.n_states);
  }
}

TEST_CASE("scan roots coincide with certified quadratic roots") {
  const frozen::Fixture& f = frozen::fixtures[9];  // T9: two states
  const WoodsSaxonSystem sys = sys_fixture(f);
  for (int n = 0; n < f.count; ++n) {
    for (const BoundState& s : solve_quantization_scan(sys, n, f.l)) {
      const auto roots = energy_roots(sys, n, f.l);
      const double d = std::min(std::fabs(s.energy - roots.first.energy),
                                std::fabs(s.energy - roots.second.energy));
      CHECK(d < 1e-8);
    }
  }
  ScanConfig bad;
  bad.samples = 1;
  CHECK_THROWS_AS(solve_quantization_scan(sys, 0, f.l, bad), Error);
}

TEST_CASE("exclusion errors carry the right categories") {
  const WoodsSaxonSystem a40 = sys_A(40);
  // n too large: the effective index is exhausted.
  CHECK_THROWS_AS(energy_roots(a40, 5, 1), Error);
  try {
    energy_roots(a40, 5, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoBoundState);
  }
  // Over-deep well: the index radicand goes negative.
  const WoodsSaxonSystem deep = make_system(200.0, a40.R0, a40.a, a40.m0c2);
  CHECK(n_prime_radicand(deep, 1) < 0);
  try {
    energy_roots(deep, 0, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OverDeepPotential);
  }
}

TEST_CASE("nonrelativistic closed form against frozen values") {
  for (const frozen::NonrelRef& ref : frozen::nonrel_refs) {
    const WoodsSaxonSystem sys = sys_A(ref.A);
    CHECK(rel(energy_nonrelativistic(sys, 0, ref.l), ref.E_NR_n0) < 1e-10);
  }
  // The index factor forbids n = 1 for this geometry.
  const WoodsSaxonSystem a40 = sys_A(40);
  try {
    energy_nonrelativistic(a40, 1, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoBoundState);
  }
}

TEST_CASE("full enumeration: rows, ordering, diagnostics") {
  const WoodsSaxonSystem a40 = sys_A(40);
  const SpectrumTable table = enumerate_spectrum(a40, 1);
  REQUIRE(table.rows.size() == 2);  // both roots of (n=0, l=1)
  CHECK(table.rows[0].energy < table.rows[1].energy);
  CHECK(table.rows[0].l == 1);

  bool saw_l0 = false;
  for (const Diagnostic& d : table.diagnostics) {
    if (d.l == 0) {
      saw_l0 = true;
      CHECK(d.reason.find("zero angular momentum") != std::string::npos);
    }
  }
  CHECK(saw_l0);

  // Doubling the depth beyond the window empties the spectrum with a named
  // depth-window diagnostic.
  const double cap = depth_window_max(a40.R0, a40.a, 1, a40.constants.hbar_c);
  const WoodsSaxonSystem deep = make_system(2.0 * cap, a40.R0, a40.a, a40.m0c2);
  const SpectrumTable over = enumerate_spectrum(deep, 1);
  CHECK(over.rows.empty());
  bool saw_window = false;
  for (const Diagnostic& d : over.diagnostics) {
    if (d.l == 1) {
      saw_window = true;
      CHECK(d.reason.find("existence window") != std::string::npos);
    }
  }
  CHECK(saw_window);
  CHECK_THROWS_AS(enumerate_spectrum(a40, -1), Error);
}

TEST_CASE("binding energy convention") {
  CHECK(binding_energy(50.0, 139.57) == doctest::Approx(-89.57));
  const WoodsSaxonSystem a40 = sys_A(40);
  const auto roots = energy_roots(a40, 0, 1);
  CHECK(roots.first.binding ==
        doctest::Approx(roots.first.energy - a40.m0c2).epsilon(1e-14));
}
