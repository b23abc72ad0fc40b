#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wskg/emit.hpp"
#include "wskg/errors.hpp"
#include "wskg/model.hpp"
#include "wskg/oracle.hpp"
#include "wskg/published.hpp"
#include "wskg/spectrum.hpp"
#include "wskg/verify.hpp"
#include "wskg/wavefunction.hpp"

namespace {

using namespace wskg;

struct Common {
  long long A = 0;
  double V0 = 0, R0 = 0;
  double a = 0.65, m0c2 = 139.570;
  double hc = 0;
  std::string format = "csv";
  std::string output;
  CLI::Option* oA = nullptr;
  CLI::Option* oV0 = nullptr;
  CLI::Option* oR0 = nullptr;
  CLI::Option* ohc = nullptr;
};

void add_system_options(CLI::App* cmd, Common& c) {
  c.oA = cmd->add_option(
      "--A", c.A, "mass number; sets V0 = 40.5 + 0.13 A MeV, R0 = 1.285 A^(1/3) fm");
  c.oV0 = cmd->add_option("--V0", c.V0, "well depth in MeV (with --R0)");
  c.oR0 = cmd->add_option("--R0", c.R0, "well radius in fm (with --V0)");
  cmd->add_option("--a", c.a, "surface diffuseness in fm")->capture_default_str();
  cmd->add_option("--m0c2", c.m0c2, "rest energy in MeV")->capture_default_str();
  c.ohc = cmd->add_option(
      "--hc", c.hc, "hbar*c in MeV*fm; overrides WSKG_HBARC (default 197.3269804)");
}

void add_output_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "output format: csv or json")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", c.output, "write the payload to this file");
}

double resolve_hbar_c(const Common& c) {
  if (c.ohc != nullptr && c.ohc->count() > 0) {
    if (!(c.hc > 0) || !std::isfinite(c.hc)) {
      throw Error(ErrorCode::InvalidArgument, "hbar*c must be a positive number");
    }
    return c.hc;
  }
  if (const char* env = std::getenv("WSKG_HBARC")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0) || !std::isfinite(v)) {
      throw Error(ErrorCode::InvalidArgument,
                  "WSKG_HBARC must be a positive number");
    }
    return v;
  }
  return PhysicalConstants{}.hbar_c;
}

bool mass_number_given(const Common& c) { return c.oA->count() > 0; }

WoodsSaxonSystem resolve_system(const Common& c) {
  PhysicalConstants pc;
  pc.hbar_c = resolve_hbar_c(c);
  const bool have_A = mass_number_given(c);
  const bool have_explicit = c.oV0->count() > 0 || c.oR0->count() > 0;
  if (have_A == have_explicit) {
    throw Error(ErrorCode::InvalidArgument,
                "exactly one system source is required: --A, or --V0 with --R0");
  }
  if (have_A) {
    if (c.A < 1) {
      throw Error(ErrorCode::InvalidArgument, "mass number must be >= 1");
    }
    NuclearInput in;
    in.A = c.A;
    in.a = c.a;
    in.m0c2 = c.m0c2;
    return system_from_mass_number(in, pc);
  }
  if (c.oV0->count() == 0 || c.oR0->count() == 0) {
    throw Error(ErrorCode::InvalidArgument,
                "an explicit system needs both --V0 and --R0");
  }
  return make_system(c.V0, c.R0, c.a, c.m0c2, pc);
}

void write_payload(const Common& c, const std::string& payload) {
  if (c.output.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) {
    throw Error(ErrorCode::IoError, "cannot open output file: " + c.output);
  }
  f << payload;
  if (!f) {
    throw Error(ErrorCode::IoError, "cannot write output file: " + c.output);
  }
}

void warn_thin_surface(const WoodsSaxonSystem& sys) {
  if (!sys.thin_surface_ok()) {
    std::cerr << "note: R0/a = " << sys.alpha()
              << " < 3; the surface-thinness approximation degrades here\n";
  }
}

int run_spectrum(const Common& c, int l_max, bool with_oracle,
                 int oracle_points) {
  const WoodsSaxonSystem sys = resolve_system(c);
  warn_thin_surface(sys);
  const SpectrumTable table = enumerate_spectrum(sys, l_max);
  std::optional<long long> A;
  if (mass_number_given(c)) A = c.A;
  std::vector<EmitRow> rows = rows_from_table(table, A);
  if (with_oracle) {
    for (int l = 0; l <= l_max; ++l) {
      OracleConfig cfg;
      cfg.scan_points = oracle_points;
      const OracleReport report = oracle_eigenvalues(sys, l, cfg);
      annotate_oracle(rows, l, report, 1e-4);
    }
  }
  write_payload(c, c.format == "json" ? emit_json(rows) : emit_csv(rows));
  for (const Diagnostic& d : table.diagnostics) {
    std::cerr << "note: l=" << d.l << " n=" << d.n << ": " << d.reason << "\n";
  }
  return 0;
}

int run_table1(const Common& c, int oracle_points) {
  PhysicalConstants pc;
  pc.hbar_c = resolve_hbar_c(c);
  std::vector<EmitRow> rows;
  int mismatches = 0;
  for (const PublishedRow& pub : published_table) {
    NuclearInput in;
    in.A = pub.A;
    const WoodsSaxonSystem sys = system_from_mass_number(in, pc);
    SpectrumTable mini;
    mini.system = sys;
    try {
      const auto roots = energy_roots(sys, pub.n, pub.l);
      mini.rows.push_back(roots.first);
      mini.rows.push_back(roots.second);
    } catch (const Error& e) {
      std::cerr << "note: A=" << pub.A << " n=" << pub.n << " l=" << pub.l
                << ": " << e.what() << "\n";
    }
    std::vector<EmitRow> cell = rows_from_table(mini, pub.A);
    if (cell.empty()) {
      EmitRow bare;
      bare.A = pub.A;
      bare.R0 = sys.R0;
      bare.V0 = sys.V0;
      bare.n = pub.n;
      bare.l = pub.l;
      cell.push_back(bare);
    }
    cell.front().published_Eb = pub.Eb;
    OracleConfig cfg;
    cfg.scan_points = oracle_points;
    const OracleReport report = oracle_eigenvalues(sys, pub.l, cfg);
    annotate_oracle(cell, pub.l, report, 1e-4);
    const EmitRow& row = cell.front();
    const bool plus_match =
        row.Eb_plus && row.valid_plus.value_or(false) &&
        std::fabs(*row.Eb_plus - pub.Eb) < 1e-3;
    const bool minus_match =
        row.Eb_minus && row.valid_minus.value_or(false) &&
        std::fabs(*row.Eb_minus - pub.Eb) < 1e-3;
    if (!plus_match && !minus_match) ++mismatches;
    rows.push_back(row);
  }
  write_payload(c, c.format == "json" ? emit_json(rows) : emit_csv(rows));
  if (mismatches > 0) {
    std::cerr << "note: " << mismatches << " of " << published_table_size
              << " published rows have no certified root reproducing the "
                 "published binding energy\n";
  }
  return 0;
}

int run_wavefunction(const Common& c, int n, int l, double r_min,
                     const CLI::Option* o_rmax, double r_max, int points) {
  const WoodsSaxonSystem sys = resolve_system(c);
  warn_thin_surface(sys);
  const auto roots = energy_roots(sys, n, l);
  std::vector<BoundState> valid;
  if (roots.first.valid) valid.push_back(roots.first);
  if (roots.second.valid) valid.push_back(roots.second);
  if (valid.empty()) {
    throw Error(ErrorCode::NoBoundState,
                "no certified bound state at n=" + std::to_string(n) +
                    ", l=" + std::to_string(l) +
                    ": both quadratic roots fail the quantization residual");
  }
  BoundState chosen = valid.front();
  if (valid.size() == 2) {
    const bool first_particle = std::fabs(valid[0].energy) < sys.m0c2;
    chosen = first_particle ? valid[0] : valid[1];
    std::cerr << "note: both roots are certified; selecting the particle "
                 "branch E = "
              << chosen.energy << " MeV\n";
  }
  WavefunctionSpec spec = make_wavefunction_spec(sys, chosen);
  normalization_constant(spec);
  if (points < 2) {
    throw Error(ErrorCode::InvalidArgument, "points must be >= 2");
  }
  if (!(r_min >= 0)) {
    throw Error(ErrorCode::InvalidArgument, "r-min must be >= 0");
  }
  if (o_rmax->count() == 0) r_max = sys.R0 + 40.0 * sys.a;
  if (!(r_max > r_min)) {
    throw Error(ErrorCode::InvalidArgument, "r-max must exceed r-min");
  }
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) {
    grid[i] = r_min + (r_max - r_min) * i / (points - 1);
  }
  const std::vector<RadialSample> samples = sample_wavefunction(spec, grid);
  write_payload(c, c.format == "json" ? emit_samples_json(samples)
                                      : emit_samples_csv(samples));
  std::cerr << "note: E = " << chosen.energy
            << " MeV, normalization constant C = " << spec.norm << "\n";
  return 0;
}

int run_nonrel(const Common& c, int n, int l) {
  const WoodsSaxonSystem sys = resolve_system(c);
  warn_thin_surface(sys);
  NonrelRow row;
  if (mass_number_given(c)) row.A = c.A;
  row.R0 = sys.R0;
  row.V0 = sys.V0;
  row.n = n;
  row.l = l;
  row.E_NR = energy_nonrelativistic(sys, n, l);
  const std::vector<NonrelRow> rows{row};
  write_payload(c,
                c.format == "json" ? emit_nonrel_json(rows) : emit_nonrel_csv(rows));
  return 0;
}

int run_verify(int only) {
  const std::vector<CriterionResult> results = run_acceptance(only);
  if (results.empty()) {
    std::cerr << "error: criterion index out of range\n";
    return 1;
  }
  bool all_pass = true;
  for (const CriterionResult& r : results) {
    char line[2048];
    std::snprintf(line, sizeof line, "%s  [%2d] %-40s %8.3fs  %s",
                  r.pass ? "PASS" : "FAIL", r.index, r.name.c_str(), r.seconds,
                  r.detail.c_str());
    std::cout << line << "\n";
    all_pass = all_pass && r.pass;
  }
  std::cout << (all_pass ? "all criteria passed" : "some criteria FAILED")
            << "\n";
  return all_pass ? 0 : 2;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "wskg: relativistic bound states of the spherical Woods-Saxon well "
      "(closed-form spectrum, wavefunctions, independent shooting check)"};
  app.require_subcommand(1);

  Common c_spec, c_table, c_wf, c_nr;

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "enumerate the bound spectrum up to --l-max");
  int l_max = 4;
  bool with_oracle = false;
  int oracle_points = 4000;
  add_system_options(spectrum, c_spec);
  add_output_options(spectrum, c_spec);
  spectrum->add_option("--l-max", l_max, "largest orbital angular momentum")
      ->capture_default_str()
      ->check(CLI::Range(0, 64));
  spectrum->add_flag("--oracle", with_oracle,
                     "annotate certified states with shooting-method energies");
  spectrum->add_option("--oracle-points", oracle_points,
                       "energy-scan resolution for --oracle")
      ->capture_default_str()
      ->check(CLI::Range(100, 1000000));

  CLI::App* table1 = app.add_subcommand(
      "table1",
      "side-by-side comparison against the published reference rows");
  int table_points = 2000;
  add_output_options(table1, c_table);
  c_table.ohc = table1->add_option(
      "--hc", c_table.hc, "hbar*c in MeV*fm; overrides WSKG_HBARC");
  table1->add_option("--oracle-points", table_points,
                     "energy-scan resolution for the shooting check")
      ->capture_default_str()
      ->check(CLI::Range(100, 1000000));

  CLI::App* wavefunction = app.add_subcommand(
      "wavefunction", "sample the normalized radial wavefunction u(r)");
  int wf_n = 0, wf_l = 1, wf_points = 1000;
  double r_min = 0.0, r_max = 0.0;
  add_system_options(wavefunction, c_wf);
  add_output_options(wavefunction, c_wf);
  wavefunction->add_option("--n", wf_n, "radial quantum number")->required();
  wavefunction->add_option("--l", wf_l, "orbital angular momentum")->required();
  wavefunction->add_option("--r-min", r_min, "grid start in fm")->capture_default_str();
  CLI::Option* o_rmax = wavefunction->add_option(
      "--r-max", r_max, "grid end in fm (default R0 + 40 a)");
  wavefunction->add_option("--points", wf_points, "number of grid points")
      ->capture_default_str();

  CLI::App* nonrel = app.add_subcommand(
      "nonrel", "closed-form energy in the nonrelativistic limit");
  int nr_n = 0, nr_l = 1;
  add_system_options(nonrel, c_nr);
  add_output_options(nonrel, c_nr);
  nonrel->add_option("--n", nr_n, "radial quantum number")->required();
  nonrel->add_option("--l", nr_l, "orbital angular momentum")->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "run the acceptance criteria (exit 2 on any failure)");
  int only = 0;
  verify->add_option("--only", only, "run a single criterion (1..11)")
      ->capture_default_str()
      ->check(CLI::Range(0, 11));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const Common* active = nullptr;
  if (spectrum->parsed()) active = &c_spec;
  if (table1->parsed()) active = &c_table;
  if (wavefunction->parsed()) active = &c_wf;
  if (nonrel->parsed()) active = &c_nr;

  try {
    if (spectrum->parsed()) {
      return run_spectrum(c_spec, l_max, with_oracle, oracle_points);
    }
    if (table1->parsed()) return run_table1(c_table, table_points);
    if (wavefunction->parsed()) {
      return run_wavefunction(c_wf, wf_n, wf_l, r_min, o_rmax, r_max,
                              wf_points);
    }
    if (nonrel->parsed()) return run_nonrel(c_nr, nr_n, nr_l);
    if (verify->parsed()) return run_verify(only);
  } catch (const wskg::Error& e) {
    std::cerr << "error (" << e.code_name() << "): " << e.what() << "\n";
    if (active != nullptr && active->format == "json") {
      std::cout << "{\n  \"error\": {\n    \"code\": \"" << e.code_name()
                << "\",\n    \"message\": \"" << json_escape(e.what())
                << "\"\n  }\n}\n";
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
