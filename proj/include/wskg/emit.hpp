#pragma once
#include <optional>
#include <string>
#include <vector>

#include "wskg/oracle.hpp"
#include "wskg/spectrum.hpp"
#include "wskg/wavefunction.hpp"

namespace wskg {

// One presentation row per (n, l) cell: both quadratic roots side by side,
// plus optional oracle and published reference columns.
struct EmitRow {
  std::optional<long long> A;
  double R0 = 0, V0 = 0;
  int n = 0, l = 0;
  double n_prime = 0;
  std::optional<double> E_plus, E_minus, Eb_plus, Eb_minus;
  std::optional<bool> valid_plus, valid_minus;
  std::optional<double> residual_plus, residual_minus;
  std::optional<double> oracle_E;
  std::optional<double> published_Eb;
};

// Locale-independent "%.10g" (non-finite values render as "inf"/"-inf"/"nan").
std::string format_sig10(double v);

// Groups a spectrum table's per-sign states into (l, n)-ordered EmitRows.
std::vector<EmitRow> rows_from_table(const SpectrumTable& table,
                                     std::optional<long long> A);

// Fills oracle_E for rows whose valid state matched an oracle eigenvalue
// (nearest within tol).
void annotate_oracle(std::vector<EmitRow>& rows, int l,
                     const OracleReport& report, double tol);

extern const char* const kSpectrumCsvHeader;

std::string emit_csv(const std::vector<EmitRow>& rows);
std::string emit_json(const std::vector<EmitRow>& rows);

std::string emit_samples_csv(const std::vector<RadialSample>& samples);
std::string emit_samples_json(const std::vector<RadialSample>& samples);

struct NonrelRow {
  std::optional<long long> A;
  double R0 = 0, V0 = 0;
  int n = 0, l = 0;
  double E_NR = 0;
};
std::string emit_nonrel_csv(const std::vector<NonrelRow>& rows);
std::string emit_nonrel_json(const std::vector<NonrelRow>& rows);

}  // namespace wskg
