#include "wskg/emit.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <utility>

namespace wskg {

namespace {

std::string opt_num(const std::optional<double>& v) {
  return v ? format_sig10(*v) : std::string();
}

std::string opt_bool(const std::optional<bool>& v) {
  return v ? std::string(*v ? "true" : "false") : std::string();
}

// JSON scalar renderings: absent -> null, non-finite -> null.
std::string json_num(double v) {
  if (!std::isfinite(v)) return "null";
  return format_sig10(v);
}

std::string json_opt_num(const std::optional<double>& v) {
  return v ? json_num(*v) : std::string("null");
}

std::string json_opt_bool(const std::optional<bool>& v) {
  return v ? std::string(*v ? "true" : "false") : std::string("null");
}

}  // namespace

std::string format_sig10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

const char* const kSpectrumCsvHeader =
    "A,R0_fm,V0_MeV,n,l,n_prime,E_plus_MeV,E_minus_MeV,Eb_plus_MeV,"
    "Eb_minus_MeV,valid_plus,valid_minus,residual_plus,residual_minus,"
    "oracle_E_MeV,published_Eb_MeV";

std::vector<EmitRow> rows_from_table(const SpectrumTable& table,
                                     std::optional<long long> A) {
  std::map<std::pair<int, int>, EmitRow> cells;  // key (l, n)
  for (const BoundState& s : table.rows) {
    EmitRow& row = cells[{s.l, s.n}];
    row.A = A;
    row.R0 = table.system.R0;
    row.V0 = table.system.V0;
    row.n = s.n;
    row.l = s.l;
    row.n_prime = s.n_prime;
    if (s.root_sign >= 0) {
      row.E_plus = s.energy;
      row.Eb_plus = s.binding;
      row.valid_plus = s.valid;
      row.residual_plus = s.residual;
    }
    if (s.root_sign <= 0) {
      row.E_minus = s.energy;
      row.Eb_minus = s.binding;
      row.valid_minus = s.valid;
      row.residual_minus = s.residual;
    }
  }
  std::vector<EmitRow> rows;
  rows.reserve(cells.size());
  for (auto& kv : cells) rows.push_back(std::move(kv.second));
  return rows;
}

void annotate_oracle(std::vector<EmitRow>& rows, int l,
                     const OracleReport& report, double tol) {
  std::vector<bool> used(report.eigenvalues.size(), false);
  for (EmitRow& row : rows) {
    if (row.l != l) continue;
    std::optional<double> e;
    if (row.valid_plus && *row.valid_plus) {
      e = row.E_plus;
    } else if (row.valid_minus && *row.valid_minus) {
      e = row.E_minus;
    }
    if (!e) continue;
    int best = -1;
    double best_d = tol;
    for (std::size_t j = 0; j < report.eigenvalues.size(); ++j) {
      if (used[j]) continue;
      const double d = std::fabs(report.eigenvalues[j] - *e);
      if (d <= best_d) {
        best_d = d;
        best = static_cast<int>(j);
      }
    }
    if (best >= 0) {
      used[best] = true;
      row.oracle_E = report.eigenvalues[best];
    }
  }
}

std::string emit_csv(const std::vector<EmitRow>& rows) {
  std::string out = kSpectrumCsvHeader;
  out += '\n';
  for (const EmitRow& r : rows) {
    if (r.A) out += std::to_string(*r.A);
    out += ',';
    out += format_sig10(r.R0);
    out += ',';
    out += format_sig10(r.V0);
    out += ',';
    out += std::to_string(r.n);
    out += ',';
    out += std::to_string(r.l);
    out += ',';
    out += format_sig10(r.n_prime);
    out += ',';
    out += opt_num(r.E_plus);
    out += ',';
    out += opt_num(r.E_minus);
    out += ',';
    out += opt_num(r.Eb_plus);
    out += ',';
    out += opt_num(r.Eb_minus);
    out += ',';
    out += opt_bool(r.valid_plus);
    out += ',';
    out += opt_bool(r.valid_minus);
    out += ',';
    out += opt_num(r.residual_plus);
    out += ',';
    out += opt_num(r.residual_minus);
    out += ',';
    out += opt_num(r.oracle_E);
    out += ',';
    out += opt_num(r.published_Eb);
    out += '\n';
  }
  return out;
}

std::string emit_json(const std::vector<EmitRow>& rows) {
  std::string out = "{\n  \"rows\": [";
  bool first = true;
  for (const EmitRow& r : rows) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "    {\n";
    out += "      \"A\": ";
    out += r.A ? std::to_string(*r.A) : std::string("null");
    out += ",\n      \"R0_fm\": " + json_num(r.R0);
    out += ",\n      \"V0_MeV\": " + json_num(r.V0);
    out += ",\n      \"n\": " + std::to_string(r.n);
    out += ",\n      \"l\": " + std::to_string(r.l);
    out += ",\n      \"n_prime\": " + json_num(r.n_prime);
    out += ",\n      \"E_plus_MeV\": " + json_opt_num(r.E_plus);
    out += ",\n      \"E_minus_MeV\": " + json_opt_num(r.E_minus);
    out += ",\n      \"Eb_plus_MeV\": " + json_opt_num(r.Eb_plus);
    out += ",\n      \"Eb_minus_MeV\": " + json_opt_num(r.Eb_minus);
    out += ",\n      \"valid_plus\": " + json_opt_bool(r.valid_plus);
    out += ",\n      \"valid_minus\": " + json_opt_bool(r.valid_minus);
    out += ",\n      \"residual_plus\": " + json_opt_num(r.residual_plus);
    out += ",\n      \"residual_minus\": " + json_opt_num(r.residual_minus);
    out += ",\n      \"oracle_E_MeV\": " + json_opt_num(r.oracle_E);
    out += ",\n      \"published_Eb_MeV\": " + json_opt_num(r.published_Eb);
    out += "\n    }";
  }
  out += first ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::string emit_samples_csv(const std::vector<RadialSample>& samples) {
  std::string out = "r_fm,z,u\n";
  for (const RadialSample& s : samples) {
    out += format_sig10(s.r);
    out += ',';
    out += format_sig10(s.z);
    out += ',';
    out += format_sig10(s.u);
    out += '\n';
  }
  return out;
}

std::string emit_samples_json(const std::vector<RadialSample>& samples) {
  std::string out = "{\n  \"samples\": [";
  bool first = true;
  for (const RadialSample& s : samples) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "    {\"r_fm\": " + json_num(s.r) + ", \"z\": " + json_num(s.z) +
           ", \"u\": " + json_num(s.u) + "}";
  }
  out += first ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::string emit_nonrel_csv(const std::vector<NonrelRow>& rows) {
  std::string out = "A,R0_fm,V0_MeV,n,l,E_NR_MeV\n";
  for (const NonrelRow& r : rows) {
    if (r.A) out += std::to_string(*r.A);
    out += ',';
    out += format_sig10(r.R0);
    out += ',';
    out += format_sig10(r.V0);
    out += ',';
    out += std::to_string(r.n);
    out += ',';
    out += std::to_string(r.l);
    out += ',';
    out += format_sig10(r.E_NR);
    out += '\n';
  }
  return out;
}

std::string emit_nonrel_json(const std::vector<NonrelRow>& rows) {
  std::string out = "{\n  \"rows\": [";
  bool first = true;
  for (const NonrelRow& r : rows) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "    {\"A\": " + (r.A ? std::to_string(*r.A) : std::string("null")) +
           ", \"R0_fm\": " + json_num(r.R0) +
           ", \"V0_MeV\": " + json_num(r.V0) + ", \"n\": " +
           std::to_string(r.n) + ", \"l\": " + std::to_string(r.l) +
           ", \"E_NR_MeV\": " + json_num(r.E_NR) + "}";
  }
  out += first ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

}  // namespace wskg
