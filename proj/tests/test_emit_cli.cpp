#include <cmath>
#include <limits>
#include <string>

#include "doctest.h"
#include "frozen.hpp"
#include "json.hpp"
#include "wskg/emit.hpp"
#include "wskg/model.hpp"
#include "wskg/spectrum.hpp"

using namespace wskg;

TEST_CASE("ten-significant-digit rendering") {
  CHECK(format_sig10(0.1) == "0.1");
  CHECK(format_sig10(45.7) == "45.7");
  CHECK(format_sig10(123456789.123) == "123456789.1");
  CHECK(format_sig10(-133.24402132239970397) == "-133.2440213");
  CHECK(format_sig10(1e300) == "1e+300");
  CHECK(format_sig10(0.0) == "0");
  CHECK(format_sig10(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_sig10(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(format_sig10(std::numeric_limits<double>::quiet_NaN()) == "nan");
}

TEST_CASE("csv header is the exact published schema") {
  CHECK(std::string(kSpectrumCsvHeader) ==
        "A,R0_fm,V0_MeV,n,l,n_prime,E_plus_MeV,E_minus_MeV,Eb_plus_MeV,"
        "Eb_minus_MeV,valid_plus,valid_minus,residual_plus,residual_minus,"
        "oracle_E_MeV,published_Eb_MeV");
}

namespace {

EmitRow golden_row() {
  EmitRow r;
  r.A = 40;
  r.R0 = 4.3946381829591112626;
  r.V0 = 45.7;
  r.n = 0;
  r.l = 1;
  r.n_prime = 0.022764750692479772485;
  r.E_plus = 50.044665887485413136;
  r.E_minus = 6.325978677600296029;
  r.Eb_plus = -89.525334112514586864;
  r.Eb_minus = -133.24402132239970397;
  r.valid_plus = false;
  r.valid_minus = false;
  r.residual_plus = 0.87869121374046411986;
  r.residual_minus = 0.98038105078838060229;
  r.published_Eb = -107.8777;
  return r;
}

}  // namespace

TEST_CASE("csv emission is byte-exact") {
  const std::string expected =
      std::string(kSpectrumCsvHeader) + "\n" +
      "40,4.394638183,45.7,0,1,0.02276475069,50.04466589,6.325978678,"
      "-89.52533411,-133.2440213,false,false,0.8786912137,0.9803810508,"
      ",-107.8777\n";
  CHECK(emit_csv({golden_row()}) == expected);

  // Absent optionals leave their cells empty; an empty table is header-only.
  EmitRow bare;
  bare.R0 = 4.0;
  bare.V0 = 45.0;
  bare.n = 0;
  bare.l = 1;
  bare.n_prime = 0.5;
  const std::string bare_csv = emit_csv({bare});
  CHECK(bare_csv == std::string(kSpectrumCsvHeader) +
                        "\n,4,45,0,1,0.5,,,,,,,,,,\n");
  CHECK(emit_csv({}) == std::string(kSpectrumCsvHeader) + "\n");
}

TEST_CASE("csv emission is deterministic") {
  const std::string once = emit_csv({golden_row()});
  const std::string twice = emit_csv({golden_row()});
  CHECK(once == twice);
}

TEST_CASE("json emission round-trips through a strict parser") {
  const std::string payload = emit_json({golden_row()});
  const nlohmann::json j = nlohmann::json::parse(payload);
  REQUIRE(j.contains("rows"));
  REQUIRE(j["rows"].size() == 1);
  const auto& row = j["rows"][0];
  CHECK(row["A"].get<long long>() == 40);
  CHECK(row["R0_fm"].get<double>() == doctest::Approx(4.394638183));
  CHECK(row["V0_MeV"].get<double>() == doctest::Approx(45.7));
  CHECK(row["n"].get<int>() == 0);
  CHECK(row["l"].get<int>() == 1);
  CHECK(row["E_plus_MeV"].get<double>() == doctest::Approx(50.04466589));
  CHECK(row["valid_plus"].get<bool>() == false);
  CHECK(row["oracle_E_MeV"].is_null());
  CHECK(row["published_Eb_MeV"].get<double>() == doctest::Approx(-107.8777));

  CHECK(nlohmann::json::parse(emit_json({}))["rows"].empty());
}

TEST_CASE("spectrum table rows collapse the two roots into one record") {
  NuclearInput in;
  in.A = 40;
  const WoodsSaxonSystem sys = system_from_mass_number(in);
  const SpectrumTable table = enumerate_spectrum(sys, 1);
  const std::vector<EmitRow> rows = rows_from_table(table, 40);
  REQUIRE(rows.size() == 1);
  const EmitRow& r = rows[0];
  CHECK(r.A.value_or(0) == 40);
  CHECK(r.n == 0);
  CHECK(r.l == 1);
  REQUIRE(r.E_plus.has_value());
  REQUIRE(r.E_minus.has_value());
  CHECK(*r.E_plus > *r.E_minus);
  CHECK(r.valid_plus.has_value());
  CHECK_FALSE(r.oracle_E.has_value());
  CHECK_FALSE(r.published_Eb.has_value());
}

TEST_CASE("oracle annotation claims only certified rows") {
  NuclearInput in;
  in.A = 40;
  const WoodsSaxonSystem sys = system_from_mass_number(in);
  const SpectrumTable table = enumerate_spectrum(sys, 1);
  std::vector<EmitRow> rows = rows_from_table(table, 40);
  OracleReport fake;
  fake.eigenvalues = {50.0446};  // close to E_plus, but that root is invalid
  annotate_oracle(rows, 1, fake, 1e-2);
  CHECK_FALSE(rows[0].oracle_E.has_value());
}

TEST_CASE("sample emitters") {
  std::vector<RadialSample> samples(2);
  samples[0] = {0.0, 0.99884324804655680166, 0.125};
  samples[1] = {4.0, 0.5, -0.25};
  CHECK(emit_samples_csv(samples) ==
        "r_fm,z,u\n0,0.998843248,0.125\n4,0.5,-0.25\n");
  const nlohmann::json j = nlohmann::json::parse(emit_samples_json(samples));
  REQUIRE(j["samples"].size() == 2);
  CHECK(j["samples"][1]["z"].get<double>() == doctest::Approx(0.5));
  CHECK(j["samples"][1]["u"].get<double>() == doctest::Approx(-0.25));
}

TEST_CASE("nonrelativistic emitters") {
  NonrelRow row;
  row.A = 56;
  row.R0 = 4.9162331397250399901;
  row.V0 = 47.78;
  row.n = 0;
  row.l = 2;
  row.E_NR = 3.23672240867877479;
  CHECK(emit_nonrel_csv({row}) ==
        "A,R0_fm,V0_MeV,n,l,E_NR_MeV\n"
        "56,4.91623314,47.78,0,2,3.236722409\n");
  const nlohmann::json j = nlohmann::json::parse(emit_nonrel_json({row}));
  CHECK(j["rows"][0]["E_NR_MeV"].get<double>() ==
        doctest::Approx(3.236722409));
  NonrelRow anon = row;
  anon.A.reset();
  CHECK(emit_nonrel_csv({anon}).find("\n,4.91623314") != std::string::npos);
  CHECK(nlohmann::json::parse(emit_nonrel_json({anon}))["rows"][0]["A"]
            .is_null());
}
