#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace lgrape {

/// One output row per (scheme, grid point). Optional fields are written as
/// empty cells when the quantity does not apply to the noise model.
struct ResultRow {
  std::string scheme;
  std::string noise;
  double T = 0.0;
  double dt = 0.0;
  std::optional<double> gamma1;
  std::optional<double> gamma2;
  std::optional<double> eta1;
  std::optional<double> eta2;
  double omega0 = 0.0;
  std::optional<double> theta;
  std::optional<double> p;
  double fq = 0.0;
  double fq_over_t = 0.0;
  std::optional<double> qcrb;
  int iterations = 0;
  std::uint64_t seed = 0;
  std::optional<double> wall_time_s;
};

/// Fills fq, fq_over_t = fq / T and qcrb = 1/sqrt(fq) (empty when fq <= 0).
void set_fisher(ResultRow& row, double fq);

/// Shortest round-trip decimal form, 17 significant digits.
std::string format_real(double x);

std::string_view csv_header();
std::string to_csv_line(const ResultRow& row);

}  // namespace lgrape
