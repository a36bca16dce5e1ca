#include "lgrape/pulse_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

#include "lgrape/csv.hpp"
#include "lgrape/errors.hpp"

namespace lgrape {

namespace {

constexpr std::string_view kMagic = "pulse-v1";

std::string field(const std::string& header, std::string_view key) {
  std::istringstream in(header);
  std::string token;
  const std::string prefix = std::string(key) + "=";
  while (in >> token) {
    if (token.rfind(prefix, 0) == 0) return token.substr(prefix.size());
  }
  throw FormatError("pulse header is missing '" + std::string(key) + "='");
}

template <typename T>
T parse_number(const std::string& text, std::string_view what) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw FormatError("pulse header: bad value for " + std::string(what) + ": '" + text + "'");
  }
  return value;
}

}  // namespace

void write_pulse(std::ostream& out, const PulseFile& file) {
  const auto& p = file.pulse;
  out << kMagic << " m=" << p.segments() << " K=" << p.controls() << " dt=" << format_real(p.dt)
      << " scheme=" << to_string(file.scheme) << " seed=" << file.seed << '\n';
  for (int k = 0; k < p.segments(); ++k) {
    for (int c = 0; c < p.controls(); ++c) {
      if (c > 0) out << ' ';
      out << format_real(p.amplitudes(k, c));
    }
    out << '\n';
  }
}

void write_pulse(const std::filesystem::path& path, const PulseFile& file) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_pulse(out, file);
  if (!out) throw IoError("failed writing " + path.string());
}

PulseFile read_pulse(std::istream& in) {
  std::string header;
  if (!std::getline(in, header) || header.rfind(kMagic, 0) != 0) {
    throw FormatError("not a pulse file: first line must start with '" + std::string(kMagic) + "'");
  }
  const int m = parse_number<int>(field(header, "m"), "m");
  const int k = parse_number<int>(field(header, "K"), "K");
  const double dt = parse_number<double>(field(header, "dt"), "dt");
  if (m < 1 || k < 1 || !(dt > 0.0)) {
    throw FormatError("pulse header: m, K and dt must be positive");
  }
  PulseFile out;
  out.scheme = parse_scheme_kind(field(header, "scheme"));
  out.seed = parse_number<std::uint64_t>(field(header, "seed"), "seed");
  out.pulse = ControlPulse{dt, Eigen::MatrixXd(m, k)};

  const std::string expected = "expected " + std::to_string(m) + "x" + std::to_string(k) + " amplitudes";
  std::string line;
  for (int row = 0; row < m; ++row) {
    if (!std::getline(in, line)) {
      throw FormatError("pulse file truncated at row " + std::to_string(row) + ": " + expected);
    }
    std::istringstream cells(line);
    std::string cell;
    int col = 0;
    while (cells >> cell) {
      if (col >= k) throw FormatError("row " + std::to_string(row) + " has too many values: " + expected);
      out.pulse.amplitudes(row, col++) = parse_number<double>(cell, "amplitude");
    }
    if (col != k) {
      throw FormatError("row " + std::to_string(row) + " has " + std::to_string(col) + " values: " + expected);
    }
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw FormatError("trailing data after " + std::to_string(m) + " rows: " + expected);
    }
  }
  return out;
}

PulseFile read_pulse(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open pulse file " + path.string());
  return read_pulse(in);
}

}  // namespace lgrape
