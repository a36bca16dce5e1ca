#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "lgrape/pulse.hpp"
#include "lgrape/scheme.hpp"

namespace lgrape {

/// Text pulse file:
///   pulse-v1 m=<m> K=<K> dt=<dt> scheme=<kind> seed=<seed>
/// followed by m lines of K space-separated amplitudes (17 significant digits).
struct PulseFile {
  ControlPulse pulse;
  SchemeKind scheme = SchemeKind::CUE;
  std::uint64_t seed = 0;
};

void write_pulse(std::ostream& out, const PulseFile& file);
void write_pulse(const std::filesystem::path& path, const PulseFile& file);

/// Throws FormatError on a malformed header or a body that is not m x K.
PulseFile read_pulse(std::istream& in);
PulseFile read_pulse(const std::filesystem::path& path);

}  // namespace lgrape
