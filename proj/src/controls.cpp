#include "lgrape/controls.hpp"

namespace lgrape {

std::vector<Operator> control_generators(SchemeKind kind) {
  std::vector<Operator> out;
  if (particle_count(kind) == 1) {
    for (int i = 1; i <= 3; ++i) out.push_back(qcore::pauli(i, 1, 1));
    return out;
  }
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; j <= 3; ++j) {
      if (i == 0 && j == 0) continue;
      out.push_back(qcore::pauli(i, 1, 2) * qcore::pauli(j, 2, 2));
    }
  }
  return out;
}

int control_count(SchemeKind kind) { return particle_count(kind) == 1 ? 3 : 15; }

}  // namespace lgrape
