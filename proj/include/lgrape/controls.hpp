#pragma once

#include <vector>

#include "lgrape/qcore.hpp"
#include "lgrape/scheme.hpp"

namespace lgrape {

/// Control Hamiltonians: {sigma_x, sigma_y, sigma_z} for single-qubit schemes,
/// the 15 products sigma_i (x) sigma_j with (i, j) != (0, 0) in lexicographic
/// order for two-qubit schemes.
std::vector<Operator> control_generators(SchemeKind kind);

int control_count(SchemeKind kind);

}  // namespace lgrape
