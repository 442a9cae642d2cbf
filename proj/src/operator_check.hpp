#pragma once

#include "sparsecs/sensing.hpp"

namespace sparsecs::detail {

void check_operator_matches(const MeasurementSet& ms, const SensingOperator& op);

}  // namespace sparsecs::detail
