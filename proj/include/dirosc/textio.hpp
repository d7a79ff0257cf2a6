#pragma once

// Deterministic text formatting shared by the CLI writers and the
// verification report.

#include <string>

namespace dirosc {

// Shortest %.17g rendering: round-trips any double, no locale dependence.
std::string float17(double value);

}  // namespace dirosc
