#pragma once

#include <string>

#include "corep/pipeline.hpp"

namespace corep {

/// Aligned human-readable summary.
std::string emit_report_text(const Report& report);

/// Stable machine-readable JSON document. Field order is fixed, matrices are
/// arrays of [re, im] rows, and serialization round-trips losslessly; two
/// runs over the same input and seed produce byte-identical output.
std::string emit_report_structured(const Report& report);

}  // namespace corep
