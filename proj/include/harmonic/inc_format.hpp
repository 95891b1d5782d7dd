#pragma once

#include <string>

#include "harmonic/incidence.hpp"

namespace harmonic {

// Incidence text format: first meaningful line `points N`, then optional
// `label <idx> <text>` lines and one `line: i j k ...` per long line.
// `#` starts a comment. Diagnostics carry 1-based text line numbers.
IncidenceStructure parse_incidence(const std::string& text);

std::string emit_incidence(const IncidenceStructure& s);

}  // namespace harmonic
