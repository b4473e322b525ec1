#pragma once

#include <string>

#include "chromlag/homlattice.hpp"
#include "chromlag/ribbon.hpp"

namespace chromlag {

// JSON round-trip for graphs and phases. Serialization is deterministic:
// keys are emitted in sorted order with two-space indentation, so equal
// values always produce byte-identical text.

std::string graph_to_json(const RibbonGraph& g);
RibbonGraph graph_from_json(const std::string& text);

std::string phase_to_json(const Phase& ph);
Phase phase_from_json(const std::string& text);

}  // namespace chromlag
