#pragma once

#include <string>
#include <vector>

#include "augtopo/complex.hpp"

namespace augtopo {

/// Bundled named complexes (spheres, balls, surfaces, joins); throws TopologyError for unknown names.
Complex corpus(const std::string& name);
std::vector<std::string> corpus_names();

}  // namespace augtopo
