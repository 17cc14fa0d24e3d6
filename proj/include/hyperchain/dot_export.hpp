#pragma once

#include "hyperchain/chain_analysis.hpp"

#include <string>
#include <vector>

namespace hyperchain {

/// Condensation digraph in DOT form: recurrent components as boxes
/// labeled "component k (size m)", transient points as dashed ellipses,
/// one edge per pair of condensation units. Node and edge order is
/// stable across runs.
std::string export_dot(const ChainAnalysis& analysis,
                       const std::vector<std::string>& vertex_labels,
                       const std::string& graph_name = "chain");

} // namespace hyperchain
