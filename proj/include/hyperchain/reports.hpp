#pragma once

#include "hyperchain/chain_analysis.hpp"
#include "hyperchain/conley.hpp"
#include "hyperchain/hyperspace.hpp"
#include "hyperchain/verification.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hyperchain {

using Json = nlohmann::ordered_json;

Json semantics_json(Semantics sem);

/// Chain recurrent set, components, condensation order, attractors.
Json analyze_report(const DiscreteSystem& sys, const ChainAnalysis& analysis,
                    const std::vector<AttractorRecord>& attractors);

/// Lifted-system report: |C-bar|, hyper components as label lists, and
/// the spanning-class table (sets listed when the recurrent part is
/// small, sizes always).
Json lift_report(const HyperSystem& hyper, const ChainAnalysis& base_analysis,
                 const ChainAnalysis& hyper_analysis);

/// `include_timings` is off by default so identical inputs produce
/// byte-identical reports.
Json verify_report(const std::string& suite, const Json& source,
                   const std::vector<TimedCheck>& checks, bool include_timings = false);

/// Component table as CSV: component id, size, semicolon-joined members.
/// Transient points appear at the end with id -1.
std::string components_csv(const ChainAnalysis& analysis,
                           const std::vector<std::string>& vertex_labels);

bool verify_passed(const std::vector<TimedCheck>& checks);

} // namespace hyperchain
