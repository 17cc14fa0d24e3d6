#pragma once

#include "hyperchain/check.hpp"
#include "hyperchain/discrete_system.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hyperchain {

struct TimedCheck {
    std::string id;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    double ms = 0.0;
};

struct SuiteOptions {
    std::uint64_t seed = 7;
    /// When set, EPS checks run at exactly this epsilon; otherwise each
    /// system uses the quartiles of its nonzero distances.
    std::optional<double> epsilon;
    std::optional<int> lift_cap;
};

/// Known suite names: metric, conley, lift, partition, components,
/// lemmas, all.
bool is_known_suite(const std::string& name);

std::vector<TimedCheck> run_suite(const std::string& name,
                                  const std::vector<DiscreteSystem>& systems,
                                  const SuiteOptions& options);

/// Quartile (25/50/75%) values of the distinct nonzero distances.
std::vector<double> epsilon_quartiles(const FiniteMetricSpace& space);

} // namespace hyperchain
