#pragma once

#include "hyperchain/discrete_system.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace hyperchain {

/// A real self-map of a closed interval, with explicit values at
/// removable singularities. Construction validates that the rule maps
/// the domain into itself (dense sampling, 1e5 points, tolerance 1e-9).
class IntervalMapSpec {
public:
    static IntervalMapSpec sinpi();                     // x |sin(pi/x)| on [0,1], 0 at 0
    static IntervalMapSpec tent(double slope);          // slope * min(x, 1-x) on [0,1]
    static IntervalMapSpec logistic(double r);          // r x (1-x) on [0,1]
    static IntervalMapSpec table(std::vector<std::pair<double, double>> points);

    /// Parses "sinpi", "tent(2)", "logistic(3.5)".
    static IntervalMapSpec parse(const std::string& text);

    const std::string& name() const { return name_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double value_at(double x) const;

private:
    IntervalMapSpec(std::string name, double lo, double hi,
                    std::function<double(double)> rule);
    std::string name_;
    double lo_, hi_;
    std::function<double(double)> rule_;
};

/// A uniform-grid realization of an interval map: n cells, n+1 grid
/// points, image[i] = nearest grid point to value_at(grid[i]) with ties
/// toward the lower index.
struct GridSystem {
    int n = 0;
    double step = 0.0;
    std::vector<double> grid;
    DiscreteSystem system;
    std::string provenance;
};

GridSystem discretize(const IntervalMapSpec& spec, int n);

struct FixedPointScan {
    bool identity = false;    // every scan point fixed
    std::vector<double> roots; // sorted ascending
};

/// Roots of value_at(x) - x by scanning 1e5 subintervals. Sign changes
/// are refined by bisection; tangential roots (the difference touches
/// zero without crossing, as for x|sin(pi/x)| - x <= 0) are caught as
/// near-zero local extrema and refined by ternary search. Endpoints are
/// checked directly. Roots closer than the scan step may merge.
FixedPointScan fixed_point_oracle(const IntervalMapSpec& spec, double tol);

} // namespace hyperchain
