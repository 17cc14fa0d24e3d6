#pragma once

#include "hyperchain/metric_space.hpp"

#include <string>
#include <vector>

namespace hyperchain {

/// A discrete-time system on a finite metric space: a total self-map
/// given by image indices. Continuity is automatic on finite spaces.
class DiscreteSystem {
public:
    DiscreteSystem(FiniteMetricSpace space, std::vector<int> image);

    int size() const { return space_.size(); }
    const FiniteMetricSpace& space() const { return space_; }
    int image_of(int i) const { return image_.at(i); }
    const std::vector<int>& image() const { return image_; }
    double distance(int i, int j) const { return space_.distance(i, j); }
    double min_positive_distance() const { return space_.min_gap(); }

private:
    FiniteMetricSpace space_;
    std::vector<int> image_;
};

/// f^n(x); n = 0 returns x.
int iterate(const DiscreteSystem& sys, int x, long long n);

/// The forward orbit of x decomposed as `tail` (preperiodic points, in
/// visit order) followed by `cycle` (in traversal order, starting at
/// the first point revisited).
struct OrbitRecord {
    std::vector<int> tail;
    std::vector<int> cycle;
    int preperiod() const { return static_cast<int>(tail.size()); }
    int period() const { return static_cast<int>(cycle.size()); }
};

OrbitRecord forward_orbit(const DiscreteSystem& sys, int x);

/// Image of a set under f.
IndexSet image_of_set(const DiscreteSystem& sys, const IndexSet& a);

/// omega-limit set of A: iterate the image sets until they cycle, then
/// return the union of the sets on the cycle. The result is invariant.
IndexSet omega_limit(const DiscreteSystem& sys, const IndexSet& a);

/// The subsystem on `subset` (which must satisfy f(subset) within subset),
/// with distances inherited. Used to compare the lift of a restriction
/// with the restriction of a lift.
DiscreteSystem restricted_system(const DiscreteSystem& sys, const IndexSet& subset);

} // namespace hyperchain
