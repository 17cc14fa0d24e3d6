#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

namespace hyperchain {

using IndexSet = std::vector<int>; // sorted, duplicate-free point indices

/// One violated metric axiom instance. `k` is only meaningful for
/// triangle violations (dist(i,k) > dist(i,j) + dist(j,k)).
struct MetricViolation {
    enum class Kind { NonSquare, NonzeroDiagonal, ZeroOffDiagonal, Asymmetry, Triangle };
    Kind kind;
    int i = -1;
    int j = -1;
    int k = -1;
    double magnitude = 0.0;

    std::string describe() const;
};

struct MetricValidation {
    bool ok = true;
    std::vector<MetricViolation> violations;
};

/// Checks every axiom instance against `matrix` with absolute tolerance
/// `tol`; the report lists all violations, not just the first.
MetricValidation validate_metric(const Eigen::MatrixXd& matrix, double tol = 1e-12);

/// A finite metric space: distinct point labels plus a validated
/// distance matrix. Immutable after construction.
class FiniteMetricSpace {
public:
    /// `Trusted` skips the cubic triangle-inequality scan; reserved for
    /// factory metrics that satisfy it by construction (zero-one,
    /// 1-D coordinate differences). Diagonal, positivity, and symmetry
    /// are always checked.
    enum class TriangleCheck { Full, Trusted };

    FiniteMetricSpace(std::vector<std::string> labels, Eigen::MatrixXd dist,
                      double tol = 1e-12,
                      TriangleCheck triangle = TriangleCheck::Full);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_.at(i); }
    const Eigen::MatrixXd& dist() const { return dist_; }
    double distance(int i, int j) const { return dist_(i, j); }

    /// Smallest off-diagonal distance. Any eps <= min_gap makes the
    /// eps-relation coincide with the exact one.
    double min_gap() const { return min_gap_; }
    double diameter() const { return diameter_; }

    int index_of(const std::string& label) const; // -1 when absent

private:
    std::vector<std::string> labels_;
    Eigen::MatrixXd dist_;
    double min_gap_;
    double diameter_;
};

/// A nonempty subset of a space's points; doubles as a hyperspace element.
struct PointSet {
    const FiniteMetricSpace* space = nullptr;
    IndexSet members;

    PointSet() = default;
    PointSet(const FiniteMetricSpace& s, IndexSet m);
};

FiniteMetricSpace zero_one_space(std::vector<std::string> labels);
FiniteMetricSpace euclidean_1d_space(std::vector<std::string> labels,
                                     const std::vector<double>& coords);

/// { x : dist(x, a) < eps for some a in A }, strict inequality.
PointSet eps_neighborhood(const PointSet& a, double eps);

/// max-min Hausdorff distance; equals inf{eps : mutual eps-inclusion}
/// on finite sets. Throws std::domain_error on mismatched spaces.
double hausdorff_distance(const PointSet& a, const PointSet& b);

/// Core variant on raw index sets of one space.
double hausdorff_distance(const FiniteMetricSpace& space,
                          std::span<const int> a, std::span<const int> b);

// Small sorted-set helpers shared across modules.
bool is_canonical_index_set(const IndexSet& s, int n);
bool set_contains(const IndexSet& s, int v);
IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_intersection(const IndexSet& a, const IndexSet& b);
IndexSet set_difference(const IndexSet& a, const IndexSet& b);
bool set_subset(const IndexSet& a, const IndexSet& b); // a subset of b

} // namespace hyperchain
