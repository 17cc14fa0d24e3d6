#include "hyperchain/metric_space.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <set>
#include <stdexcept>

namespace hyperchain {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::string MetricViolation::describe() const {
    using Kind = MetricViolation::Kind;
    switch (kind) {
    case Kind::NonSquare:
        return "matrix is not square";
    case Kind::NonzeroDiagonal:
        return "dist(" + std::to_string(i) + "," + std::to_string(i) +
               ") = " + fmt_double(magnitude) + " != 0";
    case Kind::ZeroOffDiagonal:
        return "dist(" + std::to_string(i) + "," + std::to_string(j) +
               ") = " + fmt_double(magnitude) + " is not positive";
    case Kind::Asymmetry:
        return "dist(" + std::to_string(i) + "," + std::to_string(j) +
               ") != dist(" + std::to_string(j) + "," + std::to_string(i) +
               "), gap " + fmt_double(magnitude);
    case Kind::Triangle:
        return "dist(" + std::to_string(i) + "," + std::to_string(k) +
               ") > dist(" + std::to_string(i) + "," + std::to_string(j) +
               ") + dist(" + std::to_string(j) + "," + std::to_string(k) +
               ") by " + fmt_double(magnitude);
    }
    return "unknown violation";
}

namespace {

MetricValidation validate_metric_impl(const Eigen::MatrixXd& matrix, double tol,
                                      bool check_triangle) {
    MetricValidation report;
    auto add = [&](MetricViolation v) {
        report.ok = false;
        report.violations.push_back(std::move(v));
    };

    if (matrix.rows() != matrix.cols()) {
        add({MetricViolation::Kind::NonSquare, -1, -1, -1,
             static_cast<double>(matrix.rows() - matrix.cols())});
        return report;
    }
    const int n = static_cast<int>(matrix.rows());

    for (int i = 0; i < n; ++i) {
        if (std::abs(matrix(i, i)) > tol)
            add({MetricViolation::Kind::NonzeroDiagonal, i, i, -1, matrix(i, i)});
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double gap = std::abs(matrix(i, j) - matrix(j, i));
            if (gap > tol)
                add({MetricViolation::Kind::Asymmetry, i, j, -1, gap});
            if (matrix(i, j) <= tol || matrix(j, i) <= tol)
                add({MetricViolation::Kind::ZeroOffDiagonal, i, j, -1,
                     std::min(matrix(i, j), matrix(j, i))});
        }
    }
    if (check_triangle) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                for (int k = 0; k < n; ++k) {
                    if (k == i || k == j) continue;
                    const double excess = matrix(i, k) - matrix(i, j) - matrix(j, k);
                    if (excess > tol)
                        add({MetricViolation::Kind::Triangle, i, j, k, excess});
                }
            }
        }
    }
    return report;
}

} // namespace

MetricValidation validate_metric(const Eigen::MatrixXd& matrix, double tol) {
    return validate_metric_impl(matrix, tol, true);
}

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels,
                                     Eigen::MatrixXd dist, double tol,
                                     TriangleCheck triangle)
    : labels_(std::move(labels)), dist_(std::move(dist)) {
    if (labels_.empty())
        throw std::invalid_argument("metric space needs at least one point");
    if (dist_.rows() != static_cast<Eigen::Index>(labels_.size()) ||
        dist_.cols() != static_cast<Eigen::Index>(labels_.size()))
        throw std::invalid_argument("distance matrix shape does not match label count");

    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size())
        throw std::invalid_argument("point labels must be distinct");

    const MetricValidation report =
        validate_metric_impl(dist_, tol, triangle == TriangleCheck::Full);
    if (!report.ok)
        throw std::invalid_argument("invalid metric: " + report.violations.front().describe());

    min_gap_ = std::numeric_limits<double>::infinity();
    diameter_ = 0.0;
    const int n = size();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            min_gap_ = std::min(min_gap_, dist_(i, j));
            diameter_ = std::max(diameter_, dist_(i, j));
        }
    }
    if (n == 1) min_gap_ = diameter_ = 0.0;
}

int FiniteMetricSpace::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == label) return i;
    return -1;
}

PointSet::PointSet(const FiniteMetricSpace& s, IndexSet m)
    : space(&s), members(std::move(m)) {
    if (members.empty())
        throw std::invalid_argument("PointSet must be nonempty");
    if (!is_canonical_index_set(members, s.size()))
        throw std::invalid_argument("PointSet members must be sorted, unique, in-range indices");
}

FiniteMetricSpace zero_one_space(std::vector<std::string> labels) {
    const int n = static_cast<int>(labels.size());
    Eigen::MatrixXd d = Eigen::MatrixXd::Ones(n, n) - Eigen::MatrixXd::Identity(n, n);
    return FiniteMetricSpace(std::move(labels), std::move(d), 1e-12,
                             FiniteMetricSpace::TriangleCheck::Trusted);
}

FiniteMetricSpace euclidean_1d_space(std::vector<std::string> labels,
                                     const std::vector<double>& coords) {
    if (labels.size() != coords.size())
        throw std::invalid_argument("labels and coords sizes differ");
    std::set<double> distinct(coords.begin(), coords.end());
    if (distinct.size() != coords.size())
        throw std::invalid_argument("coordinates must be distinct");
    const int n = static_cast<int>(coords.size());
    Eigen::Map<const Eigen::VectorXd> c(coords.data(), n);
    Eigen::MatrixXd d =
        (c.replicate(1, n) - c.transpose().replicate(n, 1)).cwiseAbs();
    return FiniteMetricSpace(std::move(labels), std::move(d), 1e-12,
                             FiniteMetricSpace::TriangleCheck::Trusted);
}

PointSet eps_neighborhood(const PointSet& a, double eps) {
    if (a.space == nullptr || a.members.empty())
        throw std::invalid_argument("eps_neighborhood requires a valid PointSet");
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    const FiniteMetricSpace& space = *a.space;
    IndexSet out;
    for (int x = 0; x < space.size(); ++x) {
        for (int m : a.members) {
            if (space.distance(x, m) < eps) {
                out.push_back(x);
                break;
            }
        }
    }
    return PointSet(space, std::move(out));
}

double hausdorff_distance(const FiniteMetricSpace& space,
                          std::span<const int> a, std::span<const int> b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("hausdorff_distance requires nonempty sets");
    double worst = 0.0;
    for (int x : a) {
        double best = std::numeric_limits<double>::infinity();
        for (int y : b) best = std::min(best, space.distance(x, y));
        worst = std::max(worst, best);
    }
    for (int y : b) {
        double best = std::numeric_limits<double>::infinity();
        for (int x : a) best = std::min(best, space.distance(x, y));
        worst = std::max(worst, best);
    }
    return worst;
}

double hausdorff_distance(const PointSet& a, const PointSet& b) {
    if (a.space == nullptr || b.space == nullptr)
        throw std::invalid_argument("hausdorff_distance requires valid PointSets");
    if (a.space != b.space)
        throw std::domain_error("hausdorff_distance: sets live in different spaces");
    return hausdorff_distance(*a.space, a.members, b.members);
}

bool is_canonical_index_set(const IndexSet& s, int n) {
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= n) return false;
        if (i > 0 && s[i] <= s[i - 1]) return false;
    }
    return true;
}

bool set_contains(const IndexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_subset(const IndexSet& a, const IndexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace hyperchain
