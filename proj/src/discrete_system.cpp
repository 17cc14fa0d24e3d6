#include "hyperchain/discrete_system.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hyperchain {

DiscreteSystem::DiscreteSystem(FiniteMetricSpace space, std::vector<int> image)
    : space_(std::move(space)), image_(std::move(image)) {
    if (image_.size() != static_cast<size_t>(space_.size()))
        throw std::invalid_argument("image array length must equal point count");
    for (int v : image_)
        if (v < 0 || v >= space_.size())
            throw std::invalid_argument("image entry out of range: " + std::to_string(v));
}

int iterate(const DiscreteSystem& sys, int x, long long n) {
    if (x < 0 || x >= sys.size()) throw std::invalid_argument("iterate: bad index");
    if (n < 0) throw std::invalid_argument("iterate: n must be >= 0");
    int cur = x;
    for (long long step = 0; step < n; ++step) cur = sys.image_of(cur);
    return cur;
}

OrbitRecord forward_orbit(const DiscreteSystem& sys, int x) {
    if (x < 0 || x >= sys.size()) throw std::invalid_argument("forward_orbit: bad index");
    std::vector<int> seq;
    std::vector<int> seen_at(sys.size(), -1);
    int cur = x;
    while (seen_at[cur] == -1) {
        seen_at[cur] = static_cast<int>(seq.size());
        seq.push_back(cur);
        cur = sys.image_of(cur);
    }
    const int entry = seen_at[cur];
    OrbitRecord rec;
    rec.tail.assign(seq.begin(), seq.begin() + entry);
    rec.cycle.assign(seq.begin() + entry, seq.end());
    return rec;
}

IndexSet image_of_set(const DiscreteSystem& sys, const IndexSet& a) {
    IndexSet out;
    out.reserve(a.size());
    for (int v : a) out.push_back(sys.image_of(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

IndexSet omega_limit(const DiscreteSystem& sys, const IndexSet& a) {
    if (a.empty()) throw std::invalid_argument("omega_limit: empty set");
    std::map<IndexSet, int> seen_at;
    std::vector<IndexSet> seq;
    IndexSet cur = a;
    while (!seen_at.count(cur)) {
        seen_at[cur] = static_cast<int>(seq.size());
        seq.push_back(cur);
        cur = image_of_set(sys, cur);
    }
    const int entry = seen_at[cur];
    IndexSet result;
    for (size_t i = entry; i < seq.size(); ++i) result = set_union(result, seq[i]);
    return result;
}

DiscreteSystem restricted_system(const DiscreteSystem& sys, const IndexSet& subset) {
    if (subset.empty()) throw std::invalid_argument("restricted_system: empty subset");
    if (!is_canonical_index_set(subset, sys.size()))
        throw std::invalid_argument("restricted_system: bad subset");
    std::vector<int> position(sys.size(), -1);
    for (size_t p = 0; p < subset.size(); ++p) position[subset[p]] = static_cast<int>(p);

    const int m = static_cast<int>(subset.size());
    std::vector<std::string> labels(m);
    Eigen::MatrixXd dist(m, m);
    std::vector<int> image(m);
    for (int p = 0; p < m; ++p) {
        labels[p] = sys.space().label(subset[p]);
        const int img = sys.image_of(subset[p]);
        if (position[img] == -1)
            throw std::domain_error("restricted_system: subset is not forward invariant");
        image[p] = position[img];
        for (int q = 0; q < m; ++q) dist(p, q) = sys.distance(subset[p], subset[q]);
    }
    // a restriction of a valid metric is a valid metric
    return DiscreteSystem(FiniteMetricSpace(std::move(labels), std::move(dist), 1e-12,
                                            FiniteMetricSpace::TriangleCheck::Trusted),
                          std::move(image));
}

} // namespace hyperchain
