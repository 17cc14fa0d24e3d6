#include "hyperchain/discretizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hyperchain {

namespace {

constexpr int kScanIntervals = 100000;
constexpr double kDomainTolerance = 1e-9;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void validate_into_domain(const std::string& name, double lo, double hi,
                          const std::function<double(double)>& rule) {
    const double span = hi - lo;
    for (int i = 0; i <= kScanIntervals; ++i) {
        const double x = lo + span * i / kScanIntervals;
        const double v = rule(x);
        if (!(v >= lo - kDomainTolerance && v <= hi + kDomainTolerance))
            throw std::invalid_argument(name + " leaves the domain at x = " + fmt(x) +
                                        " (value " + fmt(v) + ")");
    }
}

} // namespace

IntervalMapSpec::IntervalMapSpec(std::string name, double lo, double hi,
                                 std::function<double(double)> rule)
    : name_(std::move(name)), lo_(lo), hi_(hi), rule_(std::move(rule)) {
    if (!(lo_ < hi_)) throw std::invalid_argument("interval map needs lo < hi");
    validate_into_domain(name_, lo_, hi_, rule_);
}

double IntervalMapSpec::value_at(double x) const {
    if (x < lo_ - kDomainTolerance || x > hi_ + kDomainTolerance)
        throw std::invalid_argument("value_at: x = " + fmt(x) + " outside the domain");
    return rule_(std::clamp(x, lo_, hi_));
}

IntervalMapSpec IntervalMapSpec::sinpi() {
    return IntervalMapSpec("sinpi", 0.0, 1.0, [](double x) {
        if (x == 0.0) return 0.0;
        return x * std::abs(std::sin(M_PI / x));
    });
}

IntervalMapSpec IntervalMapSpec::tent(double slope) {
    if (!(slope > 0.0)) throw std::invalid_argument("tent slope must be positive");
    return IntervalMapSpec("tent(" + fmt(slope) + ")", 0.0, 1.0, [slope](double x) {
        return slope * std::min(x, 1.0 - x);
    });
}

IntervalMapSpec IntervalMapSpec::logistic(double r) {
    if (!(r > 0.0)) throw std::invalid_argument("logistic r must be positive");
    return IntervalMapSpec("logistic(" + fmt(r) + ")", 0.0, 1.0,
                           [r](double x) { return r * x * (1.0 - x); });
}

IntervalMapSpec IntervalMapSpec::table(std::vector<std::pair<double, double>> points) {
    if (points.size() < 2) throw std::invalid_argument("table map needs >= 2 points");
    std::sort(points.begin(), points.end());
    for (size_t i = 1; i < points.size(); ++i)
        if (!(points[i].first > points[i - 1].first))
            throw std::invalid_argument("table map breakpoints must be distinct");
    const double lo = points.front().first;
    const double hi = points.back().first;
    auto rule = [pts = std::move(points)](double x) {
        auto it = std::lower_bound(pts.begin(), pts.end(), x,
                                   [](const auto& p, double v) { return p.first < v; });
        if (it == pts.begin()) return it->second;
        if (it == pts.end()) return pts.back().second;
        const auto& [x1, y1] = *(it - 1);
        const auto& [x2, y2] = *it;
        const double t = (x - x1) / (x2 - x1);
        return y1 + t * (y2 - y1);
    };
    return IntervalMapSpec("table", lo, hi, std::move(rule));
}

IntervalMapSpec IntervalMapSpec::parse(const std::string& text) {
    const auto open = text.find('(');
    std::string head = text.substr(0, open);
    double arg = 0.0;
    bool has_arg = false;
    if (open != std::string::npos) {
        const auto close = text.find(')', open);
        if (close == std::string::npos)
            throw std::invalid_argument("bad map spec: " + text);
        arg = std::stod(text.substr(open + 1, close - open - 1));
        has_arg = true;
    }
    if (head == "sinpi" && !has_arg) return sinpi();
    if (head == "tent" && has_arg) return tent(arg);
    if (head == "logistic" && has_arg) return logistic(arg);
    throw std::invalid_argument("unknown builtin map: " + text +
                                " (expected sinpi, tent(s), or logistic(r))");
}

GridSystem discretize(const IntervalMapSpec& spec, int n) {
    if (n < 2) throw std::invalid_argument("discretize: n must be >= 2");
    const double step = (spec.hi() - spec.lo()) / n;
    std::vector<double> grid(n + 1);
    for (int i = 0; i <= n; ++i) grid[i] = spec.lo() + i * step;
    grid[n] = spec.hi();

    auto nearest = [&](double v) {
        int j = static_cast<int>(std::ceil((v - spec.lo()) / step - 0.5));
        j = std::clamp(j, 0, n);
        // settle float edge cases; ties go to the lower index
        double best = std::abs(grid[j] - v);
        for (int cand : {j - 1, j + 1}) {
            if (cand < 0 || cand > n) continue;
            const double d = std::abs(grid[cand] - v);
            if (d < best || (d == best && cand < j)) {
                j = cand;
                best = d;
            }
        }
        return j;
    };

    std::vector<std::string> labels(n + 1);
    std::vector<int> image(n + 1);
    for (int i = 0; i <= n; ++i) {
        labels[i] = fmt(grid[i]);
        const double v = spec.value_at(grid[i]);
        if (v < spec.lo() - kDomainTolerance || v > spec.hi() + kDomainTolerance)
            throw std::invalid_argument("discretize: map escapes the domain at x = " +
                                        fmt(grid[i]));
        image[i] = nearest(v);
    }
    DiscreteSystem system(euclidean_1d_space(std::move(labels), grid),
                          std::move(image));
    return GridSystem{n, step, std::move(grid), std::move(system), spec.name()};
}

namespace {

double ternary_max(const IntervalMapSpec& spec, double a, double b, double tol) {
    while (b - a > tol) {
        const double m1 = a + (b - a) / 3.0;
        const double m2 = b - (b - a) / 3.0;
        const double g1 = spec.value_at(m1) - m1;
        const double g2 = spec.value_at(m2) - m2;
        if (g1 < g2)
            a = m1;
        else
            b = m2;
    }
    return 0.5 * (a + b);
}

double ternary_min(const IntervalMapSpec& spec, double a, double b, double tol) {
    while (b - a > tol) {
        const double m1 = a + (b - a) / 3.0;
        const double m2 = b - (b - a) / 3.0;
        const double g1 = spec.value_at(m1) - m1;
        const double g2 = spec.value_at(m2) - m2;
        if (g1 > g2)
            a = m1;
        else
            b = m2;
    }
    return 0.5 * (a + b);
}

double bisect(const IntervalMapSpec& spec, double a, double b, double tol) {
    double ga = spec.value_at(a) - a;
    while (b - a > tol) {
        const double m = 0.5 * (a + b);
        const double gm = spec.value_at(m) - m;
        if (gm == 0.0) return m;
        if ((ga < 0) != (gm < 0))
            b = m;
        else {
            a = m;
            ga = gm;
        }
    }
    return 0.5 * (a + b);
}

} // namespace

FixedPointScan fixed_point_oracle(const IntervalMapSpec& spec, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("fixed_point_oracle: tol must be > 0");
    FixedPointScan out;
    const double lo = spec.lo(), hi = spec.hi();
    const double span = hi - lo;
    const double step = span / kScanIntervals;

    std::vector<double> xs(kScanIntervals + 1), gs(kScanIntervals + 1);
    bool all_fixed = true;
    for (int i = 0; i <= kScanIntervals; ++i) {
        xs[i] = lo + span * i / kScanIntervals;
        gs[i] = spec.value_at(xs[i]) - xs[i];
        if (std::abs(gs[i]) > 1e-12) all_fixed = false;
    }
    if (all_fixed) {
        out.identity = true;
        return out;
    }

    std::vector<double> roots;
    // touch-zero tolerance: how far a tangential root's value can dip at
    // one scan step from the touching point
    const double touch = 1e-4;
    const double accept = 1e-11;

    for (int i = 0; i <= kScanIntervals; ++i) {
        if (gs[i] == 0.0) roots.push_back(xs[i]);
    }
    for (int i = 0; i < kScanIntervals; ++i) {
        if (gs[i] == 0.0 || gs[i + 1] == 0.0) continue;
        if ((gs[i] < 0) != (gs[i + 1] < 0))
            roots.push_back(bisect(spec, xs[i], xs[i + 1], tol));
    }
    for (int i = 1; i < kScanIntervals; ++i) {
        if (gs[i] < 0.0 && gs[i] > -touch && gs[i] >= gs[i - 1] && gs[i] >= gs[i + 1]) {
            const double x = ternary_max(spec, xs[i - 1], xs[i + 1], tol);
            if (spec.value_at(x) - x > -accept) roots.push_back(x);
        }
        if (gs[i] > 0.0 && gs[i] < touch && gs[i] <= gs[i - 1] && gs[i] <= gs[i + 1]) {
            const double x = ternary_min(spec, xs[i - 1], xs[i + 1], tol);
            if (spec.value_at(x) - x < accept) roots.push_back(x);
        }
    }

    std::sort(roots.begin(), roots.end());
    for (double r : roots) {
        if (out.roots.empty() || r - out.roots.back() > step) out.roots.push_back(r);
    }
    return out;
}

} // namespace hyperchain
