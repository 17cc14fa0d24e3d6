#pragma once

#include <stdexcept>

namespace hyperchain {

/// Chain-arc semantics. EXACT is the finite-space realization of the
/// intersection over all eps > 0: the chain graph degenerates to the
/// functional graph x -> f(x). EPS(e) draws an arc i -> j whenever
/// dist(f(x_i), x_j) < e (strict).
class Semantics {
public:
    static Semantics exact() { return Semantics(-1.0); }
    static Semantics eps(double e) {
        if (!(e > 0.0)) throw std::invalid_argument("Semantics::eps requires e > 0");
        return Semantics(e);
    }

    bool is_exact() const { return eps_ < 0.0; }
    double epsilon() const {
        if (is_exact()) throw std::logic_error("EXACT semantics has no epsilon");
        return eps_;
    }

    bool operator==(const Semantics& other) const = default;

private:
    explicit Semantics(double e) : eps_(e) {}
    double eps_;
};

/// Thrown when an operation would exceed a configured resource cap
/// (subset enumeration, full hyperspace lift, lower-set scans).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hyperchain
