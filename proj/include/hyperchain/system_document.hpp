#pragma once

#include "hyperchain/discrete_system.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hyperchain {

/// Deterministic random source (64-bit SplitMix core). Standard library
/// distributions are implementation-defined, so reports seeded with the
/// same value stay byte-identical across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    int uniform_int(int lo, int hi); // inclusive bounds
    double uniform01();              // [0, 1)

private:
    std::uint64_t state_;
};

struct ZeroOneMetricSpec {};
struct Euclidean1dMetricSpec {
    std::vector<double> coords;
};
struct ExplicitMetricSpec {
    std::vector<std::vector<double>> matrix;
};
using MetricSpec =
    std::variant<ZeroOneMetricSpec, Euclidean1dMetricSpec, ExplicitMetricSpec>;

/// The on-disk system format: point labels, a metric, and the self-map
/// as 0-based image indices.
struct SystemDocument {
    std::vector<std::string> points;
    MetricSpec metric;
    std::vector<int> map;

    bool operator==(const SystemDocument&) const;
};

/// Thrown on malformed documents; the message carries parse context.
class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

SystemDocument parse_document(const std::string& text);
SystemDocument load_document(const std::string& path);
std::string print_document(const SystemDocument& doc);

DiscreteSystem to_system(const SystemDocument& doc);
SystemDocument document_of(const DiscreteSystem& sys);

struct GridSystem;
/// Grid documents keep the 1-D coordinates instead of an explicit
/// matrix, so a 1001-point grid stays compact on disk.
SystemDocument grid_document(const GridSystem& grid);

/// Uniform random self-map on n points over a zero-one metric (even
/// draws) or random distinct 1-D coordinates in [0,1] (odd draws).
SystemDocument random_system_document(int n, Rng& rng);

/// The seeded family used by the verification suites: system i has
/// 2 + (i mod (max_points - 1)) points and its own sub-seed.
std::vector<SystemDocument> random_suite(int count, std::uint64_t seed, int max_points);

} // namespace hyperchain
