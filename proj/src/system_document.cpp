#include "hyperchain/system_document.hpp"

#include "hyperchain/discretizer.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace hyperchain {

using nlohmann::ordered_json;

std::uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int Rng::uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
}

double Rng::uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

bool SystemDocument::operator==(const SystemDocument& other) const {
    if (points != other.points || map != other.map) return false;
    if (metric.index() != other.metric.index()) return false;
    if (const auto* e = std::get_if<Euclidean1dMetricSpec>(&metric))
        return e->coords == std::get<Euclidean1dMetricSpec>(other.metric).coords;
    if (const auto* e = std::get_if<ExplicitMetricSpec>(&metric))
        return e->matrix == std::get<ExplicitMetricSpec>(other.metric).matrix;
    return true;
}

SystemDocument parse_document(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DocumentError(std::string("document is not valid JSON: ") + e.what());
    }
    try {
        SystemDocument doc;
        if (!j.is_object()) throw DocumentError("document root must be an object");
        doc.points = j.at("points").get<std::vector<std::string>>();
        const auto& metric = j.at("metric");
        const std::string type = metric.at("type").get<std::string>();
        if (type == "zero_one") {
            doc.metric = ZeroOneMetricSpec{};
        } else if (type == "euclidean_1d") {
            doc.metric =
                Euclidean1dMetricSpec{metric.at("coords").get<std::vector<double>>()};
        } else if (type == "explicit") {
            doc.metric = ExplicitMetricSpec{
                metric.at("matrix").get<std::vector<std::vector<double>>>()};
        } else {
            throw DocumentError("unknown metric type: " + type);
        }
        doc.map = j.at("map").get<std::vector<int>>();
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw DocumentError(std::string("malformed system document: ") + e.what());
    }
}

SystemDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DocumentError("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

std::string print_document(const SystemDocument& doc) {
    ordered_json j;
    j["points"] = doc.points;
    if (std::holds_alternative<ZeroOneMetricSpec>(doc.metric)) {
        j["metric"] = {{"type", "zero_one"}};
    } else if (const auto* e = std::get_if<Euclidean1dMetricSpec>(&doc.metric)) {
        j["metric"] = {{"type", "euclidean_1d"}, {"coords", e->coords}};
    } else {
        j["metric"] = {{"type", "explicit"},
                       {"matrix", std::get<ExplicitMetricSpec>(doc.metric).matrix}};
    }
    j["map"] = doc.map;
    return j.dump(2) + "\n";
}

DiscreteSystem to_system(const SystemDocument& doc) {
    const int n = static_cast<int>(doc.points.size());
    if (n == 0) throw DocumentError("document has no points");
    if (doc.map.size() != doc.points.size())
        throw DocumentError("map length (" + std::to_string(doc.map.size()) +
                            ") does not match point count (" + std::to_string(n) + ")");
    for (int v : doc.map)
        if (v < 0 || v >= n)
            throw DocumentError("map entry out of range: " + std::to_string(v));

    try {
        if (std::holds_alternative<ZeroOneMetricSpec>(doc.metric))
            return DiscreteSystem(zero_one_space(doc.points), doc.map);
        if (const auto* e = std::get_if<Euclidean1dMetricSpec>(&doc.metric)) {
            if (e->coords.size() != doc.points.size())
                throw DocumentError("coords length does not match point count");
            return DiscreteSystem(euclidean_1d_space(doc.points, e->coords), doc.map);
        }
        const auto& rows = std::get<ExplicitMetricSpec>(doc.metric).matrix;
        if (rows.size() != doc.points.size())
            throw DocumentError("matrix row count does not match point count");
        Eigen::MatrixXd d(n, n);
        for (int i = 0; i < n; ++i) {
            if (rows[i].size() != doc.points.size())
                throw DocumentError("matrix row " + std::to_string(i) + " has wrong length");
            for (int j = 0; j < n; ++j) d(i, j) = rows[i][j];
        }
        return DiscreteSystem(FiniteMetricSpace(doc.points, std::move(d)), doc.map);
    } catch (const std::invalid_argument& e) {
        throw DocumentError(e.what());
    }
}

SystemDocument document_of(const DiscreteSystem& sys) {
    SystemDocument doc;
    doc.points = sys.space().labels();
    doc.map = sys.image();
    const int n = sys.size();
    std::vector<std::vector<double>> rows(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = sys.distance(i, j);
    doc.metric = ExplicitMetricSpec{std::move(rows)};
    return doc;
}

SystemDocument grid_document(const GridSystem& grid) {
    SystemDocument doc;
    doc.points = grid.system.space().labels();
    doc.metric = Euclidean1dMetricSpec{grid.grid};
    doc.map = grid.system.image();
    return doc;
}

SystemDocument random_system_document(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("random system needs n >= 1");
    SystemDocument doc;
    for (int i = 0; i < n; ++i) doc.points.push_back("p" + std::to_string(i));
    if (rng.next() % 2 == 0) {
        doc.metric = ZeroOneMetricSpec{};
    } else {
        std::vector<double> coords;
        while (true) {
            coords.clear();
            std::set<double> seen;
            for (int i = 0; i < n; ++i) {
                // three hex digits keep coordinates short and exactly
                // representable
                const double c = static_cast<double>(rng.next() % 4096) / 4096.0;
                coords.push_back(c);
                seen.insert(c);
            }
            if (seen.size() == coords.size()) break;
        }
        std::sort(coords.begin(), coords.end());
        doc.metric = Euclidean1dMetricSpec{std::move(coords)};
    }
    for (int i = 0; i < n; ++i) doc.map.push_back(rng.uniform_int(0, n - 1));
    return doc;
}

std::vector<SystemDocument> random_suite(int count, std::uint64_t seed, int max_points) {
    if (max_points < 2) throw std::invalid_argument("random_suite needs max_points >= 2");
    std::vector<SystemDocument> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        Rng rng(seed * 0x100000001b3ULL + static_cast<std::uint64_t>(i));
        const int n = 2 + i % (max_points - 1);
        out.push_back(random_system_document(n, rng));
    }
    return out;
}

} // namespace hyperchain
