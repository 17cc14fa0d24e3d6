#include "hyperchain/reports.hpp"

namespace hyperchain {

namespace {

Json labels_of(const FiniteMetricSpace& space, const IndexSet& s) {
    Json out = Json::array();
    for (int v : s) out.push_back(space.label(v));
    return out;
}

Json subset_labels(const HyperSystem& hyper, int i) {
    Json out = Json::array();
    const FiniteMetricSpace& space = hyper.base().space();
    for (int v : hyper.set_of(i)) out.push_back(space.label(v));
    return out;
}

} // namespace

Json semantics_json(Semantics sem) {
    Json out;
    out["mode"] = sem.is_exact() ? "exact" : "eps";
    if (!sem.is_exact()) out["epsilon"] = sem.epsilon();
    return out;
}

Json analyze_report(const DiscreteSystem& sys, const ChainAnalysis& analysis,
                    const std::vector<AttractorRecord>& attractors) {
    const FiniteMetricSpace& space = sys.space();
    Json out;
    out["command"] = "analyze";
    out["semantics"] = semantics_json(analysis.semantics);
    out["points"] = sys.size();
    out["min_gap"] = space.min_gap();
    out["recurrent"] = labels_of(space, analysis.recurrent);

    Json comps = Json::array();
    for (const auto& comp : analysis.components) comps.push_back(labels_of(space, comp));
    out["components"] = comps;

    Json order = Json::array();
    for (int c = 0; c < analysis.component_order.n; ++c)
        for (int d : analysis.component_order.adj[c])
            order.push_back(Json::array({c, d}));
    out["component_order"] = order;

    IndexSet transient;
    for (int v = 0; v < sys.size(); ++v)
        if (!analysis.recurrent_mask[v]) transient.push_back(v);
    out["transient"] = labels_of(space, transient);

    Json atts = Json::array();
    for (const auto& rec : attractors) {
        Json a;
        a["attractor"] = labels_of(space, rec.attractor);
        a["trap"] = labels_of(space, rec.trap);
        a["dual"] = labels_of(space, rec.dual);
        atts.push_back(a);
    }
    out["attractors"] = atts;
    return out;
}

Json lift_report(const HyperSystem& hyper, const ChainAnalysis& base_analysis,
                 const ChainAnalysis& hyper_analysis) {
    Json out;
    out["command"] = "lift";
    out["semantics"] = semantics_json(hyper_analysis.semantics);
    out["base_points"] = hyper.base().size();
    out["max_card"] = hyper.max_card();
    out["hyper_points"] = hyper.size();
    out["recurrent_count"] = hyper_analysis.recurrent.size();

    const bool list_sets = hyper_analysis.recurrent.size() <= 128;
    if (list_sets) {
        Json rec = Json::array();
        for (int i : hyper_analysis.recurrent) rec.push_back(subset_labels(hyper, i));
        out["recurrent"] = rec;
    }

    out["component_count"] = hyper_analysis.components.size();
    if (hyper_analysis.components.size() <= 128) {
        Json comps = Json::array();
        for (const auto& comp : hyper_analysis.components) {
            Json one = Json::array();
            for (int i : comp) one.push_back(subset_labels(hyper, i));
            comps.push_back(one);
        }
        out["components"] = comps;
    }

    if (hyper.max_card() >= hyper.base().size() &&
        base_analysis.components.size() <= 12) {
        const SpanningClassTable table = spanning_classes(hyper, base_analysis);
        Json classes = Json::array();
        for (size_t c = 0; c < table.class_members.size(); ++c) {
            Json one;
            one["J"] = table.class_components[c];
            one["size"] = table.class_members[c].size();
            if (list_sets) {
                Json sets = Json::array();
                for (int i : table.class_members[c]) sets.push_back(subset_labels(hyper, i));
                one["sets"] = sets;
            }
            classes.push_back(one);
        }
        out["classes"] = classes;
    }
    return out;
}

Json verify_report(const std::string& suite, const Json& source,
                   const std::vector<TimedCheck>& checks, bool include_timings) {
    Json out;
    out["command"] = "verify";
    out["suite"] = suite;
    out["source"] = source;
    Json list = Json::array();
    for (const auto& c : checks) {
        Json one;
        one["id"] = c.id;
        one["status"] = to_string(c.status);
        if (!c.detail.empty() &&
            (c.status != CheckStatus::Pass || c.detail.rfind("ok on", 0) != 0))
            one["witness"] = c.detail;
        else if (!c.detail.empty())
            one["note"] = c.detail;
        if (include_timings) one["ms"] = c.ms;
        list.push_back(one);
    }
    out["checks"] = list;
    out["overall"] = verify_passed(checks) ? "pass" : "fail";
    return out;
}

bool verify_passed(const std::vector<TimedCheck>& checks) {
    for (const auto& c : checks)
        if (c.status == CheckStatus::Fail) return false;
    return true;
}

std::string components_csv(const ChainAnalysis& analysis,
                           const std::vector<std::string>& vertex_labels) {
    std::string out = "component,size,members\n";
    for (size_t c = 0; c < analysis.components.size(); ++c) {
        out += std::to_string(c) + "," + std::to_string(analysis.components[c].size()) +
               ",";
        for (size_t i = 0; i < analysis.components[c].size(); ++i) {
            if (i) out += ";";
            out += vertex_labels[analysis.components[c][i]];
        }
        out += "\n";
    }
    for (int v = 0; v < analysis.graph.n; ++v)
        if (analysis.component_of[v] == -1)
            out += "-1,1," + vertex_labels[v] + "\n";
    return out;
}

} // namespace hyperchain
