#include "evret/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "evret/errors.hpp"

namespace evret {

double round6(double v) { return std::round(v * 1e6) / 1e6; }

std::string fixed6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

nlohmann::json truth_to_json(const TruthValue& tv) {
    nlohmann::json j;
    if (const auto* s = std::get_if<ScalarValue>(&tv)) {
        j["scalar"] = round6(s->v);
    } else if (const auto* iv = std::get_if<IntervalValue>(&tv)) {
        j["interval"] = {round6(iv->lo), round6(iv->hi)};
    } else {
        const auto& f = std::get<FuzzyValue>(tv);
        nlohmann::json mu = nlohmann::json::array();
        for (double m : f.mu) mu.push_back(round6(m));
        j["fuzzy"] = {{"grid", kGridSize}, {"mu", std::move(mu)}};
    }
    return j;
}

TruthValue truth_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error("truth value must be a JSON object");
    if (j.contains("scalar")) return ScalarValue{j.at("scalar").get<double>()};
    if (j.contains("interval")) {
        const auto& a = j.at("interval");
        if (!a.is_array() || a.size() != 2)
            throw Error("interval truth value must be a two-element array");
        return IntervalValue{a[0].get<double>(), a[1].get<double>()};
    }
    if (j.contains("fuzzy")) {
        const auto& f = j.at("fuzzy");
        FuzzyValue v;
        if (f.at("grid").get<int>() != kGridSize)
            throw Error("fuzzy truth value has the wrong grid size");
        v.mu = f.at("mu").get<std::vector<double>>();
        if (v.mu.size() != static_cast<size_t>(kGridSize))
            throw Error("fuzzy mu length does not match grid");
        return v;
    }
    throw Error("truth value must have a scalar, interval, or fuzzy key");
}

nlohmann::json trace_to_json(const EvaluationTrace& t) {
    nlohmann::json out = nlohmann::json::array();
    for (const TraceRecord& r : t.records) {
        nlohmann::json rec;
        rec["node"] = r.node;
        rec["kind"] = r.kind;
        rec["label"] = r.label;
        rec["op"] = r.op;
        nlohmann::json inputs = nlohmann::json::array();
        for (const TruthValue& v : r.inputs) inputs.push_back(truth_to_json(v));
        rec["inputs"] = std::move(inputs);
        rec["output"] = r.output ? truth_to_json(*r.output) : nlohmann::json();
        rec["pruned"] = r.pruned;
        rec["actions"] = r.actions;
        rec["children"] = r.children;
        out.push_back(std::move(rec));
    }
    return out;
}

EvaluationTrace trace_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw Error("trace must be a JSON array of records");
    EvaluationTrace t;
    for (const auto& rec : j) {
        TraceRecord r;
        r.node = rec.at("node").get<int>();
        r.kind = rec.at("kind").get<std::string>();
        r.label = rec.value("label", std::string());
        r.op = rec.value("op", std::string());
        if (rec.contains("inputs"))
            for (const auto& v : rec.at("inputs")) r.inputs.push_back(truth_from_json(v));
        if (rec.contains("output") && !rec.at("output").is_null())
            r.output = truth_from_json(rec.at("output"));
        r.pruned = rec.value("pruned", false);
        if (rec.contains("actions")) r.actions = rec.at("actions").get<std::vector<std::string>>();
        if (rec.contains("children")) r.children = rec.at("children").get<std::vector<int>>();
        t.records.push_back(std::move(r));
    }
    return t;
}

}  // namespace evret
