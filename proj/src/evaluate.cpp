#include "evret/evaluate.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "evret/errors.hpp"

namespace evret {

namespace {

std::string substitute(std::string_view tmpl, const std::string& concept_name,
                       const std::string& value, const std::string& doc,
                       const std::string& rule) {
    std::string out;
    size_t i = 0;
    while (i < tmpl.size()) {
        if (tmpl[i] == '{') {
            auto close = tmpl.find('}', i);
            if (close != std::string_view::npos) {
                std::string_view key = tmpl.substr(i + 1, close - i - 1);
                const std::string* rep = nullptr;
                if (key == "concept") rep = &concept_name;
                else if (key == "value") rep = &value;
                else if (key == "doc") rep = &doc;
                else if (key == "rule") rep = &rule;
                if (rep) {
                    out += *rep;
                    i = close + 1;
                    continue;
                }
            }
        }
        out.push_back(tmpl[i++]);
    }
    return out;
}

struct Evaluator {
    const InferenceGraph& g;
    const std::vector<TruthValue>& tvals;
    const Calculus& calc;
    const std::vector<TruthValue>& weights;
    const EvalOptions& opt;
    OpNames ops;
    std::vector<std::optional<TruthValue>> memo;
    EvalResult res;

    Evaluator(const InferenceGraph& g_, const std::vector<TruthValue>& tv,
              const Calculus& c, const std::vector<TruthValue>& w, const EvalOptions& o)
        : g(g_), tvals(tv), calc(c), weights(w), opt(o), ops(c.op_names()),
          memo(g_.nodes.size()) {}

    void skip_rest(TraceRecord& rec, const GraphNode& n, size_t from) {
        rec.pruned = true;
        for (size_t j = from; j < n.kids.size(); ++j) {
            const GraphNode& kid = g.nodes[n.kids[j]];
            rec.children.push_back(kid.id);
            TraceRecord stub;
            stub.node = kid.id;
            stub.kind = kind_name(kid.kind);
            stub.label = kid.label;
            stub.pruned = true;
            res.trace.records.push_back(std::move(stub));
        }
    }

    TruthValue eval(int id) {
        if (memo[id]) return *memo[id];
        const GraphNode& n = g.nodes[id];
        TraceRecord rec;
        rec.node = id;
        rec.kind = kind_name(n.kind);
        rec.label = n.label;
        TruthValue out;

        switch (n.kind) {
            case GraphNode::Kind::Terminal:
                rec.op = "match";
                out = tvals[id];
                break;
            case GraphNode::Kind::Not: {
                rec.op = "negate/" + ops.negate;
                TruthValue v = eval(n.kids[0]);
                rec.inputs = {v};
                rec.children = {n.kids[0]};
                out = calc.negate(v);
                break;
            }
            case GraphNode::Kind::Rule: {
                rec.op = "detach/" + ops.detach;
                TruthValue body = eval(n.kids[0]);
                rec.inputs = {body, weights[id]};
                rec.children = {n.kids[0]};
                try {
                    out = calc.detach(body, weights[id]);
                } catch (const InconsistentEvidenceError&) {
                    auto u = calc.unknown();
                    if (!u) throw;
                    out = *u;
                    rec.op += "!inconsistent";
                    res.inconsistent = true;
                }
                if (!n.action.empty()) {
                    const std::string& head =
                        n.parents.empty() ? n.label : g.nodes[n.parents[0]].label;
                    std::string msg = substitute(n.action, head, render_compact(out),
                                                 opt.doc_id, n.label);
                    if (opt.echo_actions) std::fprintf(stderr, "%s\n", msg.c_str());
                    rec.actions.push_back(std::move(msg));
                }
                break;
            }
            case GraphNode::Kind::And: {
                rec.op = "conjoin/" + ops.conjoin;
                out = eval(n.kids[0]);
                rec.inputs = {out};
                rec.children = {n.kids[0]};
                for (size_t i = 1; i < n.kids.size(); ++i) {
                    if (opt.prune && truth_equal(out, calc.bottom())) {
                        skip_rest(rec, n, i);
                        break;
                    }
                    if (opt.prune && opt.theta_prune && opt.theta > 0.0 &&
                        n.monotone_ctx && calc.theta_prunable() &&
                        calc.conj_upper_bound(out) < opt.theta) {
                        res.theta_pruned = true;
                        skip_rest(rec, n, i);
                        break;
                    }
                    TruthValue v = eval(n.kids[i]);
                    rec.inputs.push_back(v);
                    rec.children.push_back(n.kids[i]);
                    out = calc.conjoin(out, v);
                }
                break;
            }
            case GraphNode::Kind::Or:
            case GraphNode::Kind::Concept: {
                bool is_concept = n.kind == GraphNode::Kind::Concept;
                rec.op = is_concept ? "combine/" + ops.combine : "disjoin/" + ops.disjoin;
                out = eval(n.kids[0]);
                rec.inputs = {out};
                rec.children = {n.kids[0]};
                for (size_t i = 1; i < n.kids.size(); ++i) {
                    if (opt.prune && calc.rank(out) == 1.0) {
                        skip_rest(rec, n, i);
                        break;
                    }
                    TruthValue v = eval(n.kids[i]);
                    rec.inputs.push_back(v);
                    rec.children.push_back(n.kids[i]);
                    out = is_concept ? calc.combine(out, v) : calc.disjoin(out, v);
                }
                break;
            }
        }

        rec.output = out;
        res.trace.records.push_back(std::move(rec));
        memo[id] = out;
        return out;
    }
};

}  // namespace

std::vector<TruthValue> coerce_weights(const InferenceGraph& g, const Calculus& calc,
                                       const TermDictionary* dict, bool defuzzify) {
    std::vector<TruthValue> w(g.nodes.size(), TruthValue{ScalarValue{0.0}});
    for (const GraphNode& n : g.nodes) {
        if (n.kind != GraphNode::Kind::Rule) continue;
        try {
            w[n.id] = calc.coerce_weight(n.weight, dict, defuzzify);
        } catch (const CoercionError& e) {
            throw CoercionError("rule '" + n.label + "': " + e.what());
        }
    }
    return w;
}

EvalResult evaluate(const InferenceGraph& g, const std::vector<TruthValue>& terminal_values,
                    const Calculus& calc, const std::vector<TruthValue>& weights,
                    const EvalOptions& opt) {
    Evaluator ev(g, terminal_values, calc, weights, opt);
    ev.res.root = ev.eval(g.root);
    ev.res.trace.doc_id = opt.doc_id;
    ev.res.trace.calculus = calc.name();
    ev.res.trace.goal = g.nodes[g.root].label;
    ev.res.trace.theta = opt.theta;
    return std::move(ev.res);
}

namespace {

TruthValue fold(const Calculus& calc, const std::string& kind,
                const std::vector<TruthValue>& inputs) {
    if (inputs.empty()) throw Error("trace record has no inputs to " + kind);
    TruthValue acc = inputs[0];
    for (size_t i = 1; i < inputs.size(); ++i) {
        if (kind == "conjoin") acc = calc.conjoin(acc, inputs[i]);
        else if (kind == "disjoin") acc = calc.disjoin(acc, inputs[i]);
        else acc = calc.combine(acc, inputs[i]);
    }
    return acc;
}

}  // namespace

bool replay_trace(const EvaluationTrace& t, const Calculus& calc, std::string* why) {
    auto fail = [&](const TraceRecord& r, const std::string& msg) {
        if (why) *why = "node " + std::to_string(r.node) + " (" + r.op + "): " + msg;
        return false;
    };
    for (const TraceRecord& r : t.records) {
        if (!r.output) {
            if (!r.pruned) return fail(r, "missing output on a non-pruned record");
            continue;
        }
        std::string kind = r.op.substr(0, r.op.find('/'));
        bool inconsistent = r.op.find("!inconsistent") != std::string::npos;
        TruthValue v;
        if (kind == "match") {
            v = *r.output;
        } else if (kind == "conjoin" || kind == "disjoin" || kind == "combine") {
            v = fold(calc, kind, r.inputs);
        } else if (kind == "negate") {
            if (r.inputs.size() != 1) return fail(r, "negate needs one input");
            v = calc.negate(r.inputs[0]);
        } else if (kind == "detach" || kind.rfind("detach", 0) == 0) {
            if (r.inputs.size() != 2) return fail(r, "detach needs body and weight");
            if (inconsistent) {
                try {
                    calc.detach(r.inputs[0], r.inputs[1]);
                    return fail(r, "expected inconsistent evidence, got a value");
                } catch (const InconsistentEvidenceError&) {
                    auto u = calc.unknown();
                    if (!u) return fail(r, "calculus has no unknown element");
                    v = *u;
                }
            } else {
                v = calc.detach(r.inputs[0], r.inputs[1]);
            }
        } else {
            return fail(r, "unrecognized operator");
        }
        if (!truth_equal(v, *r.output)) return fail(r, "replayed value differs");
    }
    return true;
}

namespace {

struct TraceIndex {
    std::map<int, const TraceRecord*> best;  // last record with an output, else stub
    std::map<int, std::vector<int>> parents;
    int root = 0;

    explicit TraceIndex(const EvaluationTrace& t) {
        if (t.records.empty()) throw UnknownNodeError("trace is empty");
        for (const TraceRecord& r : t.records) {
            auto it = best.find(r.node);
            if (it == best.end() || r.output) best[r.node] = &r;
            for (int c : r.children) {
                auto& ps = parents[c];
                if (std::find(ps.begin(), ps.end(), r.node) == ps.end())
                    ps.push_back(r.node);
            }
        }
        root = t.records.back().node;
    }
};

std::string node_title(const TraceRecord& r) {
    std::string s = r.kind;
    if (!r.label.empty()) {
        if (r.kind == "terminal") s += " \"" + r.label + "\"";
        else s += " " + r.label;
    }
    return s;
}

void derive(std::string& out, const TraceIndex& ix, int id, int depth) {
    std::string indent(2 * static_cast<size_t>(depth), ' ');
    auto it = ix.best.find(id);
    if (it == ix.best.end()) {
        out += indent + "node " + std::to_string(id) + ": not in trace\n";
        return;
    }
    const TraceRecord& r = *it->second;
    if (!r.output) {
        out += indent + node_title(r) + ": pruned (not evaluated)\n";
        return;
    }
    out += indent + node_title(r) + " = " + render_compact(*r.output);
    if (r.kind != "terminal") {
        out += "  [" + r.op;
        if (r.kind == "rule" && r.inputs.size() == 2)
            out += ", weight " + render_compact(r.inputs[1]);
        out += "]";
    } else {
        out += "  [" + r.op + "]";
    }
    if (r.pruned) out += "  (short-circuited)";
    out += "\n";
    for (const std::string& a : r.actions) out += indent + "  action: " + a + "\n";
    for (int c : r.children) derive(out, ix, c, depth + 1);
}

void collect_paths(const TraceIndex& ix, int id, std::vector<int>& path,
                   std::vector<std::vector<int>>& out, size_t cap) {
    path.push_back(id);
    if (id == ix.root) {
        if (out.size() < cap) out.push_back(path);
    } else {
        auto it = ix.parents.find(id);
        if (it != ix.parents.end())
            for (int p : it->second) {
                if (out.size() >= cap) break;
                collect_paths(ix, p, path, out, cap);
            }
    }
    path.pop_back();
}

}  // namespace

std::string explain(const EvaluationTrace& t, std::optional<int> node) {
    TraceIndex ix(t);
    int target = node.value_or(ix.root);
    if (!ix.best.count(target))
        throw UnknownNodeError("node " + std::to_string(target) + " is not in the trace");

    std::string out;
    if (!t.doc_id.empty()) out += "document: " + t.doc_id + "\n";
    if (!t.calculus.empty()) out += "calculus: " + t.calculus + "\n";
    if (!t.goal.empty()) out += "goal: " + t.goal + "\n";
    if (!out.empty()) out += "\n";

    derive(out, ix, target, 0);

    if (target != ix.root) {
        std::vector<std::vector<int>> paths;
        std::vector<int> scratch;
        collect_paths(ix, target, scratch, paths, 10);
        out += "\n";
        for (const auto& p : paths) {
            out += "path to root:";
            for (int id : p) out += " -> " + node_title(*ix.best.at(id));
            out += "\n";
        }
    }
    return out;
}

}  // namespace evret
