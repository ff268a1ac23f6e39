#include "evret/graph.hpp"

#include <algorithm>

#include "evret/errors.hpp"

namespace evret {

const char* kind_name(GraphNode::Kind k) {
    switch (k) {
        case GraphNode::Kind::Concept: return "concept";
        case GraphNode::Kind::Rule: return "rule";
        case GraphNode::Kind::And: return "and";
        case GraphNode::Kind::Or: return "or";
        case GraphNode::Kind::Not: return "not";
        case GraphNode::Kind::Terminal: return "terminal";
    }
    return "?";
}

namespace {

struct Expander {
    const Rulebase& rb;
    InferenceGraph g;

    int new_node(GraphNode::Kind k, std::string label) {
        int id = static_cast<int>(g.nodes.size());
        GraphNode n;
        n.id = id;
        n.kind = k;
        n.label = std::move(label);
        g.nodes.push_back(std::move(n));
        return id;
    }

    int concept_node(const std::string& name) {
        if (auto it = g.concept_ids.find(name); it != g.concept_ids.end()) return it->second;
        const auto* idx = rb.rules_for(name);
        if (!idx) throw UnknownNodeError("concept '" + name + "' has no rules");
        int id = new_node(GraphNode::Kind::Concept, name);
        g.concept_ids[name] = id;
        for (int ri : *idx) {
            int rid = rule_node(ri);
            g.nodes[id].kids.push_back(rid);
        }
        return id;
    }

    int rule_node(int ri) {
        const Rule& r = rb.rules[ri];
        int id = new_node(GraphNode::Kind::Rule, r.name);
        {
            GraphNode& n = g.nodes[id];
            n.rule_kind = r.kind;
            n.weight = r.weight;
            n.action = r.action;
            n.rule_index = ri;
        }
        g.rule_ids[r.name] = id;
        int body = expr_node(*r.body);
        g.nodes[id].kids.push_back(body);
        return id;
    }

    int expr_node(const Expr& e) {
        switch (e.kind) {
            case Expr::Kind::ConceptRef:
                return concept_node(e.text);
            case Expr::Kind::Terminal: {
                if (auto it = g.terminal_ids.find(e.text); it != g.terminal_ids.end())
                    return it->second;
                int id = new_node(GraphNode::Kind::Terminal, e.text);
                g.terminal_ids[e.text] = id;
                return id;
            }
            case Expr::Kind::And:
            case Expr::Kind::Or:
            case Expr::Kind::Not: {
                auto k = e.kind == Expr::Kind::And   ? GraphNode::Kind::And
                         : e.kind == Expr::Kind::Or ? GraphNode::Kind::Or
                                                    : GraphNode::Kind::Not;
                int id = new_node(k, "");
                for (const auto& kid : e.kids) {
                    int c = expr_node(*kid);
                    g.nodes[id].kids.push_back(c);
                }
                return id;
            }
        }
        throw UnknownNodeError("unreachable expression kind");
    }
};

void compute_topo(InferenceGraph& g) {
    g.topo.clear();
    std::vector<char> done(g.nodes.size(), 0);
    // iterative post-order: children before parents
    std::vector<std::pair<int, size_t>> stack{{g.root, 0}};
    std::vector<char> entered(g.nodes.size(), 0);
    entered[g.root] = 1;
    while (!stack.empty()) {
        auto& [id, next] = stack.back();
        if (next < g.nodes[id].kids.size()) {
            int kid = g.nodes[id].kids[next++];
            if (!entered[kid]) {
                entered[kid] = 1;
                stack.push_back({kid, 0});
            }
        } else {
            if (!done[id]) {
                done[id] = 1;
                g.topo.push_back(id);
            }
            stack.pop_back();
        }
    }
}

}  // namespace

int reachable_count(const InferenceGraph& g, int start) {
    std::vector<char> seen(g.nodes.size(), 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int count = 0;
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        ++count;
        for (int k : g.nodes[id].kids)
            if (!seen[k]) {
                seen[k] = 1;
                stack.push_back(k);
            }
    }
    return count;
}

std::vector<int> order_children(const InferenceGraph& g, int concept_id) {
    std::vector<int> kids = g.nodes[concept_id].kids;
    std::vector<int> size(kids.size(), 0);
    std::vector<int> order(kids.size());
    for (size_t i = 0; i < kids.size(); ++i) {
        order[i] = static_cast<int>(i);
        if (g.nodes[kids[i]].rule_kind == RuleKind::Implies)
            size[i] = reachable_count(g, kids[i]);
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        bool ia = g.nodes[kids[a]].rule_kind == RuleKind::Implies;
        bool ib = g.nodes[kids[b]].rule_kind == RuleKind::Implies;
        if (ia != ib) return !ia;  // evidence first
        return size[a] < size[b];
    });
    std::vector<int> out(kids.size());
    for (size_t i = 0; i < kids.size(); ++i) out[i] = kids[order[i]];
    return out;
}

InferenceGraph expand(const Rulebase& rb, const std::string& goal) {
    Expander ex{rb, {}};
    ex.g.threshold = rb.threshold;
    ex.g.root = 0;
    ex.concept_node(goal);

    InferenceGraph& g = ex.g;
    for (auto& [name, id] : g.concept_ids) {
        (void)name;
        g.nodes[id].kids = order_children(g, id);
    }

    for (GraphNode& n : g.nodes) n.parents.clear();
    for (const GraphNode& n : g.nodes)
        for (int k : n.kids) g.nodes[k].parents.push_back(n.id);

    compute_topo(g);

    // reverse post-order lists every node before its descendants
    for (auto it = g.topo.rbegin(); it != g.topo.rend(); ++it) {
        GraphNode& n = g.nodes[*it];
        if (n.id == g.root) {
            n.monotone_ctx = true;
            continue;
        }
        n.monotone_ctx = true;
        for (int p : n.parents) {
            const GraphNode& pn = g.nodes[p];
            if (!pn.monotone_ctx || pn.kind == GraphNode::Kind::Not) {
                n.monotone_ctx = false;
                break;
            }
        }
    }
    return ex.g;
}

GraphStats graph_stats(const InferenceGraph& g) {
    GraphStats s;
    for (const GraphNode& n : g.nodes) {
        switch (n.kind) {
            case GraphNode::Kind::Concept: ++s.concepts; break;
            case GraphNode::Kind::Rule: ++s.rules; break;
            case GraphNode::Kind::And: ++s.ands; break;
            case GraphNode::Kind::Or: ++s.ors; break;
            case GraphNode::Kind::Not: ++s.nots; break;
            case GraphNode::Kind::Terminal: ++s.terminals; break;
        }
        s.arcs += static_cast<int>(n.kids.size());
    }
    return s;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string to_dot(const InferenceGraph& g, const Calculus* calc) {
    OpNames ops;
    if (calc) ops = calc->op_names();
    std::string out = "digraph inference {\n  rankdir=BT;\n  node [shape=box];\n";
    for (const GraphNode& n : g.nodes) {
        std::string label = kind_name(n.kind);
        switch (n.kind) {
            case GraphNode::Kind::Concept:
                label += " " + n.label;
                if (calc) label += "\\ncombine/" + ops.combine;
                break;
            case GraphNode::Kind::Rule:
                label += " " + n.label;
                label += n.rule_kind == RuleKind::Implies ? " (implies)" : " (evidence)";
                if (calc) label += "\\ndetach/" + ops.detach;
                break;
            case GraphNode::Kind::And:
                if (calc) label += "\\nconjoin/" + ops.conjoin;
                break;
            case GraphNode::Kind::Or:
                if (calc) label += "\\ndisjoin/" + ops.disjoin;
                break;
            case GraphNode::Kind::Not:
                if (calc) label += "\\nnegate/" + ops.negate;
                break;
            case GraphNode::Kind::Terminal:
                label += " \\\"" + dot_escape(n.label) + "\\\"";
                break;
        }
        out += "  n" + std::to_string(n.id) + " [label=\"" + label + "\"];\n";
    }
    for (const GraphNode& n : g.nodes)
        for (int k : n.kids)
            out += "  n" + std::to_string(n.id) + " -> n" + std::to_string(k) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace evret
