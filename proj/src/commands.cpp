#include "evret/commands.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "evret/errors.hpp"
#include "evret/json_io.hpp"
#include "evret/metrics.hpp"
#include "evret/ranking.hpp"

namespace evret {

namespace {

std::string at_pos(const std::string& path, SourcePos p) {
    if (p.line <= 0) return path;
    return path + ":" + std::to_string(p.line) + ":" + std::to_string(p.col);
}

// 0 on success, 2 with diagnostics on any rule error
int load_graph(const std::string& rules_path, const std::string& goal, std::ostream& err,
               std::optional<InferenceGraph>& out) {
    Rulebase rb;
    try {
        rb = parse_rules_file(rules_path);
    } catch (const ParseError& e) {
        err << at_pos(rules_path, e.pos) << ": error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    auto issues = validate(rb, goal);
    if (!issues.empty()) {
        for (const ValidationIssue& i : issues)
            err << at_pos(rules_path, i.pos) << ": error: " << i.message << "\n";
        return 2;
    }
    out = expand(rb, goal);
    return 0;
}

int write_file(const std::string& path, const std::string& content, std::ostream& err) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "error: cannot write " << path << "\n";
        return 2;
    }
    f << content;
    return 0;
}

struct QueryParts {
    std::optional<InferenceGraph> graph;
    std::unique_ptr<const Calculus> calc;
    std::optional<TermDictionary> dict;
    Corpus corpus;
    RankOptions ropt;
};

int load_query_parts(const std::string& rules_path, const std::string& corpus_path,
                     const std::string& goal, const std::string& calculus,
                     const std::optional<double>& theta, const std::string& terms_path,
                     const std::string& absent, bool defuzzify, std::ostream& err,
                     QueryParts& q) {
    if (int rc = load_graph(rules_path, goal, err, q.graph)) return rc;
    try {
        if (!calculus.empty()) q.calc = make_calculus(calculus);
        q.ropt.absent = parse_absent_policy(absent);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (q.calc && q.calc->family() == Family::Fuzzy && terms_path.empty()) {
        err << "error: calculus " << q.calc->name()
            << " needs a linguistic term dictionary (--terms FILE)\n";
        return 2;
    }
    if (!terms_path.empty()) {
        try {
            q.dict = TermDictionary::from_file(terms_path);
        } catch (const ParseError& e) {
            err << at_pos(terms_path, e.pos) << ": error: " << e.what() << "\n";
            return 2;
        } catch (const Error& e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }
        q.ropt.dict = &*q.dict;
    }
    try {
        q.corpus = ingest(corpus_path);
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    q.ropt.theta = theta ? *theta : q.graph->threshold.value_or(0.0);
    q.ropt.defuzzify = defuzzify;
    return 0;
}

}  // namespace

int cmd_compile(const CompileConfig& cfg, std::ostream& out, std::ostream& err) {
    std::optional<InferenceGraph> graph;
    if (int rc = load_graph(cfg.rules_path, cfg.goal, err, graph)) return rc;

    GraphStats s = graph_stats(*graph);
    out << "goal: " << graph->nodes[graph->root].label << "\n";
    out << "nodes: " << s.total() << " (concepts " << s.concepts << ", rules " << s.rules
        << ", and " << s.ands << ", or " << s.ors << ", not " << s.nots << ", terminals "
        << s.terminals << ")\n";
    out << "arcs: " << s.arcs << "\n";
    if (graph->threshold) out << "threshold: " << fixed6(*graph->threshold) << "\n";

    if (!cfg.dot_path.empty()) {
        std::unique_ptr<const Calculus> calc;
        if (!cfg.calculus.empty()) {
            try {
                calc = make_calculus(cfg.calculus);
            } catch (const UnknownCalculusError& e) {
                err << "error: " << e.what() << "\n";
                return 2;
            }
        }
        if (int rc = write_file(cfg.dot_path, to_dot(*graph, calc.get()), err)) return rc;
    }
    return 0;
}

int cmd_query(const QueryConfig& cfg, std::ostream& out, std::ostream& err) {
    QueryParts q;
    if (int rc = load_query_parts(cfg.rules_path, cfg.corpus_path, cfg.goal, cfg.calculus,
                                  cfg.theta, cfg.terms_path, cfg.absent, cfg.defuzzify, err, q))
        return rc;
    q.ropt.prune = !cfg.no_prune;
    q.ropt.echo_actions = cfg.echo_actions;

    RankedResult r;
    try {
        r = rank(q.corpus, *q.graph, *q.calc, q.ropt);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    for (const std::string& w : r.warnings) err << "warning: " << w << "\n";
    out << ranking_tsv(r);

    if (!cfg.explain_doc.empty()) {
        const Document* d = q.corpus.find(cfg.explain_doc);
        if (!d) {
            err << "error: unknown document '" << cfg.explain_doc << "'\n";
            return 2;
        }
        EvalResult ev;
        try {
            ev = evaluate_document(*d, *q.graph, *q.calc, q.ropt);
        } catch (const Error& e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }
        std::string trace_path =
            cfg.trace_out.empty() ? cfg.explain_doc + ".trace.json" : cfg.trace_out;
        if (int rc = write_file(trace_path, trace_to_json(ev.trace).dump(2) + "\n", err))
            return rc;
        err << explain(ev.trace, std::nullopt);
    }
    return 0;
}

int cmd_compare(const CompareConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.calculi.size() < 2) {
        err << "error: compare needs at least two calculi\n";
        return 1;
    }
    QueryParts q;
    if (int rc = load_query_parts(cfg.rules_path, cfg.corpus_path, cfg.goal, "", cfg.theta,
                                  cfg.terms_path, cfg.absent, cfg.defuzzify, err, q))
        return rc;

    std::optional<Judgments> judgments;
    if (!cfg.judgments_path.empty()) {
        try {
            judgments = load_judgments(cfg.judgments_path, q.corpus);
        } catch (const ParseError& e) {
            err << at_pos(cfg.judgments_path, e.pos) << ": error: " << e.what() << "\n";
            return 2;
        } catch (const Error& e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }
    }

    std::vector<std::string> names;        // succeeded, in input order
    std::vector<RankedResult> results;     // aligned with names
    nlohmann::json failed = nlohmann::json::object();
    for (const std::string& id : cfg.calculi) {
        try {
            auto calc = make_calculus(id);
            if (calc->family() == Family::Fuzzy && !q.ropt.dict)
                throw CoercionError("calculus " + calc->name() +
                                    " needs a linguistic term dictionary (--terms FILE)");
            RankedResult r = rank(q.corpus, *q.graph, *calc, q.ropt);
            for (const std::string& w : r.warnings)
                err << "warning: [" << id << "] " << w << "\n";
            names.push_back(id);
            results.push_back(std::move(r));
        } catch (const Error& e) {
            err << "warning: calculus " << id << " failed: " << e.what() << "\n";
            failed[id] = e.what();
        }
    }
    if (names.empty()) {
        err << "error: every calculus failed\n";
        return 2;
    }

    nlohmann::json report;
    report["goal"] = cfg.goal;
    report["theta"] = round6(q.ropt.theta);
    report["calculi"] = names;
    report["failed"] = failed;

    nlohmann::json rankings = nlohmann::json::object();
    nlohmann::json widths = nlohmann::json::object();
    nlohmann::json precision = nlohmann::json::object();
    nlohmann::json recall = nlohmann::json::object();
    for (size_t i = 0; i < names.size(); ++i) {
        nlohmann::json rows = nlohmann::json::array();
        for (const RankedDoc& d : results[i].docs)
            rows.push_back({{"doc", d.id},
                            {"key", round6(d.key)},
                            {"retrieved", d.retrieved},
                            {"value", truth_to_json(d.value)}});
        rankings[names[i]] = std::move(rows);
        if (auto w = mean_interval_width(results[i])) widths[names[i]] = round6(*w);
        if (judgments) {
            PrecisionRecall pr = precision_recall(results[i], *judgments);
            precision[names[i]] =
                pr.precision() ? nlohmann::json(round6(*pr.precision())) : nlohmann::json();
            recall[names[i]] =
                pr.recall() ? nlohmann::json(round6(*pr.recall())) : nlohmann::json();
        }
    }
    report["rankings"] = std::move(rankings);
    if (!widths.empty()) report["mean_width"] = std::move(widths);
    if (judgments) {
        report["precision"] = std::move(precision);
        report["recall"] = std::move(recall);
    }

    nlohmann::json pairwise = nlohmann::json::object();
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j) {
            PairMetrics m = compare_rankings(results[i], results[j]);
            pairwise[names[i] + "|" + names[j]] = {{"spearman", round6(m.spearman)},
                                                   {"kendall", round6(m.kendall)},
                                                   {"jaccard", round6(m.jaccard)}};
        }
    report["pairwise"] = std::move(pairwise);

    // human-readable table
    out << "calculus\tretrieved\ttop\tprecision\trecall\tmean_width\n";
    for (size_t i = 0; i < names.size(); ++i) {
        const RankedResult& r = results[i];
        out << names[i] << "\t" << r.retrieved_ids().size() << "\t"
            << (r.docs.empty() ? "-" : r.docs[0].id) << "\t";
        if (judgments) {
            PrecisionRecall pr = precision_recall(r, *judgments);
            out << (pr.precision() ? fixed6(*pr.precision()) : "n/a") << "\t"
                << (pr.recall() ? fixed6(*pr.recall()) : "n/a") << "\t";
        } else {
            out << "-\t-\t";
        }
        auto w = mean_interval_width(r);
        out << (w ? fixed6(*w) : "-") << "\n";
    }
    out << "\npair\tspearman\tkendall\tjaccard\n";
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j) {
            const auto& m = report["pairwise"][names[i] + "|" + names[j]];
            out << names[i] << " vs " << names[j] << "\t"
                << fixed6(m["spearman"].get<double>()) << "\t"
                << fixed6(m["kendall"].get<double>()) << "\t"
                << fixed6(m["jaccard"].get<double>()) << "\n";
        }

    if (cfg.report_path.empty()) {
        out << "\n" << report.dump(2) << "\n";
    } else if (int rc = write_file(cfg.report_path, report.dump(2) + "\n", err)) {
        return rc;
    }
    return failed.empty() ? 0 : 3;
}

int cmd_explain(const ExplainConfig& cfg, std::ostream& out, std::ostream& err) {
    std::ifstream in(cfg.trace_path, std::ios::binary);
    if (!in) {
        err << "error: cannot open trace file: " << cfg.trace_path << "\n";
        return 2;
    }
    EvaluationTrace trace;
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        trace = trace_from_json(j);
    } catch (const std::exception& e) {
        err << "error: malformed trace: " << e.what() << "\n";
        return 2;
    }

    std::optional<int> node;
    if (cfg.node != "root") {
        int v = 0;
        auto [p, ec] = std::from_chars(cfg.node.data(), cfg.node.data() + cfg.node.size(), v);
        if (ec != std::errc() || p != cfg.node.data() + cfg.node.size()) {
            err << "error: node must be 'root' or an integer id\n";
            return 2;
        }
        node = v;
    }
    try {
        out << explain(trace, node);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace evret
