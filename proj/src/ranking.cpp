#include "evret/ranking.hpp"

#include <algorithm>

#include "evret/json_io.hpp"

namespace evret {

namespace {

EvalResult eval_one(const Document& d, const InferenceGraph& g, const Calculus& calc,
                    const std::vector<TruthValue>& weights, const RankOptions& opt) {
    std::vector<TruthValue> tv = terminal_values(d, g, calc, opt.absent);
    EvalOptions eo;
    eo.theta = opt.theta;
    eo.prune = opt.prune;
    eo.theta_prune = opt.prune;
    eo.doc_id = d.id;
    eo.echo_actions = opt.echo_actions;
    EvalResult r = evaluate(g, tv, calc, weights, eo);
    if (r.theta_pruned && calc.rank(r.root) >= opt.theta) {
        // the pruned value overestimates: this document may be retrieved, so
        // recompute it exactly (exact short-circuits preserve values)
        eo.theta_prune = false;
        r = evaluate(g, tv, calc, weights, eo);
    }
    return r;
}

}  // namespace

std::vector<std::string> RankedResult::retrieved_ids() const {
    std::vector<std::string> out;
    for (const RankedDoc& d : docs)
        if (d.retrieved) out.push_back(d.id);
    return out;
}

RankedResult rank(const Corpus& corpus, const InferenceGraph& g, const Calculus& calc,
                  const RankOptions& opt) {
    std::vector<TruthValue> weights = coerce_weights(g, calc, opt.dict, opt.defuzzify);
    RankedResult out;
    out.calculus = calc.name();
    out.theta = opt.theta;

    const auto n = static_cast<long>(corpus.docs.size());
    out.docs.resize(corpus.docs.size());
    std::vector<char> failed(corpus.docs.size(), 0);

#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        const Document& d = corpus.docs[i];
        RankedDoc rd;
        rd.id = d.id;
        try {
            EvalResult r = eval_one(d, g, calc, weights, opt);
            rd.value = r.root;
            rd.key = calc.rank(r.root);
            rd.secondary = secondary_key(r.root);
            rd.retrieved = rd.key >= opt.theta;
            rd.inconsistent = r.inconsistent;
        } catch (const std::exception& e) {
            failed[i] = 1;
#pragma omp critical
            out.warnings.push_back("document " + d.id + " excluded: " + e.what());
        }
        out.docs[i] = std::move(rd);
    }

    for (long i = n - 1; i >= 0; --i)
        if (failed[i]) out.docs.erase(out.docs.begin() + i);
    std::sort(out.warnings.begin(), out.warnings.end());

    std::sort(out.docs.begin(), out.docs.end(), [](const RankedDoc& a, const RankedDoc& b) {
        if (a.key != b.key) return a.key > b.key;
        if (a.secondary != b.secondary) return a.secondary > b.secondary;
        return a.id < b.id;
    });
    return out;
}

EvalResult evaluate_document(const Document& d, const InferenceGraph& g, const Calculus& calc,
                             const RankOptions& opt) {
    std::vector<TruthValue> weights = coerce_weights(g, calc, opt.dict, opt.defuzzify);
    return eval_one(d, g, calc, weights, opt);
}

std::string ranking_tsv(const RankedResult& r) {
    std::string out;
    for (const RankedDoc& d : r.docs) {
        out += d.id;
        out += '\t';
        out += fixed6(d.key);
        out += '\t';
        out += truth_to_json(d.value).dump();
        out += '\n';
    }
    return out;
}

}  // namespace evret
