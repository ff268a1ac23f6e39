#pragma once

// Batch commands behind the CLI: compile/inspect a rulebase, rank a corpus,
// compare calculi, and render explanations from saved traces.  Each returns
// a process exit code: 0 success, 2 input/validation error, 3 partial
// comparison failure (usage errors are the CLI driver's, code 1).

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace evret {

struct CompileConfig {
    std::string rules_path;
    std::string goal;
    std::string dot_path;  // write DOT here when nonempty
    std::string calculus;  // annotate DOT with this preset's operator names
};

struct QueryConfig {
    std::string rules_path;
    std::string corpus_path;
    std::string goal;
    std::string calculus;
    std::optional<double> theta;  // overrides the rulebase threshold
    std::string terms_path;
    std::string absent = "closed";
    bool no_prune = false;
    bool defuzzify = false;
    bool echo_actions = false;
    std::string explain_doc;  // also trace + explain this document
    std::string trace_out;    // trace path (default <doc>.trace.json)
};

struct CompareConfig {
    std::string rules_path;
    std::string corpus_path;
    std::string goal;
    std::vector<std::string> calculi;
    std::optional<double> theta;
    std::string judgments_path;
    std::string terms_path;
    std::string absent = "closed";
    bool defuzzify = false;
    std::string report_path;  // JSON report here (default: appended to stdout)
};

struct ExplainConfig {
    std::string trace_path;
    std::string node = "root";  // "root" or a node id
};

int cmd_compile(const CompileConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_query(const QueryConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_compare(const CompareConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_explain(const ExplainConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace evret
