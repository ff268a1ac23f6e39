#include <CLI11.hpp>
#include <iostream>

#include "evret/calculus.hpp"
#include "evret/commands.hpp"

namespace {

std::string preset_list() {
    std::string s;
    for (const std::string& p : evret::registered_presets()) s += "  " + p + "\n";
    return s;
}

const char kRuleHelp[] = R"(Rule files (precedence: not > and > or; '#' starts a comment):
  threshold 0.3;
  r1: Terrorism <- implies weight 0.9 (Bombing and Hostage);
  r2: Bombing <- evidence weight [0.6,0.9] "car bomb" or "explosion"
      action "matched {concept} at {value} in {doc}";
Weights are decimals, intervals [a,b], or quoted linguistic terms.
Scalar presets accept .detach=<lukasiewicz|godel|goguen|kleene-dienes>
and .combine=<prob-sum|max> suffixes.
)";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"evret: rule-based evidential reasoning over text corpora"};
    app.require_subcommand(1);
    app.footer(std::string(kRuleHelp) + "\nRegistered calculi:\n" + preset_list());

    evret::CompileConfig compile_cfg;
    CLI::App* compile = app.add_subcommand("compile", "Validate a rulebase and report its inference graph");
    compile->add_option("rules", compile_cfg.rules_path, "rule file")->required();
    compile->add_option("goal", compile_cfg.goal, "goal concept")->required();
    compile->add_option("--dot", compile_cfg.dot_path, "write the graph in DOT form");
    compile->add_option("--calculus", compile_cfg.calculus, "annotate DOT nodes with this preset's operators");

    evret::QueryConfig query_cfg;
    CLI::App* query = app.add_subcommand("query", "Rank a corpus against a goal concept");
    query->add_option("rules", query_cfg.rules_path, "rule file")->required();
    query->add_option("corpus", query_cfg.corpus_path, "directory of .txt documents")->required();
    query->add_option("goal", query_cfg.goal, "goal concept")->required();
    query->add_option("--calculus", query_cfg.calculus, "uncertainty calculus preset")->required();
    query->add_option("--threshold", query_cfg.theta, "retrieval threshold (overrides the rulebase)")
        ->check(CLI::Range(0.0, 1.0));
    query->add_option("--terms", query_cfg.terms_path, "linguistic term dictionary");
    query->add_option("--absent", query_cfg.absent, "value for unmatched terminals")
        ->check(CLI::IsMember({"closed", "unknown"}))
        ->capture_default_str();
    query->add_flag("--no-prune", query_cfg.no_prune, "disable all evaluation short-circuits");
    query->add_flag("--defuzzify", query_cfg.defuzzify, "collapse richer weight literals to centroids");
    query->add_flag("--echo-actions", query_cfg.echo_actions, "print fired rule actions to stderr");
    query->add_option("--explain", query_cfg.explain_doc, "write this document's trace and explanation");
    query->add_option("--trace-out", query_cfg.trace_out, "trace path (default <doc>.trace.json)");

    evret::CompareConfig compare_cfg;
    CLI::App* compare = app.add_subcommand("compare", "Rank under several calculi and compare retrieval behavior");
    compare->add_option("rules", compare_cfg.rules_path, "rule file")->required();
    compare->add_option("corpus", compare_cfg.corpus_path, "directory of .txt documents")->required();
    compare->add_option("goal", compare_cfg.goal, "goal concept")->required();
    compare->add_option("--calculi", compare_cfg.calculi, "comma-separated calculus presets")
        ->required()
        ->delimiter(',');
    compare->add_option("--threshold", compare_cfg.theta, "retrieval threshold (overrides the rulebase)")
        ->check(CLI::Range(0.0, 1.0));
    compare->add_option("--judgments", compare_cfg.judgments_path, "relevance judgments CSV");
    compare->add_option("--terms", compare_cfg.terms_path, "linguistic term dictionary");
    compare->add_option("--absent", compare_cfg.absent, "value for unmatched terminals")
        ->check(CLI::IsMember({"closed", "unknown"}))
        ->capture_default_str();
    compare->add_flag("--defuzzify", compare_cfg.defuzzify, "collapse richer weight literals to centroids");
    compare->add_option("--report", compare_cfg.report_path, "write the JSON report here instead of stdout");

    evret::ExplainConfig explain_cfg;
    CLI::App* explain = app.add_subcommand("explain", "Render an explanation from a saved trace");
    explain->add_option("trace", explain_cfg.trace_path, "trace JSON file")->required();
    explain->add_option("--node", explain_cfg.node, "'root' or a node id")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (compile->parsed()) return evret::cmd_compile(compile_cfg, std::cout, std::cerr);
        if (query->parsed()) return evret::cmd_query(query_cfg, std::cout, std::cerr);
        if (compare->parsed()) return evret::cmd_compare(compare_cfg, std::cout, std::cerr);
        if (explain->parsed()) return evret::cmd_explain(explain_cfg, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
