#pragma once

// Document ingestion and terminal matching.  Documents are plain-text files;
// matching is over lowercased alphanumeric word tokens, with multi-word
// patterns matched as contiguous phrases.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "evret/calculus.hpp"
#include "evret/graph.hpp"

namespace evret {

struct Document {
    std::string id;  // file stem
    std::string text;
    std::vector<std::string> tokens;
};

struct Corpus {
    std::vector<Document> docs;  // sorted by id
    const Document* find(const std::string& id) const;
};

std::vector<std::string> tokenize_text(std::string_view text);

// Reads every regular *.txt file in the directory.  Throws IoError.
Corpus ingest(const std::string& dir_path);

bool match_terminal(const Document& d, const std::string& pattern);

enum class AbsentPolicy { Closed, Unknown };

const char* absent_policy_name(AbsentPolicy p);
AbsentPolicy parse_absent_policy(const std::string& s);  // "closed" | "unknown"

// Value per terminal-node id: present -> top; absent -> bottom (closed) or
// the family's unknown element.  Throws DomainError for the scalar family
// under the unknown policy, which has no unknown element.
std::vector<TruthValue> terminal_values(const Document& d, const InferenceGraph& g,
                                        const Calculus& calc, AbsentPolicy absent);

struct Judgments {
    std::map<std::string, bool> relevant;  // doc id -> judged relevant
};

// CSV with header doc_id,relevant; relevant in {0,1}.  Ids must name corpus
// documents (UnknownDocumentError).
Judgments load_judgments(const std::string& path, const Corpus& corpus);

}  // namespace evret
