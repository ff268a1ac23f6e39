#include "evret/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "evret/errors.hpp"

namespace fs = std::filesystem;

namespace evret {

const Document* Corpus::find(const std::string& id) const {
    auto it = std::lower_bound(docs.begin(), docs.end(), id,
                               [](const Document& d, const std::string& s) { return d.id < s; });
    return it != docs.end() && it->id == id ? &*it : nullptr;
}

std::vector<std::string> tokenize_text(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        } else if (!cur.empty()) {
            out.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

Corpus ingest(const std::string& dir_path) {
    std::error_code ec;
    fs::directory_iterator it(dir_path, ec);
    if (ec) throw IoError("cannot read corpus directory: " + dir_path + ": " + ec.message());
    Corpus c;
    for (const fs::directory_entry& e : it) {
        if (!e.is_regular_file() || e.path().extension() != ".txt") continue;
        std::ifstream in(e.path(), std::ios::binary);
        if (!in) throw IoError("cannot read document: " + e.path().string());
        std::ostringstream ss;
        ss << in.rdbuf();
        Document d;
        d.id = e.path().stem().string();
        d.text = ss.str();
        d.tokens = tokenize_text(d.text);
        c.docs.push_back(std::move(d));
    }
    std::sort(c.docs.begin(), c.docs.end(),
              [](const Document& a, const Document& b) { return a.id < b.id; });
    return c;
}

bool match_terminal(const Document& d, const std::string& pattern) {
    std::vector<std::string> pat = tokenize_text(pattern);
    if (pat.empty() || pat.size() > d.tokens.size()) return false;
    auto it = std::search(d.tokens.begin(), d.tokens.end(), pat.begin(), pat.end());
    return it != d.tokens.end();
}

const char* absent_policy_name(AbsentPolicy p) {
    return p == AbsentPolicy::Closed ? "closed" : "unknown";
}

AbsentPolicy parse_absent_policy(const std::string& s) {
    if (s == "closed") return AbsentPolicy::Closed;
    if (s == "unknown") return AbsentPolicy::Unknown;
    throw DomainError("unknown absent policy: " + s + " (expected closed or unknown)");
}

std::vector<TruthValue> terminal_values(const Document& d, const InferenceGraph& g,
                                        const Calculus& calc, AbsentPolicy absent) {
    TruthValue absent_value = calc.bottom();
    if (absent == AbsentPolicy::Unknown) {
        auto u = calc.unknown();
        if (!u)
            throw DomainError("calculus " + calc.name() +
                              " has no unknown element; use the closed absent policy");
        absent_value = *u;
    }
    std::vector<TruthValue> out(g.nodes.size(), TruthValue{ScalarValue{0.0}});
    for (const auto& [pattern, id] : g.terminal_ids)
        out[id] = match_terminal(d, pattern) ? calc.top() : absent_value;
    return out;
}

Judgments load_judgments(const std::string& path, const Corpus& corpus) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open judgments file: " + path);
    Judgments j;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (lineno == 1) {
            if (line != "doc_id,relevant")
                throw ParseError("judgments header must be doc_id,relevant", {1, 1});
            continue;
        }
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ParseError("judgments line needs doc_id,relevant", {lineno, 1});
        std::string id = line.substr(0, comma);
        std::string flag = line.substr(comma + 1);
        if (flag != "0" && flag != "1")
            throw ParseError("relevant flag must be 0 or 1", {lineno, static_cast<int>(comma) + 2});
        if (!corpus.find(id))
            throw UnknownDocumentError("judgments refer to unknown document '" + id + "'");
        j.relevant[id] = flag == "1";
    }
    return j;
}

}  // namespace evret
