#include "evret/rules.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace evret {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

TokenKind keyword_kind(std::string_view s) {
    if (s == "implies") return TokenKind::KwImplies;
    if (s == "evidence") return TokenKind::KwEvidence;
    if (s == "and") return TokenKind::KwAnd;
    if (s == "or") return TokenKind::KwOr;
    if (s == "not") return TokenKind::KwNot;
    if (s == "weight") return TokenKind::KwWeight;
    if (s == "action") return TokenKind::KwAction;
    if (s == "threshold") return TokenKind::KwThreshold;
    return TokenKind::Ident;
}

std::string describe(const Token& t) {
    switch (t.kind) {
        case TokenKind::End: return "end of input";
        case TokenKind::String: return "\"" + t.text + "\"";
        default: return "'" + t.text + "'";
    }
}

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    size_t i = 0;
    int line = 1, col = 1;
    auto step = [&](char c) {
        if (c == '\n') { ++line; col = 1; } else { ++col; }
        ++i;
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') step(src[i]);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) { step(c); continue; }
        SourcePos pos{line, col};
        if (ident_start(c)) {
            size_t b = i;
            while (i < src.size() && ident_char(src[i])) step(src[i]);
            std::string text(src.substr(b, i - b));
            out.push_back({keyword_kind(text), std::move(text), 0.0, pos});
            continue;
        }
        if (digit(c)) {
            size_t b = i;
            while (i < src.size() && digit(src[i])) step(src[i]);
            if (i + 1 < src.size() && src[i] == '.' && digit(src[i + 1])) {
                step(src[i]);
                while (i < src.size() && digit(src[i])) step(src[i]);
            }
            std::string text(src.substr(b, i - b));
            double v = 0.0;
            std::from_chars(text.data(), text.data() + text.size(), v);
            out.push_back({TokenKind::Decimal, std::move(text), v, pos});
            continue;
        }
        if (c == '"') {
            step(c);
            std::string text;
            bool closed = false;
            while (i < src.size() && src[i] != '\n') {
                char d = src[i];
                if (d == '"') { step(d); closed = true; break; }
                if (d == '\\' && i + 1 < src.size() && src[i + 1] != '\n') {
                    step(d);
                    text.push_back(src[i]);
                    step(src[i]);
                    continue;
                }
                text.push_back(d);
                step(d);
            }
            if (!closed) throw ParseError("unterminated string literal", pos);
            out.push_back({TokenKind::String, std::move(text), 0.0, pos});
            continue;
        }
        if (c == '<') {
            if (i + 1 < src.size() && src[i + 1] == '-') {
                step(c); step('-');
                out.push_back({TokenKind::Arrow, "<-", 0.0, pos});
                continue;
            }
            throw ParseError("illegal character '<' (expected '<-')", pos);
        }
        TokenKind k;
        switch (c) {
            case ':': k = TokenKind::Colon; break;
            case ';': k = TokenKind::Semicolon; break;
            case ',': k = TokenKind::Comma; break;
            case '[': k = TokenKind::LBracket; break;
            case ']': k = TokenKind::RBracket; break;
            case '(': k = TokenKind::LParen; break;
            case ')': k = TokenKind::RParen; break;
            default:
                throw ParseError(std::string("illegal character '") + c + "'", pos);
        }
        out.push_back({k, std::string(1, c), 0.0, pos});
        step(c);
    }
    out.push_back({TokenKind::End, "", 0.0, {line, col}});
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

    Rulebase run() {
        Rulebase rb;
        while (!at(TokenKind::End)) {
            if (at(TokenKind::KwThreshold)) {
                get();
                rb.threshold = expect(TokenKind::Decimal, "threshold value").number;
                expect(TokenKind::Semicolon, "';'");
                continue;
            }
            Rule r = parse_rule();
            rb.by_head[r.head].push_back(static_cast<int>(rb.rules.size()));
            rb.rules.push_back(std::move(r));
        }
        return rb;
    }

private:
    const Token& peek() const { return t_[i_]; }
    const Token& get() { return t_[i_++]; }
    bool at(TokenKind k) const { return peek().kind == k; }

    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError("expected " + expected + ", found " + describe(peek()), peek().pos);
    }

    const Token& expect(TokenKind k, const std::string& what) {
        if (!at(k)) fail(what);
        return get();
    }

    Rule parse_rule() {
        Rule r;
        const Token& name = expect(TokenKind::Ident, "rule name or 'threshold'");
        r.name = name.text;
        r.pos = name.pos;
        expect(TokenKind::Colon, "':'");
        r.head = expect(TokenKind::Ident, "head concept").text;
        expect(TokenKind::Arrow, "'<-'");
        if (at(TokenKind::KwImplies)) { get(); r.kind = RuleKind::Implies; }
        else if (at(TokenKind::KwEvidence)) { get(); r.kind = RuleKind::Evidence; }
        else fail("'implies' or 'evidence'");
        expect(TokenKind::KwWeight, "'weight'");
        r.weight_pos = peek().pos;
        r.weight = parse_weight();
        r.body = parse_or();
        if (at(TokenKind::KwAction)) {
            get();
            r.action = expect(TokenKind::String, "action template string").text;
        }
        expect(TokenKind::Semicolon, "';'");
        return r;
    }

    WeightLiteral parse_weight() {
        if (at(TokenKind::Decimal)) return get().number;
        if (at(TokenKind::String)) return get().text;
        if (at(TokenKind::LBracket)) {
            get();
            double lo = expect(TokenKind::Decimal, "interval lower bound").number;
            expect(TokenKind::Comma, "','");
            double hi = expect(TokenKind::Decimal, "interval upper bound").number;
            expect(TokenKind::RBracket, "']'");
            return IntervalValue{lo, hi};
        }
        fail("weight literal");
    }

    ExprPtr parse_or() {
        ExprPtr first = parse_and();
        if (!at(TokenKind::KwOr)) return first;
        auto node = std::make_unique<Expr>();
        node->kind = Expr::Kind::Or;
        node->pos = first->pos;
        node->kids.push_back(std::move(first));
        while (at(TokenKind::KwOr)) {
            get();
            node->kids.push_back(parse_and());
        }
        return node;
    }

    ExprPtr parse_and() {
        ExprPtr first = parse_unary();
        if (!at(TokenKind::KwAnd)) return first;
        auto node = std::make_unique<Expr>();
        node->kind = Expr::Kind::And;
        node->pos = first->pos;
        node->kids.push_back(std::move(first));
        while (at(TokenKind::KwAnd)) {
            get();
            node->kids.push_back(parse_unary());
        }
        return node;
    }

    ExprPtr parse_unary() {
        if (at(TokenKind::KwNot)) {
            auto node = std::make_unique<Expr>();
            node->kind = Expr::Kind::Not;
            node->pos = get().pos;
            node->kids.push_back(parse_unary());
            return node;
        }
        return parse_atom();
    }

    ExprPtr parse_atom() {
        auto node = std::make_unique<Expr>();
        if (at(TokenKind::Ident)) {
            const Token& t = get();
            node->kind = Expr::Kind::ConceptRef;
            node->text = t.text;
            node->pos = t.pos;
            return node;
        }
        if (at(TokenKind::String)) {
            const Token& t = get();
            bool blank = std::all_of(t.text.begin(), t.text.end(), [](unsigned char c) {
                return std::isspace(c);
            });
            if (blank) throw ParseError("empty terminal pattern", t.pos);
            node->kind = Expr::Kind::Terminal;
            node->text = t.text;
            node->pos = t.pos;
            return node;
        }
        if (at(TokenKind::LParen)) {
            get();
            ExprPtr inner = parse_or();
            expect(TokenKind::RParen, "')'");
            return inner;
        }
        fail("atom");
    }

    std::vector<Token> t_;
    size_t i_ = 0;
};

}  // namespace

const std::vector<int>* Rulebase::rules_for(const std::string& head) const {
    auto it = by_head.find(head);
    return it == by_head.end() ? nullptr : &it->second;
}

Rulebase parse_rules(std::string_view source) {
    return Parser(tokenize(source)).run();
}

Rulebase parse_rules_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open rules file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_rules(ss.str());
}

namespace {

void walk(const Expr& e, const auto& fn) {
    fn(e);
    for (const auto& k : e.kids) walk(*k, fn);
}

bool evidence_shape_ok(const Expr& body) {
    if (body.kind == Expr::Kind::Terminal) return true;
    if (body.kind != Expr::Kind::Or) return false;
    return std::all_of(body.kids.begin(), body.kids.end(), [](const ExprPtr& k) {
        return k->kind == Expr::Kind::Terminal;
    });
}

std::string fmt_double(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, end);
}

}  // namespace

std::vector<ValidationIssue> validate(const Rulebase& rb, const std::string& goal) {
    using K = ValidationIssue::Kind;
    std::vector<ValidationIssue> out;

    std::map<std::string, int> name_seen;
    for (size_t i = 0; i < rb.rules.size(); ++i) {
        const Rule& r = rb.rules[i];
        auto [it, fresh] = name_seen.emplace(r.name, i);
        if (!fresh)
            out.push_back({K::DuplicateRuleName, "duplicate rule name '" + r.name + "'", r.pos});
    }

    if (!rb.rules_for(goal))
        out.push_back({K::UndefinedConcept,
                       "goal concept '" + goal + "' is not the head of any rule",
                       {0, 0}});

    for (const Rule& r : rb.rules) {
        if (const auto* d = std::get_if<double>(&r.weight)) {
            if (*d < 0.0 || *d > 1.0)
                out.push_back({K::MalformedWeight,
                               "scalar weight " + fmt_double(*d) + " outside [0,1]",
                               r.weight_pos});
        } else if (const auto* iv = std::get_if<IntervalValue>(&r.weight)) {
            if (iv->lo > iv->hi)
                out.push_back({K::MalformedWeight,
                               "interval weight [" + fmt_double(iv->lo) + "," +
                                   fmt_double(iv->hi) + "] has lower bound above upper bound",
                               r.weight_pos});
            else if (iv->lo < 0.0 || iv->hi > 1.0)
                out.push_back({K::MalformedWeight,
                               "interval weight [" + fmt_double(iv->lo) + "," +
                                   fmt_double(iv->hi) + "] outside [0,1]",
                               r.weight_pos});
        } else {
            const auto& s = std::get<std::string>(r.weight);
            if (s.empty())
                out.push_back({K::MalformedWeight, "empty linguistic weight", r.weight_pos});
        }

        if (r.kind == RuleKind::Evidence && !evidence_shape_ok(*r.body))
            out.push_back({K::MalformedEvidenceBody,
                           "evidence rule '" + r.name +
                               "' body must be a terminal or a disjunction of terminals",
                           r.body->pos});

        std::set<std::string> reported;
        walk(*r.body, [&](const Expr& e) {
            if (e.kind == Expr::Kind::ConceptRef && !rb.rules_for(e.text) &&
                reported.insert(e.text).second)
                out.push_back({K::UndefinedConcept,
                               "concept '" + e.text + "' is not the head of any rule",
                               e.pos});
        });
    }

    if (rb.threshold && (*rb.threshold < 0.0 || *rb.threshold > 1.0))
        out.push_back({K::BadThreshold,
                       "threshold " + fmt_double(*rb.threshold) + " outside [0,1]",
                       {0, 0}});

    // cycle detection over the concept graph, deterministic first-appearance order
    std::map<std::string, int> color;  // 0 white, 1 gray, 2 black
    std::vector<std::string> path;
    std::set<std::string> cycles_reported;

    auto dfs = [&](auto&& self, const std::string& head) -> void {
        color[head] = 1;
        path.push_back(head);
        if (const auto* idx = rb.rules_for(head)) {
            for (int ri : *idx) {
                walk(*rb.rules[ri].body, [&](const Expr& e) {
                    if (e.kind != Expr::Kind::ConceptRef || !rb.rules_for(e.text)) return;
                    int c = color[e.text];
                    if (c == 0) {
                        self(self, e.text);
                    } else if (c == 1) {
                        auto it = std::find(path.begin(), path.end(), e.text);
                        std::string rendered;
                        for (; it != path.end(); ++it) rendered += *it + " -> ";
                        rendered += e.text;
                        if (cycles_reported.insert(rendered).second)
                            out.push_back({K::CyclicRulebase, "rule cycle: " + rendered, e.pos});
                    }
                });
            }
        }
        path.pop_back();
        color[head] = 2;
    };
    for (const Rule& r : rb.rules)
        if (color[r.head] == 0) dfs(dfs, r.head);

    return out;
}

namespace {

int prec(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::Or: return 1;
        case Expr::Kind::And: return 2;
        case Expr::Kind::Not: return 3;
        default: return 4;
    }
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void print_expr(std::string& out, const Expr& e, int parent_prec) {
    // nested same-precedence And/Or was written parenthesized, so keep parens
    bool parens = prec(e.kind) < parent_prec ||
                  (prec(e.kind) == parent_prec && e.kind != Expr::Kind::Not);
    if (e.kind == Expr::Kind::ConceptRef) { out += e.text; return; }
    if (e.kind == Expr::Kind::Terminal) { out += quote(e.text); return; }
    if (parens) out.push_back('(');
    switch (e.kind) {
        case Expr::Kind::Not:
            out += "not ";
            print_expr(out, *e.kids[0], prec(Expr::Kind::Not));
            break;
        case Expr::Kind::And:
        case Expr::Kind::Or: {
            const char* sep = e.kind == Expr::Kind::And ? " and " : " or ";
            for (size_t i = 0; i < e.kids.size(); ++i) {
                if (i) out += sep;
                print_expr(out, *e.kids[i], prec(e.kind));
            }
            break;
        }
        default: break;
    }
    if (parens) out.push_back(')');
}

std::string print_weight(const WeightLiteral& w) {
    if (const auto* d = std::get_if<double>(&w)) return fmt_double(*d);
    if (const auto* iv = std::get_if<IntervalValue>(&w))
        return "[" + fmt_double(iv->lo) + ", " + fmt_double(iv->hi) + "]";
    return quote(std::get<std::string>(w));
}

}  // namespace

std::string pretty_print(const Rulebase& rb) {
    std::string out;
    if (rb.threshold) out += "threshold " + fmt_double(*rb.threshold) + ";\n";
    for (const Rule& r : rb.rules) {
        out += r.name + ": " + r.head + " <- ";
        out += r.kind == RuleKind::Implies ? "implies" : "evidence";
        out += " weight " + print_weight(r.weight) + " ";
        print_expr(out, *r.body, 0);
        if (!r.action.empty()) out += " action " + quote(r.action);
        out += ";\n";
    }
    return out;
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.text != b.text || a.kids.size() != b.kids.size()) return false;
    for (size_t i = 0; i < a.kids.size(); ++i)
        if (!expr_equal(*a.kids[i], *b.kids[i])) return false;
    return true;
}

bool rulebase_equal(const Rulebase& a, const Rulebase& b) {
    if (a.threshold != b.threshold || a.rules.size() != b.rules.size()) return false;
    for (size_t i = 0; i < a.rules.size(); ++i) {
        const Rule &x = a.rules[i], &y = b.rules[i];
        if (x.name != y.name || x.head != y.head || x.kind != y.kind ||
            x.weight != y.weight || x.action != y.action)
            return false;
        if (!expr_equal(*x.body, *y.body)) return false;
    }
    return true;
}

}  // namespace evret
