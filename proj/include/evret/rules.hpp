#pragma once

// The rule DSL: weighted IMPLIES/EVIDENCE rules over boolean bodies whose
// leaves are concept references or quoted terminal patterns.
//
//   threshold 0.3;
//   r1: Terrorism <- implies weight 0.9 (Bombing and Hostage);
//   r2: Bombing <- evidence weight [0.6,0.9] "car bomb" or "explosion"
//       action "matched {concept} at {value}";
//
// Precedence: not > and > or.  `#` starts a comment.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evret/errors.hpp"
#include "evret/truth_value.hpp"

namespace evret {

enum class TokenKind {
    Ident, Decimal, String,
    Colon, Semicolon, Comma, LBracket, RBracket, LParen, RParen, Arrow,
    KwImplies, KwEvidence, KwAnd, KwOr, KwNot, KwWeight, KwAction, KwThreshold,
    End,
};

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;     // identifier name, string contents, or lexeme
    double number = 0.0;  // Decimal only
    SourcePos pos;
};

// Throws ParseError (unterminated string, illegal character).
std::vector<Token> tokenize(std::string_view source);

struct Expr {
    enum class Kind { And, Or, Not, ConceptRef, Terminal };
    Kind kind = Kind::ConceptRef;
    std::string text;  // concept name or terminal pattern
    std::vector<std::unique_ptr<Expr>> kids;
    SourcePos pos;
};

using ExprPtr = std::unique_ptr<Expr>;

enum class RuleKind { Implies, Evidence };

struct Rule {
    std::string name;
    std::string head;
    RuleKind kind = RuleKind::Implies;
    WeightLiteral weight = 0.0;
    SourcePos weight_pos;
    ExprPtr body;
    std::string action;  // empty = no action slot
    SourcePos pos;
};

struct Rulebase {
    std::vector<Rule> rules;
    std::optional<double> threshold;  // rulebase-wide pruning threshold
    std::map<std::string, std::vector<int>> by_head;  // head -> rule indices

    const std::vector<int>* rules_for(const std::string& head) const;
};

// Grammar errors carry a position; see ParseError.
Rulebase parse_rules(std::string_view source);
Rulebase parse_rules_file(const std::string& path);

struct ValidationIssue {
    enum class Kind {
        UndefinedConcept,
        CyclicRulebase,
        DuplicateRuleName,
        MalformedWeight,
        MalformedEvidenceBody,
        BadThreshold,
    };
    Kind kind;
    std::string message;
    SourcePos pos;
};

// Empty result means the rulebase is ready for graph expansion.
std::vector<ValidationIssue> validate(const Rulebase& rb, const std::string& goal);

std::string pretty_print(const Rulebase& rb);

bool expr_equal(const Expr& a, const Expr& b);
bool rulebase_equal(const Rulebase& a, const Rulebase& b);

}  // namespace evret
