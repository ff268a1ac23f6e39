#pragma once

#include <stdexcept>
#include <string>

namespace evret {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Preset string does not name a registered calculus.
struct UnknownCalculusError : Error { using Error::Error; };

// A value outside the operation's family or range was supplied.
struct DomainError : Error { using Error::Error; };

// mpmt detachment: the weight interval contradicts the antecedent bounds
// (empty feasible set for the consequent).
struct InconsistentEvidenceError : Error { using Error::Error; };

// A rule weight literal cannot be lifted to the calculus family.
struct CoercionError : Error { using Error::Error; };

struct IoError : Error { using Error::Error; };

// Fuzzy term construction / use.
struct MalformedTermError : Error { using Error::Error; };
struct NonConvexTermError : Error { using Error::Error; };
struct EmptyDictionaryError : Error { using Error::Error; };

struct UnknownNodeError : Error { using Error::Error; };
struct UnknownDocumentError : Error { using Error::Error; };

// Ranking comparison over different document sets.
struct MismatchedCorporaError : Error { using Error::Error; };

struct SourcePos {
    int line = 0;  // 1-based
    int col = 0;   // 1-based
};

struct ParseError : Error {
    SourcePos pos;
    ParseError(const std::string& msg, SourcePos p) : Error(msg), pos(p) {}
};

}  // namespace evret
