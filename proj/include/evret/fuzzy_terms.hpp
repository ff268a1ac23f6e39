#pragma once

// Linguistic term dictionary: primary terms defined by piecewise-linear
// breakpoints sampled onto the membership grid, a generated vocabulary of
// hedge chains up to depth 2 (very / more or less / not), and nearest-term
// lookup by normalized L1 distance.

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evret/truth_value.hpp"

namespace evret {

// Breakpoints: strictly increasing x starting at 0 and ending at 1, mu in
// [0,1]. Throws MalformedTermError / NonConvexTermError.
FuzzyValue define_term(std::span<const std::pair<double, double>> breakpoints);

enum class Hedge { Very, MoreOrLess, Not };

const char* hedge_name(Hedge h);

// Pointwise transform; the result of Not on a peaked term may be non-convex
// and is rejected only when used as a connective operand.
FuzzyValue apply_hedge(Hedge h, const FuzzyValue& f);

// Normalized: sum of pointwise absolute differences divided by the grid size.
double fuzzy_l1_distance(const FuzzyValue& a, const FuzzyValue& b);

class TermDictionary {
public:
    struct Entry {
        std::string name;  // e.g. "true", "very true", "not very true"
        int depth = 0;     // hedge chain length
        FuzzyValue value;
    };

    struct Match {
        std::string name;
        double distance = 0.0;
    };

    static TermDictionary build(
        const std::vector<std::pair<std::string, FuzzyValue>>& primaries);
    // File format: one `term <name> : (x,mu) (x,mu) ...` per line, `#` comments.
    static TermDictionary from_string(std::string_view text);
    static TermDictionary from_file(const std::string& path);

    const FuzzyValue* find(const std::string& name) const;
    // Nearest entry; ties broken by shorter hedge chain, then name.
    // Throws EmptyDictionaryError when no terms are defined.
    Match approximate(const FuzzyValue& f) const;

    const std::vector<Entry>& entries() const { return entries_; }
    const std::vector<std::string>& primary_names() const { return primary_names_; }
    bool empty() const { return entries_.empty(); }

private:
    std::vector<Entry> entries_;
    std::vector<std::string> primary_names_;
};

}  // namespace evret
