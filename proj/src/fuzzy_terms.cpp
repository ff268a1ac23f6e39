#include "evret/fuzzy_terms.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "evret/errors.hpp"

namespace evret {

FuzzyValue define_term(std::span<const std::pair<double, double>> bp) {
    if (bp.size() < 2) throw MalformedTermError("term needs at least two breakpoints");
    if (std::abs(bp.front().first) > 1e-12 || std::abs(bp.back().first - 1.0) > 1e-12)
        throw MalformedTermError("breakpoints must start at x=0 and end at x=1");
    for (size_t i = 0; i < bp.size(); ++i) {
        if (bp[i].second < 0.0 || bp[i].second > 1.0)
            throw MalformedTermError("membership outside [0,1]");
        if (i > 0 && bp[i].first <= bp[i - 1].first)
            throw MalformedTermError("breakpoint x values must be strictly increasing");
    }
    FuzzyValue f;
    f.mu.resize(kGridSize);
    size_t seg = 0;
    for (int i = 0; i < kGridSize; ++i) {
        double x = grid_x(i);
        while (seg + 2 < bp.size() && x > bp[seg + 1].first) ++seg;
        double x0 = bp[seg].first, y0 = bp[seg].second;
        double x1 = bp[seg + 1].first, y1 = bp[seg + 1].second;
        double t = (x - x0) / (x1 - x0);
        t = std::clamp(t, 0.0, 1.0);
        f.mu[i] = std::clamp(y0 + t * (y1 - y0), 0.0, 1.0);
    }
    if (!fuzzy_is_convex(f.mu)) throw NonConvexTermError("term membership is not convex");
    return f;
}

const char* hedge_name(Hedge h) {
    switch (h) {
        case Hedge::Very: return "very";
        case Hedge::MoreOrLess: return "more or less";
        case Hedge::Not: return "not";
    }
    return "?";
}

FuzzyValue apply_hedge(Hedge h, const FuzzyValue& f) {
    FuzzyValue out;
    out.mu.resize(f.mu.size());
    for (size_t i = 0; i < f.mu.size(); ++i) {
        switch (h) {
            case Hedge::Very: out.mu[i] = f.mu[i] * f.mu[i]; break;
            case Hedge::MoreOrLess: out.mu[i] = std::sqrt(f.mu[i]); break;
            case Hedge::Not: out.mu[i] = 1.0 - f.mu[i]; break;
        }
    }
    return out;
}

double fuzzy_l1_distance(const FuzzyValue& a, const FuzzyValue& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.mu.size(); ++i) s += std::abs(a.mu[i] - b.mu[i]);
    return s / kGridSize;
}

TermDictionary TermDictionary::build(
    const std::vector<std::pair<std::string, FuzzyValue>>& primaries) {
    static constexpr Hedge kHedges[] = {Hedge::Very, Hedge::MoreOrLess, Hedge::Not};
    TermDictionary d;
    for (const auto& [name, value] : primaries) {
        for (const auto& e : d.entries_)
            if (e.depth == 0 && e.name == name)
                throw MalformedTermError("duplicate term name: " + name);
        d.primary_names_.push_back(name);
        d.entries_.push_back({name, 0, value});
        for (Hedge h1 : kHedges) {
            FuzzyValue v1 = apply_hedge(h1, value);
            d.entries_.push_back({std::string(hedge_name(h1)) + " " + name, 1, v1});
            for (Hedge h2 : kHedges) {
                // leftmost hedge is applied last: "not very true" = not(very(true))
                FuzzyValue v2 = apply_hedge(h2, apply_hedge(h1, value));
                d.entries_.push_back({std::string(hedge_name(h2)) + " " +
                                          hedge_name(h1) + " " + name,
                                      2, v2});
            }
        }
    }
    return d;
}

const FuzzyValue* TermDictionary::find(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return &e.value;
    return nullptr;
}

TermDictionary::Match TermDictionary::approximate(const FuzzyValue& f) const {
    if (entries_.empty()) throw EmptyDictionaryError("term dictionary is empty");
    const Entry* best = nullptr;
    double best_d = 0.0;
    for (const auto& e : entries_) {
        double d = fuzzy_l1_distance(f, e.value);
        if (!best || d < best_d - 1e-12 ||
            (d < best_d + 1e-12 && (e.depth < best->depth ||
                                    (e.depth == best->depth && e.name < best->name)))) {
            best = &e;
            best_d = d;
        }
    }
    return {best->name, best_d};
}

namespace {

void fail(int line, const std::string& msg) {
    throw ParseError("terms file line " + std::to_string(line) + ": " + msg,
                     SourcePos{line, 1});
}

}  // namespace

TermDictionary TermDictionary::from_string(std::string_view text) {
    std::vector<std::pair<std::string, FuzzyValue>> primaries;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
        std::istringstream ls(raw);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw != "term") fail(lineno, "expected 'term', found '" + kw + "'");
        std::string name, colon;
        if (!(ls >> name)) fail(lineno, "missing term name");
        if (!(ls >> colon) || colon != ":") fail(lineno, "expected ':' after term name");
        std::vector<std::pair<double, double>> bp;
        std::string tok;
        while (ls >> tok) {
            // (x,mu)
            if (tok.size() < 5 || tok.front() != '(' || tok.back() != ')')
                fail(lineno, "malformed breakpoint '" + tok + "'");
            auto comma = tok.find(',');
            if (comma == std::string::npos) fail(lineno, "malformed breakpoint '" + tok + "'");
            double x = 0.0, mu = 0.0;
            auto r1 = std::from_chars(tok.data() + 1, tok.data() + comma, x);
            auto r2 = std::from_chars(tok.data() + comma + 1,
                                      tok.data() + tok.size() - 1, mu);
            if (r1.ec != std::errc{} || r2.ec != std::errc{})
                fail(lineno, "malformed breakpoint '" + tok + "'");
            bp.emplace_back(x, mu);
        }
        if (bp.empty()) fail(lineno, "term '" + name + "' has no breakpoints");
        try {
            primaries.emplace_back(name, define_term(bp));
        } catch (const Error& e) {
            fail(lineno, "term '" + name + "': " + e.what());
        }
    }
    return build(primaries);
}

TermDictionary TermDictionary::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open terms file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_string(ss.str());
}

}  // namespace evret
