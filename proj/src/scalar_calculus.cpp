#include "evret/scalar_calculus.hpp"

#include <algorithm>

namespace evret {

// prob-sum written as 1-(1-a)(1-b) so the result cannot creep above 1.0 in
// floating point.
static double prob_sum(double a, double b) { return 1.0 - (1.0 - a) * (1.0 - b); }

double tnorm_apply(TNorm t, double a, double b) {
    switch (t) {
        case TNorm::Min: return std::min(a, b);
        case TNorm::Product: return a * b;
        case TNorm::Lukasiewicz: return std::max(0.0, a + b - 1.0);
    }
    return 0.0;
}

double conorm_apply(TNorm t, double a, double b) {
    switch (t) {
        case TNorm::Min: return std::max(a, b);
        case TNorm::Product: return prob_sum(a, b);
        case TNorm::Lukasiewicz: return std::min(1.0, a + b);
    }
    return 0.0;
}

double negate_scalar(double a) { return 1.0 - a; }

double detach_scalar(DetachOp d, double body, double weight) {
    switch (d) {
        case DetachOp::Lukasiewicz: return std::max(0.0, body + weight - 1.0);
        case DetachOp::Godel: return std::min(body, weight);
        case DetachOp::Goguen: return body * weight;
        case DetachOp::KleeneDienes: return weight + body > 1.0 ? weight : 0.0;
    }
    return 0.0;
}

double combine_scalar(CombineOp c, double a, double b) {
    return c == CombineOp::ProbSum ? prob_sum(a, b) : std::max(a, b);
}

const char* tnorm_name(TNorm t) {
    switch (t) {
        case TNorm::Min: return "godel";
        case TNorm::Product: return "product";
        case TNorm::Lukasiewicz: return "lukasiewicz";
    }
    return "?";
}

const char* detach_name(DetachOp d) {
    switch (d) {
        case DetachOp::Lukasiewicz: return "lukasiewicz";
        case DetachOp::Godel: return "godel";
        case DetachOp::Goguen: return "goguen";
        case DetachOp::KleeneDienes: return "kleene-dienes";
    }
    return "?";
}

const char* combine_name(CombineOp c) {
    return c == CombineOp::ProbSum ? "prob-sum" : "max";
}

}  // namespace evret
