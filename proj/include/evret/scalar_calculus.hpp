#pragma once

// Scalar (point-valued) uncertainty operations: the three classic
// t-norm/t-conorm pairs, four detachment operators (lower bound on the
// consequent from antecedent value and rule weight), and two evidence
// combiners.

#include <string>

namespace evret {

enum class TNorm { Min, Product, Lukasiewicz };
enum class DetachOp { Lukasiewicz, Godel, Goguen, KleeneDienes };
enum class CombineOp { ProbSum, Max };

struct ScalarPreset {
    TNorm tnorm = TNorm::Min;
    DetachOp detach = DetachOp::Goguen;
    CombineOp combine = CombineOp::ProbSum;
};

double tnorm_apply(TNorm t, double a, double b);
double conorm_apply(TNorm t, double a, double b);  // De Morgan dual of tnorm_apply
double negate_scalar(double a);
double detach_scalar(DetachOp d, double body, double weight);
double combine_scalar(CombineOp c, double a, double b);

const char* tnorm_name(TNorm t);
const char* detach_name(DetachOp d);
const char* combine_name(CombineOp c);

}  // namespace evret
