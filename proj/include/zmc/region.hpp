#pragma once

#include <string>
#include <vector>

#include "zmc/expr.hpp"
#include "zmc/rect.hpp"

namespace zmc {

enum class SignRequirement {
    Positive,  // norm2(expr(z)) > 0, strictly off the cone
    Negative,  // norm2(expr(z)) < 0, strictly off the cone
    NonNull,   // expr(z) invertible
};

struct SignConstraint {
    ParaExpr expr;
    SignRequirement required{SignRequirement::NonNull};
};

// Open subset of the (u,v) plane: a bounding rectangle intersected with sign
// conditions on norm2 of expressions of z.  `margin` is a sup-norm safety
// radius: a point only counts as inside when the constraints also hold at the
// four corners of the margin square around it, which keeps samples away from
// the excluded loci (exact for the diagonal lines that occur here).
struct RegionSpec {
    Rect rect{};
    std::vector<SignConstraint> constraints;
    double margin{0.0};
    std::string name{"rect"};

    bool contains(const ParaComplexd& z) const;
    std::string describe() const;
};

} // namespace zmc
