#pragma once

#include "zmc/paracomplex.hpp"

namespace zmc {

// Closed axis-aligned rectangle in the (u, v) coordinate plane.
struct Rect {
    double umin{-1}, umax{1};
    double vmin{-1}, vmax{1};

    ParaComplexd center() const { return {(umin + umax) / 2, (vmin + vmax) / 2}; }

    bool contains(const ParaComplexd& z, double margin = 0.0) const {
        return z.re() >= umin + margin && z.re() <= umax - margin && z.im() >= vmin + margin &&
               z.im() <= vmax - margin;
    }
};

} // namespace zmc
