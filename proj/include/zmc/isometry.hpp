#pragma once

#include <string>

#include "zmc/weierstrass.hpp"

namespace zmc {

// Rigid motion of R^3_1 from the finite family used here: a signed
// permutation of the spatial axes, an optional time reflection, and a
// translation.  Every such map preserves the Lorentzian inner product.
struct Isometry {
    bool swap_xy{false};
    int sx{1}, sy{1}, st{1};
    double dt{0}, dx{0}, dy{0};

    Point3 apply(const Point3& p) const {
        const double a = swap_xy ? p[2] : p[1];
        const double b = swap_xy ? p[1] : p[2];
        return Point3(st * p[0] + dt, sx * a + dx, sy * b + dy);
    }

    bool is_identity() const {
        return !swap_xy && sx == 1 && sy == 1 && st == 1 && dt == 0 &&
               dx == 0 && dy == 0;
    }

    std::string describe() const;
};

} // namespace zmc
