#include "zmc/region.hpp"

#include <cmath>
#include <sstream>

#include "zmc/errors.hpp"

namespace zmc {

namespace {

bool holds_at(const SignConstraint& c, const ParaComplexd& z) {
    ParaComplexd w;
    try {
        w = eval(c.expr, z);
    } catch (const Error&) {
        return false;
    }
    if (is_null(w)) return false;
    switch (c.required) {
        case SignRequirement::Positive: return norm2(w) > 0.0;
        case SignRequirement::Negative: return norm2(w) < 0.0;
        case SignRequirement::NonNull: return true;
    }
    return false;
}

} // namespace

bool RegionSpec::contains(const ParaComplexd& z) const {
    if (!rect.contains(z, margin)) return false;
    if (constraints.empty()) return true;
    std::vector<ParaComplexd> probes;
    probes.push_back(z);
    if (margin > 0.0) {
        probes.emplace_back(re(z) - margin, im(z) - margin);
        probes.emplace_back(re(z) - margin, im(z) + margin);
        probes.emplace_back(re(z) + margin, im(z) - margin);
        probes.emplace_back(re(z) + margin, im(z) + margin);
    }
    for (const auto& c : constraints) {
        for (const auto& p : probes) {
            if (!holds_at(c, p)) return false;
        }
    }
    return true;
}

std::string RegionSpec::describe() const {
    std::ostringstream os;
    os << name << ": [" << rect.umin << "," << rect.umax << "]x["
       << rect.vmin << "," << rect.vmax << "]";
    for (const auto& c : constraints) {
        os << ", ";
        switch (c.required) {
            case SignRequirement::Positive:
                os << "norm2(" << to_string(c.expr) << ") > 0";
                break;
            case SignRequirement::Negative:
                os << "norm2(" << to_string(c.expr) << ") < 0";
                break;
            case SignRequirement::NonNull:
                os << to_string(c.expr) << " invertible";
                break;
        }
    }
    if (margin > 0.0) os << ", margin " << margin;
    return os.str();
}

} // namespace zmc
