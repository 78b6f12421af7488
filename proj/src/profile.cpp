#include "lppyr/profile.hpp"

#include "lppyr/errors.hpp"

#include <cmath>

namespace lppyr {

RadialProfile RadialProfile::gaussian() {
    return RadialProfile(Kind::Gaussian, 0.0, 0.0);
}

RadialProfile RadialProfile::power_law_tail(double q, double c, std::size_t ambient_dim) {
    if (!(q > static_cast<double>(ambient_dim)))
        throw DomainError("power-law profile: exponent q must exceed the ambient dimension");
    if (!(c > 0.0))
        throw DomainError("power-law profile: constant C must be positive");
    return RadialProfile(Kind::PowerLawTail, q, c);
}

double RadialProfile::operator()(double r) const {
    if (!(r >= 0.0))
        throw DomainError("radial profile evaluated at negative radius");
    switch (kind_) {
    case Kind::Gaussian:
        return std::exp(-r * r);
    case Kind::PowerLawTail: {
        if (r == 0.0)
            return 1.0;
        const double v = c_ * std::pow(r, -q_);
        return v < 1.0 ? v : 1.0;
    }
    }
    return 0.0; // unreachable
}

} // namespace lppyr
