#include "lppyr/schedule.hpp"

#include "lppyr/errors.hpp"

#include <cmath>

namespace lppyr {

BandwidthSchedule BandwidthSchedule::geometric(double sigma0, double mu) {
    if (!(sigma0 > 0.0))
        throw DomainError("bandwidth schedule: sigma0 must be positive");
    if (!(mu > 1.0))
        throw DomainError("bandwidth schedule: decay rate mu must exceed 1");
    return BandwidthSchedule(Kind::Geometric, sigma0, mu, 0.0);
}

BandwidthSchedule BandwidthSchedule::plateaued(double sigma0, double mu, double floor) {
    if (!(sigma0 > 0.0))
        throw DomainError("bandwidth schedule: sigma0 must be positive");
    if (!(mu > 1.0))
        throw DomainError("bandwidth schedule: decay rate mu must exceed 1");
    if (!(floor > 0.0))
        throw DomainError("bandwidth schedule: floor must be positive");
    return BandwidthSchedule(Kind::Plateaued, sigma0, mu, floor);
}

BandwidthSchedule BandwidthSchedule::constant(double sigma) {
    if (!(sigma > 0.0))
        throw DomainError("bandwidth schedule: sigma must be positive");
    return BandwidthSchedule(Kind::Constant, sigma, 1.0, sigma);
}

double BandwidthSchedule::at(std::size_t level) const {
    switch (kind_) {
    case Kind::Geometric:
        return sigma0_ * std::pow(mu_, -static_cast<double>(level));
    case Kind::Plateaued: {
        const double s = sigma0_ * std::pow(mu_, -static_cast<double>(level));
        return s > floor_ ? s : floor_;
    }
    case Kind::Constant:
        return sigma0_;
    }
    return sigma0_; // unreachable
}

} // namespace lppyr
