#ifndef LPPYR_SCHEDULE_HPP
#define LPPYR_SCHEDULE_HPP

#include <cstddef>

namespace lppyr {

/// Level-indexed bandwidth sequence sigma_0, sigma_1, ...
/// Geometric: sigma_0 / mu^l with mu > 1. Plateaued: the same sequence
/// clamped from below at a positive floor. Constant: one bandwidth at
/// every level. All variants are nonincreasing and strictly positive.
class BandwidthSchedule {
public:
    enum class Kind { Geometric, Plateaued, Constant };

    static BandwidthSchedule geometric(double sigma0, double mu);
    static BandwidthSchedule plateaued(double sigma0, double mu, double floor);
    static BandwidthSchedule constant(double sigma);

    double at(std::size_t level) const;

    Kind kind() const { return kind_; }
    double sigma0() const { return sigma0_; }
    double mu() const { return mu_; }
    double floor() const { return floor_; }

private:
    BandwidthSchedule(Kind kind, double sigma0, double mu, double floor)
        : kind_(kind), sigma0_(sigma0), mu_(mu), floor_(floor) {}

    Kind kind_;
    double sigma0_;
    double mu_;
    double floor_;
};

} // namespace lppyr

#endif
