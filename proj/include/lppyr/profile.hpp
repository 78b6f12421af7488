#ifndef LPPYR_PROFILE_HPP
#define LPPYR_PROFILE_HPP

#include <cstddef>

namespace lppyr {

/// Radial kernel profile Phi(r): Phi(0) = 1, nonincreasing, values in [0,1].
///
/// Two concrete shapes are provided. The Gaussian is exp(-r^2). The
/// power-law-tail profile is min(1, C * r^-q), the tightest profile that
/// meets the decay bound Phi(r) <= C r^-q; the exponent must exceed the
/// ambient dimension of the point set it will be used with, which is
/// validated at construction.
class RadialProfile {
public:
    enum class Kind { Gaussian, PowerLawTail };

    static RadialProfile gaussian();
    static RadialProfile power_law_tail(double q, double c, std::size_t ambient_dim);

    double operator()(double r) const;

    Kind kind() const { return kind_; }
    double tail_exponent() const { return q_; }
    double tail_constant() const { return c_; }

private:
    RadialProfile(Kind kind, double q, double c) : kind_(kind), q_(q), c_(c) {}

    Kind kind_;
    double q_;
    double c_;
};

} // namespace lppyr

#endif
