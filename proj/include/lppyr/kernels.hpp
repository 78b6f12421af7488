#ifndef LPPYR_KERNELS_HPP
#define LPPYR_KERNELS_HPP

#include "lppyr/markov_kernel.hpp"
#include "lppyr/point_set.hpp"
#include "lppyr/profile.hpp"

#include <span>
#include <vector>

namespace lppyr {

/// Below this raw affinity sum a kernel row is treated as numerically zero:
/// the query point is too far from every sample for the bandwidth, and the
/// level contributes nothing at that point.
inline constexpr double kUnderflowFloor = 1e-300;

struct KernelRow {
    std::vector<double> weights; // all zero when underflowed
    bool underflowed = false;
};

/// Normalized affinity row P(x, x_j) = Phi(|x - x_j|/sigma) / sum_j' (...).
/// The denominator is accumulated left to right over samples.
KernelRow kernel_row(const PointSet& ps, const RadialProfile& profile, double sigma,
                     std::span<const double> x, double underflow_floor = kUnderflowFloor);

/// Row-stochastic kernel matrix restricted to the sample points. On-sample
/// rows cannot underflow since Phi(0) = 1 puts at least 1 in the denominator.
MarkovKernel kernel_matrix(const PointSet& ps, const RadialProfile& profile, double sigma);

struct DeviationParts {
    double max_row_l1;    // ||I - K||_inf, the max row l1 norm of I - K
    double diag_shortcut; // 2 * max_i (1 - K_ii), equal for entrywise-[0,1] kernels
};

/// Both routes to ||I - K||_inf, with no agreement check.
DeviationParts identity_deviation_parts(const MarkovKernel& k);

/// ||I - K||_inf. Evaluates the direct row norm and the diagonal shortcut
/// and throws InvariantViolation if they disagree beyond 1e-12 (which
/// happens exactly when the kernel carries signed entries).
double identity_deviation_inf(const MarkovKernel& k);

struct ConvergenceDiagnostic {
    bool satisfied;       // deviation < epsilon (strict)
    double deviation;     // ||I - P||_inf for the kernel at this bandwidth
    double epsilon;
    double min_separation;
    double sigma_over_delta;
};

/// Empirical contraction check: is the sample-restricted kernel at this
/// bandwidth close enough to the identity that every LP level using it
/// shrinks the residual by at least a factor epsilon?
ConvergenceDiagnostic convergence_bandwidth_check(const PointSet& ps, const RadialProfile& profile,
                                                  double sigma, double epsilon);

} // namespace lppyr

#endif
