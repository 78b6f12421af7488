#include "lppyr/kernels.hpp"

#include "lppyr/errors.hpp"

#include <cmath>
#include <string>

namespace lppyr {

KernelRow kernel_row(const PointSet& ps, const RadialProfile& profile, double sigma,
                     std::span<const double> x, double underflow_floor) {
    if (!(sigma > 0.0))
        throw DomainError("kernel row: bandwidth must be positive");
    if (x.size() != ps.dim())
        throw ShapeError("kernel row: query point has dimension " + std::to_string(x.size()) +
                         ", samples have dimension " + std::to_string(ps.dim()));

    const std::size_t n = ps.size();
    KernelRow row;
    row.weights.assign(n, 0.0);
    double denom = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double g = profile(euclidean_distance(x, ps.point(j)) / sigma);
        row.weights[j] = g;
        denom += g;
    }
    if (denom < underflow_floor) {
        row.weights.assign(n, 0.0);
        row.underflowed = true;
        return row;
    }
    for (double& w : row.weights)
        w /= denom;
    return row;
}

MarkovKernel kernel_matrix(const PointSet& ps, const RadialProfile& profile, double sigma) {
    const std::size_t n = ps.size();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const KernelRow row = kernel_row(ps, profile, sigma, ps.point(i));
        if (row.underflowed)
            throw InvariantViolation("kernel matrix: on-sample row underflowed");
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = row.weights[j];
    }
    return MarkovKernel(std::move(m));
}

DeviationParts identity_deviation_parts(const MarkovKernel& k) {
    const std::size_t n = k.size();
    double max_l1 = 0.0;
    double max_offdiag = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double l1 = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double d = (i == j ? 1.0 : 0.0) - k(i, j);
            l1 += std::abs(d);
        }
        if (l1 > max_l1)
            max_l1 = l1;
        const double off = 1.0 - k(i, i);
        if (off > max_offdiag)
            max_offdiag = off;
    }
    return {max_l1, 2.0 * max_offdiag};
}

double identity_deviation_inf(const MarkovKernel& k) {
    const DeviationParts parts = identity_deviation_parts(k);
    if (std::abs(parts.max_row_l1 - parts.diag_shortcut) > 1e-12)
        throw InvariantViolation("identity deviation: row norm and diagonal shortcut disagree "
                                 "(kernel is not entrywise stochastic)");
    return parts.max_row_l1;
}

ConvergenceDiagnostic convergence_bandwidth_check(const PointSet& ps, const RadialProfile& profile,
                                                  double sigma, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw DomainError("convergence check: epsilon must lie in (0,1)");
    const double delta = ps.min_separation();
    const double dev = identity_deviation_inf(kernel_matrix(ps, profile, sigma));
    return {dev < epsilon, dev, epsilon, delta, sigma / delta};
}

} // namespace lppyr
