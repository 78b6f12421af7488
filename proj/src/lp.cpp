#include "lppyr/lp.hpp"

#include "lppyr/errors.hpp"

#include <cmath>
#include <string>

namespace lppyr {
namespace {

double inf_norm(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) {
        const double a = std::abs(x);
        if (a > m)
            m = a;
    }
    return m;
}

constexpr std::size_t kStallLimit = 10;

} // namespace

const char* to_string(StopReason r) {
    switch (r) {
    case StopReason::ReachedTolerance: return "ReachedTolerance";
    case StopReason::ReachedMaxLevels: return "ReachedMaxLevels";
    case StopReason::Stalled: return "Stalled";
    }
    return "?";
}

std::pair<LPModel, FitReport> lp_fit(const PointSet& ps, std::span<const double> y,
                                     const RadialProfile& profile,
                                     const BandwidthSchedule& schedule, double tol,
                                     std::size_t max_levels) {
    const std::size_t n = ps.size();
    if (y.size() != n)
        throw ShapeError("lp_fit: " + std::to_string(y.size()) + " values for " +
                         std::to_string(n) + " points");
    if (max_levels < 1)
        throw DomainError("lp_fit: max_levels must be at least 1");
    if (!(tol >= 0.0))
        throw DomainError("lp_fit: tolerance must be nonnegative");
    for (double v : y)
        if (std::isnan(v))
            throw DegenerateInput("lp_fit: NaN in observations");

    std::vector<double> d(y.begin(), y.end());
    std::vector<LPLevel> levels;
    FitReport report;
    report.residual_norms.push_back(inf_norm(d));

    double prev_norm = report.residual_norms.front();
    std::size_t stall = 0;
    for (std::size_t level = 0;; ++level) {
        const double sigma = schedule.at(level);
        const MarkovKernel p = kernel_matrix(ps, profile, sigma);
        levels.push_back({sigma, d});

        const std::vector<double> smoothed = p.apply(d);
        for (std::size_t j = 0; j < n; ++j)
            d[j] -= smoothed[j];

        const double norm = inf_norm(d);
        report.residual_norms.push_back(norm);
        stall = norm < prev_norm ? 0 : stall + 1;
        prev_norm = norm;

        if (norm <= tol) {
            report.stop_reason = StopReason::ReachedTolerance;
            break;
        }
        if (level + 1 == max_levels) {
            report.stop_reason = StopReason::ReachedMaxLevels;
            break;
        }
        if (stall >= kStallLimit) {
            report.stop_reason = StopReason::Stalled;
            break;
        }
    }
    report.levels_used = levels.size();

    std::vector<double> y_copy(y.begin(), y.end());
    return {LPModel(ps, profile, schedule, std::move(y_copy), std::move(levels), std::move(d)),
            report};
}

double lp_extend(const LPModel& model, std::span<const double> x) {
    if (x.size() != model.points().dim())
        throw ShapeError("lp_extend: query dimension does not match the model");
    double total = 0.0;
    for (const LPLevel& level : model.levels()) {
        const KernelRow row = kernel_row(model.points(), model.profile(), level.sigma, x);
        if (row.underflowed)
            continue;
        double s = 0.0;
        for (std::size_t j = 0; j < row.weights.size(); ++j)
            s += row.weights[j] * level.residual[j];
        total += s;
    }
    return total;
}

double nadaraya_watson(const PointSet& ps, std::span<const double> y,
                       const RadialProfile& profile, double sigma, std::span<const double> x) {
    if (y.size() != ps.size())
        throw ShapeError("nadaraya_watson: value count does not match point count");
    const KernelRow row = kernel_row(ps, profile, sigma, x);
    if (row.underflowed)
        return 0.0;
    double s = 0.0;
    for (std::size_t j = 0; j < row.weights.size(); ++j)
        s += row.weights[j] * y[j];
    return s;
}

Matrix residual_operator(const std::vector<MarkovKernel>& kernels, std::size_t level) {
    if (level < 1)
        throw DomainError("residual_operator: undefined for level 0");
    if (kernels.size() < level)
        throw DomainError("residual_operator: need " + std::to_string(level) +
                          " kernels, got " + std::to_string(kernels.size()));
    const std::size_t n = kernels.front().size();
    for (const MarkovKernel& k : kernels)
        if (k.size() != n)
            throw ShapeError("residual_operator: kernels of mixed size");

    Matrix product = Matrix::identity(n) - kernels[0].matrix();
    for (std::size_t k = 1; k < level; ++k)
        product = (Matrix::identity(n) - kernels[k].matrix()).multiply(product);
    return product;
}

double error_bound_product(const std::vector<MarkovKernel>& kernels, std::size_t level) {
    if (level < 1)
        throw DomainError("error_bound_product: undefined for level 0");
    if (kernels.size() < level)
        throw DomainError("error_bound_product: need " + std::to_string(level) +
                          " kernels, got " + std::to_string(kernels.size()));
    double product = 1.0;
    for (std::size_t k = 0; k < level; ++k)
        product *= identity_deviation_inf(kernels[k]);
    return product;
}

StabilityCertificate stability_certificate(const LPModel& model) {
    const std::size_t used = model.levels_used();
    const std::size_t n = model.points().size();

    std::vector<double> deviation(used);
    for (std::size_t l = 0; l < used; ++l)
        deviation[l] = identity_deviation_inf(
            kernel_matrix(model.points(), model.profile(), model.levels()[l].sigma));

    // First index whose suffix stays within deviation 1/2.
    std::size_t m = used;
    for (std::size_t l = used; l-- > 0;) {
        if (deviation[l] <= 0.5)
            m = l;
        else
            break;
    }

    const double y_norm = inf_norm(model.observations());
    const double bound = 4.0 * std::ldexp(1.0, static_cast<int>(m)) * y_norm;

    // f_l on the samples is y minus the next level's residual.
    double observed = 0.0;
    std::vector<double> f(n);
    for (std::size_t l = 0; l < used; ++l) {
        const std::vector<double>& next =
            (l + 1 < used) ? model.levels()[l + 1].residual : model.final_residual();
        for (std::size_t j = 0; j < n; ++j)
            f[j] = model.observations()[j] - next[j];
        const double norm = inf_norm(f);
        if (norm > observed)
            observed = norm;
    }

    return {m, bound, observed, observed <= bound};
}

} // namespace lppyr
