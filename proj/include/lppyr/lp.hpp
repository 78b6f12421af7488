#ifndef LPPYR_LP_HPP
#define LPPYR_LP_HPP

#include "lppyr/kernels.hpp"
#include "lppyr/markov_kernel.hpp"
#include "lppyr/matrix.hpp"
#include "lppyr/point_set.hpp"
#include "lppyr/profile.hpp"
#include "lppyr/schedule.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace lppyr {

/// One fitted pyramid level: the bandwidth used and the residual vector the
/// level was asked to smooth. Level 0 stores the data itself, so that
/// s_l = P_l * levels[l].residual holds uniformly for every level; the
/// conventional residual d_l (l >= 1) is levels[l].residual.
struct LPLevel {
    double sigma;
    std::vector<double> residual;
};

enum class StopReason { ReachedTolerance, ReachedMaxLevels, Stalled };

const char* to_string(StopReason r);

/// Fit summary. residual_norms[l] is the max-abs norm of levels[l].residual
/// for each fitted level, followed by one final entry for the post-fit
/// residual, so the list has levels_used + 1 entries; entry 1, the norm of
/// y - s_0, is the first genuine residual.
struct FitReport {
    std::vector<double> residual_norms;
    StopReason stop_reason = StopReason::ReachedMaxLevels;
    std::size_t levels_used = 0;
};

/// Fitted Laplacian pyramid. Stores per-level residual vectors rather than
/// kernel matrices; out-of-sample kernel rows are recomputed on demand,
/// keeping memory at O(K n) and one evaluation at O(K n).
class LPModel {
public:
    LPModel(PointSet ps, RadialProfile profile, BandwidthSchedule schedule,
            std::vector<double> y, std::vector<LPLevel> levels,
            std::vector<double> final_residual)
        : ps_(std::move(ps)), profile_(profile), schedule_(schedule), y_(std::move(y)),
          levels_(std::move(levels)), final_residual_(std::move(final_residual)) {}

    const PointSet& points() const { return ps_; }
    const RadialProfile& profile() const { return profile_; }
    const BandwidthSchedule& schedule() const { return schedule_; }
    const std::vector<double>& observations() const { return y_; }
    const std::vector<LPLevel>& levels() const { return levels_; }
    const std::vector<double>& final_residual() const { return final_residual_; }
    std::size_t levels_used() const { return levels_.size(); }

private:
    PointSet ps_;
    RadialProfile profile_;
    BandwidthSchedule schedule_;
    std::vector<double> y_;
    std::vector<LPLevel> levels_;
    std::vector<double> final_residual_;
};

/// Fit the pyramid: at each level smooth the current residual with the
/// level's kernel and subtract. Stops when the residual max-norm drops to
/// tol, when max_levels levels have been fitted, or when the norm has
/// failed to decrease for 10 consecutive levels.
std::pair<LPModel, FitReport> lp_fit(const PointSet& ps, std::span<const double> y,
                                     const RadialProfile& profile,
                                     const BandwidthSchedule& schedule, double tol,
                                     std::size_t max_levels);

/// Evaluate the extension at x: the sum over levels of the level kernel row
/// applied to the stored residual. Underflowed rows contribute zero.
double lp_extend(const LPModel& model, std::span<const double> x);

/// Kernel-weighted average of the observations: the level-0 pyramid
/// evaluation with bandwidth sigma.
double nadaraya_watson(const PointSet& ps, std::span<const double> y,
                       const RadialProfile& profile, double sigma, std::span<const double> x);

/// Explicit residual operator D_l = (I - P_{l-1}) ... (I - P_0), the linear
/// map from observations to the level-l residual. Defined for l >= 1.
Matrix residual_operator(const std::vector<MarkovKernel>& kernels, std::size_t level);

/// prod_{k=0}^{level-1} ||I - P_k||_inf, the multiplicative bound on the
/// relative on-sample error after `level` fitted levels.
double error_bound_product(const std::vector<MarkovKernel>& kernels, std::size_t level);

struct StabilityCertificate {
    std::size_t m;   // first level from which every kernel deviates from I by <= 1/2
    double bound;    // 4 * 2^m * ||y||_inf
    double observed; // max over fitted levels of ||f_l||_inf on the samples
    bool satisfied;  // observed <= bound
};

/// Empirical check of the stability bound: once the per-level kernels stay
/// within deviation 1/2 of the identity, the on-sample approximations are
/// bounded by 4 * 2^m * ||y||_inf. When no fitted suffix qualifies, m is
/// set to levels_used and the comparison is still reported.
StabilityCertificate stability_certificate(const LPModel& model);

} // namespace lppyr

#endif
