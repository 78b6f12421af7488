#ifndef LPPYR_NL_HPP
#define LPPYR_NL_HPP

#include "lppyr/markov_kernel.hpp"
#include "lppyr/point_set.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace lppyr {

/// Patch extraction and affinity-bandwidth settings for 1D non-local means.
/// patch_size must be odd so windows are centered; boundaries are mirrored
/// (signal (a,b,c,d) with patch_size 3 yields (b,a,b) first). The Gaussian
/// affinity bandwidth is the median pairwise squared patch distance divided
/// by median_divisor.
struct PatchConfig {
    std::size_t patch_size = 3;
    double median_divisor = 3.0;
};

/// One patch per signal entry: the centered window of width patch_size with
/// mirror padding, so the patch index set coincides with the signal index
/// set. Requires patch_size <= M/2.
PointSet extract_patches(std::span<const double> signal, const PatchConfig& cfg);

struct NlKernel {
    MarkovKernel q;
    double sigma_sq;  // bandwidth actually used
    bool degenerate;  // median pairwise distance was zero; sigma -> 0 limit used
};

/// Row-stochastic patch-affinity kernel Q_ij = G_ij / sum_j' G_ij' with
/// G_ij = exp(-|x_i - x_j|^2 / sigma^2) and G_ii = 1. When every pair of
/// patches coincides the kernel degenerates to the uniform matrix and is
/// flagged.
NlKernel build_nl_kernel(const PointSet& patches, const PatchConfig& cfg);

/// K-step truncated pyramid kernel I - (I - Q)^K, computed by repeated
/// multiplication of I - Q (no binomial expansion). K = 1 returns Q itself.
MarkovKernel truncated_lp_kernel(const MarkovKernel& q, std::size_t k);

/// Eigenvalue map of the truncated kernel: lambda -> 1 - (1 - lambda)^K.
double spectral_map(double lambda, std::size_t k);

/// Iterates Q_K^l y with optional relative l2 errors against a clean
/// reference; iterates[0] is y itself and errors, when present, align with
/// iterates index for index.
struct DenoiseTrace {
    std::vector<std::vector<double>> iterates;
    std::optional<std::vector<double>> errors;
    std::size_t kernel_step = 1;
};

DenoiseTrace denoise_iterate(const MarkovKernel& q_k, std::span<const double> y, std::size_t count,
                             const std::vector<double>* reference = nullptr,
                             std::size_t kernel_step = 1);

/// err(Q_l y) for l = 1..count where Q_l = I - (I-Q)^l: the error of the
/// boosting iterates, as opposed to powers of a fixed Q_K. Computed through
/// the residual recursion d <- (I - Q) d, so no kernel matrices are formed.
std::vector<double> boosted_kernel_sequence_errors(const MarkovKernel& q, std::span<const double> y,
                                                   std::span<const double> reference,
                                                   std::size_t count);

/// ||a - b||_2 / ||b||_2.
double relative_l2_error(std::span<const double> a, std::span<const double> b);

} // namespace lppyr

#endif
