#include "lppyr/nl.hpp"

#include "lppyr/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lppyr {
namespace {

void check_patch_config(const PatchConfig& cfg) {
    if (cfg.patch_size < 1 || cfg.patch_size % 2 == 0)
        throw DomainError("patch config: patch size must be odd and positive");
    if (!(cfg.median_divisor > 0.0))
        throw DomainError("patch config: median divisor must be positive");
}

// Mirror an out-of-range index back into [0, n): -1 -> 1, n -> n-2.
std::size_t mirror_index(long idx, long n) {
    while (idx < 0 || idx >= n) {
        if (idx < 0)
            idx = -idx;
        if (idx >= n)
            idx = 2 * (n - 1) - idx;
    }
    return static_cast<std::size_t>(idx);
}

} // namespace

PointSet extract_patches(std::span<const double> signal, const PatchConfig& cfg) {
    check_patch_config(cfg);
    const std::size_t m = cfg.patch_size;
    const std::size_t len = signal.size();
    if (2 * m > len)
        throw DegenerateInput("extract_patches: patch size " + std::to_string(m) +
                              " exceeds half the signal length " + std::to_string(len));

    const long half = static_cast<long>(m) / 2;
    std::vector<double> flat;
    flat.reserve(len * m);
    for (long i = 0; i < static_cast<long>(len); ++i)
        for (long o = -half; o <= half; ++o)
            flat.push_back(signal[mirror_index(i + o, static_cast<long>(len))]);

    return PointSet(std::move(flat), m);
}

NlKernel build_nl_kernel(const PointSet& patches, const PatchConfig& cfg) {
    check_patch_config(cfg);
    const std::size_t n = patches.size();
    if (n < 2)
        throw DegenerateInput("nl kernel: need at least two patches");

    std::vector<double> sq;
    sq.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            sq.push_back(squared_distance(patches.point(i), patches.point(j)));

    // Lower-middle element for even counts.
    const std::size_t mid = (sq.size() - 1) / 2;
    std::nth_element(sq.begin(), sq.begin() + static_cast<long>(mid), sq.end());
    const double median_sq = sq[mid];
    const double sigma_sq = median_sq / cfg.median_divisor;
    const bool degenerate = median_sq == 0.0;

    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        g(i, i) = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d2 = squared_distance(patches.point(i), patches.point(j));
            // sigma -> 0 limit: affinity is the coincidence indicator.
            const double a = sigma_sq > 0.0 ? std::exp(-d2 / sigma_sq) : (d2 == 0.0 ? 1.0 : 0.0);
            g(i, j) = a;
            g(j, i) = a;
        }
    }

    Matrix q(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        double denom = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            denom += g(i, j);
        for (std::size_t j = 0; j < n; ++j)
            q(i, j) = g(i, j) / denom;
    }
    return {MarkovKernel(std::move(q)), sigma_sq, degenerate};
}

MarkovKernel truncated_lp_kernel(const MarkovKernel& q, std::size_t k) {
    if (k < 1)
        throw DomainError("truncated kernel: step count must be at least 1");
    if (k == 1)
        return q;

    const std::size_t n = q.size();
    const Matrix r = Matrix::identity(n) - q.matrix();
    Matrix power = r;
    for (std::size_t step = 1; step < k; ++step)
        power = power.multiply(r);
    return MarkovKernel::signed_stochastic(Matrix::identity(n) - power);
}

double spectral_map(double lambda, std::size_t k) {
    return 1.0 - std::pow(1.0 - lambda, static_cast<double>(k));
}

double relative_l2_error(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw ShapeError("relative error: length mismatch");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        num += d * d;
        den += b[i] * b[i];
    }
    if (den == 0.0)
        throw DegenerateInput("relative error: reference is identically zero");
    return std::sqrt(num / den);
}

DenoiseTrace denoise_iterate(const MarkovKernel& q_k, std::span<const double> y, std::size_t count,
                             const std::vector<double>* reference, std::size_t kernel_step) {
    if (y.size() != q_k.size())
        throw ShapeError("denoise: signal length does not match kernel size");
    if (reference && reference->size() != y.size())
        throw ShapeError("denoise: reference length does not match signal");

    DenoiseTrace trace;
    trace.kernel_step = kernel_step;
    trace.iterates.reserve(count + 1);
    trace.iterates.emplace_back(y.begin(), y.end());
    for (std::size_t l = 1; l <= count; ++l)
        trace.iterates.push_back(q_k.apply(trace.iterates.back()));

    if (reference) {
        std::vector<double> errors;
        errors.reserve(trace.iterates.size());
        for (const auto& it : trace.iterates)
            errors.push_back(relative_l2_error(it, *reference));
        trace.errors = std::move(errors);
    }
    return trace;
}

std::vector<double> boosted_kernel_sequence_errors(const MarkovKernel& q, std::span<const double> y,
                                                   std::span<const double> reference,
                                                   std::size_t count) {
    if (y.size() != q.size())
        throw ShapeError("boosted errors: signal length does not match kernel size");
    if (reference.size() != y.size())
        throw ShapeError("boosted errors: reference length does not match signal");

    std::vector<double> errors;
    errors.reserve(count);
    std::vector<double> d(y.begin(), y.end());
    std::vector<double> estimate(y.size());
    for (std::size_t l = 1; l <= count; ++l) {
        const std::vector<double> smoothed = q.apply(d);
        for (std::size_t i = 0; i < d.size(); ++i)
            d[i] -= smoothed[i];
        for (std::size_t i = 0; i < d.size(); ++i)
            estimate[i] = y[i] - d[i];
        errors.push_back(relative_l2_error(estimate, reference));
    }
    return errors;
}

} // namespace lppyr
