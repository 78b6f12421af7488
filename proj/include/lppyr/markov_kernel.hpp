#ifndef LPPYR_MARKOV_KERNEL_HPP
#define LPPYR_MARKOV_KERNEL_HPP

#include "lppyr/matrix.hpp"

#include <span>
#include <vector>

namespace lppyr {

/// Square matrix acting as a weighted-averaging operator: every row sums
/// to 1. Kernels normalized from nonnegative affinities additionally have
/// all entries in [0,1] and use the strict constructor. K-step truncated
/// kernels I - (I-Q)^K keep unit row sums but may carry signed entries
/// (twicing weights), so they are built with signed_stochastic, which
/// skips the entry-range check.
class MarkovKernel {
public:
    explicit MarkovKernel(Matrix m, double row_sum_tol = 1e-12);

    static MarkovKernel signed_stochastic(Matrix m, double row_sum_tol = 1e-10);

    std::size_t size() const { return matrix_.rows(); }
    double operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }
    const Matrix& matrix() const { return matrix_; }

    std::vector<double> apply(std::span<const double> v) const { return matrix_.apply(v); }

private:
    MarkovKernel(Matrix m, double row_sum_tol, bool require_unit_range);

    Matrix matrix_;
};

} // namespace lppyr

#endif
