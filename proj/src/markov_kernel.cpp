#include "lppyr/markov_kernel.hpp"

#include "lppyr/errors.hpp"

#include <cmath>
#include <string>

namespace lppyr {

MarkovKernel::MarkovKernel(Matrix m, double row_sum_tol)
    : MarkovKernel(std::move(m), row_sum_tol, true) {}

MarkovKernel MarkovKernel::signed_stochastic(Matrix m, double row_sum_tol) {
    return MarkovKernel(std::move(m), row_sum_tol, false);
}

MarkovKernel::MarkovKernel(Matrix m, double row_sum_tol, bool require_unit_range)
    : matrix_(std::move(m)) {
    const std::size_t n = matrix_.rows();
    if (n == 0 || matrix_.cols() != n)
        throw ShapeError("markov kernel: matrix must be square and nonempty");
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double v = matrix_(i, j);
            if (!std::isfinite(v))
                throw InvariantViolation("markov kernel: non-finite entry at row " +
                                         std::to_string(i));
            if (require_unit_range && (v < 0.0 || v > 1.0))
                throw InvariantViolation("markov kernel: entry outside [0,1] at row " +
                                         std::to_string(i));
            sum += v;
        }
        if (std::abs(sum - 1.0) > row_sum_tol)
            throw InvariantViolation("markov kernel: row " + std::to_string(i) +
                                     " sums to " + std::to_string(sum));
    }
}

} // namespace lppyr
