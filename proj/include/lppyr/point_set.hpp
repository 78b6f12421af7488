#ifndef LPPYR_POINT_SET_HPP
#define LPPYR_POINT_SET_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace lppyr {

/// Immutable set of n sample locations in R^p, stored flat row-major.
/// Construction rejects empty sets and NaN coordinates; for n >= 2 the
/// minimum pairwise Euclidean distance is computed once and cached.
class PointSet {
public:
    /// coords holds n*dim values, point i at [i*dim, (i+1)*dim).
    PointSet(std::vector<double> coords, std::size_t dim);

    static PointSet from_rows(const std::vector<std::vector<double>>& points);

    std::size_t size() const { return n_; }
    std::size_t dim() const { return dim_; }

    std::span<const double> point(std::size_t i) const {
        return {coords_.data() + i * dim_, dim_};
    }

    /// Minimum Euclidean distance between distinct points.
    /// Throws DegenerateInput when the set has fewer than two points or
    /// contains duplicates (zero separation).
    double min_separation() const;

    const std::vector<double>& coords() const { return coords_; }

private:
    std::vector<double> coords_;
    std::size_t n_ = 0;
    std::size_t dim_ = 0;
    double min_sep_ = 0.0; // valid when n_ >= 2
};

double euclidean_distance(std::span<const double> a, std::span<const double> b);
double squared_distance(std::span<const double> a, std::span<const double> b);

} // namespace lppyr

#endif
