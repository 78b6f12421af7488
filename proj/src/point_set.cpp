#include "lppyr/point_set.hpp"

#include "lppyr/errors.hpp"

#include <cmath>
#include <limits>

namespace lppyr {

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        acc += d * d;
    }
    return acc;
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw ShapeError("distance between points of different dimension");
    return std::sqrt(squared_distance(a, b));
}

PointSet::PointSet(std::vector<double> coords, std::size_t dim)
    : coords_(std::move(coords)), dim_(dim) {
    if (dim_ == 0)
        throw DegenerateInput("point set: dimension must be positive");
    if (coords_.empty() || coords_.size() % dim_ != 0)
        throw ShapeError("point set: coordinate count " + std::to_string(coords_.size()) +
                         " is not a positive multiple of dimension " + std::to_string(dim_));
    n_ = coords_.size() / dim_;
    for (double c : coords_)
        if (!std::isfinite(c))
            throw DegenerateInput("point set: non-finite coordinate");

    if (n_ >= 2) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j) {
                const double d2 = squared_distance(point(i), point(j));
                if (d2 < best)
                    best = d2;
            }
        // Coincident points are tolerated at construction (patch sets built
        // from constant signals contain them); operations that need a
        // positive separation reject them through min_separation().
        min_sep_ = std::sqrt(best);
    }
}

PointSet PointSet::from_rows(const std::vector<std::vector<double>>& points) {
    if (points.empty())
        throw DegenerateInput("point set: no points");
    const std::size_t dim = points.front().size();
    std::vector<double> flat;
    flat.reserve(points.size() * dim);
    for (const auto& p : points) {
        if (p.size() != dim)
            throw ShapeError("point set: points of mixed dimension");
        flat.insert(flat.end(), p.begin(), p.end());
    }
    return PointSet(std::move(flat), dim);
}

double PointSet::min_separation() const {
    if (n_ < 2)
        throw DegenerateInput("min_separation needs at least two points");
    if (min_sep_ <= 0.0)
        throw DegenerateInput("min_separation: duplicate points (zero separation)");
    return min_sep_;
}

} // namespace lppyr
