#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace cetaev {

/// Unit-sphere directions with a symmetric neighbour graph.
///
/// n = 1: the two points -1, +1 without edges.
/// n = 2: `count` equally spaced angles, each linked to the 4 neighbours on
///        either side (exact axis coordinates when count is divisible by 4).
/// n >= 3: the 2n axis directions followed by Halton/Box-Muller points,
///         linked to their 8 nearest neighbours (symmetrized).
class DirectionSet {
public:
    static constexpr std::size_t kNeighbours = 8;

    DirectionSet(std::size_t dimension, std::size_t count);

    /// 2, 4096 or 20000 for n = 1, 2, >= 3.
    static std::size_t default_count(std::size_t dimension);

    [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }
    [[nodiscard]] std::size_t size() const noexcept { return neighbours_.size(); }
    [[nodiscard]] std::span<const double> direction(std::size_t i) const
    {
        return {coords_.data() + i * dimension_, dimension_};
    }
    [[nodiscard]] std::span<const std::uint32_t> neighbours(std::size_t i) const { return neighbours_[i]; }

private:
    std::size_t dimension_;
    std::vector<double> coords_;
    std::vector<std::vector<std::uint32_t>> neighbours_;
};

/// Directions scaled to a sphere of radius r.
class SphereSample {
public:
    SphereSample(std::shared_ptr<const DirectionSet> directions, double radius);

    [[nodiscard]] double radius() const noexcept { return radius_; }
    [[nodiscard]] std::size_t size() const noexcept { return directions_->size(); }
    [[nodiscard]] std::size_t dimension() const noexcept { return directions_->dimension(); }
    [[nodiscard]] std::span<const double> point(std::size_t i) const
    {
        return {coords_.data() + i * dimension(), dimension()};
    }
    [[nodiscard]] std::span<const std::uint32_t> neighbours(std::size_t i) const
    {
        return directions_->neighbours(i);
    }
    [[nodiscard]] const std::shared_ptr<const DirectionSet>& directions() const noexcept { return directions_; }

private:
    std::shared_ptr<const DirectionSet> directions_;
    double radius_;
    std::vector<double> coords_;
};

}  // namespace cetaev
