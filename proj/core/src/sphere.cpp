#include "cetaev/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "cetaev/error.hpp"
#include "cetaev/parallel.hpp"

namespace cetaev {
namespace {

constexpr unsigned kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                                73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151};

double radical_inverse(std::size_t index, unsigned base)
{
    double result = 0.0;
    double f = 1.0 / base;
    while (index > 0) {
        result += f * static_cast<double>(index % base);
        index /= base;
        f /= base;
    }
    return result;
}

void symmetrize(std::vector<std::vector<std::uint32_t>>& graph)
{
    for (std::size_t i = 0; i < graph.size(); ++i) {
        for (std::uint32_t j : std::vector<std::uint32_t>(graph[i])) {
            graph[j].push_back(static_cast<std::uint32_t>(i));
        }
    }
    for (auto& row : graph) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
}

}  // namespace

std::size_t DirectionSet::default_count(std::size_t dimension)
{
    return dimension == 1 ? 2 : (dimension == 2 ? 4096 : 20000);
}

DirectionSet::DirectionSet(std::size_t dimension, std::size_t count) : dimension_(dimension)
{
    if (dimension == 0) {
        throw DimensionError("sphere sample needs a positive dimension");
    }
    if (dimension == 1) {
        coords_ = {1.0, -1.0};
        neighbours_.resize(2);
        return;
    }
    if (dimension == 2) {
        if (count < 16) {
            throw Error("a planar sphere sample needs at least 16 points");
        }
        coords_.resize(2 * count);
        neighbours_.resize(count);
        const auto quarter = count % 4 == 0 ? count / 4 : 0;
        const std::pair<double, double> axes[] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
        for (std::size_t i = 0; i < count; ++i) {
            if (quarter != 0 && i % quarter == 0) {
                coords_[2 * i] = axes[i / quarter].first;
                coords_[2 * i + 1] = axes[i / quarter].second;
            } else {
                const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(count);
                coords_[2 * i] = std::cos(theta);
                coords_[2 * i + 1] = std::sin(theta);
            }
            for (std::size_t d = 1; d <= kNeighbours / 2; ++d) {
                neighbours_[i].push_back(static_cast<std::uint32_t>((i + d) % count));
                neighbours_[i].push_back(static_cast<std::uint32_t>((i + count - d) % count));
            }
        }
        symmetrize(neighbours_);
        return;
    }

    if (dimension > std::size(kPrimes) / 2) {
        throw DimensionError("sphere sampling supports at most 18 dimensions");
    }
    if (count < 2 * dimension + kNeighbours) {
        throw Error("sphere sample too small for its dimension");
    }
    coords_.assign(count * dimension, 0.0);
    for (std::size_t a = 0; a < dimension; ++a) {
        coords_[(2 * a) * dimension + a] = 1.0;
        coords_[(2 * a + 1) * dimension + a] = -1.0;
    }
    const std::size_t pairs = (dimension + 1) / 2;
    for (std::size_t i = 2 * dimension; i < count; ++i) {
        const std::size_t h = i - 2 * dimension + 1;
        double* row = coords_.data() + i * dimension;
        for (std::size_t k = 0; k < pairs; ++k) {
            const double u1 = radical_inverse(h, kPrimes[2 * k]);
            const double u2 = radical_inverse(h, kPrimes[2 * k + 1]);
            const double rho = std::sqrt(-2.0 * std::log(u1));
            row[2 * k] = rho * std::cos(2.0 * std::numbers::pi * u2);
            if (2 * k + 1 < dimension) {
                row[2 * k + 1] = rho * std::sin(2.0 * std::numbers::pi * u2);
            }
        }
        double norm = 0.0;
        for (std::size_t a = 0; a < dimension; ++a) {
            norm += row[a] * row[a];
        }
        norm = std::sqrt(norm);
        for (std::size_t a = 0; a < dimension; ++a) {
            row[a] /= norm;
        }
    }

    neighbours_.resize(count);
    parallel_for(count, [&](std::size_t i) {
        // largest dot product = nearest by angle
        std::vector<std::pair<double, std::uint32_t>> best;
        best.reserve(kNeighbours + 1);
        const double* a = coords_.data() + i * dimension;
        for (std::size_t j = 0; j < count; ++j) {
            if (j == i) {
                continue;
            }
            const double* b = coords_.data() + j * dimension;
            double dot = 0.0;
            for (std::size_t d = 0; d < dimension; ++d) {
                dot += a[d] * b[d];
            }
            if (best.size() < kNeighbours || dot > best.back().first) {
                const std::pair<double, std::uint32_t> item{dot, static_cast<std::uint32_t>(j)};
                auto pos = std::upper_bound(best.begin(), best.end(), item,
                                            [](const auto& x, const auto& y) { return x.first > y.first; });
                best.insert(pos, item);
                if (best.size() > kNeighbours) {
                    best.pop_back();
                }
            }
        }
        for (const auto& [dot, j] : best) {
            neighbours_[i].push_back(j);
        }
    });
    symmetrize(neighbours_);
}

SphereSample::SphereSample(std::shared_ptr<const DirectionSet> directions, double radius)
    : directions_(std::move(directions)), radius_(radius)
{
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw Error("sphere radius must be positive and finite");
    }
    const std::size_t n = directions_->dimension();
    coords_.resize(directions_->size() * n);
    for (std::size_t i = 0; i < directions_->size(); ++i) {
        const auto d = directions_->direction(i);
        for (std::size_t a = 0; a < n; ++a) {
            coords_[i * n + a] = radius * d[a];
        }
    }
}

}  // namespace cetaev
