#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cetaev/polynomial.hpp"

namespace cetaev {

/// Scalar potential energy with gradient, either backed by an exact
/// polynomial or by user-supplied double-precision callables.
///
/// Construction enforces that the origin is a critical point with zero value
/// and that the potential is not identically zero. Copies share the
/// immutable implementation.
class PotentialField {
public:
    using ValueFn = std::function<double(std::span<const double>)>;
    using GradientFn = std::function<void(std::span<const double>, std::span<double>)>;

    static PotentialField from_polynomial(const Polynomial& p, std::optional<unsigned> jet_order = {});
    static PotentialField from_functions(std::size_t dimension, ValueFn value, GradientFn gradient);

    /// Same field with a (different) jet order; requires polynomial backing.
    [[nodiscard]] PotentialField with_jet_order(unsigned s) const;

    [[nodiscard]] std::size_t dimension() const noexcept;
    [[nodiscard]] double value(std::span<const double> q) const;
    void gradient(std::span<const double> q, std::span<double> out) const;
    [[nodiscard]] std::vector<double> gradient(std::span<const double> q) const;
    /// R(q) = <grad value(q), q>.
    [[nodiscard]] double radial(std::span<const double> q) const;

    [[nodiscard]] bool is_polynomial() const noexcept;
    /// Exact backing polynomial; throws if catalog-backed.
    [[nodiscard]] const Polynomial& polynomial() const;
    [[nodiscard]] std::optional<unsigned> jet_order() const noexcept;
    /// Homogeneous parts up to jet_order(); throws when no jet order is set.
    [[nodiscard]] const JetDecomposition& jets() const;

    /// Exact value / radial derivative at a binary-double point, when polynomial-backed.
    [[nodiscard]] std::optional<Rational> exact_value(std::span<const double> q) const;
    [[nodiscard]] std::optional<Rational> exact_radial(std::span<const double> q) const;

private:
    struct Impl;
    explicit PotentialField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    std::shared_ptr<const Impl> impl_;
};

/// Converts a double vector to exact rationals.
std::vector<Rational> to_rationals(std::span<const double> q);

}  // namespace cetaev
