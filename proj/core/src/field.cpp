#include "cetaev/field.hpp"

#include <cmath>

#include "cetaev/error.hpp"

namespace cetaev {

struct PotentialField::Impl {
    std::size_t dimension = 0;
    std::optional<Polynomial> poly;
    std::optional<Polynomial> radial_poly;
    FloatPolynomial value_fp;
    std::vector<FloatPolynomial> gradient_fp;
    FloatPolynomial radial_fp;
    std::optional<unsigned> jet_order;
    std::optional<JetDecomposition> jets;
    ValueFn value_fn;
    GradientFn gradient_fn;
};

std::vector<Rational> to_rationals(std::span<const double> q)
{
    std::vector<Rational> out;
    out.reserve(q.size());
    for (double v : q) {
        out.push_back(Rational::from_double(v));
    }
    return out;
}

PotentialField PotentialField::from_polynomial(const Polynomial& p, std::optional<unsigned> jet_order)
{
    if (p.is_zero()) {
        throw ModelError("potential is identically zero");
    }
    const std::size_t n = p.dimension();
    if (!p.coefficient(Monomial::one(n)).is_zero()) {
        throw ModelError("potential must vanish at the origin (constant term " +
                         p.coefficient(Monomial::one(n)).str() + ")");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!p.coefficient(Monomial::variable(n, i)).is_zero()) {
            throw ModelError("origin is not a critical point: linear term in variable " + std::to_string(i + 1));
        }
    }
    if (jet_order && *jet_order < 2) {
        throw ModelError("jet order must be at least 2");
    }
    auto impl = std::make_shared<Impl>();
    impl->dimension = n;
    impl->poly = p;
    impl->radial_poly = radial_derivative(p);
    impl->value_fp = FloatPolynomial(p);
    for (const auto& g : cetaev::gradient(p)) {
        impl->gradient_fp.emplace_back(g);
    }
    impl->radial_fp = FloatPolynomial(*impl->radial_poly);
    impl->jet_order = jet_order;
    if (jet_order) {
        impl->jets = homogeneous_parts(p, *jet_order);
    }
    return PotentialField(std::move(impl));
}

PotentialField PotentialField::from_functions(std::size_t dimension, ValueFn value, GradientFn gradient)
{
    if (dimension == 0) {
        throw ModelError("potential dimension must be positive");
    }
    const std::vector<double> origin(dimension, 0.0);
    if (value(origin) != 0.0) {
        throw ModelError("potential must vanish at the origin");
    }
    std::vector<double> g(dimension);
    gradient(origin, g);
    for (double gi : g) {
        if (std::abs(gi) > 1e-12) {
            throw ModelError("origin is not a critical point of the potential");
        }
    }
    bool nonzero = false;
    std::vector<double> q(dimension);
    for (int k = 1; k <= 64 && !nonzero; ++k) {
        for (std::size_t i = 0; i < dimension; ++i) {
            q[i] = std::sin(1.7 * k + 0.9 * static_cast<double>(i)) * 0.5;
        }
        nonzero = value(q) != 0.0;
    }
    if (!nonzero) {
        throw ModelError("potential is identically zero on the probe set");
    }
    auto impl = std::make_shared<Impl>();
    impl->dimension = dimension;
    impl->value_fn = std::move(value);
    impl->gradient_fn = std::move(gradient);
    return PotentialField(std::move(impl));
}

PotentialField PotentialField::with_jet_order(unsigned s) const
{
    return from_polynomial(polynomial(), s);
}

std::size_t PotentialField::dimension() const noexcept
{
    return impl_->dimension;
}

double PotentialField::value(std::span<const double> q) const
{
    return impl_->poly ? impl_->value_fp(q) : impl_->value_fn(q);
}

void PotentialField::gradient(std::span<const double> q, std::span<double> out) const
{
    if (out.size() != impl_->dimension) {
        throw DimensionError("gradient output has wrong dimension");
    }
    if (impl_->poly) {
        for (std::size_t i = 0; i < impl_->dimension; ++i) {
            out[i] = impl_->gradient_fp[i](q);
        }
    } else {
        impl_->gradient_fn(q, out);
    }
}

std::vector<double> PotentialField::gradient(std::span<const double> q) const
{
    std::vector<double> g(impl_->dimension);
    gradient(q, g);
    return g;
}

double PotentialField::radial(std::span<const double> q) const
{
    if (impl_->poly) {
        return impl_->radial_fp(q);
    }
    std::vector<double> g(impl_->dimension);
    impl_->gradient_fn(q, g);
    double r = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        r += g[i] * q[i];
    }
    return r;
}

bool PotentialField::is_polynomial() const noexcept
{
    return impl_->poly.has_value();
}

const Polynomial& PotentialField::polynomial() const
{
    if (!impl_->poly) {
        throw ModelError("potential is not polynomial-backed");
    }
    return *impl_->poly;
}

std::optional<unsigned> PotentialField::jet_order() const noexcept
{
    return impl_->jet_order;
}

const JetDecomposition& PotentialField::jets() const
{
    if (!impl_->jets) {
        throw ModelError("potential has no jet order");
    }
    return *impl_->jets;
}

std::optional<Rational> PotentialField::exact_value(std::span<const double> q) const
{
    if (!impl_->poly) {
        return std::nullopt;
    }
    const auto r = to_rationals(q);
    return impl_->poly->evaluate_exact(r);
}

std::optional<Rational> PotentialField::exact_radial(std::span<const double> q) const
{
    if (!impl_->poly) {
        return std::nullopt;
    }
    const auto r = to_rationals(q);
    return impl_->radial_poly->evaluate_exact(r);
}

}  // namespace cetaev
