#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cetaev/rational.hpp"

namespace cetaev {

/// Exponent vector q_1^{a_1} ... q_n^{a_n}.
class Monomial {
public:
    explicit Monomial(std::vector<unsigned> exponents);
    static Monomial one(std::size_t dimension);
    static Monomial variable(std::size_t dimension, std::size_t index);

    [[nodiscard]] std::size_t dimension() const noexcept { return exponents_.size(); }
    [[nodiscard]] unsigned degree() const noexcept { return degree_; }
    [[nodiscard]] unsigned exponent(std::size_t i) const { return exponents_.at(i); }
    [[nodiscard]] std::span<const unsigned> exponents() const noexcept { return exponents_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b);

    /// Graded order: total degree first, then lexicographic on exponents.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) = default;

private:
    std::vector<unsigned> exponents_;
    unsigned degree_ = 0;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// The term map never stores a zero coefficient, so structural equality is
/// polynomial equality.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    explicit Polynomial(std::size_t dimension);
    Polynomial(std::size_t dimension, TermMap terms);

    static Polynomial constant(std::size_t dimension, const Rational& c);
    static Polynomial variable(std::size_t dimension, std::size_t index);
    static Polynomial term(const Rational& c, std::vector<unsigned> exponents);

    [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }
    [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    [[nodiscard]] int degree() const;
    /// Lowest total degree among the terms; -1 for the zero polynomial.
    [[nodiscard]] int order() const;
    [[nodiscard]] bool is_homogeneous(unsigned degree) const;
    [[nodiscard]] Rational coefficient(const Monomial& m) const;

    /// Adds c·m in place (terms cancelling to zero are removed).
    void add_term(const Rational& c, const Monomial& m);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator-(Polynomial p) { return p *= Rational(-1); }
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    [[nodiscard]] Rational evaluate_exact(std::span<const Rational> point) const;
    /// Double-precision evaluation; see FloatPolynomial for the hot path.
    [[nodiscard]] double evaluate_float(std::span<const double> point) const;

    /// Human-readable form, highest degree last, e.g. "8/3*y^6 - 3*x^4*y^4".
    [[nodiscard]] std::string to_string(std::span<const std::string> names = {}) const;

private:
    void require_same_dimension(const Polynomial& other, const char* op) const;

    std::size_t dimension_;
    TermMap terms_;
};

Polynomial pow(const Polynomial& p, unsigned k);

/// Default variable names: x, y, z for n <= 3, otherwise q1..qn.
std::vector<std::string> default_variable_names(std::size_t dimension);

/// Ordered homogeneous parts of a polynomial up to a given order.
///
/// part(l) is homogeneous of degree l or identically zero. Degree 0 and 1
/// parts are kept so callers can check the critical-point assumption.
class JetDecomposition {
public:
    JetDecomposition(std::size_t dimension, std::vector<Polynomial> parts);

    [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }
    [[nodiscard]] unsigned order() const noexcept { return static_cast<unsigned>(parts_.size()) - 1; }
    [[nodiscard]] const Polynomial& part(unsigned degree) const { return parts_.at(degree); }
    [[nodiscard]] const std::vector<Polynomial>& parts() const noexcept { return parts_; }
    /// Sum of parts of degree <= l (l is clamped to order()).
    [[nodiscard]] Polynomial jet(unsigned degree) const;
    [[nodiscard]] Polynomial sum() const { return jet(order()); }

private:
    std::size_t dimension_;
    std::vector<Polynomial> parts_;
};

[[nodiscard]] Polynomial homogeneous_part(const Polynomial& p, unsigned degree);
[[nodiscard]] JetDecomposition homogeneous_parts(const Polynomial& p, unsigned order);
[[nodiscard]] Polynomial jet(const Polynomial& p, unsigned order);

[[nodiscard]] Polynomial partial_derivative(const Polynomial& p, std::size_t variable);
[[nodiscard]] std::vector<Polynomial> gradient(const Polynomial& p);

/// <grad p(q), q>, computed as the Euler-weighted sum of the terms.
[[nodiscard]] Polynomial radial_derivative(const Polynomial& p);

/// (s-1) j^s - sum_{l=2}^{s-2} j^l + part_s.
///
/// Equals the radial derivative of j^s whenever the degree 0 and 1 parts vanish.
[[nodiscard]] Polynomial euler_identity_rhs(const JetDecomposition& jets, unsigned s);

/// t -> p(t u) as a univariate polynomial (dimension 1).
[[nodiscard]] Polynomial restrict_to_ray(const Polynomial& p, std::span<const Rational> direction);

/// x -> p(c_1(x), ..., c_n(x)) where each c_i is a univariate polynomial.
[[nodiscard]] Polynomial substitute_curve(const Polynomial& p, std::span<const Polynomial> curve);

/// Compiled double-precision form of a Polynomial for repeated evaluation.
class FloatPolynomial {
public:
    FloatPolynomial() = default;
    explicit FloatPolynomial(const Polynomial& p);

    [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }
    [[nodiscard]] bool is_zero() const noexcept { return coefficients_.empty(); }
    [[nodiscard]] double operator()(std::span<const double> point) const;

private:
    std::size_t dimension_ = 0;
    std::vector<double> coefficients_;
    std::vector<unsigned> exponents_;  // row-major, one row of `dimension_` per term
    std::vector<double> dense_;        // univariate Horner coefficients, index = degree
};

}  // namespace cetaev
