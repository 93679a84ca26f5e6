#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cetaev/corpus.hpp"
#include "cetaev/error.hpp"
#include "cetaev/field.hpp"
#include "cetaev/polynomial.hpp"
#include "cetaev/potential_spec.hpp"
#include "test_support.hpp"

namespace cetaev {
namespace {

using test::poly;

Polynomial x2() { return Polynomial::variable(2, 0); }
Polynomial y2() { return Polynomial::variable(2, 1); }

TEST(Rational, ParseAndArithmetic)
{
    EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
    EXPECT_EQ(Rational::parse("-7"), Rational(-7));
    EXPECT_THROW(Rational::parse("3/"), Error);
    EXPECT_THROW(Rational::parse("abc"), Error);
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(pow(Rational(-1, 2), 3), Rational(-1, 8));
    EXPECT_EQ(Rational::from_double(0.375), Rational(3, 8));
    EXPECT_LT(Rational(-1, 12), Rational(0));
}

TEST(Polynomial, HomogeneousPartsGroupsByDegree)
{
    const Polynomial p = poly(2, {{1, {2, 0}}, {1, {1, 2}}, {1, {0, 4}}});
    const auto jets = homogeneous_parts(p, 4);
    EXPECT_TRUE(jets.part(0).is_zero());
    EXPECT_TRUE(jets.part(1).is_zero());
    EXPECT_EQ(jets.part(2), poly(2, {{1, {2, 0}}}));
    EXPECT_EQ(jets.part(3), poly(2, {{1, {1, 2}}}));
    EXPECT_EQ(jets.part(4), poly(2, {{1, {0, 4}}}));
}

TEST(Polynomial, HomogeneousPartsOfPaperF)
{
    const auto jets = homogeneous_parts(paper_f(), 12);
    EXPECT_EQ(jets.part(6), poly(2, {{Rational(8, 3), {0, 6}}}));
    EXPECT_EQ(jets.part(8), poly(2, {{-3, {4, 4}}}));
    EXPECT_EQ(jets.part(10), poly(2, {{Rational(9, 10), {8, 2}}}));
    EXPECT_EQ(jets.part(12), poly(2, {{Rational(-1, 12), {12, 0}}, {-1, {0, 12}}}));
    for (unsigned l : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 9u, 11u}) {
        EXPECT_TRUE(jets.part(l).is_zero()) << l;
    }
}

TEST(Polynomial, ZeroPolynomialHasZeroParts)
{
    const auto jets = homogeneous_parts(Polynomial(2), 5);
    ASSERT_EQ(jets.order(), 5u);
    for (const auto& part : jets.parts()) {
        EXPECT_TRUE(part.is_zero());
    }
}

TEST(Polynomial, JetsOfPaperPi)
{
    const Polynomial j11 = poly(2, {{Rational(8, 3), {0, 6}}, {-3, {4, 4}}, {Rational(9, 10), {8, 2}}});
    EXPECT_EQ(jet(paper_pi(), 11), j11);
    EXPECT_EQ(jet(paper_pi(), 8), poly(2, {{Rational(8, 3), {0, 6}}, {-3, {4, 4}}}));
    EXPECT_EQ(jet(paper_pi(), 14), paper_pi());
    EXPECT_EQ(jet(paper_pi(), 40), paper_pi());
}

TEST(Polynomial, Gradient)
{
    const Polynomial p = poly(2, {{1, {2, 1}}});
    const auto g = gradient(p);
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g[0], poly(2, {{2, {1, 1}}}));
    EXPECT_EQ(g[1], poly(2, {{1, {2, 0}}}));
    for (const auto& c : gradient(Polynomial::constant(3, Rational(5)))) {
        EXPECT_TRUE(c.is_zero());
    }
}

TEST(Polynomial, GradientOfPaperFMatchesFiniteDifference)
{
    const Polynomial f = paper_f();
    const std::vector<Rational> at = {Rational(1), Rational(1)};
    const Rational exact = gradient(f)[0].evaluate_exact(at);
    const double h = 1e-5;
    const double fd = (f.evaluate_float(std::vector<double>{1.0 + h, 1.0}) -
                       f.evaluate_float(std::vector<double>{1.0 - h, 1.0})) / (2 * h);
    // d/dx at (1,1): -12 + 72/10 - 1 = -29/5
    EXPECT_EQ(exact, Rational(-29, 5));
    EXPECT_NEAR(fd, exact.to_double(), 1e-6);
}

TEST(Polynomial, RadialDerivative)
{
    const Polynomial r_f = poly(2, {{16, {0, 6}}, {-24, {4, 4}}, {9, {8, 2}}, {-1, {12, 0}}, {-12, {0, 12}}});
    EXPECT_EQ(radial_derivative(paper_f()), r_f);
    const Polynomial c = poly(2, {{1, {0, 2}}, {-1, {2, 0}}, {1, {3, 0}}});
    EXPECT_EQ(radial_derivative(c), poly(2, {{2, {0, 2}}, {-2, {2, 0}}, {3, {3, 0}}}));
    const Polynomial h = poly(3, {{2, {1, 1, 1}}, {-1, {3, 0, 0}}});
    EXPECT_EQ(radial_derivative(h), Rational(3) * h);
}

TEST(Polynomial, RadialDerivativeAgreesWithGradient)
{
    for (const auto* e : test::polynomial_entries()) {
        const Polynomial& p = e->field.polynomial();
        const auto g = gradient(p);
        Polynomial sum(p.dimension());
        for (std::size_t i = 0; i < g.size(); ++i) {
            sum += g[i] * Polynomial::variable(p.dimension(), i);
        }
        EXPECT_EQ(sum, radial_derivative(p)) << e->name;
    }
}

TEST(Polynomial, EulerIdentityRhsSpecialCases)
{
    const Polynomial h = poly(2, {{-1, {4, 0}}, {-1, {0, 4}}});
    EXPECT_EQ(euler_identity_rhs(homogeneous_parts(h, 4), 4), Rational(4) * h);
    const Polynomial sq = poly(1, {{1, {2}}});
    EXPECT_EQ(euler_identity_rhs(homogeneous_parts(sq, 2), 2), Rational(2) * sq);
    const Polynomial pi = paper_pi();
    EXPECT_EQ(euler_identity_rhs(homogeneous_parts(pi, 12), 12), radial_derivative(jet(pi, 12)));
}

TEST(Polynomial, RestrictToRay)
{
    const Polynomial p = x2() * x2() - y2() * y2();
    const std::vector<Rational> e1 = {Rational(1), Rational(0)};
    EXPECT_EQ(restrict_to_ray(p, e1), poly(1, {{1, {2}}}));
    EXPECT_EQ(restrict_to_ray(jet(paper_pi(), 12), e1), poly(1, {{Rational(-1, 12), {12}}}));
}

TEST(Polynomial, SubstituteCurveOnPaperF)
{
    const Polynomial x = Polynomial::variable(1, 0);
    const Polynomial expected = poly(1, {{Rational(29, 60), {12}}, {-1, {24}}});
    const std::vector<Polynomial> plus = {x, x * x};
    const std::vector<Polynomial> minus = {x, -(x * x)};
    EXPECT_EQ(substitute_curve(paper_f(), plus), expected);
    EXPECT_EQ(substitute_curve(paper_f(), minus), expected);
    const std::vector<Polynomial> half = {x, Rational(1, 2) * x * x};
    EXPECT_EQ(substitute_curve(radial_derivative(paper_f()), half), poly(1, {{Rational(-12, 4096), {24}}}));
}

TEST(Polynomial, Arithmetic)
{
    EXPECT_EQ((x2() + y2()) * (x2() - y2()), x2() * x2() - y2() * y2());
    const Polynomial q = poly(2, {{16, {0, 6}}, {-24, {4, 4}}, {9, {8, 2}}, {-1, {12, 0}}});
    const Polynomial x4 = pow(x2(), 4);
    const Polynomial factored = (y2() * y2() - x4) * pow(Rational(4) * y2() * y2() - x4, 2);
    EXPECT_EQ(factored, q);
    EXPECT_EQ(q + Polynomial(2), q);
    EXPECT_THROW((void)(q + Polynomial(3)), DimensionError);
    EXPECT_TRUE((q - q).is_zero());
}

TEST(Polynomial, Evaluate)
{
    const Polynomial h = poly(1, {{Rational(8, 3), {6}}, {-3, {4}}, {Rational(9, 10), {2}}, {Rational(-1, 12), {0}}});
    EXPECT_EQ(h.evaluate_exact(std::vector<Rational>{Rational(0)}), Rational(-1, 12));
    const Rational at34 = h.evaluate_exact(std::vector<Rational>{Rational(3, 4)});
    EXPECT_EQ(at34, Rational(-397, 7680));
    EXPECT_LT(at34.sign(), 0);
    const Polynomial r2 = x2() * x2() + y2() * y2();
    EXPECT_EQ(r2.evaluate_exact(std::vector<Rational>{Rational(3), Rational(4)}), Rational(25));
    EXPECT_DOUBLE_EQ(r2.evaluate_float(std::vector<double>{3.0, 4.0}), 25.0);
    EXPECT_DOUBLE_EQ(FloatPolynomial(r2)(std::vector<double>{3.0, 4.0}), 25.0);
}

TEST(Polynomial, ToStringPlacesHighestDegreeLast)
{
    const Polynomial c = poly(2, {{1, {0, 2}}, {-1, {2, 0}}, {1, {3, 0}}});
    EXPECT_EQ(c.to_string(), "-x^2 + y^2 + x^3");
}

// Properties over the polynomial corpus and random polynomials.

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t n, unsigned max_degree)
{
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<int> terms(1, 8);
    Polynomial p(n);
    const int count = terms(rng);
    for (int t = 0; t < count; ++t) {
        std::vector<unsigned> e(n);
        unsigned budget = deg(rng);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            std::uniform_int_distribution<unsigned> part(0, budget);
            e[i] = part(rng);
            budget -= e[i];
        }
        e[n - 1] = budget;
        p.add_term(Rational(coeff(rng), den(rng)), Monomial(e));
    }
    return p;
}

TEST(PolynomialProperty, ReconstructionFromParts)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const Polynomial p = random_polynomial(rng, n, 9);
        const unsigned s = static_cast<unsigned>(std::max(p.degree(), 0)) + static_cast<unsigned>(trial % 3);
        EXPECT_EQ(homogeneous_parts(p, s).sum(), p);
    }
    for (const auto* e : test::polynomial_entries()) {
        const Polynomial& p = e->field.polynomial();
        EXPECT_EQ(homogeneous_parts(p, static_cast<unsigned>(p.degree())).sum(), p) << e->name;
    }
}

TEST(PolynomialProperty, EulerPerPartAtRationalPoints)
{
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 13);
    std::vector<Polynomial> sources;
    for (const auto* e : test::polynomial_entries()) {
        sources.push_back(e->field.polynomial());
    }
    for (int i = 0; i < 20; ++i) {
        sources.push_back(random_polynomial(rng, 1 + i % 3, 8));
    }
    for (const auto& p : sources) {
        const unsigned order = static_cast<unsigned>(std::max(p.degree(), 0));
        const auto jets = homogeneous_parts(p, order);
        for (int k = 0; k < 10; ++k) {
            std::vector<Rational> q;
            for (std::size_t i = 0; i < p.dimension(); ++i) {
                q.emplace_back(num(rng), den(rng));
            }
            for (unsigned l = 0; l <= order; ++l) {
                const auto g = gradient(jets.part(l));
                Rational lhs;
                for (std::size_t i = 0; i < q.size(); ++i) {
                    lhs += g[i].evaluate_exact(q) * q[i];
                }
                EXPECT_EQ(lhs, Rational(static_cast<long>(l)) * jets.part(l).evaluate_exact(q));
            }
        }
    }
}

TEST(PolynomialProperty, EulerIdentityForEveryCorpusOrder)
{
    for (const auto* e : test::polynomial_entries()) {
        const Polynomial& p = e->field.polynomial();
        const auto deg = static_cast<unsigned>(p.degree());
        for (unsigned s = 2; s <= deg; ++s) {
            const auto jets = homogeneous_parts(p, s);
            EXPECT_TRUE((radial_derivative(jet(p, s)) - euler_identity_rhs(jets, s)).is_zero())
                << e->name << " s=" << s;
        }
    }
}

TEST(PolynomialProperty, FloatGradientMatchesCentralDifferences)
{
    std::mt19937_64 rng(13);
    const double h = 1e-5;
    for (const auto* e : test::polynomial_entries()) {
        const PotentialField& f = e->field;
        const std::size_t n = f.dimension();
        for (int k = 0; k < 100; ++k) {
            const auto q = test::random_in_ball(rng, n, 1.0);
            const auto g = f.gradient(q);
            for (std::size_t i = 0; i < n; ++i) {
                auto a = q;
                auto b = q;
                a[i] += h;
                b[i] -= h;
                const double fd = (f.value(a) - f.value(b)) / (2 * h);
                EXPECT_LE(std::abs(fd - g[i]), 1e-6 * std::max(1.0, std::abs(g[i]))) << e->name;
            }
        }
    }
}

TEST(PolynomialProperty, JetIdempotence)
{
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial p = random_polynomial(rng, 2, 10);
        for (unsigned s = 0; s <= 10; s += 2) {
            for (unsigned k = 0; k <= s; ++k) {
                EXPECT_EQ(jet(jet(p, s), k), jet(p, k));
            }
        }
    }
}

TEST(PolynomialProperty, RayRestrictionAgreesWithEvaluation)
{
    std::mt19937_64 rng(15);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Polynomial> sources;
    for (const auto* e : test::polynomial_entries()) {
        sources.push_back(e->field.polynomial());
    }
    for (int i = 0; i < 20; ++i) {
        sources.push_back(random_polynomial(rng, 1 + i % 3, 7));
    }
    for (const auto& p : sources) {
        std::vector<Rational> u;
        for (std::size_t i = 0; i < p.dimension(); ++i) {
            u.emplace_back(num(rng), den(rng));
        }
        const Polynomial r = restrict_to_ray(p, u);
        for (int k = 0; k < 5; ++k) {
            const Rational t(num(rng), den(rng));
            std::vector<Rational> tu;
            for (const auto& c : u) {
                tu.push_back(t * c);
            }
            EXPECT_EQ(r.evaluate_exact(std::vector<Rational>{t}), p.evaluate_exact(tu));
        }
        EXPECT_EQ(r.evaluate_exact(std::vector<Rational>{Rational(0)}),
                  p.evaluate_exact(std::vector<Rational>(p.dimension(), Rational(0))));
    }
}

TEST(PotentialSpec, RoundTripOfCatalog)
{
    for (const auto* e : test::polynomial_entries()) {
        ASSERT_TRUE(e->spec.has_value()) << e->name;
        const std::string text = serialize_potential_spec(*e->spec);
        const PotentialSpec back = parse_potential_spec(text);
        EXPECT_EQ(back.potential, e->field.polynomial()) << e->name;
        EXPECT_EQ(back.variables, e->spec->variables);
        EXPECT_EQ(back.kinetic, e->spec->kinetic);
    }
}

TEST(PotentialSpec, ParsesCounterexample)
{
    const auto spec = parse_potential_spec("dimension 2\nvariables x y\nterm 1 1 0 2\nterm -1 1 2 0\nterm 1 1 3 0\n");
    EXPECT_EQ(spec.dimension(), 2u);
    EXPECT_EQ(spec.potential.terms().size(), 3u);
    EXPECT_TRUE(spec.kinetic_is_identity());
}

TEST(PotentialSpec, AcceptsDiagonalKinetic)
{
    const auto spec = parse_potential_spec("dimension 2\nterm -1 1 4 0\nkinetic 2 0 0 1\n");
    EXPECT_FALSE(spec.kinetic_is_identity());
    EXPECT_EQ(spec.kinetic, (std::vector<double>{2, 0, 0, 1}));
}

int parse_error_line(const std::string& text)
{
    try {
        (void)parse_potential_spec(text);
    } catch (const ParseError& e) {
        return static_cast<int>(e.line());
    }
    return -1;
}

TEST(PotentialSpec, ErrorsCarryLineNumbers)
{
    EXPECT_EQ(parse_error_line("dimension 2\n# note\nterm 3/ 1 0 2\n"), 3);
    EXPECT_EQ(parse_error_line("dimension 2\nterm 1 1 2\n"), 2);
    EXPECT_EQ(parse_error_line("term 1 1 2\n"), 1);
    EXPECT_EQ(parse_error_line("dimension 2\nterm 1 1 x 0\n"), 2);
    EXPECT_EQ(parse_error_line("dimension 2\nbogus 1\n"), 2);
    EXPECT_EQ(parse_error_line("dimension 2\nterm 1 1 2 0\nkinetic 1 0 0\n"), 3);
}

TEST(PotentialSpec, RejectsNonPositiveDefiniteKinetic)
{
    EXPECT_THROW(parse_potential_spec("dimension 2\nterm -1 1 4 0\nkinetic 0 1 1 0\n"), ModelError);
    EXPECT_THROW(parse_potential_spec("dimension 2\nterm -1 1 4 0\nkinetic 1 0.5 0 1\n"), ModelError);
    EXPECT_THROW(validate_kinetic_matrix({1, 0, 0, -1}, 2), ModelError);
    EXPECT_NO_THROW(validate_kinetic_matrix({2, 1, 1, 2}, 2));
}

TEST(PotentialField, RejectsNonCriticalOrigin)
{
    EXPECT_THROW(PotentialField::from_polynomial(Polynomial(2)), ModelError);
    EXPECT_THROW(PotentialField::from_polynomial(poly(2, {{1, {0, 0}}, {1, {2, 0}}})), ModelError);
    EXPECT_THROW(PotentialField::from_polynomial(poly(2, {{1, {1, 0}}, {1, {0, 2}}})), ModelError);
    const auto linear = [](std::span<const double> q) { return q[0]; };
    const auto linear_grad = [](std::span<const double>, std::span<double> g) { g[0] = 1.0; };
    EXPECT_THROW(PotentialField::from_functions(1, linear, linear_grad), ModelError);
}

TEST(PotentialField, FloatAgreesWithExact)
{
    std::mt19937_64 rng(16);
    for (const auto* e : test::polynomial_entries()) {
        for (int k = 0; k < 50; ++k) {
            const auto q = test::random_in_ball(rng, e->field.dimension(), 1.0);
            const double v = e->field.value(q);
            const double exact = e->field.exact_value(q)->to_double();
            EXPECT_NEAR(v, exact, 1e-13 * std::max(1.0, std::abs(exact))) << e->name;
            const double r = e->field.radial(q);
            EXPECT_NEAR(r, e->field.exact_radial(q)->to_double(), 1e-12) << e->name;
        }
    }
}

}  // namespace
}  // namespace cetaev
