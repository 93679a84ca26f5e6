#include "cetaev/corpus.hpp"

#include <cmath>

#include "cetaev/error.hpp"

namespace cetaev {
namespace {

Polynomial term2(long num, long den, unsigned ex, unsigned ey)
{
    return Polynomial::term(Rational(num, den), {ex, ey});
}

CorpusEntry polynomial_entry(std::string name, std::string description, const Polynomial& p, unsigned s,
                             double epsilon, ExpectedVerdicts expected, std::string provenance)
{
    return CorpusEntry{std::move(name),
                       std::move(description),
                       PotentialField::from_polynomial(p, s),
                       PotentialSpec::from_polynomial(p),
                       s,
                       epsilon,
                       expected,
                       std::move(provenance)};
}

double painleve_value(std::span<const double> q)
{
    const double x = q[0];
    if (x == 0.0) {
        return 0.0;
    }
    return std::exp(-1.0 / (x * x)) * std::sin(1.0 / x);
}

void painleve_gradient(std::span<const double> q, std::span<double> out)
{
    const double x = q[0];
    if (x == 0.0) {
        out[0] = 0.0;
        return;
    }
    const double e = std::exp(-1.0 / (x * x));
    out[0] = e * (2.0 / (x * x * x) * std::sin(1.0 / x) - std::cos(1.0 / x) / (x * x));
}

std::vector<CorpusEntry> build_catalog()
{
    using E = Expected;
    std::vector<CorpusEntry> out;
    out.push_back(polynomial_entry(
        "paper-example", "pi = 8/3 y^6 - 3 y^4 x^4 + 9/10 y^2 x^8 - 1/12 x^12 - y^12 + x^14", paper_pi(), 12,
        std::pow(29.0 / 60.0, 1.0 / 12.0), {E::Refuted, E::Certified, E::Certified, E::Refuted, E::Refuted},
        "worked example: class H fails only through H1, and pi is not a Cetaev potential"));
    out.push_back(polynomial_entry(
        "cetaev-counterexample", "pi = y^2 - x^2 + x^3",
        term2(1, 1, 0, 2) + term2(-1, 1, 2, 0) + term2(1, 1, 3, 0), 2, 0.5,
        {E::Certified, E::Certified, E::Refuted, E::Certified, E::Certified},
        "classic example where j^2 satisfies Cetaev's condition but pi does not on its whole negative set; "
        "the x < 0 component still has R = 2 pi + x^3 < 0 on its punctured closure [DERIVED]"));
    {
        CorpusEntry e{"painleve",
                      "Pi(q) = exp(-1/q^2) sin(1/q), Pi(0) = 0",
                      PotentialField::from_functions(1, painleve_value, painleve_gradient),
                      std::nullopt,
                      2,
                      0.5,
                      {},
                      "Painleve's flat potential: stable without a minimum; demonstration only"};
        out.push_back(std::move(e));
    }
    out.push_back(polynomial_entry("quartic-well", "Pi = -(x^4 + y^4)", term2(-1, 1, 4, 0) + term2(-1, 1, 0, 4), 4,
                                   0.5, {E::Certified, E::Certified, E::Certified, E::Certified, E::Certified},
                                   "homogeneous negative definite quartic; class H"));
    out.push_back(polynomial_entry("lyapunov-saddle", "Pi = y^2 - x^4", term2(1, 1, 0, 2) + term2(-1, 1, 4, 0), 4,
                                   0.5, {E::Certified, E::Certified, E::Certified, E::Certified, E::Certified},
                                   "degenerate saddle: positive quadratic jet, negative quartic along the x axis"));
    out.push_back(polynomial_entry(
        "quartic-sextic", "Pi = x^4 - y^4 + y^6", term2(1, 1, 4, 0) + term2(-1, 1, 0, 4) + term2(1, 1, 0, 6), 4, 0.5,
        {E::Certified, E::Certified, E::Refuted, E::Refuted, E::Refuted},
        "R^4 = 4 j^4 vanishes on the boundary of A_4 and R = 2 y^6 > 0 where Pi = 0; "
        "verdicts fixed by a brute-force grid oracle [DERIVED]"));
    out.push_back(polynomial_entry("cubic-1d", "Pi = -x^4/4 (one degree of freedom)",
                                   Polynomial::term(Rational(-1, 4), {4}), 4, 0.5,
                                   {E::Certified, E::Certified, E::Certified, E::Certified, E::Certified},
                                   "x(t) = sqrt(2)/(c - t) is an exact asymptotic motion"));
    return out;
}

}  // namespace

std::string_view to_string(Expected e)
{
    switch (e) {
    case Expected::Certified:
        return "Certified";
    case Expected::Refuted:
        return "Refuted";
    case Expected::Inconclusive:
        return "Inconclusive";
    case Expected::DemonstrationOnly:
        return "Demonstration-only";
    }
    return "Demonstration-only";
}

Polynomial paper_f()
{
    return term2(8, 3, 0, 6) + term2(-3, 1, 4, 4) + term2(9, 10, 8, 2) + term2(-1, 12, 12, 0) + term2(-1, 1, 0, 12);
}

Polynomial paper_pi()
{
    return paper_f() + term2(1, 1, 14, 0);
}

const std::vector<CorpusEntry>& catalog()
{
    static const std::vector<CorpusEntry> entries = build_catalog();
    return entries;
}

const CorpusEntry& find_entry(std::string_view name)
{
    std::string known;
    for (const auto& e : catalog()) {
        if (e.name == name) {
            return e;
        }
        known += (known.empty() ? "" : ", ") + e.name;
    }
    throw Error("unknown corpus entry '" + std::string(name) + "' (known: " + known + ")");
}

}  // namespace cetaev
