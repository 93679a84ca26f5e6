#include "cetaev/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cetaev/error.hpp"

namespace cetaev {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<unsigned> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), 0U))
{
}

Monomial Monomial::one(std::size_t dimension)
{
    return Monomial(std::vector<unsigned>(dimension, 0));
}

Monomial Monomial::variable(std::size_t dimension, std::size_t index)
{
    std::vector<unsigned> e(dimension, 0);
    e.at(index) = 1;
    return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    if (a.dimension() != b.dimension()) {
        throw DimensionError("monomial dimension mismatch");
    }
    std::vector<unsigned> e(a.dimension());
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = a.exponents_[i] + b.exponents_[i];
    }
    return Monomial(std::move(e));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
{
    if (auto c = a.degree_ <=> b.degree_; c != 0) {
        return c;
    }
    // Reversed so that x^2 precedes x*y precedes y^2 within a degree.
    return b.exponents_ <=> a.exponents_;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::size_t dimension) : dimension_(dimension)
{
    if (dimension == 0) {
        throw DimensionError("polynomial dimension must be positive");
    }
}

Polynomial::Polynomial(std::size_t dimension, TermMap terms) : Polynomial(dimension)
{
    for (auto& [m, c] : terms) {
        add_term(c, m);
    }
}

Polynomial Polynomial::constant(std::size_t dimension, const Rational& c)
{
    Polynomial p(dimension);
    p.add_term(c, Monomial::one(dimension));
    return p;
}

Polynomial Polynomial::variable(std::size_t dimension, std::size_t index)
{
    Polynomial p(dimension);
    p.add_term(Rational(1), Monomial::variable(dimension, index));
    return p;
}

Polynomial Polynomial::term(const Rational& c, std::vector<unsigned> exponents)
{
    Polynomial p(exponents.size());
    p.add_term(c, Monomial(std::move(exponents)));
    return p;
}

int Polynomial::degree() const
{
    return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
}

int Polynomial::order() const
{
    return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

bool Polynomial::is_homogeneous(unsigned degree) const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [degree](const auto& t) { return t.first.degree() == degree; });
}

Rational Polynomial::coefficient(const Monomial& m) const
{
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Rational& c, const Monomial& m)
{
    if (m.dimension() != dimension_) {
        throw DimensionError("monomial of dimension " + std::to_string(m.dimension()) +
                             " added to polynomial of dimension " + std::to_string(dimension_));
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void Polynomial::require_same_dimension(const Polynomial& other, const char* op) const
{
    if (other.dimension_ != dimension_) {
        throw DimensionError(std::string("dimension mismatch in polynomial ") + op + ": " +
                             std::to_string(dimension_) + " vs " + std::to_string(other.dimension_));
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    require_same_dimension(rhs, "addition");
    for (const auto& [m, c] : rhs.terms_) {
        add_term(c, m);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    require_same_dimension(rhs, "subtraction");
    for (const auto& [m, c] : rhs.terms_) {
        add_term(-c, m);
    }
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs)
{
    lhs.require_same_dimension(rhs, "multiplication");
    Polynomial out(lhs.dimension_);
    for (const auto& [ma, ca] : lhs.terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            out.add_term(ca * cb, ma * mb);
        }
    }
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    return a.dimension_ == b.dimension_ && a.terms_ == b.terms_;
}

Rational Polynomial::evaluate_exact(std::span<const Rational> point) const
{
    if (point.size() != dimension_) {
        throw DimensionError("evaluation point has dimension " + std::to_string(point.size()) +
                             ", expected " + std::to_string(dimension_));
    }
    // Cache powers per variable; terms share them heavily.
    std::vector<std::vector<Rational>> powers(dimension_);
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
        Rational value = c;
        for (std::size_t i = 0; i < dimension_; ++i) {
            const unsigned e = m.exponent(i);
            if (e == 0) {
                continue;
            }
            auto& table = powers[i];
            if (table.empty()) {
                table.push_back(Rational(1));
            }
            while (table.size() <= e) {
                table.push_back(table.back() * point[i]);
            }
            value *= table[e];
        }
        sum += value;
    }
    return sum;
}

double Polynomial::evaluate_float(std::span<const double> point) const
{
    return FloatPolynomial(*this)(point);
}

std::string Polynomial::to_string(std::span<const std::string> names) const
{
    if (terms_.empty()) {
        return "0";
    }
    std::vector<std::string> fallback;
    if (names.size() != dimension_) {
        fallback = default_variable_names(dimension_);
        names = fallback;
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational magnitude = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (magnitude != Rational(1) || m.degree() == 0) {
            os << magnitude.str();
            wrote = true;
        }
        for (std::size_t i = 0; i < dimension_; ++i) {
            const unsigned e = m.exponent(i);
            if (e == 0) {
                continue;
            }
            if (wrote) {
                os << "*";
            }
            os << names[i];
            if (e > 1) {
                os << "^" << e;
            }
            wrote = true;
        }
    }
    return os.str();
}

Polynomial pow(const Polynomial& p, unsigned k)
{
    Polynomial result = Polynomial::constant(p.dimension(), Rational(1));
    Polynomial base = p;
    while (k > 0) {
        if (k & 1U) {
            result = result * base;
        }
        k >>= 1U;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

std::vector<std::string> default_variable_names(std::size_t dimension)
{
    if (dimension <= 3) {
        static const char* xyz[] = {"x", "y", "z"};
        return {xyz, xyz + dimension};
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dimension; ++i) {
        names.push_back("q" + std::to_string(i + 1));
    }
    return names;
}

// -------------------------------------------------------- JetDecomposition

JetDecomposition::JetDecomposition(std::size_t dimension, std::vector<Polynomial> parts)
    : dimension_(dimension), parts_(std::move(parts))
{
    if (parts_.empty()) {
        throw Error("jet decomposition needs at least the degree-0 part");
    }
    for (unsigned l = 0; l < parts_.size(); ++l) {
        if (parts_[l].dimension() != dimension_) {
            throw DimensionError("jet part of wrong dimension");
        }
        if (!parts_[l].is_homogeneous(l)) {
            throw Error("jet part " + std::to_string(l) + " is not homogeneous of that degree");
        }
    }
}

Polynomial JetDecomposition::jet(unsigned degree) const
{
    Polynomial out(dimension_);
    const unsigned top = std::min(degree, order());
    for (unsigned l = 0; l <= top; ++l) {
        out += parts_[l];
    }
    return out;
}

Polynomial homogeneous_part(const Polynomial& p, unsigned degree)
{
    Polynomial out(p.dimension());
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() == degree) {
            out.add_term(c, m);
        }
    }
    return out;
}

JetDecomposition homogeneous_parts(const Polynomial& p, unsigned order)
{
    std::vector<Polynomial> parts(order + 1, Polynomial(p.dimension()));
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() <= order) {
            parts[m.degree()].add_term(c, m);
        }
    }
    return JetDecomposition(p.dimension(), std::move(parts));
}

Polynomial jet(const Polynomial& p, unsigned order)
{
    Polynomial out(p.dimension());
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() <= order) {
            out.add_term(c, m);
        }
    }
    return out;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t variable)
{
    if (variable >= p.dimension()) {
        throw DimensionError("partial derivative index out of range");
    }
    Polynomial out(p.dimension());
    for (const auto& [m, c] : p.terms()) {
        const unsigned e = m.exponent(variable);
        if (e == 0) {
            continue;
        }
        std::vector<unsigned> exps(m.exponents().begin(), m.exponents().end());
        exps[variable] -= 1;
        out.add_term(c * Rational(static_cast<long>(e)), Monomial(std::move(exps)));
    }
    return out;
}

std::vector<Polynomial> gradient(const Polynomial& p)
{
    std::vector<Polynomial> g;
    g.reserve(p.dimension());
    for (std::size_t i = 0; i < p.dimension(); ++i) {
        g.push_back(partial_derivative(p, i));
    }
    return g;
}

Polynomial radial_derivative(const Polynomial& p)
{
    Polynomial out(p.dimension());
    for (const auto& [m, c] : p.terms()) {
        out.add_term(c * Rational(static_cast<long>(m.degree())), m);
    }
    return out;
}

Polynomial euler_identity_rhs(const JetDecomposition& jets, unsigned s)
{
    if (s < 2) {
        throw Error("euler identity needs s >= 2");
    }
    if (jets.order() < s) {
        throw Error("jet decomposition of order " + std::to_string(jets.order()) +
                    " is too short for s = " + std::to_string(s));
    }
    Polynomial out = Rational(static_cast<long>(s - 1)) * jets.jet(s);
    for (unsigned l = 2; l + 2 <= s; ++l) {
        out -= jets.jet(l);
    }
    out += jets.part(s);
    return out;
}

Polynomial restrict_to_ray(const Polynomial& p, std::span<const Rational> direction)
{
    if (direction.size() != p.dimension()) {
        throw DimensionError("ray direction has wrong dimension");
    }
    if (std::all_of(direction.begin(), direction.end(), [](const Rational& r) { return r.is_zero(); })) {
        throw Error("ray direction must be nonzero");
    }
    Polynomial out(1);
    for (const auto& [m, c] : p.terms()) {
        Rational coeff = c;
        for (std::size_t i = 0; i < p.dimension(); ++i) {
            coeff *= pow(direction[i], m.exponent(i));
        }
        out.add_term(coeff, Monomial({m.degree()}));
    }
    return out;
}

Polynomial substitute_curve(const Polynomial& p, std::span<const Polynomial> curve)
{
    if (curve.size() != p.dimension()) {
        throw DimensionError("curve must supply one polynomial per variable");
    }
    for (const auto& c : curve) {
        if (c.dimension() != 1) {
            throw DimensionError("curve components must be univariate");
        }
    }
    std::vector<std::vector<Polynomial>> powers(p.dimension());
    Polynomial out(1);
    for (const auto& [m, c] : p.terms()) {
        Polynomial value = Polynomial::constant(1, c);
        for (std::size_t i = 0; i < p.dimension(); ++i) {
            const unsigned e = m.exponent(i);
            if (e == 0) {
                continue;
            }
            auto& table = powers[i];
            if (table.empty()) {
                table.push_back(Polynomial::constant(1, Rational(1)));
            }
            while (table.size() <= e) {
                table.push_back(table.back() * curve[i]);
            }
            value = value * table[e];
        }
        out += value;
    }
    return out;
}

// --------------------------------------------------------- FloatPolynomial

FloatPolynomial::FloatPolynomial(const Polynomial& p) : dimension_(p.dimension())
{
    for (const auto& [m, c] : p.terms()) {
        coefficients_.push_back(c.to_double());
        exponents_.insert(exponents_.end(), m.exponents().begin(), m.exponents().end());
    }
    if (dimension_ == 1 && !p.is_zero()) {
        dense_.assign(static_cast<std::size_t>(p.degree()) + 1, 0.0);
        for (std::size_t t = 0; t < coefficients_.size(); ++t) {
            dense_[exponents_[t]] = coefficients_[t];
        }
    }
}

namespace {

inline double ipow(double x, unsigned e)
{
    double result = 1.0;
    while (e > 0) {
        if (e & 1U) {
            result *= x;
        }
        e >>= 1U;
        x *= x;
    }
    return result;
}

}  // namespace

double FloatPolynomial::operator()(std::span<const double> point) const
{
    if (point.size() != dimension_) {
        throw DimensionError("evaluation point has wrong dimension");
    }
    if (!dense_.empty()) {
        double acc = 0.0;
        for (auto it = dense_.rbegin(); it != dense_.rend(); ++it) {
            acc = acc * point[0] + *it;
        }
        return acc;
    }
    double sum = 0.0;
    const unsigned* e = exponents_.data();
    for (double c : coefficients_) {
        double term = c;
        for (std::size_t i = 0; i < dimension_; ++i, ++e) {
            if (*e != 0) {
                term *= ipow(point[i], *e);
            }
        }
        sum += term;
    }
    return sum;
}

}  // namespace cetaev
