#pragma once

#include <cmath>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "cetaev/corpus.hpp"
#include "cetaev/hamiltonian.hpp"
#include "cetaev/polynomial.hpp"

namespace cetaev::test {

struct TermSpec {
    Rational c;
    std::vector<unsigned> e;
};

inline Polynomial poly(std::size_t n, std::initializer_list<TermSpec> terms)
{
    Polynomial p(n);
    for (const auto& t : terms) {
        p.add_term(t.c, Monomial(t.e));
    }
    return p;
}

/// Polynomial-backed catalog entries.
inline std::vector<const CorpusEntry*> polynomial_entries()
{
    std::vector<const CorpusEntry*> out;
    for (const auto& e : catalog()) {
        if (e.field.is_polynomial()) {
            out.push_back(&e);
        }
    }
    return out;
}

/// Uniform point in the ball of radius r.
inline std::vector<double> random_in_ball(std::mt19937_64& rng, std::size_t n, double r)
{
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> x(n);
    double norm = 0.0;
    for (auto& v : x) {
        v = g(rng);
        norm += v * v;
    }
    norm = std::sqrt(norm);
    const double scale = r * std::pow(u(rng), 1.0 / static_cast<double>(n)) / norm;
    for (auto& v : x) {
        v *= scale;
    }
    return x;
}

inline double norm2(const std::vector<double>& x)
{
    double s = 0.0;
    for (double v : x) {
        s += v * v;
    }
    return std::sqrt(s);
}

/// Cubic Hermite interpolation of a logged trajectory at time t; empty when t is outside it.
inline std::vector<double> hermite_at(const HamiltonianSystem& sys, const Trajectory& tr, double t)
{
    for (std::size_t i = 1; i < tr.size(); ++i) {
        const double a = tr.t[i - 1];
        const double b = tr.t[i];
        if ((t - a) * (t - b) > 0.0) {
            continue;
        }
        const double h = b - a;
        const double s = (t - a) / h;
        std::vector<double> fa(tr.x[i - 1].size());
        std::vector<double> fb(fa.size());
        sys.vector_field(tr.x[i - 1], fa);
        sys.vector_field(tr.x[i], fb);
        const double h00 = 2 * s * s * s - 3 * s * s + 1;
        const double h10 = s * s * s - 2 * s * s + s;
        const double h01 = -2 * s * s * s + 3 * s * s;
        const double h11 = s * s * s - s * s;
        std::vector<double> out(fa.size());
        for (std::size_t k = 0; k < out.size(); ++k) {
            out[k] = h00 * tr.x[i - 1][k] + h10 * h * fa[k] + h01 * tr.x[i][k] + h11 * h * fb[k];
        }
        return out;
    }
    return {};
}

}  // namespace cetaev::test
