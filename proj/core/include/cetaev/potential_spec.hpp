#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cetaev/polynomial.hpp"

namespace cetaev {

/// A polynomial potential plus the constant kinetic matrix B of T = <Bp,p>/2.
///
/// Text format, one directive per line, '#' starts a comment:
///
///     dimension 2
///     variables x y
///     term 8 3 0 6          # numerator denominator exponents...
///     term -3 1 4 4
///     kinetic 1 0 0 1       # optional, n*n row-major entries
///
/// `dimension` must precede every other directive. Without `kinetic` the
/// matrix defaults to the identity.
struct PotentialSpec {
    Polynomial potential;
    std::vector<std::string> variables;
    std::vector<double> kinetic;  // row-major n x n

    [[nodiscard]] std::size_t dimension() const noexcept { return potential.dimension(); }
    [[nodiscard]] bool kinetic_is_identity() const;

    static PotentialSpec from_polynomial(Polynomial p, std::vector<double> kinetic = {});
};

/// Throws ParseError (with line number) on malformed input and ModelError
/// when the kinetic matrix is not symmetric positive definite.
PotentialSpec parse_potential_spec(std::string_view text);

std::string serialize_potential_spec(const PotentialSpec& spec);

/// Throws ModelError unless `b` is an n x n symmetric (within 1e-12) positive
/// definite matrix.
void validate_kinetic_matrix(const std::vector<double>& b, std::size_t n);

}  // namespace cetaev
