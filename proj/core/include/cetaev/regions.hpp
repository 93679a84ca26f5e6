#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "cetaev/field.hpp"
#include "cetaev/rational.hpp"
#include "cetaev/sphere.hpp"
#include "cetaev/verdict.hpp"

namespace cetaev {

enum class SignLabel : std::int8_t { Negative = -1, Boundary = 0, Positive = 1 };

/// A function whose negative set is studied, together with its radial
/// derivative. `degree` sets the tie band |v| <= zero_tol * r^degree.
struct SignedPair {
    using Fn = std::function<double(std::span<const double>)>;
    using ExactFn = std::function<Rational(std::span<const double>)>;

    Fn value;
    Fn radial;
    ExactFn exact_value;   // empty when not polynomial-backed
    ExactFn exact_radial;  // empty when not polynomial-backed
    unsigned degree = 2;

    [[nodiscard]] bool is_exact() const noexcept { return static_cast<bool>(exact_value); }
};

/// j^s(p) and R^s = <grad j^s(p), q>.
SignedPair jet_pair(const JetDecomposition& jets, unsigned s);
/// The full potential and R_Pi, with tie band degree s.
SignedPair field_pair(const PotentialField& field, unsigned s);

/// Labels on one sphere of the sample.
struct ShellLabels {
    SphereSample sample;
    std::vector<double> value;
    std::vector<double> radial;
    std::vector<SignLabel> sign;
    std::vector<std::int32_t> component;  // -1 unless negative
    std::vector<std::vector<std::uint32_t>> components;
};

/// Components on consecutive shells linked through shared directions.
struct Cone {
    std::vector<std::pair<std::size_t, std::size_t>> members;  // (shell, component), sorted
    bool reaches_innermost = false;
};

struct RegionLabeling {
    double epsilon = 0.0;
    double zero_tol = 0.0;
    unsigned degree = 0;
    std::vector<ShellLabels> shells;  // radii epsilon * 2^-k, k = 0..shells-1
    std::vector<Cone> cones;

    /// Cones reaching the innermost shell, i.e. adherent to the origin at sample scale.
    [[nodiscard]] std::vector<std::size_t> candidate_cones() const;
};

/// Samples `pair` on radii epsilon * {1, 1/2, ..., 2^-(shells-1)}; per-point
/// results are merged by index, so the labeling is independent of threading.
RegionLabeling label_regions(const SignedPair& pair, const std::shared_ptr<const DirectionSet>& directions,
                             double epsilon, double zero_tol, unsigned shells = 4);

/// Outcome of testing R < 0 on the closure approximation of one cone.
struct ClosureCheck {
    Verdict verdict = Verdict::Inconclusive;
    /// max of radial / r^degree over the closure points (negative when certified).
    double worst_normalized_radial = 0.0;
    std::size_t closure_points = 0;
    std::vector<Witness> witnesses;
};

/// Component points need R < 0 (ambiguous floats are settled exactly);
/// ring points (neighbours outside the component) need R <= -eta r^s.
/// A component point with R >= 0, or a ring point with R >= eta r^s, is a witness.
ClosureCheck check_cone_closure(const RegionLabeling& labeling, const SignedPair& pair, std::size_t cone,
                                double eta, std::size_t max_witnesses = 64);

/// Point minimizing value / r^degree over all shells (used when no negative set exists).
Witness minimal_point(const RegionLabeling& labeling, const SignedPair& pair);

/// Fills exact_value / exact_radial when pair is polynomial-backed.
void attach_exact(Witness& w, const SignedPair& pair);

}  // namespace cetaev
