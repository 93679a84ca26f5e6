#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cetaev/hypotheses.hpp"
#include "cetaev/krasovskii.hpp"

namespace cetaev {

struct AnalysisRequest {
    PotentialField field;
    std::vector<std::string> variables;
    std::string source;
    std::optional<unsigned> s;       // defaults to max(2, degree) for polynomials, 2 otherwise
    std::optional<double> epsilon;   // defaults to 0.5
    std::size_t samples = 0;         // 0 selects DirectionSet::default_count
    AnalysisOptions options;
};

struct AnalysisResult {
    std::string source;
    std::vector<std::string> variables;
    std::string potential;  // printable form
    std::size_t dimension = 0;
    bool polynomial = false;
    unsigned s = 2;
    double epsilon = 0.5;
    std::size_t samples = 0;
    AnalysisOptions options;

    HypothesisResult h1;
    HypothesisResult h2;
    HypothesisResult h3;
    HypothesisResult strict_cetaev;
    HypothesisResult sandwich;
    TangentDirectionSet tangent;
    std::optional<std::string> w_polynomial;
    /// Seed direction for the Krasovskii construction (inside the certified
    /// component when there is one).
    std::optional<std::vector<double>> seed_direction;
    std::vector<std::string> notes;

    [[nodiscard]] bool class_h() const;
};

AnalysisResult analyze(const AnalysisRequest& request);

/// Region for find_asymptotic_trajectory: epsilon certified by the strict
/// Cetaev check (or `epsilon_override`), seeded along seed_direction.
/// Throws ModelError when no seed direction is available.
KrasovskiiRegion trajectory_region(const AnalysisResult& result, std::optional<double> epsilon_override = {});

}  // namespace cetaev
