#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cetaev/field.hpp"
#include "cetaev/regions.hpp"

namespace cetaev {

struct AnalysisOptions {
    double zero_tol = 1e-9;
    double neg_margin = 1e-6;
    double eta = 1e-6;
    unsigned halvings = 8;  // epsilon schedule eps0 * 2^-j, j = 0..halvings
    unsigned shells = 4;    // radii eps * 2^-k, k = 0..shells-1
};

struct HypothesisResult {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<double> margin;
    std::optional<double> epsilon;
    std::optional<std::size_t> component;
    std::vector<std::size_t> component_directions;  // innermost-shell sample indices of the certified cone
    std::vector<Witness> witnesses;
    std::vector<std::pair<double, Verdict>> schedule;  // per tested epsilon
    std::vector<std::string> notes;
};

struct TangentDirection {
    std::vector<double> direction;
    double residual = 0.0;  // max_{2 <= l < s} |part_l(u)|
    double value = 0.0;     // part_s(u)
    std::size_t source = 0;
};

struct TangentDirectionSet {
    std::vector<TangentDirection> directions;
    double zero_tol = 0.0;
    double neg_margin = 0.0;

    [[nodiscard]] bool empty() const noexcept { return directions.empty(); }
    /// Direction with the most negative part_s(u) (lowest source index on ties).
    [[nodiscard]] const TangentDirection& steepest() const;
};

/// j^l p >= 0 for l = 2..s-1, sampled at radii {1, 1/2, 1/4}; also checks
/// that the degree 0 and 1 parts vanish.
HypothesisResult check_h1(const JetDecomposition& jets, unsigned s, const DirectionSet& directions, double zero_tol);

/// Sample directions refined by projected descent on sum_l part_l(u)^2 and
/// kept when the residual is <= zero_tol and part_s(u) <= -neg_margin.
TangentDirectionSet find_tangent_directions(const JetDecomposition& jets, unsigned s, const DirectionSet& directions,
                                            double zero_tol, double neg_margin);

/// Certified when a tangent direction exists; Refuted when j^s p >= margin r^s
/// on the sample at radii {1, 1/2, 1/4}.
HypothesisResult check_h2(const JetDecomposition& jets, unsigned s, const TangentDirectionSet& tangent,
                          const DirectionSet& directions, double margin);

/// Cetaev-type closure test at a single labeling: Certified if some
/// candidate cone certifies, Refuted if every candidate has a witness.
HypothesisResult check_cetaev_at(const RegionLabeling& labeling, const SignedPair& pair, double eta);

/// check_cetaev_at over the halving schedule; Certified at the largest
/// certifying epsilon, Refuted only if every epsilon refutes.
HypothesisResult check_cetaev_schedule(const SignedPair& pair, const std::shared_ptr<const DirectionSet>& directions,
                                       double eps0, const AnalysisOptions& options);

/// (H3): negative components of j^s p against R^s.
HypothesisResult check_h3(const JetDecomposition& jets, unsigned s, const std::shared_ptr<const DirectionSet>& directions,
                          double eps0, const AnalysisOptions& options);

/// Strict Cetaev condition for the full potential.
HypothesisResult check_strict_cetaev(const PotentialField& field, unsigned s,
                                     const std::shared_ptr<const DirectionSet>& directions, double eps0,
                                     const AnalysisOptions& options);

/// W = {Q < 0} with Q = (s-1) j^s p + (-sum_{l=2}^{s-2} j^l p + part_s) / 2.
struct WRegion {
    Polynomial q;
    FloatPolynomial q_float;
    unsigned s = 2;

    [[nodiscard]] bool contains(std::span<const double> point) const { return q_float(point) < 0.0; }
};

WRegion build_w_region(const JetDecomposition& jets, unsigned s);

/// Checks p > 0 on sampled boundary points of W and R_p < 0 on W and its
/// boundary, for eps1 in eps * 2^-j; reports the largest passing eps1.
HypothesisResult verify_sandwich(const PotentialField& field, const WRegion& w,
                                 const std::shared_ptr<const DirectionSet>& directions, double eps,
                                 const AnalysisOptions& options);

}  // namespace cetaev
