#include "cetaev/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cetaev/error.hpp"

namespace cetaev {

bool AnalysisResult::class_h() const
{
    return h1.verdict == Verdict::Certified && h2.verdict == Verdict::Certified && h3.verdict == Verdict::Certified;
}

AnalysisResult analyze(const AnalysisRequest& request)
{
    const PotentialField& field = request.field;
    AnalysisResult out;
    out.source = request.source;
    out.dimension = field.dimension();
    out.variables = request.variables.empty() ? default_variable_names(out.dimension) : request.variables;
    out.polynomial = field.is_polynomial();
    out.potential = out.polynomial ? field.polynomial().to_string(out.variables) : "catalog-backed";
    out.options = request.options;
    out.epsilon = request.epsilon.value_or(0.5);
    if (!(out.epsilon > 0.0)) {
        throw Error("epsilon must be positive");
    }
    if (request.s) {
        out.s = *request.s;
    } else if (out.polynomial) {
        out.s = static_cast<unsigned>(std::max(2, field.polynomial().degree()));
        out.notes.push_back("s defaults to the degree of the potential");
    }
    if (out.s < 2) {
        throw Error("jet order s must be at least 2");
    }
    out.samples = request.samples != 0 ? request.samples : DirectionSet::default_count(out.dimension);
    const auto directions = std::make_shared<const DirectionSet>(out.dimension, out.samples);
    out.samples = directions->size();

    out.strict_cetaev = check_strict_cetaev(field, out.s, directions, out.epsilon, out.options);

    if (out.polynomial) {
        const JetDecomposition jets = homogeneous_parts(field.polynomial(), out.s);
        out.h1 = check_h1(jets, out.s, *directions, out.options.zero_tol);
        out.tangent = find_tangent_directions(jets, out.s, *directions, out.options.zero_tol, out.options.neg_margin);
        out.h2 = check_h2(jets, out.s, out.tangent, *directions, out.options.eta);
        out.h3 = check_h3(jets, out.s, directions, out.epsilon, out.options);
        const WRegion w = build_w_region(jets, out.s);
        out.w_polynomial = w.q.to_string(out.variables);
        const double eps1 = out.strict_cetaev.epsilon.value_or(out.epsilon);
        out.sandwich = verify_sandwich(field, w, directions, eps1, out.options);
        if (!out.class_h()) {
            out.sandwich.notes.push_back("hypotheses H1-H3 are not all certified; the sandwich is informative only");
        }
    } else {
        const std::string note = "catalog-backed potential has no exact jet";
        for (auto* h : {&out.h1, &out.h2, &out.h3, &out.sandwich}) {
            h->verdict = Verdict::Inconclusive;
            h->notes.push_back(note);
        }
    }

    // seed direction: most negative part_s inside the certified component, else overall
    const auto& comp = out.strict_cetaev.component_directions;
    const TangentDirection* best = nullptr;
    for (const auto& t : out.tangent.directions) {
        if (!comp.empty() && !std::binary_search(comp.begin(), comp.end(), t.source)) {
            continue;
        }
        if (best == nullptr || t.value < best->value) {
            best = &t;
        }
    }
    if (best == nullptr && !out.tangent.empty()) {
        best = &out.tangent.steepest();
    }
    if (best != nullptr) {
        out.seed_direction = best->direction;
    } else {
        // lowest potential on a small sphere
        const double r = std::ldexp(out.epsilon, -3);
        double lowest = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < directions->size(); ++i) {
            const auto u = directions->direction(i);
            std::vector<double> q(u.begin(), u.end());
            for (double& v : q) {
                v *= r;
            }
            const double v = field.value(q);
            if (v < lowest && v < 0.0) {
                lowest = v;
                out.seed_direction = std::vector<double>(u.begin(), u.end());
            }
        }
    }
    return out;
}

KrasovskiiRegion trajectory_region(const AnalysisResult& result, std::optional<double> epsilon_override)
{
    if (!result.seed_direction) {
        throw ModelError("no negative direction of the potential was found: there is no Krasovskii region");
    }
    KrasovskiiRegion region;
    region.epsilon = epsilon_override.value_or(result.strict_cetaev.epsilon.value_or(result.epsilon));
    region.direction = *result.seed_direction;
    return region;
}

}  // namespace cetaev
