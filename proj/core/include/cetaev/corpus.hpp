#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cetaev/field.hpp"
#include "cetaev/potential_spec.hpp"

namespace cetaev {

enum class Expected { Certified, Refuted, Inconclusive, DemonstrationOnly };

std::string_view to_string(Expected e);

struct ExpectedVerdicts {
    Expected h1 = Expected::DemonstrationOnly;
    Expected h2 = Expected::DemonstrationOnly;
    Expected h3 = Expected::DemonstrationOnly;
    Expected strict_cetaev = Expected::DemonstrationOnly;
    /// Certified: an asymptotic trajectory is found; Refuted: the trajectory
    /// command refuses because strict Cetaev is not certified.
    Expected trajectory = Expected::DemonstrationOnly;
};

struct CorpusEntry {
    std::string name;
    std::string description;
    PotentialField field;
    std::optional<PotentialSpec> spec;  // present for polynomial entries
    unsigned s = 2;
    double epsilon = 0.5;
    ExpectedVerdicts expected;
    std::string provenance;
};

/// The built-in potentials, in a fixed order.
const std::vector<CorpusEntry>& catalog();

/// Throws Error listing the known names when `name` is unknown.
const CorpusEntry& find_entry(std::string_view name);

/// f = 8/3 y^6 - 3 y^4 x^4 + 9/10 y^2 x^8 - 1/12 x^12 - y^12 and pi = f + x^14.
Polynomial paper_f();
Polynomial paper_pi();

}  // namespace cetaev
