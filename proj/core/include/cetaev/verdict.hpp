#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cetaev {

enum class Verdict { Certified, Refuted, Inconclusive };

std::string_view to_string(Verdict v);

/// A sample point backing a verdict. Exact values are filled in (as
/// rational strings) whenever the evaluated function is polynomial-backed.
struct Witness {
    std::string kind;
    std::vector<double> point;
    double radius = 0.0;
    double value = 0.0;
    std::optional<double> radial;
    std::optional<std::string> exact_value;
    std::optional<std::string> exact_radial;
};

}  // namespace cetaev
