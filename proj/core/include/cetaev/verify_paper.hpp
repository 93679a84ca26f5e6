#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cetaev {

/// One exact (or densely sampled) check of the worked example.
struct PaperItem {
    std::string id;  // "a" .. "g"
    std::string claim;
    std::string method;  // "exact" or "sampled"
    bool passed = false;
    std::vector<std::pair<std::string, std::string>> values;  // label -> printed value
    std::vector<std::string> notes;
};

/// Runs items (a)-(g), or only `only` when given; throws Error for an unknown id.
std::vector<PaperItem> verify_paper_example(const std::optional<std::string>& only = std::nullopt);

}  // namespace cetaev
