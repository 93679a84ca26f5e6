#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cetaev/analysis.hpp"
#include "cetaev/corpus.hpp"
#include "cetaev/verify_paper.hpp"

namespace cetaev {

using Json = nlohmann::ordered_json;

Json to_json(const Witness& w);
Json to_json(const HypothesisResult& h);
Json to_json(const TangentDirectionSet& t, std::size_t max_listed = 16);
Json to_json(const AnalysisResult& a);
Json to_json(const AsymptoticReport& r);
Json to_json(const PaperItem& item);
Json to_json(const ExpectedVerdicts& e);
/// Catalog listing entry (no analysis).
Json to_json(const CorpusEntry& e);

/// Compares an analysis against catalog expectations (Demonstration-only is exempt).
Json expectation_check(const AnalysisResult& a, const ExpectedVerdicts& e);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& doc);

/// Writes through a temporary file in the same directory and renames it into place.
void write_atomic(const std::filesystem::path& path, std::string_view content);

/// UTC time in ISO 8601, e.g. 2024-01-31T12:00:00Z.
std::string utc_timestamp();

}  // namespace cetaev
