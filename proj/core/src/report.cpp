#include "cetaev/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <system_error>

#include "cetaev/error.hpp"

namespace cetaev {
namespace {

Json number_or_null(double v)
{
    return std::isfinite(v) ? Json(v) : Json(nullptr);
}

template <class T>
Json optional_json(const std::optional<T>& v)
{
    if (!v) {
        return nullptr;
    }
    if constexpr (std::is_floating_point_v<T>) {
        return number_or_null(*v);
    } else {
        return Json(*v);
    }
}

Json vector_json(const std::vector<double>& v)
{
    Json a = Json::array();
    for (double x : v) {
        a.push_back(number_or_null(x));
    }
    return a;
}

}  // namespace

Json to_json(const Witness& w)
{
    Json j;
    j["kind"] = w.kind;
    j["point"] = vector_json(w.point);
    j["radius"] = number_or_null(w.radius);
    j["value"] = number_or_null(w.value);
    j["radial"] = w.radial ? number_or_null(*w.radial) : Json(nullptr);
    j["exactValue"] = optional_json(w.exact_value);
    j["exactRadial"] = optional_json(w.exact_radial);
    return j;
}

Json to_json(const HypothesisResult& h)
{
    Json j;
    j["verdict"] = std::string(to_string(h.verdict));
    j["margin"] = optional_json(h.margin);
    j["epsilon"] = optional_json(h.epsilon);
    j["component"] = optional_json(h.component);
    if (!h.schedule.empty()) {
        Json s = Json::array();
        for (const auto& [eps, v] : h.schedule) {
            s.push_back({{"epsilon", eps}, {"verdict", std::string(to_string(v))}});
        }
        j["schedule"] = std::move(s);
    }
    Json ws = Json::array();
    for (const auto& w : h.witnesses) {
        ws.push_back(to_json(w));
    }
    j["witnesses"] = std::move(ws);
    j["notes"] = h.notes;
    return j;
}

Json to_json(const TangentDirectionSet& t, std::size_t max_listed)
{
    Json j;
    j["count"] = t.directions.size();
    j["zeroTol"] = t.zero_tol;
    j["negMargin"] = t.neg_margin;
    Json list = Json::array();
    for (std::size_t i = 0; i < t.directions.size() && i < max_listed; ++i) {
        const auto& d = t.directions[i];
        list.push_back({{"direction", vector_json(d.direction)},
                        {"residual", number_or_null(d.residual)},
                        {"value", number_or_null(d.value)},
                        {"source", d.source}});
    }
    j["directions"] = std::move(list);
    return j;
}

Json to_json(const AnalysisResult& a)
{
    Json j;
    j["input"] = {{"source", a.source},
                  {"potential", a.potential},
                  {"dimension", a.dimension},
                  {"variables", a.variables},
                  {"polynomial", a.polynomial}};
    j["parameters"] = {{"s", a.s},
                       {"epsilon", a.epsilon},
                       {"samples", a.samples},
                       {"zeroTol", a.options.zero_tol},
                       {"negMargin", a.options.neg_margin},
                       {"eta", a.options.eta},
                       {"halvings", a.options.halvings},
                       {"shells", a.options.shells},
                       {"neighbours", DirectionSet::kNeighbours}};
    j["hypotheses"] = {{"H1", to_json(a.h1)},
                       {"H2", to_json(a.h2)},
                       {"H3", to_json(a.h3)},
                       {"strictCetaev", to_json(a.strict_cetaev)}};
    j["classH"] = a.class_h();
    j["tangentDirections"] = to_json(a.tangent);
    j["wRegion"] = {{"Q", optional_json(a.w_polynomial)}, {"sandwich", to_json(a.sandwich)}};
    j["seedDirection"] = a.seed_direction ? vector_json(*a.seed_direction) : Json(nullptr);
    j["notes"] = a.notes;
    return j;
}

Json to_json(const AsymptoticReport& r)
{
    Json j;
    j["status"] = std::string(to_string(r.status));
    j["epsilon"] = r.epsilon;
    Json exits = Json::array();
    for (const auto& e : r.exits) {
        exits.push_back({{"k", e.seed.k},
                         {"seed", vector_json(e.seed.state)},
                         {"lambda", e.seed.lambda},
                         {"seedEnergy", e.seed.energy},
                         {"exitTime", e.exit_time},
                         {"exitState", vector_json(e.exit_state)},
                         {"steps", e.steps},
                         {"wViolations", e.w_violations},
                         {"vViolations", e.v_violations}});
    }
    j["exits"] = std::move(exits);
    j["exitTimesIncreasing"] = r.exit_times_increasing;
    j["cauchyGap"] = r.cauchy_gap;
    j["cauchy"] = r.cauchy;
    j["limitState"] = vector_json(r.limit_state);
    j["backDuration"] = r.back_duration;
    j["backwardSteps"] = r.backward.size() == 0 ? 0 : r.backward.size() - 1;
    j["monotoneDecay"] = r.monotone_decay;
    j["finalNorm"] = r.final_norm;
    j["finalNormOverEpsilon"] = r.epsilon > 0.0 ? r.final_norm / r.epsilon : 0.0;
    j["vMonotone"] = r.v_monotone;
    j["staysInRegion"] = r.stays_in_region;
    j["maxWBackward"] = r.max_w_backward;
    j["loglogSlope"] = optional_json(r.loglog_slope);
    j["notes"] = r.notes;
    return j;
}

Json to_json(const PaperItem& item)
{
    Json j;
    j["id"] = item.id;
    j["claim"] = item.claim;
    j["method"] = item.method;
    j["passed"] = item.passed;
    Json values;
    for (const auto& [k, v] : item.values) {
        values[k] = v;
    }
    j["values"] = std::move(values);
    j["notes"] = item.notes;
    return j;
}

Json to_json(const ExpectedVerdicts& e)
{
    return {{"H1", std::string(to_string(e.h1))},
            {"H2", std::string(to_string(e.h2))},
            {"H3", std::string(to_string(e.h3))},
            {"strictCetaev", std::string(to_string(e.strict_cetaev))},
            {"trajectory", std::string(to_string(e.trajectory))}};
}

Json to_json(const CorpusEntry& e)
{
    Json j;
    j["name"] = e.name;
    j["description"] = e.description;
    j["dimension"] = e.field.dimension();
    j["polynomial"] = e.field.is_polynomial();
    j["s"] = e.s;
    j["epsilon"] = e.epsilon;
    j["expected"] = to_json(e.expected);
    j["provenance"] = e.provenance;
    return j;
}

Json expectation_check(const AnalysisResult& a, const ExpectedVerdicts& e)
{
    Json j;
    bool all = true;
    const std::pair<const char*, std::pair<Expected, Verdict>> rows[] = {
        {"H1", {e.h1, a.h1.verdict}},
        {"H2", {e.h2, a.h2.verdict}},
        {"H3", {e.h3, a.h3.verdict}},
        {"strictCetaev", {e.strict_cetaev, a.strict_cetaev.verdict}}};
    for (const auto& [name, pair] : rows) {
        const auto& [want, got] = pair;
        if (want == Expected::DemonstrationOnly) {
            j[name] = "exempt";
            continue;
        }
        const bool ok = to_string(want) == to_string(got);
        all = all && ok;
        j[name] = ok ? "match" : "mismatch";
    }
    j["allMatch"] = all;
    return j;
}

std::string dump(const Json& doc)
{
    return doc.dump(2) + "\n";
}

void write_atomic(const std::filesystem::path& path, std::string_view content)
{
    namespace fs = std::filesystem;
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error("cannot open " + tmp.string() + " for writing");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            throw Error("write to " + tmp.string() + " failed");
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace cetaev
