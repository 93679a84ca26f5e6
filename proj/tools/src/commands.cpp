#include "cetaev_cli/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cetaev/analysis.hpp"
#include "cetaev/corpus.hpp"
#include "cetaev/error.hpp"
#include "cetaev/potential_spec.hpp"
#include "cetaev/report.hpp"
#include "cetaev/trajectory_io.hpp"
#include "cetaev/verify_paper.hpp"

namespace cetaev::cli {
namespace {

struct Loaded {
    PotentialField field;
    std::vector<std::string> variables;
    std::vector<double> kinetic;
    std::string source;
    const CorpusEntry* entry = nullptr;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read potential spec '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Loaded load(const RunConfig& config)
{
    if (config.corpus) {
        const CorpusEntry& e = find_entry(*config.corpus);
        Loaded l{e.field, {}, {}, "corpus:" + e.name, &e};
        if (e.spec) {
            l.variables = e.spec->variables;
            l.kinetic = e.spec->kinetic;
        }
        return l;
    }
    const std::string text = read_file(*config.input);
    const PotentialSpec spec = [&] {
        try {
            return parse_potential_spec(text);
        } catch (const ParseError& e) {
            throw Error(*config.input + ":" + std::to_string(e.line()) + ": " + e.detail());
        } catch (const ModelError& e) {
            throw ModelError(*config.input + ": " + e.what());
        }
    }();
    return Loaded{PotentialField::from_polynomial(spec.potential), spec.variables, spec.kinetic, *config.input, nullptr};
}

AnalysisRequest make_request(const RunConfig& config, const Loaded& l)
{
    AnalysisRequest req{l.field, l.variables, l.source, config.s, config.eps, config.samples, {}};
    if (l.entry != nullptr) {
        req.s = config.s.value_or(l.entry->s);
        req.epsilon = config.eps.value_or(l.entry->epsilon);
    }
    req.options.zero_tol = config.zero_tol;
    req.options.neg_margin = config.neg_margin;
    req.options.eta = config.margin;
    return req;
}

Json header(const RunConfig& config, const std::string& command)
{
    Json j;
    j["tool"] = "cetaev";
    j["version"] = "0.1.0";
    j["command"] = command;
    if (!config.no_timestamp) {
        j["generated_at"] = utc_timestamp();
    }
    return j;
}

void emit(const RunConfig& config, const Json& doc, const std::string& file, std::ostream& out, bool print_json)
{
    const std::string text = dump(doc);
    if (print_json) {
        out << text;
    }
    if (config.out_dir) {
        write_atomic(std::filesystem::path(*config.out_dir) / file, text);
    }
}

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void print_line(std::ostream& out, const std::string& name, const HypothesisResult& h)
{
    out << "  " << name;
    for (std::size_t i = name.size(); i < 14; ++i) {
        out << ' ';
    }
    out << to_string(h.verdict);
    if (h.epsilon) {
        out << "  epsilon=" << fmt(*h.epsilon);
    }
    if (h.margin) {
        out << "  margin=" << fmt(*h.margin);
    }
    if (!h.witnesses.empty()) {
        out << "  witnesses=" << h.witnesses.size() << " (first: " << h.witnesses.front().kind << ")";
    }
    out << '\n';
}

void print_analysis(std::ostream& out, const AnalysisResult& a)
{
    out << "source     " << a.source << '\n';
    out << "potential  " << a.potential << '\n';
    out << "s=" << a.s << "  epsilon=" << fmt(a.epsilon) << "  samples=" << a.samples << '\n';
    print_line(out, "H1", a.h1);
    print_line(out, "H2", a.h2);
    print_line(out, "H3", a.h3);
    print_line(out, "strictCetaev", a.strict_cetaev);
    print_line(out, "sandwich", a.sandwich);
    out << "  class H       " << (a.class_h() ? "yes" : "no") << '\n';
}

}  // namespace

void validate(const RunConfig& config)
{
    const bool needs_input = config.subcommand == "analyze" || config.subcommand == "trajectory";
    if (needs_input && config.corpus.has_value() == config.input.has_value()) {
        throw Error("exactly one of --corpus or --input is required");
    }
    if (config.s && *config.s < 2) {
        throw Error("--s must be at least 2");
    }
    if (config.eps && !(*config.eps > 0.0)) {
        throw Error("--eps must be positive");
    }
    if (!(config.zero_tol > 0.0) || !(config.margin > 0.0) || !(config.neg_margin > 0.0)) {
        throw Error("tolerances must be positive");
    }
    if (config.seeds < 3) {
        throw Error("--seeds must be at least 3");
    }
}

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& /*err*/)
{
    const Loaded l = load(config);
    const AnalysisResult a = analyze(make_request(config, l));
    Json doc = header(config, "analyze");
    const Json body = to_json(a);
    for (const auto& [k, v] : body.items()) {
        doc[k] = v;
    }
    if (l.entry != nullptr) {
        doc["expected"] = to_json(l.entry->expected);
        doc["expectationCheck"] = expectation_check(a, l.entry->expected);
    }
    emit(config, doc, "analyze.json", out, config.json);
    if (!config.json) {
        print_analysis(out, a);
    }
    return kOk;
}

int cmd_trajectory(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const Loaded l = load(config);
    const AnalysisResult a = analyze(make_request(config, l));
    Json doc = header(config, "trajectory");
    doc["input"] = {{"source", a.source}, {"potential", a.potential}, {"dimension", a.dimension}};
    doc["strictCetaev"] = to_json(a.strict_cetaev);
    KrasovskiiOptions ko;
    ko.k_last = config.seeds;
    doc["parameters"] = {{"s", a.s},
                         {"epsilon0", a.epsilon},
                         {"kFirst", ko.k_first},
                         {"kLast", ko.k_last},
                         {"backFactor", ko.back_factor},
                         {"cauchyTol", ko.cauchy_tol},
                         {"finalTol", ko.final_tol},
                         {"rtol", IntegrationOptions{}.rtol},
                         {"atol", IntegrationOptions{}.atol},
                         {"forced", config.force}};

    if (a.strict_cetaev.verdict != Verdict::Certified && !config.force) {
        const std::string why = "strict Cetaev condition is " + std::string(to_string(a.strict_cetaev.verdict)) +
                                "; an asymptotic motion is only constructed for certified potentials "
                                "(use --force to run anyway)";
        doc["refused"] = true;
        doc["reason"] = why;
        emit(config, doc, "trajectory.json", out, config.json);
        err << "cetaev trajectory: refused: " << why << '\n';
        return kRefused;
    }
    doc["refused"] = false;
    const HamiltonianSystem sys(l.field, l.kinetic);
    const KrasovskiiRegion region = trajectory_region(a, config.eps && !l.entry ? config.eps : std::nullopt);
    const AsymptoticReport rep = find_asymptotic_trajectory(sys, region, ko);
    doc["seedDirection"] = region.direction;
    doc["asymptotic"] = to_json(rep);
    if (config.out_dir && rep.backward.size() > 0) {
        write_atomic(std::filesystem::path(*config.out_dir) / "trajectory.csv", trajectory_csv(rep.backward));
    }
    emit(config, doc, "trajectory.json", out, config.json);
    if (!config.json) {
        out << "source     " << a.source << '\n';
        out << "status     " << to_string(rep.status) << '\n';
        out << "epsilon    " << fmt(rep.epsilon) << '\n';
        if (!rep.exits.empty()) {
            out << "exits      k=" << rep.exits.front().seed.k << ".." << rep.exits.back().seed.k
                << "  T_exit increasing=" << (rep.exit_times_increasing ? "yes" : "no")
                << "  cauchy gap/eps=" << fmt(rep.cauchy_gap / rep.epsilon) << '\n';
            out << "backward   T=" << fmt(rep.back_duration) << "  final |x|/eps=" << fmt(rep.final_norm / rep.epsilon)
                << "  slope=" << (rep.loglog_slope ? fmt(*rep.loglog_slope) : "n/a") << '\n';
        }
        for (const auto& n : rep.notes) {
            out << "note       " << n << '\n';
        }
    }
    return kOk;
}

int cmd_verify_paper(const RunConfig& config, std::ostream& out, std::ostream& /*err*/)
{
    const auto items = verify_paper_example(config.item);
    Json doc = header(config, "verify-paper");
    Json list = Json::array();
    bool all = true;
    for (const auto& it : items) {
        list.push_back(to_json(it));
        all = all && it.passed;
    }
    doc["items"] = std::move(list);
    doc["allPassed"] = all;
    emit(config, doc, "verify-paper.json", out, config.json);
    if (!config.json) {
        for (const auto& it : items) {
            out << "(" << it.id << ") " << (it.passed ? "PASS" : "FAIL") << "  [" << it.method << "] " << it.claim << '\n';
            for (const auto& [k, v] : it.values) {
                out << "      " << k << ": " << v << '\n';
            }
            for (const auto& n : it.notes) {
                out << "      note: " << n << '\n';
            }
        }
    }
    return all ? kOk : kCheckFailed;
}

int cmd_catalog(const RunConfig& config, std::ostream& out, std::ostream& /*err*/)
{
    Json doc = header(config, "catalog");
    Json list = Json::array();
    for (const auto& e : catalog()) {
        list.push_back(to_json(e));
    }
    doc["entries"] = std::move(list);
    emit(config, doc, "catalog.json", out, config.json);
    if (!config.json) {
        for (const auto& e : catalog()) {
            out << e.name;
            for (std::size_t i = e.name.size(); i < 24; ++i) {
                out << ' ';
            }
            out << "n=" << e.field.dimension() << "  s=" << e.s << "  " << e.description << '\n';
        }
    }
    return kOk;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        validate(config);
        if (config.subcommand == "analyze") {
            return cmd_analyze(config, out, err);
        }
        if (config.subcommand == "trajectory") {
            return cmd_trajectory(config, out, err);
        }
        if (config.subcommand == "verify-paper") {
            return cmd_verify_paper(config, out, err);
        }
        if (config.subcommand == "catalog") {
            return cmd_catalog(config, out, err);
        }
        err << "cetaev: unknown subcommand '" << config.subcommand << "'\n";
        return kError;
    } catch (const std::exception& e) {
        err << "cetaev " << config.subcommand << ": error: " << e.what() << '\n';
        return kError;
    }
}

}  // namespace cetaev::cli
