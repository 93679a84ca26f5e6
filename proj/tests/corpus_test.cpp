#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "cetaev/analysis.hpp"
#include "cetaev/corpus.hpp"
#include "cetaev/error.hpp"
#include "cetaev/hamiltonian.hpp"
#include "cetaev/krasovskii.hpp"
#include "cetaev/report.hpp"
#include "cetaev/verify_paper.hpp"

namespace cetaev {
namespace {

bool matches(Expected e, Verdict v)
{
    switch (e) {
    case Expected::Certified:
        return v == Verdict::Certified;
    case Expected::Refuted:
        return v == Verdict::Refuted;
    case Expected::Inconclusive:
        return v == Verdict::Inconclusive;
    case Expected::DemonstrationOnly:
        return true;
    }
    return false;
}

TEST(Catalog, ContainsRequiredEntries)
{
    std::set<std::string> names;
    for (const auto& e : catalog()) {
        EXPECT_TRUE(names.insert(e.name).second) << "duplicate " << e.name;
        EXPECT_FALSE(e.provenance.empty()) << e.name;
        EXPECT_EQ(e.spec.has_value(), e.field.is_polynomial()) << e.name;
    }
    for (const char* n : {"paper-example", "cetaev-counterexample", "painleve", "quartic-well", "lyapunov-saddle",
                          "quartic-sextic", "cubic-1d"}) {
        EXPECT_TRUE(names.count(n)) << n;
    }
    EXPECT_THROW((void)find_entry("no-such-entry"), Error);
}

TEST(Catalog, PaperEntryExpectations)
{
    const auto& e = find_entry("paper-example");
    EXPECT_EQ(e.expected.h1, Expected::Refuted);
    EXPECT_EQ(e.expected.strict_cetaev, Expected::Refuted);
    EXPECT_EQ(e.field.polynomial(), paper_pi());
    EXPECT_EQ(e.s, 12u);
    const auto& q = find_entry("quartic-well").expected;
    for (Expected x : {q.h1, q.h2, q.h3, q.strict_cetaev, q.trajectory}) {
        EXPECT_EQ(x, Expected::Certified);
    }
}

TEST(Catalog, PainleveIsFunctionBacked)
{
    const auto& e = find_entry("painleve");
    EXPECT_FALSE(e.field.is_polynomial());
    const auto& x = e.expected;
    for (Expected v : {x.h1, x.h2, x.h3, x.strict_cetaev, x.trajectory}) {
        EXPECT_EQ(v, Expected::DemonstrationOnly);
    }
    for (double q : {0.2, 0.31, -0.45, 0.7}) {
        const double h = 1e-6;
        const double fd = (e.field.value(std::vector<double>{q + h}) - e.field.value(std::vector<double>{q - h})) / (2 * h);
        const double g = e.field.gradient(std::vector<double>{q})[0];
        EXPECT_NEAR(fd, g, 1e-6 * std::max(1.0, std::abs(g)));
        EXPECT_NEAR(e.field.value(std::vector<double>{q}), std::exp(-1 / (q * q)) * std::sin(1 / q), 1e-15);
    }
    EXPECT_EQ(e.field.value(std::vector<double>{0.0}), 0.0);
}

TEST(Catalog, AnalyzerReproducesExpectedVerdicts)
{
    for (const auto& e : catalog()) {
        AnalysisRequest req{e.field, {}, e.name, e.s, e.epsilon, 0, {}};
        const auto res = analyze(req);
        EXPECT_TRUE(matches(e.expected.h1, res.h1.verdict)) << e.name << " H1 " << to_string(res.h1.verdict);
        EXPECT_TRUE(matches(e.expected.h2, res.h2.verdict)) << e.name << " H2 " << to_string(res.h2.verdict);
        EXPECT_TRUE(matches(e.expected.h3, res.h3.verdict)) << e.name << " H3 " << to_string(res.h3.verdict);
        EXPECT_TRUE(matches(e.expected.strict_cetaev, res.strict_cetaev.verdict))
            << e.name << " SC " << to_string(res.strict_cetaev.verdict);
        const Json check = expectation_check(res, e.expected);
        EXPECT_TRUE(check.at("allMatch").get<bool>()) << e.name << "\n" << check.dump(2);

        if (e.expected.trajectory == Expected::Certified) {
            const HamiltonianSystem sys(e.field);
            const auto rep = find_asymptotic_trajectory(sys, trajectory_region(res));
            EXPECT_EQ(rep.status, AsymptoticStatus::Success) << e.name;
        } else if (e.expected.trajectory == Expected::Refuted) {
            EXPECT_NE(res.strict_cetaev.verdict, Verdict::Certified) << e.name;
        }
    }
}

TEST(VerifyPaper, AllItemsPass)
{
    const auto items = verify_paper_example();
    ASSERT_EQ(items.size(), 7u);
    const char* ids[] = {"a", "b", "c", "d", "e", "f", "g"};
    for (std::size_t i = 0; i < items.size(); ++i) {
        EXPECT_EQ(items[i].id, ids[i]);
        EXPECT_TRUE(items[i].passed) << items[i].id;
    }
    EXPECT_EQ(items[3].method, "sampled");
    for (std::size_t i : {0u, 1u, 2u, 4u, 5u, 6u}) {
        EXPECT_EQ(items[i].method, "exact") << items[i].id;
    }
    // provenance notes on the printed coefficients
    EXPECT_FALSE(items[1].notes.empty());
    EXPECT_FALSE(items[6].notes.empty());
}

TEST(VerifyPaper, SingleItemAndUnknownId)
{
    const auto c = verify_paper_example(std::string("c"));
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].id, "c");
    EXPECT_TRUE(c[0].passed);
    EXPECT_THROW((void)verify_paper_example(std::string("z")), Error);
}

TEST(VerifyPaper, EndpointValues)
{
    const auto d = verify_paper_example(std::string("d"));
    bool endpoint = false;
    for (const auto& [label, value] : d[0].values) {
        endpoint = endpoint || value.find("-397/7680") != std::string::npos;
    }
    EXPECT_TRUE(endpoint);
}

}  // namespace
}  // namespace cetaev
