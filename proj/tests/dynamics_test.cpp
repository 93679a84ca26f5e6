#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cetaev/analysis.hpp"
#include "cetaev/corpus.hpp"
#include "cetaev/error.hpp"
#include "cetaev/hamiltonian.hpp"
#include "cetaev/krasovskii.hpp"
#include "cetaev/trajectory_io.hpp"
#include "test_support.hpp"

namespace cetaev {
namespace {

using test::poly;

PotentialField quartic_1d() { return PotentialField::from_polynomial(poly(1, {{Rational(-1, 4), {4}}}), 4); }
PotentialField quartic_well() { return PotentialField::from_polynomial(poly(2, {{-1, {4, 0}}, {-1, {0, 4}}}), 4); }

/// Start point for bounded-time tests: the counterexample orbits its centre at (2/3, 0).
std::vector<double> base_state(const CorpusEntry& e)
{
    std::vector<double> x(2 * e.field.dimension(), 0.0);
    if (e.name == "cetaev-counterexample") {
        x[0] = 2.0 / 3.0;
    }
    return x;
}

std::vector<double> random_state(std::mt19937_64& rng, const CorpusEntry& e, double r)
{
    auto x = base_state(e);
    const auto d = test::random_in_ball(rng, x.size(), r);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] += d[i];
    }
    return x;
}

TEST(VectorField, EquilibriumAndQuartic)
{
    const HamiltonianSystem sys(quartic_well());
    std::vector<double> out(4);
    sys.vector_field(std::vector<double>{0, 0, 0, 0}, out);
    for (double v : out) {
        EXPECT_EQ(v, 0.0);
    }
    const HamiltonianSystem one(quartic_1d());
    std::vector<double> f(2);
    one.vector_field(std::vector<double>{0.7, -0.3}, f);
    EXPECT_DOUBLE_EQ(f[0], -0.3);
    EXPECT_DOUBLE_EQ(f[1], 0.7 * 0.7 * 0.7);
}

TEST(VectorField, KineticMatrixScalesVelocity)
{
    const HamiltonianSystem sys(quartic_well(), {2, 0.5, 0.5, 1});
    std::vector<double> f(4);
    sys.vector_field(std::vector<double>{0.1, 0.2, 1.0, -1.0}, f);
    EXPECT_DOUBLE_EQ(f[0], 1.5);
    EXPECT_DOUBLE_EQ(f[1], -0.5);
    EXPECT_THROW(HamiltonianSystem(quartic_well(), {1, 0, 0, -1}), ModelError);
    EXPECT_THROW(HamiltonianSystem(quartic_well(), {1, 0, 0}), Error);
}

TEST(VectorField, EnergyGradientMatchesFiniteDifferences)
{
    std::mt19937_64 rng(21);
    for (const auto& e : catalog()) {
        const HamiltonianSystem sys(e.field, e.spec ? e.spec->kinetic : std::vector<double>{});
        for (int k = 0; k < 50; ++k) {
            const auto x = random_state(rng, e, 0.6);
            std::vector<double> g(x.size());
            sys.energy_gradient(x, g);
            for (std::size_t i = 0; i < x.size(); ++i) {
                auto a = x;
                auto b = x;
                const double h = 1e-6;
                a[i] += h;
                b[i] -= h;
                const double fd = (sys.energy(a) - sys.energy(b)) / (2 * h);
                EXPECT_NEAR(fd, g[i], 1e-6) << e.name;
            }
            // Hamilton's equations: dq/dt = dH/dp, dp/dt = -dH/dq
            std::vector<double> f(x.size());
            sys.vector_field(x, f);
            const std::size_t n = x.size() / 2;
            for (std::size_t i = 0; i < n; ++i) {
                EXPECT_DOUBLE_EQ(f[i], g[n + i]);
                EXPECT_DOUBLE_EQ(f[n + i], -g[i]);
            }
        }
    }
}

TEST(Integrate, AnalyticQuarticSolution)
{
    // x(t) = sqrt2 / (c - t) solves x'' = x^3 with p = x^2 / sqrt2
    const HamiltonianSystem sys(quartic_1d());
    const double c = 10.0;
    const double r2 = std::sqrt(2.0);
    const std::vector<double> start = {r2 / c, r2 / (c * c)};
    const Trajectory tr = integrate(sys, start, 0.0, 90.0, TimeDirection::Backward);
    ASSERT_TRUE(tr.complete());
    EXPECT_DOUBLE_EQ(tr.t.back(), -90.0);
    for (std::size_t i = 1; i < tr.size(); ++i) {
        EXPECT_LT(tr.t[i], tr.t[i - 1]);
    }
    const double expected = r2 / (c + 90.0);
    EXPECT_LE(std::abs(tr.x.back()[0] - expected) / expected, 1e-3);
    const auto mid = test::hermite_at(sys, tr, -40.0);
    ASSERT_EQ(mid.size(), 2u);
    EXPECT_LE(std::abs(mid[0] - r2 / (c + 40.0)) / (r2 / (c + 40.0)), 1e-3);
}

TEST(Integrate, EnergyDriftOnCorpusSystems)
{
    std::mt19937_64 rng(22);
    for (const auto& e : catalog()) {
        const HamiltonianSystem sys(e.field);
        for (int k = 0; k < 4; ++k) {
            const auto x = random_state(rng, e, 0.02);
            IntegrationOptions opts;
            opts.domain_bound = 1.0;
            const Trajectory tr = integrate(sys, x, 0.0, 50.0, TimeDirection::Forward, opts);
            EXPECT_FALSE(tr.step_underflow || tr.step_budget) << e.name;
            const double h0 = tr.H.front();
            for (double h : tr.H) {
                EXPECT_LE(std::abs(h - h0), 1e-8 * std::max(1.0, std::abs(h0))) << e.name;
            }
        }
    }
}

TEST(Integrate, ForwardBackwardRoundTrip)
{
    std::mt19937_64 rng(23);
    for (const auto& e : catalog()) {
        const HamiltonianSystem sys(e.field);
        for (int k = 0; k < 4; ++k) {
            const auto x = random_state(rng, e, 0.02);
            IntegrationOptions opts;
            opts.domain_bound = 1.0;
            const Trajectory fwd = integrate(sys, x, 0.0, 10.0, TimeDirection::Forward, opts);
            ASSERT_TRUE(fwd.complete()) << e.name;
            const Trajectory back = integrate(sys, fwd.x.back(), 10.0, 10.0, TimeDirection::Backward, opts);
            ASSERT_TRUE(back.complete()) << e.name;
            double err = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                err = std::max(err, std::abs(back.x.back()[i] - x[i]));
            }
            EXPECT_LE(err, 1e-6) << e.name;
        }
    }
}

TEST(Integrate, StopsAtDomainBound)
{
    const HamiltonianSystem sys(quartic_1d());
    IntegrationOptions opts;
    opts.domain_bound = 0.5;
    const Trajectory tr = integrate(sys, std::vector<double>{0.1, 0.1}, 0.0, 1e3, TimeDirection::Forward, opts);
    EXPECT_TRUE(tr.left_domain);
    EXPECT_FALSE(tr.complete());
}

TEST(Auxiliary, KineticTermPositiveForNonzeroMomentum)
{
    std::mt19937_64 rng(24);
    const HamiltonianSystem sys(quartic_well(), {2, 0.5, 0.5, 1});
    for (int k = 0; k < 1000; ++k) {
        auto x = test::random_in_ball(rng, 4, 1.0);
        if (x[2] == 0.0 && x[3] == 0.0) {
            x[2] = 1e-3;
        }
        const auto [vdot, wdot] = sys.auxiliary_derivatives(x);
        const double r = sys.potential().radial(std::span<const double>(x).first(2));
        const double two_t = -vdot + r;
        EXPECT_GT(two_t, 0.0);
        EXPECT_NEAR(two_t, 2.0 * sys.kinetic_energy(x), 1e-12);
        EXPECT_NEAR(wdot, (two_t - r) * sys.energy(x), 1e-12);
    }
    // p = 0: V' = R(q)
    const std::vector<double> still = {0.3, -0.2, 0.0, 0.0};
    EXPECT_NEAR(sys.auxiliary_derivatives(still).first, sys.potential().radial(std::span<const double>(still).first(2)),
                1e-15);
}

double v_of(const HamiltonianSystem& sys, const std::vector<double>& x) { return sys.v_function(x); }

TEST(Auxiliary, VDotMatchesFiniteDifferencesAlongArcs)
{
    std::mt19937_64 rng(25);
    const char* names[] = {"quartic-well", "lyapunov-saddle", "paper-example", "cetaev-counterexample"};
    int arcs = 0;
    for (const char* name : names) {
        const auto& e = find_entry(name);
        const HamiltonianSystem sys(e.field);
        for (int k = 0; k < 25; ++k, ++arcs) {
            const auto x0 = random_state(rng, e, 0.4);
            const Trajectory arc = integrate(sys, x0, 0.0, 0.2, TimeDirection::Forward);
            const auto& x = arc.x[arc.size() / 2];
            const auto d = [&](double h) {
                const auto a = dopri_step(sys, x, h, TimeDirection::Forward);
                const auto b = dopri_step(sys, x, h, TimeDirection::Backward);
                return (v_of(sys, a) - v_of(sys, b)) / (2 * h);
            };
            const double h = 1e-2;
            const double richardson = (4 * d(h / 2) - d(h)) / 3;
            const double analytic = sys.auxiliary_derivatives(x).first;
            EXPECT_LE(std::abs(richardson - analytic), 1e-6 * std::abs(analytic)) << name;
        }
    }
    EXPECT_EQ(arcs, 100);
}

KrasovskiiRegion region_for(const std::string& name)
{
    const auto& e = find_entry(name);
    AnalysisRequest req{e.field, {}, e.name, e.s, e.epsilon, 0, {}};
    return trajectory_region(analyze(req));
}

TEST(Krasovskii, WDecreasesInsideU)
{
    std::mt19937_64 rng(26);
    const HamiltonianSystem sys(quartic_well());
    const KrasovskiiRegion region{0.5, {1.0, 0.0}};
    int inside = 0;
    for (int k = 0; k < 4000; ++k) {
        const auto x = test::random_in_ball(rng, 4, 0.5);
        if (!region.contains(sys, x)) {
            continue;
        }
        ++inside;
        EXPECT_LT(sys.w_function(x), 0.0);
        EXPECT_LE(sys.auxiliary_derivatives(x).second, 0.0);
        EXPECT_LT(sys.auxiliary_derivatives(x).first, 0.0);
    }
    EXPECT_GT(inside, 50);
}

TEST(Krasovskii, LinearRepellerExits)
{
    const HamiltonianSystem sys(PotentialField::from_polynomial(poly(2, {{-1, {2, 0}}, {-1, {0, 2}}})));
    const KrasovskiiRegion region{0.5, {1.0, 0.0}};
    const double d = 1e-3;
    const auto r = escape_time(sys, region, std::vector<double>{d, 0.0, d, 0.0});
    EXPECT_GT(r.exit_time, 0.0);
    EXPECT_NEAR(phase_norm(r.exit_state), 0.5, 1e-9);
}

TEST(Krasovskii, PaperFExitsAlongAxis)
{
    const HamiltonianSystem sys(PotentialField::from_polynomial(paper_f(), 12));
    const KrasovskiiRegion region{0.5, {1.0, 0.0}};
    // q = p = (d, 0) has H > 0, so it is outside U; it still leaves the ball
    const double d = 0.01;
    IntegrationOptions opts;
    opts.stop = [](std::span<const double> x) { return phase_norm(x) >= 0.5; };
    const Trajectory tr = integrate(sys, std::vector<double>{d, 0.0, d, 0.0}, 0.0, 1e4, TimeDirection::Forward, opts);
    EXPECT_TRUE(tr.stopped);
    EXPECT_GT(tr.x.back()[0], 0.0);
    // seeds inside U along the axis exit through the sphere; escape from the degree-12 well takes ~|q|^-5
    for (unsigned k = 2; k <= 3; ++k) {
        const Seed seed = make_seed(sys, region, k);
        const auto r = escape_time(sys, region, seed.state);
        EXPECT_NEAR(phase_norm(r.exit_state), 0.5, 1e-9);
        EXPECT_GT(r.exit_state[0], 0.0);
        EXPECT_EQ(r.w_violations, 0u);
    }
}

TEST(Krasovskii, StableWellHasNoSeed)
{
    const HamiltonianSystem sys(PotentialField::from_polynomial(poly(2, {{1, {2, 0}}, {1, {0, 2}}})));
    const KrasovskiiRegion region{0.5, {1.0, 0.0}};
    EXPECT_THROW((void)make_seed(sys, region, 2), ModelError);
}

TEST(Krasovskii, ExitTimesIncreaseOnStrictCetaevSystems)
{
    for (const auto& e : catalog()) {
        AnalysisRequest req{e.field, {}, e.name, e.s, e.epsilon, 0, {}};
        const auto res = analyze(req);
        if (res.strict_cetaev.verdict != Verdict::Certified) {
            continue;
        }
        const HamiltonianSystem sys(e.field);
        const auto region = trajectory_region(res);
        double prev = 0.0;
        for (unsigned k = 2; k <= 10; ++k) {
            const Seed seed = make_seed(sys, region, k);
            EXPECT_TRUE(region.contains(sys, seed.state)) << e.name;
            const auto r = escape_time(sys, region, seed.state);
            EXPECT_GT(r.exit_time, prev) << e.name << " k=" << k;
            EXPECT_EQ(r.w_violations, 0u) << e.name;
            EXPECT_EQ(r.v_violations, 0u) << e.name;
            prev = r.exit_time;
        }
    }
}

TEST(Krasovskii, QuarticOneDimensionalMatchesAnalyticFamily)
{
    const auto region = region_for("cubic-1d");
    const HamiltonianSystem sys(quartic_1d());
    const auto rep = find_asymptotic_trajectory(sys, region);
    ASSERT_EQ(rep.status, AsymptoticStatus::Success);
    ASSERT_TRUE(rep.loglog_slope.has_value());
    EXPECT_NEAR(*rep.loglog_slope, -1.0, 0.05);
    // the orbit through the limit state is x(t) = sqrt2 / (c - t) with c = sqrt2 / x(0)
    const double x0 = std::abs(rep.limit_state[0]);
    const double c = std::sqrt(2.0) / x0;
    const auto at = test::hermite_at(sys, rep.backward, -90.0);
    ASSERT_EQ(at.size(), 2u);
    const double expected = std::sqrt(2.0) / (c + 90.0);
    EXPECT_LE(std::abs(std::abs(at[0]) - expected) / expected, 1e-3);
}

TEST(Krasovskii, QuarticWellAsymptoticTrajectory)
{
    const auto region = region_for("quartic-well");
    const HamiltonianSystem sys(quartic_well());
    const auto rep = find_asymptotic_trajectory(sys, region);
    EXPECT_EQ(rep.status, AsymptoticStatus::Success);
    EXPECT_TRUE(rep.exit_times_increasing);
    EXPECT_TRUE(rep.cauchy);
    EXPECT_LE(rep.cauchy_gap, 1e-3);
    EXPECT_TRUE(rep.monotone_decay);
    EXPECT_TRUE(rep.v_monotone);
    EXPECT_LE(rep.final_norm, 1e-4 * region.epsilon);
}

TEST(TrajectoryIo, CsvHeaderAndTimeOrder)
{
    const HamiltonianSystem sys(quartic_well());
    const Trajectory tr = integrate(sys, std::vector<double>{0.1, 0.0, 0.0, 0.01}, 0.0, 1.0, TimeDirection::Backward);
    const std::string csv = trajectory_csv(tr);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,q1,q2,p1,p2,H,V,W");
    // rows are written in increasing time
    std::size_t rows = 0;
    double prev = -1e300;
    std::size_t pos = csv.find('\n') + 1;
    while (pos < csv.size()) {
        const double t = std::stod(csv.substr(pos, csv.find(',', pos) - pos));
        EXPECT_GT(t, prev);
        prev = t;
        ++rows;
        pos = csv.find('\n', pos) + 1;
    }
    EXPECT_EQ(rows, tr.size());
}

}  // namespace
}  // namespace cetaev
