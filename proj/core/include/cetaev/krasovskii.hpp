#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cetaev/hamiltonian.hpp"

namespace cetaev {

/// U = {(q, p) : potential(q) < 0, <q,p> > 0, |(q,p)| < epsilon, H < 0},
/// seeded along `direction` (a unit tangent direction of the negative cone).
struct KrasovskiiRegion {
    double epsilon = 0.0;
    std::vector<double> direction;

    [[nodiscard]] bool contains(const HamiltonianSystem& sys, std::span<const double> x) const;
};

struct KrasovskiiOptions {
    unsigned k_first = 2;
    unsigned k_last = 10;
    double back_factor = 10.0;  // T_back = back_factor * T_exit(k_last)
    double cauchy_tol = 1e-3;   // relative to epsilon
    double final_tol = 1e-4;    // relative to epsilon
    double crossing_tol = 1e-10;
    double max_escape_time = 1e7;
    std::size_t max_steps = 1'000'000;
};

struct Seed {
    unsigned k = 0;
    std::vector<double> state;
    double lambda = 1.0;
    double energy = 0.0;
};

/// q along region.direction, p = lambda q, |(q,p)| = epsilon 2^-k; lambda is
/// halved from 1 until H < 0. Throws ModelError if no such lambda exists.
Seed make_seed(const HamiltonianSystem& sys, const KrasovskiiRegion& region, unsigned k);

struct EscapeResult {
    std::vector<double> exit_state;
    double exit_time = 0.0;
    std::size_t steps = 0;
    std::size_t w_violations = 0;  // accepted states with W >= 0
    std::size_t v_violations = 0;  // accepted steps where V did not decrease
    double max_energy_drift = 0.0;
    Trajectory trajectory;
};

/// Integrates forward (projected onto the seed energy) until |(q,p)| = epsilon,
/// refining the crossing by bisection. Throws IntegrationError when the step
/// budget or time cap is exhausted first.
EscapeResult escape_time(const HamiltonianSystem& sys, const KrasovskiiRegion& region, std::span<const double> start,
                         const KrasovskiiOptions& options = {});

struct ExitRecord {
    Seed seed;
    double exit_time = 0.0;
    std::vector<double> exit_state;
    std::size_t steps = 0;
    std::size_t w_violations = 0;
    std::size_t v_violations = 0;
};

enum class AsymptoticStatus { Success, Inconclusive, Failure };
std::string_view to_string(AsymptoticStatus s);

struct AsymptoticReport {
    AsymptoticStatus status = AsymptoticStatus::Inconclusive;
    double epsilon = 0.0;
    std::vector<ExitRecord> exits;
    bool exit_times_increasing = false;
    double cauchy_gap = 0.0;
    bool cauchy = false;
    std::vector<double> limit_state;  // y_K projected onto H = 0
    double back_duration = 0.0;
    Trajectory backward;
    bool monotone_decay = false;
    double final_norm = 0.0;
    bool v_monotone = false;
    bool stays_in_region = false;
    double max_w_backward = 0.0;
    std::optional<double> loglog_slope;
    std::vector<std::string> notes;
};

/// Krasovskii shooting: exit points of the seeds k = k_first..k_last, then a
/// backward run from the last exit point projected onto H = 0.
AsymptoticReport find_asymptotic_trajectory(const HamiltonianSystem& sys, const KrasovskiiRegion& region,
                                            const KrasovskiiOptions& options = {});

/// Least-squares slope of log|q| against log(-t) over the last half of a backward run.
std::optional<double> loglog_slope(const Trajectory& backward, double t_origin);

}  // namespace cetaev
