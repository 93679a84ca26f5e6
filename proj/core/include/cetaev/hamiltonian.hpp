#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "cetaev/field.hpp"

namespace cetaev {

/// H(q, p) = <Bp, p>/2 + potential(q) with constant symmetric positive definite B.
class HamiltonianSystem {
public:
    /// Empty `kinetic` means the identity; otherwise n*n row-major, validated.
    explicit HamiltonianSystem(PotentialField potential, std::vector<double> kinetic = {});

    [[nodiscard]] std::size_t dimension() const noexcept { return potential_.dimension(); }
    [[nodiscard]] const PotentialField& potential() const noexcept { return potential_; }
    [[nodiscard]] const std::vector<double>& kinetic() const noexcept { return kinetic_; }

    /// Phase state x = (q, p) of length 2n.
    [[nodiscard]] double kinetic_energy(std::span<const double> x) const;
    [[nodiscard]] double energy(std::span<const double> x) const;
    /// dx/dt = (Bp, -grad potential(q)).
    void vector_field(std::span<const double> x, std::span<double> dxdt) const;
    /// Gradient of H with respect to (q, p).
    void energy_gradient(std::span<const double> x, std::span<double> out) const;

    /// V = -<q,p>, W = <q,p> H.
    [[nodiscard]] double v_function(std::span<const double> x) const;
    [[nodiscard]] double w_function(std::span<const double> x) const;
    /// Analytic (dV/dt, dW/dt) = (-(2T - R), (2T - R) H) with R = <grad potential(q), q>.
    [[nodiscard]] std::pair<double, double> auxiliary_derivatives(std::span<const double> x) const;

private:
    void apply_kinetic(std::span<const double> p, std::span<double> out) const;

    PotentialField potential_;
    std::vector<double> kinetic_;
    bool identity_ = true;
};

enum class TimeDirection { Forward, Backward };

struct IntegrationOptions {
    double rtol = 1e-10;
    double atol = 1e-12;
    double initial_step = 1e-3;
    double min_step = 1e-13;
    std::size_t max_steps = 5'000'000;
    double domain_bound = std::numeric_limits<double>::infinity();
    /// After every accepted step, project back onto H = target (Newton along grad H).
    std::optional<double> energy_target;
    /// Halt after the first accepted step for which this returns true.
    std::function<bool(std::span<const double>)> stop;
};

/// States with logs; times are strictly decreasing for backward runs.
struct Trajectory {
    std::size_t dimension = 0;
    std::vector<double> t;
    std::vector<std::vector<double>> x;  // (q, p)
    std::vector<double> H, V, W, q_norm, p_norm;
    bool left_domain = false;
    bool step_underflow = false;
    bool step_budget = false;
    bool stopped = false;

    [[nodiscard]] std::size_t size() const noexcept { return t.size(); }
    [[nodiscard]] bool complete() const noexcept { return !left_domain && !step_underflow && !step_budget; }
    void append(const HamiltonianSystem& sys, double time, std::vector<double> state);
};

/// Adaptive Dormand-Prince 5(4) integration for duration T > 0. Throws
/// IntegrationError on a non-finite state; step underflow and budget
/// exhaustion return the partial trajectory with the flag set.
Trajectory integrate(const HamiltonianSystem& sys, std::span<const double> start, double t0, double duration,
                     TimeDirection direction, const IntegrationOptions& options = {});

/// Newton projection of x onto H = target along grad H.
void project_energy(const HamiltonianSystem& sys, std::vector<double>& x, double target);

/// Single fixed Dormand-Prince step (used to refine crossings).
std::vector<double> dopri_step(const HamiltonianSystem& sys, std::span<const double> x, double dt,
                               TimeDirection direction);

double phase_norm(std::span<const double> x);

}  // namespace cetaev
