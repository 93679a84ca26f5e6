#include "cetaev/hamiltonian.hpp"

#include <cmath>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "cetaev/error.hpp"
#include "cetaev/potential_spec.hpp"

namespace cetaev {
namespace {

namespace ode = boost::numeric::odeint;
using StateVec = std::vector<double>;

struct FlowFunctor {
    const HamiltonianSystem* sys;
    double sign;

    void operator()(const StateVec& x, StateVec& dxdt, double /*t*/) const
    {
        sys->vector_field(x, dxdt);
        if (sign < 0.0) {
            for (double& v : dxdt) {
                v = -v;
            }
        }
    }
};

bool all_finite(std::span<const double> x)
{
    for (double v : x) {
        if (!std::isfinite(v)) {
            return false;
        }
    }
    return true;
}

double half_norm(std::span<const double> x, std::size_t begin, std::size_t n)
{
    double s = 0.0;
    for (std::size_t i = begin; i < begin + n; ++i) {
        s += x[i] * x[i];
    }
    return std::sqrt(s);
}

}  // namespace

double phase_norm(std::span<const double> x)
{
    return half_norm(x, 0, x.size());
}

HamiltonianSystem::HamiltonianSystem(PotentialField potential, std::vector<double> kinetic)
    : potential_(std::move(potential)), kinetic_(std::move(kinetic))
{
    const std::size_t n = potential_.dimension();
    if (kinetic_.empty()) {
        kinetic_.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            kinetic_[i * n + i] = 1.0;
        }
    }
    validate_kinetic_matrix(kinetic_, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (kinetic_[i * n + j] != (i == j ? 1.0 : 0.0)) {
                identity_ = false;
            }
        }
    }
}

void HamiltonianSystem::apply_kinetic(std::span<const double> p, std::span<double> out) const
{
    const std::size_t n = dimension();
    if (identity_) {
        std::copy(p.begin(), p.end(), out.begin());
        return;
    }
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            s += kinetic_[i * n + j] * p[j];
        }
        out[i] = s;
    }
}

double HamiltonianSystem::kinetic_energy(std::span<const double> x) const
{
    const std::size_t n = dimension();
    if (x.size() != 2 * n) {
        throw DimensionError("phase state must have length 2n");
    }
    const auto p = x.subspan(n, n);
    std::vector<double> bp(n);
    apply_kinetic(p, bp);
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += bp[i] * p[i];
    }
    return 0.5 * s;
}

double HamiltonianSystem::energy(std::span<const double> x) const
{
    return kinetic_energy(x) + potential_.value(x.first(dimension()));
}

void HamiltonianSystem::vector_field(std::span<const double> x, std::span<double> dxdt) const
{
    const std::size_t n = dimension();
    if (x.size() != 2 * n || dxdt.size() != 2 * n) {
        throw DimensionError("phase state must have length 2n");
    }
    apply_kinetic(x.subspan(n, n), dxdt.first(n));
    potential_.gradient(x.first(n), dxdt.subspan(n, n));
    for (std::size_t i = n; i < 2 * n; ++i) {
        dxdt[i] = -dxdt[i];
    }
}

void HamiltonianSystem::energy_gradient(std::span<const double> x, std::span<double> out) const
{
    const std::size_t n = dimension();
    potential_.gradient(x.first(n), out.first(n));
    apply_kinetic(x.subspan(n, n), out.subspan(n, n));
}

double HamiltonianSystem::v_function(std::span<const double> x) const
{
    const std::size_t n = dimension();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += x[i] * x[n + i];
    }
    return -s;
}

double HamiltonianSystem::w_function(std::span<const double> x) const
{
    return -v_function(x) * energy(x);
}

std::pair<double, double> HamiltonianSystem::auxiliary_derivatives(std::span<const double> x) const
{
    const double rate = 2.0 * kinetic_energy(x) - potential_.radial(x.first(dimension()));
    return {-rate, rate * energy(x)};
}

void Trajectory::append(const HamiltonianSystem& sys, double time, std::vector<double> state)
{
    const std::size_t n = sys.dimension();
    t.push_back(time);
    H.push_back(sys.energy(state));
    V.push_back(sys.v_function(state));
    W.push_back(-V.back() * H.back());
    q_norm.push_back(half_norm(state, 0, n));
    p_norm.push_back(half_norm(state, n, n));
    x.push_back(std::move(state));
}

void project_energy(const HamiltonianSystem& sys, std::vector<double>& x, double target)
{
    std::vector<double> g(x.size());
    std::vector<double> trial(x.size());
    double defect = sys.energy(x) - target;
    for (int it = 0; it < 6 && defect != 0.0; ++it) {
        sys.energy_gradient(x, g);
        double g2 = 0.0;
        for (double v : g) {
            g2 += v * v;
        }
        if (g2 == 0.0) {
            return;
        }
        for (std::size_t i = 0; i < x.size(); ++i) {
            trial[i] = x[i] - defect * g[i] / g2;
        }
        const double next = sys.energy(trial) - target;
        if (!(std::abs(next) < std::abs(defect))) {
            return;
        }
        x = trial;
        defect = next;
    }
}

std::vector<double> dopri_step(const HamiltonianSystem& sys, std::span<const double> x, double dt,
                               TimeDirection direction)
{
    ode::runge_kutta_dopri5<StateVec> stepper;
    StateVec state(x.begin(), x.end());
    const FlowFunctor flow{&sys, direction == TimeDirection::Forward ? 1.0 : -1.0};
    stepper.do_step(flow, state, 0.0, dt);
    return state;
}

Trajectory integrate(const HamiltonianSystem& sys, std::span<const double> start, double t0, double duration,
                     TimeDirection direction, const IntegrationOptions& options)
{
    const std::size_t n = sys.dimension();
    if (start.size() != 2 * n) {
        throw DimensionError("start state must have length 2n");
    }
    if (!(duration > 0.0)) {
        throw IntegrationError("integration duration must be positive");
    }
    if (!all_finite(start)) {
        throw IntegrationError("start state is not finite");
    }
    const double sign = direction == TimeDirection::Forward ? 1.0 : -1.0;
    const FlowFunctor flow{&sys, sign};
    auto stepper = ode::make_controlled(options.atol, options.rtol, ode::runge_kutta_dopri5<StateVec>());

    Trajectory traj;
    traj.dimension = n;
    StateVec x(start.begin(), start.end());
    if (options.energy_target) {
        project_energy(sys, x, *options.energy_target);
    }
    traj.append(sys, t0, x);
    StateVec dxdt(2 * n);
    flow(x, dxdt, 0.0);

    double elapsed = 0.0;
    double dt = std::min(options.initial_step, duration);
    std::size_t steps = 0;
    while (elapsed < duration) {
        if (steps++ >= options.max_steps) {
            traj.step_budget = true;
            break;
        }
        double h = std::min(dt, duration - elapsed);
        const bool last = h == duration - elapsed;
        double tt = elapsed;
        const auto result = stepper.try_step(flow, x, dxdt, tt, h);
        if (result == ode::fail) {
            dt = h;
            if (dt < options.min_step) {
                traj.step_underflow = true;
                break;
            }
            continue;
        }
        elapsed = last ? duration : tt;
        dt = h;
        if (!all_finite(x)) {
            throw IntegrationError("non-finite state at t = " + std::to_string(t0 + sign * elapsed));
        }
        if (options.energy_target) {
            project_energy(sys, x, *options.energy_target);
            flow(x, dxdt, 0.0);
        }
        traj.append(sys, t0 + sign * elapsed, x);
        if (traj.q_norm.back() > options.domain_bound) {
            traj.left_domain = true;
            break;
        }
        if (options.stop && options.stop(x)) {
            traj.stopped = true;
            break;
        }
    }
    return traj;
}

}  // namespace cetaev
