#include "cetaev/krasovskii.hpp"

#include <cmath>
#include <limits>

#include "cetaev/error.hpp"
#include "cetaev/parallel.hpp"

namespace cetaev {
namespace {

constexpr double kRounding = 64.0 * std::numeric_limits<double>::epsilon();

double dot_qp(std::span<const double> x, std::size_t n)
{
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += x[i] * x[n + i];
    }
    return s;
}

}  // namespace

std::string_view to_string(AsymptoticStatus s)
{
    switch (s) {
    case AsymptoticStatus::Success:
        return "success";
    case AsymptoticStatus::Inconclusive:
        return "inconclusive";
    case AsymptoticStatus::Failure:
        return "failure";
    }
    return "inconclusive";
}

bool KrasovskiiRegion::contains(const HamiltonianSystem& sys, std::span<const double> x) const
{
    const std::size_t n = sys.dimension();
    return sys.potential().value(x.first(n)) < 0.0 && dot_qp(x, n) > 0.0 && phase_norm(x) < epsilon &&
           sys.energy(x) < 0.0;
}

Seed make_seed(const HamiltonianSystem& sys, const KrasovskiiRegion& region, unsigned k)
{
    const std::size_t n = sys.dimension();
    if (region.direction.size() != n) {
        throw DimensionError("seed direction has wrong dimension");
    }
    const double rho = std::ldexp(region.epsilon, -static_cast<int>(k));
    Seed seed;
    seed.k = k;
    seed.state.assign(2 * n, 0.0);
    double lambda = 1.0;
    for (int halving = 0; halving < 400; ++halving, lambda *= 0.5) {
        const double qn = rho / std::sqrt(1.0 + lambda * lambda);
        for (std::size_t i = 0; i < n; ++i) {
            seed.state[i] = qn * region.direction[i];
            seed.state[n + i] = lambda * seed.state[i];
        }
        const double h = sys.energy(seed.state);
        if (h < 0.0) {
            seed.lambda = lambda;
            seed.energy = h;
            return seed;
        }
    }
    throw ModelError("no seed with negative energy at |x| = " + std::to_string(rho) +
                     ": the potential is not negative along the seed direction");
}

EscapeResult escape_time(const HamiltonianSystem& sys, const KrasovskiiRegion& region, std::span<const double> start,
                         const KrasovskiiOptions& options)
{
    if (!region.contains(sys, start)) {
        throw ModelError("escape start is not inside the Krasovskii region");
    }
    const double target = sys.energy(start);
    IntegrationOptions io;
    io.energy_target = target;
    io.max_steps = options.max_steps;
    io.initial_step = 1e-3 * region.epsilon;
    io.domain_bound = 2.0 * region.epsilon;
    io.stop = [&](std::span<const double> x) { return phase_norm(x) >= region.epsilon; };
    Trajectory traj = integrate(sys, start, 0.0, options.max_escape_time, TimeDirection::Forward, io);
    if (!traj.stopped) {
        throw IntegrationError(std::string("no exit through the sphere: ") +
                               (traj.step_budget ? "step budget exceeded" :
                                traj.step_underflow ? "step size underflow" : "time cap reached") +
                               " (the V decrease assumption fails numerically)");
    }

    // bisection on the last step for |x| = epsilon
    const std::size_t last = traj.size() - 1;
    const std::vector<double> before = traj.x[last - 1];
    double lo = 0.0;
    double hi = traj.t[last] - traj.t[last - 1];
    std::vector<double> crossing = traj.x[last];
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        std::vector<double> x = dopri_step(sys, before, mid, TimeDirection::Forward);
        project_energy(sys, x, target);
        const double gap = phase_norm(x) - region.epsilon;
        if (gap < 0.0) {
            lo = mid;
        } else {
            hi = mid;
            crossing = x;
        }
        if (std::abs(gap) <= options.crossing_tol * region.epsilon) {
            crossing = x;
            hi = mid;
            break;
        }
    }
    const double t_exit = traj.t[last - 1] + hi;
    traj.t.pop_back();
    traj.x.pop_back();
    traj.H.pop_back();
    traj.V.pop_back();
    traj.W.pop_back();
    traj.q_norm.pop_back();
    traj.p_norm.pop_back();
    traj.append(sys, t_exit, crossing);

    EscapeResult out;
    out.exit_state = crossing;
    out.exit_time = t_exit;
    out.steps = traj.size() - 1;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const double band = kRounding * std::abs(traj.V[i]) * std::abs(traj.H[i]);
        if (traj.W[i] >= band) {
            ++out.w_violations;
        }
        out.max_energy_drift = std::max(out.max_energy_drift, std::abs(traj.H[i] - target));
        if (i > 0 && !(traj.V[i] < traj.V[i - 1])) {
            ++out.v_violations;
        }
    }
    out.trajectory = std::move(traj);
    return out;
}

std::optional<double> loglog_slope(const Trajectory& backward, double t_origin)
{
    if (backward.size() < 3) {
        return std::nullopt;
    }
    const double total = std::abs(backward.t.back() - t_origin);
    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double sxy = 0.0;
    std::size_t m = 0;
    for (std::size_t i = 0; i < backward.size(); ++i) {
        const double elapsed = std::abs(backward.t[i] - t_origin);
        if (elapsed < 0.5 * total || elapsed <= 0.0 || backward.q_norm[i] <= 0.0) {
            continue;
        }
        const double lx = std::log(elapsed);
        const double ly = std::log(backward.q_norm[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++m;
    }
    const double md = static_cast<double>(m);
    const double denom = md * sxx - sx * sx;
    if (m < 3 || denom <= 0.0) {
        return std::nullopt;
    }
    return (md * sxy - sx * sy) / denom;
}

AsymptoticReport find_asymptotic_trajectory(const HamiltonianSystem& sys, const KrasovskiiRegion& region,
                                            const KrasovskiiOptions& options)
{
    if (options.k_last <= options.k_first) {
        throw Error("seed schedule needs k_last > k_first");
    }
    AsymptoticReport rep;
    rep.epsilon = region.epsilon;
    const std::size_t n = sys.dimension();
    const std::size_t count = options.k_last - options.k_first + 1;

    std::vector<ExitRecord> exits(count);
    std::vector<std::string> errors(count);
    parallel_for(count, [&](std::size_t i) {
        try {
            ExitRecord rec;
            rec.seed = make_seed(sys, region, options.k_first + static_cast<unsigned>(i));
            EscapeResult esc = escape_time(sys, region, rec.seed.state, options);
            rec.exit_time = esc.exit_time;
            rec.exit_state = std::move(esc.exit_state);
            rec.steps = esc.steps;
            rec.w_violations = esc.w_violations;
            rec.v_violations = esc.v_violations;
            exits[i] = std::move(rec);
        } catch (const Error& e) {
            errors[i] = e.what();
        }
    });
    for (std::size_t i = 0; i < count; ++i) {
        if (!errors[i].empty()) {
            rep.status = AsymptoticStatus::Failure;
            rep.notes.push_back("seed k = " + std::to_string(options.k_first + i) + ": " + errors[i]);
        }
    }
    if (rep.status == AsymptoticStatus::Failure) {
        return rep;
    }
    rep.exits = std::move(exits);

    rep.exit_times_increasing = true;
    for (std::size_t i = 1; i < count; ++i) {
        rep.exit_times_increasing = rep.exit_times_increasing && rep.exits[i].exit_time > rep.exits[i - 1].exit_time;
    }
    const auto& yk = rep.exits[count - 1].exit_state;
    const auto& yk1 = rep.exits[count - 2].exit_state;
    double gap = 0.0;
    for (std::size_t i = 0; i < yk.size(); ++i) {
        gap += (yk[i] - yk1[i]) * (yk[i] - yk1[i]);
    }
    rep.cauchy_gap = std::sqrt(gap);
    rep.cauchy = rep.cauchy_gap <= options.cauchy_tol * region.epsilon;
    if (!rep.cauchy) {
        rep.status = AsymptoticStatus::Inconclusive;
        rep.notes.push_back("exit points are not Cauchy within tolerance");
        return rep;
    }

    rep.limit_state = yk;
    project_energy(sys, rep.limit_state, 0.0);
    rep.back_duration = options.back_factor * rep.exits[count - 1].exit_time;
    IntegrationOptions io;
    io.energy_target = 0.0;
    io.max_steps = options.max_steps;
    io.initial_step = 1e-3 * region.epsilon;
    io.domain_bound = 2.0 * region.epsilon;
    // below this floor the state is numerical noise; hyperbolic cases get there long before back_duration
    const double floor = 1e-4 * options.final_tol * region.epsilon;
    io.atol = 1e-4 * floor;
    io.stop = [floor](std::span<const double> x) { return phase_norm(x) <= floor; };
    rep.backward = integrate(sys, rep.limit_state, 0.0, rep.back_duration, TimeDirection::Backward, io);
    const Trajectory& b = rep.backward;
    const bool finished = b.complete() || b.stopped;
    if (b.stopped) {
        rep.notes.push_back("backward integration reached the resolution floor");
    }
    if (!finished) {
        rep.notes.push_back("backward integration stopped early");
    }

    rep.stays_in_region = true;
    rep.v_monotone = true;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const auto& x = b.x[i];
        const double scale = b.q_norm[i] * b.p_norm[i];
        const bool inside = phase_norm(x) <= region.epsilon * (1.0 + 1e-8) &&
                            dot_qp(x, n) >= -kRounding * scale && sys.potential().value(std::span(x).first(n)) <= 0.0;
        rep.stays_in_region = rep.stays_in_region && inside;
        rep.max_w_backward = std::max(rep.max_w_backward, b.W[i]);
        // forward-time decrease of V means increase along the stored backward order
        if (i > 0 && !(b.V[i] > b.V[i - 1])) {
            rep.v_monotone = false;
        }
    }
    if (!rep.stays_in_region) {
        rep.notes.push_back("backward trajectory leaves the closure of U");
    }

    rep.monotone_decay = b.size() > 2;
    const double half = 0.5 * std::abs(b.t.back());
    for (std::size_t i = 1; i < b.size(); ++i) {
        if (std::abs(b.t[i]) >= half && !(b.q_norm[i] < b.q_norm[i - 1])) {
            rep.monotone_decay = false;
        }
    }
    rep.final_norm = phase_norm(b.x.back());
    rep.loglog_slope = loglog_slope(b, 0.0);

    const bool reached = rep.final_norm <= options.final_tol * region.epsilon;
    if (!reached) {
        rep.notes.push_back("final |state| above tolerance");
    }
    if (!rep.stays_in_region || !finished) {
        rep.status = AsymptoticStatus::Failure;
    } else if (rep.monotone_decay && reached && rep.v_monotone) {
        rep.status = AsymptoticStatus::Success;
    } else {
        rep.status = AsymptoticStatus::Inconclusive;
    }
    return rep;
}

}  // namespace cetaev
