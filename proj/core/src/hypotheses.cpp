#include "cetaev/hypotheses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "cetaev/error.hpp"
#include "cetaev/parallel.hpp"

namespace cetaev {
namespace {

constexpr double kProbeRadii[] = {1.0, 0.5, 0.25};
constexpr std::size_t kMaxWitnesses = 64;
constexpr int kMaxRefineSteps = 200;

std::vector<double> scaled(std::span<const double> u, double r)
{
    std::vector<double> q(u.begin(), u.end());
    for (double& x : q) {
        x *= r;
    }
    return q;
}

double norm(std::span<const double> v)
{
    double s = 0.0;
    for (double x : v) {
        s += x * x;
    }
    return std::sqrt(s);
}

void normalize(std::vector<double>& v)
{
    const double n = norm(v);
    for (double& x : v) {
        x /= n;
    }
}

void append_capped(std::vector<Witness>& dst, std::vector<Witness> src, std::size_t cap = kMaxWitnesses)
{
    for (auto& w : src) {
        if (dst.size() >= cap) {
            return;
        }
        dst.push_back(std::move(w));
    }
}

void require_order(const JetDecomposition& jets, unsigned s)
{
    if (s < 2) {
        throw Error("jet order s must be at least 2");
    }
    if (jets.order() < s) {
        throw Error("jet decomposition has order " + std::to_string(jets.order()) + " < s = " + std::to_string(s));
    }
}

// sum of squares of the lower parts and its gradient, used to pull samples onto Z_{s-1}
struct LowerParts {
    std::vector<FloatPolynomial> value;
    std::vector<std::vector<FloatPolynomial>> grad;

    LowerParts(const JetDecomposition& jets, unsigned s)
    {
        for (unsigned l = 2; l < s; ++l) {
            const Polynomial& p = jets.part(l);
            if (p.is_zero()) {
                continue;
            }
            value.emplace_back(p);
            auto& g = grad.emplace_back();
            for (const auto& d : gradient(p)) {
                g.emplace_back(d);
            }
        }
    }

    [[nodiscard]] double objective(std::span<const double> u) const
    {
        double f = 0.0;
        for (const auto& p : value) {
            const double v = p(u);
            f += v * v;
        }
        return f;
    }

    [[nodiscard]] double residual(std::span<const double> u) const
    {
        double r = 0.0;
        for (const auto& p : value) {
            r = std::max(r, std::abs(p(u)));
        }
        return r;
    }

    void refine(std::vector<double>& u) const
    {
        if (value.empty() || u.size() < 2) {
            return;
        }
        const std::size_t n = u.size();
        std::vector<double> g(n);
        std::vector<double> cand(n);
        for (int it = 0; it < kMaxRefineSteps; ++it) {
            const double f = objective(u);
            if (f == 0.0) {
                return;
            }
            std::fill(g.begin(), g.end(), 0.0);
            for (std::size_t k = 0; k < value.size(); ++k) {
                const double v = value[k](u);
                for (std::size_t i = 0; i < n; ++i) {
                    g[i] += 2.0 * v * grad[k][i](u);
                }
            }
            double gu = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                gu += g[i] * u[i];
            }
            double gn2 = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                g[i] -= gu * u[i];
                gn2 += g[i] * g[i];
            }
            if (gn2 == 0.0) {
                return;
            }
            double step = f / gn2;
            bool accepted = false;
            for (int h = 0; h < 30 && !accepted; ++h, step *= 0.5) {
                for (std::size_t i = 0; i < n; ++i) {
                    cand[i] = u[i] - step * g[i];
                }
                normalize(cand);
                if (objective(cand) < f) {
                    u = cand;
                    accepted = true;
                }
            }
            if (!accepted) {
                return;
            }
        }
    }
};

}  // namespace

const TangentDirection& TangentDirectionSet::steepest() const
{
    if (directions.empty()) {
        throw Error("tangent direction set is empty");
    }
    const TangentDirection* best = &directions.front();
    for (const auto& d : directions) {
        if (d.value < best->value || (d.value == best->value && d.source < best->source)) {
            best = &d;
        }
    }
    return *best;
}

HypothesisResult check_h1(const JetDecomposition& jets, unsigned s, const DirectionSet& directions, double zero_tol)
{
    require_order(jets, s);
    if (directions.size() == 0) {
        throw Error("empty sphere sample");
    }
    HypothesisResult out;
    const std::size_t n = jets.dimension();
    for (unsigned d = 0; d < 2; ++d) {
        if (!jets.part(d).is_zero()) {
            Witness w;
            w.kind = "nonzero-part-" + std::to_string(d);
            w.point.assign(n, 0.0);
            out.verdict = Verdict::Refuted;
            out.witnesses.push_back(std::move(w));
            out.notes.push_back("degree " + std::to_string(d) + " part is not zero: origin is not a critical point");
            return out;
        }
    }
    double worst = std::numeric_limits<double>::infinity();
    bool refuted = false;
    for (unsigned l = 2; l < s; ++l) {
        const Polynomial j = jets.jet(l);
        if (j.is_zero()) {
            worst = std::min(worst, 0.0);
            continue;
        }
        const FloatPolynomial jf(j);
        std::size_t found = 0;
        for (double r : kProbeRadii) {
            const double scale = std::pow(r, l);
            for (std::size_t i = 0; i < directions.size(); ++i) {
                const auto q = scaled(directions.direction(i), r);
                const double v = jf(q);
                worst = std::min(worst, v / scale);
                if (v < -zero_tol * scale && found < 16) {
                    const Rational exact = j.evaluate_exact(to_rationals(q));
                    if (exact.sign() < 0) {
                        refuted = true;
                        ++found;
                        Witness w;
                        w.kind = "jet-" + std::to_string(l);
                        w.point = q;
                        w.radius = r;
                        w.value = v;
                        w.exact_value = exact.str();
                        append_capped(out.witnesses, {w});
                    }
                }
            }
        }
    }
    if (s == 2) {
        out.notes.push_back("no lower jets for s = 2: condition is vacuous");
        worst = 0.0;
    }
    out.margin = worst;
    out.verdict = refuted ? Verdict::Refuted : (worst >= 0.0 ? Verdict::Certified : Verdict::Inconclusive);
    return out;
}

TangentDirectionSet find_tangent_directions(const JetDecomposition& jets, unsigned s, const DirectionSet& directions,
                                            double zero_tol, double neg_margin)
{
    require_order(jets, s);
    const LowerParts lower(jets, s);
    const FloatPolynomial top(jets.part(s));
    const std::size_t m = directions.size();
    std::vector<std::optional<TangentDirection>> slots(m);
    parallel_for(m, [&](std::size_t i) {
        const auto d = directions.direction(i);
        std::vector<double> u(d.begin(), d.end());
        lower.refine(u);
        const double residual = lower.residual(u);
        const double value = top(u);
        if (residual <= zero_tol && value <= -neg_margin) {
            slots[i] = TangentDirection{std::move(u), residual, value, i};
        }
    });
    TangentDirectionSet out;
    out.zero_tol = zero_tol;
    out.neg_margin = neg_margin;
    std::set<std::vector<long long>> keys;
    for (auto& slot : slots) {
        if (!slot) {
            continue;
        }
        std::vector<long long> key;
        for (double x : slot->direction) {
            key.push_back(std::llround(x * 1e6));
        }
        if (keys.insert(std::move(key)).second) {
            out.directions.push_back(std::move(*slot));
        }
    }
    return out;
}

HypothesisResult check_h2(const JetDecomposition& jets, unsigned s, const TangentDirectionSet& tangent,
                          const DirectionSet& directions, double margin)
{
    require_order(jets, s);
    HypothesisResult out;
    if (!tangent.empty()) {
        const auto& best = tangent.steepest();
        out.verdict = Verdict::Certified;
        out.margin = -best.value;
        Witness w;
        w.kind = "tangent-direction";
        w.point = best.direction;
        w.radius = 1.0;
        w.value = best.value;
        out.witnesses.push_back(std::move(w));
        out.notes.push_back(std::to_string(tangent.directions.size()) + " tangent directions with part_s < 0");
        return out;
    }
    const Polynomial j = jets.jet(s);
    const FloatPolynomial jf(j);
    double worst = std::numeric_limits<double>::infinity();
    std::vector<double> arg;
    double arg_r = 1.0;
    for (double r : kProbeRadii) {
        const double scale = std::pow(r, s);
        for (std::size_t i = 0; i < directions.size(); ++i) {
            auto q = scaled(directions.direction(i), r);
            const double v = jf(q) / scale;
            if (v < worst) {
                worst = v;
                arg = std::move(q);
                arg_r = r;
            }
        }
    }
    out.margin = worst;
    if (worst >= margin) {
        out.verdict = Verdict::Refuted;
        Witness w;
        w.kind = "jet-minimum";
        w.point = arg;
        w.radius = arg_r;
        w.value = jf(arg);
        w.exact_value = j.evaluate_exact(to_rationals(arg)).str();
        out.witnesses.push_back(std::move(w));
        out.notes.push_back("j^s has a strict minimum on the sample");
    } else {
        out.notes.push_back("no tangent direction found; sampling may miss thin cones");
    }
    return out;
}

HypothesisResult check_cetaev_at(const RegionLabeling& labeling, const SignedPair& pair, double eta)
{
    HypothesisResult out;
    out.epsilon = labeling.epsilon;
    const auto candidates = labeling.candidate_cones();
    if (candidates.empty()) {
        Witness w = minimal_point(labeling, pair);
        const double normalized = w.value / std::pow(w.radius, labeling.degree);
        out.margin = normalized;
        if (normalized > labeling.zero_tol) {
            w.kind = "no-negative-set";
            out.verdict = Verdict::Refuted;
            out.witnesses.push_back(std::move(w));
        }
        out.notes.push_back("no negative component reaches the innermost shell");
        return out;
    }
    std::vector<Witness> interior;
    std::vector<Witness> ring;
    std::size_t refuted = 0;
    std::optional<double> worst;
    for (std::size_t c : candidates) {
        ClosureCheck check = check_cone_closure(labeling, pair, c, eta);
        if (check.verdict == Verdict::Certified) {
            out.verdict = Verdict::Certified;
            out.component = c;
            out.margin = -check.worst_normalized_radial;
            const std::size_t innermost = labeling.shells.size() - 1;
            for (const auto& [k, comp] : labeling.cones[c].members) {
                if (k == innermost) {
                    const auto& pts = labeling.shells[k].components[comp];
                    out.component_directions.insert(out.component_directions.end(), pts.begin(), pts.end());
                }
            }
            std::sort(out.component_directions.begin(), out.component_directions.end());
            return out;
        }
        worst = worst ? std::min(*worst, check.worst_normalized_radial) : check.worst_normalized_radial;
        if (check.verdict == Verdict::Refuted) {
            ++refuted;
        }
        for (auto& w : check.witnesses) {
            (w.kind == "interior" ? interior : ring).push_back(std::move(w));
        }
    }
    append_capped(out.witnesses, std::move(interior));
    append_capped(out.witnesses, std::move(ring));
    out.margin = worst ? std::optional<double>(-*worst) : std::nullopt;
    out.verdict = refuted == candidates.size() ? Verdict::Refuted : Verdict::Inconclusive;
    return out;
}

HypothesisResult check_cetaev_schedule(const SignedPair& pair, const std::shared_ptr<const DirectionSet>& directions,
                                       double eps0, const AnalysisOptions& options)
{
    HypothesisResult out;
    std::vector<Witness> interior;
    std::vector<Witness> other;
    bool all_refuted = true;
    for (unsigned j = 0; j <= options.halvings; ++j) {
        const double eps = std::ldexp(eps0, -static_cast<int>(j));
        const RegionLabeling labeling = label_regions(pair, directions, eps, options.zero_tol, options.shells);
        HypothesisResult at = check_cetaev_at(labeling, pair, options.eta);
        out.schedule.emplace_back(eps, at.verdict);
        if (at.verdict == Verdict::Certified) {
            out.verdict = Verdict::Certified;
            out.epsilon = eps;
            out.margin = at.margin;
            out.component = at.component;
            out.component_directions = std::move(at.component_directions);
            out.notes = std::move(at.notes);
            return out;
        }
        all_refuted = all_refuted && at.verdict == Verdict::Refuted;
        for (auto& w : at.witnesses) {
            (w.kind == "interior" ? interior : other).push_back(std::move(w));
        }
        for (auto& note : at.notes) {
            if (std::find(out.notes.begin(), out.notes.end(), note) == out.notes.end()) {
                out.notes.push_back(std::move(note));
            }
        }
    }
    out.verdict = all_refuted ? Verdict::Refuted : Verdict::Inconclusive;
    append_capped(out.witnesses, std::move(interior));
    append_capped(out.witnesses, std::move(other));
    return out;
}

HypothesisResult check_h3(const JetDecomposition& jets, unsigned s, const std::shared_ptr<const DirectionSet>& directions,
                          double eps0, const AnalysisOptions& options)
{
    require_order(jets, s);
    return check_cetaev_schedule(jet_pair(jets, s), directions, eps0, options);
}

HypothesisResult check_strict_cetaev(const PotentialField& field, unsigned s,
                                     const std::shared_ptr<const DirectionSet>& directions, double eps0,
                                     const AnalysisOptions& options)
{
    if (field.dimension() != directions->dimension()) {
        throw DimensionError("sphere sample dimension does not match the potential");
    }
    return check_cetaev_schedule(field_pair(field, s), directions, eps0, options);
}

WRegion build_w_region(const JetDecomposition& jets, unsigned s)
{
    require_order(jets, s);
    Polynomial inner = jets.part(s);
    for (unsigned l = 2; l + 2 <= s; ++l) {
        inner -= jets.jet(l);
    }
    Polynomial q = Rational(static_cast<long>(s) - 1) * jets.jet(s) + Rational(1, 2) * inner;
    WRegion w{q, FloatPolynomial(q), s};
    return w;
}

HypothesisResult verify_sandwich(const PotentialField& field, const WRegion& w,
                                 const std::shared_ptr<const DirectionSet>& directions, double eps,
                                 const AnalysisOptions& options)
{
    const SignedPair pair = field_pair(field, w.s);
    const std::size_t n = directions->dimension();
    HypothesisResult out;
    std::vector<Witness> failures;
    bool any_w = false;
    for (unsigned j = 0; j <= options.halvings; ++j) {
        const double eps1 = std::ldexp(eps, -static_cast<int>(j));
        std::vector<Witness> bad;
        double margin = std::numeric_limits<double>::infinity();
        bool has_w = false;
        for (unsigned k = 0; k < options.shells; ++k) {
            const SphereSample sample(directions, std::ldexp(eps1, -static_cast<int>(k)));
            const double r = sample.radius();
            const double scale = std::pow(r, w.s);
            const std::size_t m = sample.size();
            std::vector<double> qv(m);
            parallel_for(m, [&](std::size_t i) { qv[i] = w.q_float(sample.point(i)); });

            auto record = [&](std::span<const double> q, const char* kind) {
                Witness wit;
                wit.kind = kind;
                wit.point.assign(q.begin(), q.end());
                wit.radius = r;
                wit.value = pair.value(q);
                wit.radial = pair.radial(q);
                attach_exact(wit, pair);
                if (bad.size() < kMaxWitnesses) {
                    bad.push_back(std::move(wit));
                }
            };

            for (std::size_t i = 0; i < m; ++i) {
                if (qv[i] >= 0.0) {
                    continue;
                }
                has_w = true;
                const auto q = sample.point(i);
                const double rad = pair.radial(q);
                margin = std::min(margin, -rad / scale);
                bool violates = rad >= 0.0;
                if (rad >= -options.zero_tol * scale && pair.is_exact()) {
                    violates = pair.exact_radial(q).sign() >= 0;
                }
                if (violates) {
                    record(q, "W-radial");
                }
            }

            std::vector<double> a(n);
            std::vector<double> b(n);
            std::vector<double> mid(n);
            for (std::size_t i = 0; i < m; ++i) {
                for (std::uint32_t jn : sample.neighbours(i)) {
                    if (jn <= i || !((qv[i] < 0.0 && qv[jn] > 0.0) || (qv[i] > 0.0 && qv[jn] < 0.0))) {
                        continue;
                    }
                    const auto pi = sample.point(i);
                    const auto pj = sample.point(jn);
                    const bool i_inside = qv[i] < 0.0;
                    a.assign(pi.begin(), pi.end());
                    b.assign(pj.begin(), pj.end());
                    if (!i_inside) {
                        std::swap(a, b);
                    }
                    for (int it = 0; it < 60; ++it) {
                        for (std::size_t d = 0; d < n; ++d) {
                            mid[d] = 0.5 * (a[d] + b[d]);
                        }
                        normalize(mid);
                        for (double& x : mid) {
                            x *= r;
                        }
                        (w.q_float(mid) < 0.0 ? a : b) = mid;
                    }
                    const double v = pair.value(b);
                    const double rad = pair.radial(b);
                    margin = std::min({margin, v / scale, -rad / scale});
                    if (v < options.eta * scale) {
                        record(b, "dW-value");
                    } else if (rad > -options.eta * scale) {
                        record(b, "dW-radial");
                    }
                }
            }
        }
        any_w = any_w || has_w;
        const Verdict v = (bad.empty() && has_w) ? Verdict::Certified : Verdict::Inconclusive;
        out.schedule.emplace_back(eps1, v);
        if (v == Verdict::Certified) {
            out.verdict = Verdict::Certified;
            out.epsilon = eps1;
            out.margin = margin;
            return out;
        }
        if (failures.empty()) {
            failures = std::move(bad);
        }
    }
    out.verdict = Verdict::Inconclusive;
    out.witnesses = std::move(failures);
    if (!any_w) {
        out.notes.push_back("W has no sample points in the schedule");
    }
    return out;
}

}  // namespace cetaev
