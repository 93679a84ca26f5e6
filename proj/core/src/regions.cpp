#include "cetaev/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "cetaev/error.hpp"
#include "cetaev/parallel.hpp"

namespace cetaev {
namespace {

struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<std::size_t> parent;
};

Witness make_witness(const ShellLabels& shell, std::size_t i, std::string kind)
{
    Witness w;
    w.kind = std::move(kind);
    const auto p = shell.sample.point(i);
    w.point.assign(p.begin(), p.end());
    w.radius = shell.sample.radius();
    w.value = shell.value[i];
    w.radial = shell.radial[i];
    return w;
}

}  // namespace

SignedPair jet_pair(const JetDecomposition& jets, unsigned s)
{
    const Polynomial j = jets.jet(s);
    const Polynomial r = radial_derivative(j);
    auto jf = std::make_shared<FloatPolynomial>(j);
    auto rf = std::make_shared<FloatPolynomial>(r);
    SignedPair pair;
    pair.value = [jf](std::span<const double> q) { return (*jf)(q); };
    pair.radial = [rf](std::span<const double> q) { return (*rf)(q); };
    pair.exact_value = [j](std::span<const double> q) { return j.evaluate_exact(to_rationals(q)); };
    pair.exact_radial = [r](std::span<const double> q) { return r.evaluate_exact(to_rationals(q)); };
    pair.degree = s;
    return pair;
}

SignedPair field_pair(const PotentialField& field, unsigned s)
{
    SignedPair pair;
    pair.value = [field](std::span<const double> q) { return field.value(q); };
    pair.radial = [field](std::span<const double> q) { return field.radial(q); };
    if (field.is_polynomial()) {
        pair.exact_value = [field](std::span<const double> q) { return *field.exact_value(q); };
        pair.exact_radial = [field](std::span<const double> q) { return *field.exact_radial(q); };
    }
    pair.degree = s;
    return pair;
}

std::vector<std::size_t> RegionLabeling::candidate_cones() const
{
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cones.size(); ++c) {
        if (cones[c].reaches_innermost) {
            out.push_back(c);
        }
    }
    return out;
}

RegionLabeling label_regions(const SignedPair& pair, const std::shared_ptr<const DirectionSet>& directions,
                             double epsilon, double zero_tol, unsigned shells)
{
    if (!(epsilon > 0.0)) {
        throw Error("labeling radius must be positive");
    }
    if (shells == 0) {
        throw Error("labeling needs at least one shell");
    }
    if (directions->size() == 0) {
        throw Error("empty sphere sample");
    }
    RegionLabeling out;
    out.epsilon = epsilon;
    out.zero_tol = zero_tol;
    out.degree = pair.degree;
    const std::size_t m = directions->size();

    for (unsigned k = 0; k < shells; ++k) {
        const double r = std::ldexp(epsilon, -static_cast<int>(k));
        ShellLabels shell{SphereSample(directions, r), {}, {}, {}, {}, {}};
        shell.value.resize(m);
        shell.radial.resize(m);
        shell.sign.resize(m);
        const double band = zero_tol * std::pow(r, pair.degree);
        parallel_for(m, [&](std::size_t i) {
            const auto q = shell.sample.point(i);
            const double v = pair.value(q);
            shell.value[i] = v;
            shell.radial[i] = pair.radial(q);
            shell.sign[i] = v < -band ? SignLabel::Negative : (v > band ? SignLabel::Positive : SignLabel::Boundary);
        });

        shell.component.assign(m, -1);
        std::vector<std::uint32_t> stack;
        for (std::size_t seed = 0; seed < m; ++seed) {
            if (shell.sign[seed] != SignLabel::Negative || shell.component[seed] >= 0) {
                continue;
            }
            const auto id = static_cast<std::int32_t>(shell.components.size());
            std::vector<std::uint32_t> members;
            shell.component[seed] = id;
            stack.assign(1, static_cast<std::uint32_t>(seed));
            while (!stack.empty()) {
                const std::uint32_t i = stack.back();
                stack.pop_back();
                members.push_back(i);
                for (std::uint32_t j : shell.sample.neighbours(i)) {
                    if (shell.sign[j] == SignLabel::Negative && shell.component[j] < 0) {
                        shell.component[j] = id;
                        stack.push_back(j);
                    }
                }
            }
            std::sort(members.begin(), members.end());
            shell.components.push_back(std::move(members));
        }
        out.shells.push_back(std::move(shell));
    }

    std::vector<std::size_t> offset(shells + 1, 0);
    for (unsigned k = 0; k < shells; ++k) {
        offset[k + 1] = offset[k] + out.shells[k].components.size();
    }
    DisjointSets sets(offset[shells]);
    for (unsigned k = 0; k + 1 < shells; ++k) {
        const auto& a = out.shells[k].component;
        const auto& b = out.shells[k + 1].component;
        for (std::size_t i = 0; i < m; ++i) {
            if (a[i] >= 0 && b[i] >= 0) {
                sets.unite(offset[k] + static_cast<std::size_t>(a[i]), offset[k + 1] + static_cast<std::size_t>(b[i]));
            }
        }
    }
    std::map<std::size_t, std::size_t> cone_of_root;
    for (unsigned k = 0; k < shells; ++k) {
        for (std::size_t c = 0; c < out.shells[k].components.size(); ++c) {
            const std::size_t root = sets.find(offset[k] + c);
            auto [it, inserted] = cone_of_root.emplace(root, out.cones.size());
            if (inserted) {
                out.cones.emplace_back();
            }
            Cone& cone = out.cones[it->second];
            cone.members.emplace_back(k, c);
            if (k + 1 == shells) {
                cone.reaches_innermost = true;
            }
        }
    }
    return out;
}

void attach_exact(Witness& w, const SignedPair& pair)
{
    if (pair.is_exact()) {
        w.exact_value = pair.exact_value(w.point).str();
        w.exact_radial = pair.exact_radial(w.point).str();
    }
}

ClosureCheck check_cone_closure(const RegionLabeling& labeling, const SignedPair& pair, std::size_t cone,
                                double eta, std::size_t max_witnesses)
{
    ClosureCheck out;
    out.worst_normalized_radial = -std::numeric_limits<double>::infinity();
    std::vector<Witness> interior;
    std::vector<Witness> ring;
    std::size_t undecided = 0;

    for (const auto& [k, c] : labeling.cones.at(cone).members) {
        const ShellLabels& shell = labeling.shells[k];
        const double scale = std::pow(shell.sample.radius(), pair.degree);
        const auto id = static_cast<std::int32_t>(c);
        std::vector<char> seen(shell.sample.size(), 0);

        for (std::uint32_t i : shell.components[c]) {
            ++out.closure_points;
            const double rad = shell.radial[i];
            out.worst_normalized_radial = std::max(out.worst_normalized_radial, rad / scale);
            if (rad < -labeling.zero_tol * scale) {
                continue;
            }
            bool violates = rad >= 0.0;
            if (pair.is_exact()) {
                violates = pair.exact_radial(shell.sample.point(i)).sign() >= 0;
            }
            if (violates) {
                Witness w = make_witness(shell, i, "interior");
                attach_exact(w, pair);
                interior.push_back(std::move(w));
            }
        }
        for (std::uint32_t i : shell.components[c]) {
            for (std::uint32_t j : shell.sample.neighbours(i)) {
                if (shell.component[j] == id || seen[j] != 0) {
                    continue;
                }
                seen[j] = 1;
                ++out.closure_points;
                const double rad = shell.radial[j];
                out.worst_normalized_radial = std::max(out.worst_normalized_radial, rad / scale);
                if (rad <= -eta * scale) {
                    continue;
                }
                if (rad >= eta * scale && (!pair.is_exact() || pair.exact_radial(shell.sample.point(j)).sign() > 0)) {
                    Witness w = make_witness(shell, j, "ring");
                    attach_exact(w, pair);
                    ring.push_back(std::move(w));
                } else {
                    ++undecided;
                }
            }
        }
    }

    for (auto* list : {&interior, &ring}) {
        for (auto& w : *list) {
            if (out.witnesses.size() >= max_witnesses) {
                break;
            }
            out.witnesses.push_back(std::move(w));
        }
    }
    if (!interior.empty() || !ring.empty()) {
        out.verdict = Verdict::Refuted;
    } else if (undecided > 0) {
        out.verdict = Verdict::Inconclusive;
    } else {
        out.verdict = Verdict::Certified;
    }
    return out;
}

Witness minimal_point(const RegionLabeling& labeling, const SignedPair& pair)
{
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_shell = 0;
    std::size_t best_point = 0;
    for (std::size_t k = 0; k < labeling.shells.size(); ++k) {
        const auto& shell = labeling.shells[k];
        const double scale = std::pow(shell.sample.radius(), labeling.degree);
        for (std::size_t i = 0; i < shell.value.size(); ++i) {
            if (shell.value[i] / scale < best) {
                best = shell.value[i] / scale;
                best_shell = k;
                best_point = i;
            }
        }
    }
    Witness w = make_witness(labeling.shells[best_shell], best_point, "minimum");
    attach_exact(w, pair);
    return w;
}

}  // namespace cetaev
