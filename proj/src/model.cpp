#include "momentpoly/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "momentpoly/errors.hpp"
#include "momentpoly/geometry.hpp"
#include "momentpoly/rng.hpp"

namespace momentpoly {

namespace {

struct VecLess {
    bool operator()(const Vec& a, const Vec& b) const { return lex_less(a, b); }
};

// Positive ray parameter u with image(p') = from + u * weight, if p' sits on
// that open ray.
std::optional<Rational> ray_parameter(const Vec& from, const Vec& weight, const Vec& to) {
    const Vec diff = sub(to, from);
    const Rational u = dot(diff, weight) / dot(weight, weight);
    if (u <= 0) return std::nullopt;
    if (diff != scale(u, weight)) return std::nullopt;
    return u;
}

bool point_shape_ok(const HamiltonianModel& m, const FixedPointDatum& p) {
    if (static_cast<int>(p.image.size()) != m.ambient_dim) return false;
    for (const auto& w : p.weights)
        if (static_cast<int>(w.size()) != m.ambient_dim) return false;
    return true;
}

bool sum_zero_mode(const HamiltonianModel& m) { return m.ambient_dim == m.torus_rank + 1; }

bool generator_valid(const HamiltonianModel& m, const Vec& xi) {
    for (const auto& p : m.fixed_points)
        for (const auto& w : p.weights)
            if (dot(w, xi) == 0) return false;
    return true;
}

bool any_zero_weight(const HamiltonianModel& m) {
    for (const auto& p : m.fixed_points)
        for (const auto& w : p.weights)
            if (is_zero(w)) return true;
    return false;
}

constexpr int kNormBound = 50;

// Walks integer vectors of one max-norm shell in descending lexicographic
// order, hands each admissible candidate to f; f returns true to stop.
template <typename F>
bool walk_shell(int d, int M, bool sum_zero, F&& f) {
    std::vector<long long> v(static_cast<std::size_t>(d), M);
    for (;;) {
        long long maxabs = 0, sum = 0;
        for (long long x : v) {
            maxabs = std::max(maxabs, std::llabs(x));
            sum += x;
        }
        if (maxabs == M && (!sum_zero || sum == 0)) {
            Vec xi(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) xi[i] = Rational(v[i]);
            if (f(xi)) return true;
        }
        int i = d - 1;
        while (i >= 0 && v[i] == -M) v[i--] = M;
        if (i < 0) return false;
        --v[i];
    }
}

} // namespace

std::vector<Violation> validate_model(const HamiltonianModel& m) {
    std::vector<Violation> out;
    if (m.fixed_points.empty()) {
        out.push_back({"", -1, "model has no fixed points"});
        return out;
    }
    std::set<std::string> ids;
    for (const auto& p : m.fixed_points)
        if (!ids.insert(p.id).second) out.push_back({p.id, -1, "duplicate fixed point id"});
    if (m.root_system && m.root_system->ambient_dim != m.ambient_dim)
        out.push_back({"", -1, "root system ambient dimension differs from the model's"});

    for (const auto& p : m.fixed_points) {
        if (static_cast<int>(p.image.size()) != m.ambient_dim)
            out.push_back({p.id, -1, "image dimension differs from ambient_dim"});
        for (std::size_t j = 0; j < p.weights.size(); ++j) {
            if (static_cast<int>(p.weights[j].size()) != m.ambient_dim)
                out.push_back({p.id, static_cast<int>(j),
                               "weight dimension differs from ambient_dim"});
            else if (is_zero(p.weights[j]))
                out.push_back({p.id, static_cast<int>(j),
                               "zero weight: fixed points must be isolated"});
        }
        if (static_cast<int>(p.weights.size()) != m.half_dim)
            out.push_back({p.id, -1, "weight count differs from half_dim"});
    }

    // Ray checks only on well-shaped points; shape findings are already out.
    for (const auto& p : m.fixed_points) {
        if (!point_shape_ok(m, p)) continue;
        for (std::size_t j = 0; j < p.weights.size(); ++j) {
            if (is_zero(p.weights[j])) continue;
            bool found = false;
            for (const auto& q : m.fixed_points) {
                if (&q == &p || !point_shape_ok(m, q)) continue;
                if (ray_parameter(p.image, p.weights[j], q.image)) {
                    found = true;
                    break;
                }
            }
            if (!found)
                out.push_back({p.id, static_cast<int>(j),
                               "no fixed image on the open ray in this weight direction"});
        }
        for (const auto& [j, tid] : p.targets) {
            if (j < 0 || j >= static_cast<int>(p.weights.size())) {
                out.push_back({p.id, j, "target annotation references a missing weight index"});
                continue;
            }
            const auto it =
                std::find_if(m.fixed_points.begin(), m.fixed_points.end(),
                             [&](const FixedPointDatum& q) { return q.id == tid; });
            if (it == m.fixed_points.end()) {
                out.push_back({p.id, j, "target annotation references an unknown id: " + tid});
                continue;
            }
            if (!point_shape_ok(m, *it) || is_zero(p.weights[j])) continue;
            if (!ray_parameter(p.image, p.weights[j], it->image))
                out.push_back(
                    {p.id, j, "annotated target " + tid + " is not on the open weight ray"});
        }
    }

    // Hull sanity guard, skipped outside the supported geometry range.
    if (out.empty() && m.ambient_dim <= 4) {
        std::vector<Vec> images;
        for (const auto& p : m.fixed_points) images.push_back(p.image);
        try {
            const Polytope hull = Polytope::convex_hull(images);
            for (const auto& p : m.fixed_points)
                if (!hull.contains(p.image))
                    out.push_back({p.id, -1, "image escapes the hull of images"});
        } catch (const UnsupportedRank&) {
            // Affine rank above 3: guard does not apply.
        }
    }
    return out;
}

Generator choose_generator(const HamiltonianModel& m) {
    if (m.ambient_dim <= 0) throw InvalidInput("choose_generator: ambient_dim must be positive");
    if (any_zero_weight(m))
        throw InvalidInput("choose_generator: a zero weight admits no generator");
    const bool sz = sum_zero_mode(m);
    Generator g;
    for (int M = 1; M <= kNormBound; ++M) {
        bool done = walk_shell(m.ambient_dim, M, sz, [&](const Vec& xi) {
            if (!generator_valid(m, xi)) return false;
            g.xi = xi;
            return true;
        });
        if (done) return g;
    }
    throw InvalidInput("choose_generator: no valid generator up to max-norm 50");
}

std::vector<Generator> enumerate_generators(const HamiltonianModel& m, int count,
                                            std::uint64_t seed) {
    std::vector<Generator> out;
    if (count <= 0) return out;
    if (m.ambient_dim <= 0)
        throw InvalidInput("enumerate_generators: ambient_dim must be positive");
    if (any_zero_weight(m))
        throw InvalidInput("enumerate_generators: a zero weight admits no generator");
    const bool sz = sum_zero_mode(m);
    const int d = m.ambient_dim;
    if (seed == 0) {
        for (int M = 1; M <= kNormBound && static_cast<int>(out.size()) < count; ++M)
            walk_shell(d, M, sz, [&](const Vec& xi) {
                if (generator_valid(m, xi)) out.push_back({xi});
                return static_cast<int>(out.size()) >= count;
            });
        if (static_cast<int>(out.size()) < count)
            throw InvalidInput("enumerate_generators: fewer valid generators than requested");
        return out;
    }
    std::set<Vec, VecLess> seen;
    std::uint64_t counter = 0;
    for (int attempt = 0; attempt < 400000 && static_cast<int>(out.size()) < count; ++attempt) {
        Vec xi(static_cast<std::size_t>(d));
        long long sum = 0;
        for (int k = 0; k < d; ++k) {
            const long long x =
                static_cast<long long>(splitmix64(seed, counter++) % 101) - kNormBound;
            xi[static_cast<std::size_t>(k)] = Rational(x);
            sum += x;
        }
        if (sz) xi[static_cast<std::size_t>(d - 1)] -= Rational(sum);
        if (is_zero(xi) || !generator_valid(m, xi)) continue;
        if (seen.insert(xi).second) out.push_back({xi});
    }
    if (static_cast<int>(out.size()) < count)
        throw InvalidInput("enumerate_generators: could not draw enough valid generators");
    return out;
}

int half_morse_index(const FixedPointDatum& p, const Generator& xi) {
    int s = 0;
    for (const auto& w : p.weights) {
        const Rational t = dot(w, xi.xi);
        if (t == 0)
            throw InvalidInput("generator pairs to zero with a weight of point " + p.id);
        if (t < 0) ++s;
    }
    return s;
}

MorseReport morse_report(const HamiltonianModel& m, const Generator& g) {
    MorseReport r;
    r.xi = g.xi;
    r.betti.assign(static_cast<std::size_t>(std::max(m.half_dim, 0)) + 1, 0);
    for (const auto& p : m.fixed_points) {
        const int s = half_morse_index(p, g);
        r.sigma.push_back({p.id, s});
        if (s >= static_cast<int>(r.betti.size())) r.betti.resize(s + 1, 0);
        r.betti[s]++;
    }
    if (r.betti[0] != 1)
        r.warnings.push_back("b_0 = " + std::to_string(r.betti[0]) +
                             ", expected 1 for a connected model");
    const int n = static_cast<int>(r.betti.size()) - 1;
    for (int k = 0; 2 * k <= n; ++k)
        if (r.betti[k] != r.betti[n - k])
            r.warnings.push_back("duality failure: b_" + std::to_string(2 * k) + " = " +
                                 std::to_string(r.betti[k]) + " but b_" +
                                 std::to_string(2 * (n - k)) + " = " +
                                 std::to_string(r.betti[n - k]));
    return r;
}

InvarianceReport betti_invariance(const HamiltonianModel& m, int trials, std::uint64_t seed) {
    InvarianceReport rep;
    rep.invariant = true;
    for (const auto& g : enumerate_generators(m, trials, seed)) {
        rep.generators.push_back(g.xi);
        rep.bettis.push_back(morse_report(m, g).betti);
        if (rep.bettis.back() != rep.bettis.front()) rep.invariant = false;
    }
    return rep;
}

DeformationReport deformation_report(const HamiltonianModel& m, const Generator& g) {
    DeformationReport rep;
    rep.xi = g.xi;
    for (const auto& p : m.fixed_points) {
        if (half_morse_index(p, g) != 1) continue;
        int neg = -1;
        for (std::size_t j = 0; j < p.weights.size(); ++j)
            if (dot(p.weights[j], g.xi) < 0) neg = static_cast<int>(j);
        DeformationEntry e;
        e.id = p.id;
        e.image = p.image;
        e.negative_weight = p.weights[static_cast<std::size_t>(neg)];
        for (const auto& q : m.fixed_points) {
            if (&q == &p) continue;
            if (auto u = ray_parameter(p.image, e.negative_weight, q.image))
                e.hits.push_back({*u, q.id});
        }
        std::sort(e.hits.begin(), e.hits.end(), [](const RayHit& a, const RayHit& b) {
            if (a.u != b.u) return a.u < b.u;
            return a.target_id < b.target_id;
        });
        if (e.hits.empty())
            throw ModelInconsistency("index-1 point " + p.id +
                                     ": no fixed image on its negative weight ray");
        const auto ann = p.targets.find(neg);
        if (ann != p.targets.end()) {
            const auto hit = std::find_if(e.hits.begin(), e.hits.end(), [&](const RayHit& h) {
                return h.target_id == ann->second;
            });
            if (hit == e.hits.end())
                throw ModelInconsistency("index-1 point " + p.id + ": annotated target " +
                                         ann->second + " is not on the ray");
            e.designated = *hit;
            const auto target =
                std::find_if(m.fixed_points.begin(), m.fixed_points.end(),
                             [&](const FixedPointDatum& q) { return q.id == ann->second; });
            e.squared_dist = squared_distance(p.image, target->image);
            e.dist = std::sqrt(to_double(*e.squared_dist));
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

} // namespace momentpoly
