#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "momentpoly/linalg.hpp"
#include "momentpoly/roots.hpp"

namespace momentpoly {

// One isolated fixed point: its moment image q and the isotropy weight
// multiset at the point. targets optionally names, per weight index, the fixed
// point at the far end of the invariant sphere in that weight direction; it is
// topological data the polytope cannot reproduce, so it is carried, never
// inferred.
struct FixedPointDatum {
    std::string id;
    Vec image;
    std::vector<Vec> weights;
    std::map<int, std::string> targets;

    bool operator==(const FixedPointDatum&) const = default;
};

struct HamiltonianModel {
    int torus_rank = 0;
    int ambient_dim = 0;
    int half_dim = 0;  // n: half the real dimension, = weights per point
    std::vector<FixedPointDatum> fixed_points;
    std::optional<RootSystem> root_system;

    bool operator==(const HamiltonianModel&) const = default;
};

struct Violation {
    std::string point_id;  // empty for model-level findings
    int weight_index = -1;
    std::string message;
};

// Never throws; structural and semantic findings come back as data. Empty
// result means the model passes: weight counts, nonzero weights, unique ids,
// consistent dimensions, target references, and the edge-ray closure (every
// weight direction from every image reaches another fixed image at u > 0).
std::vector<Violation> validate_model(const HamiltonianModel& m);

struct Generator {
    Vec xi;
};

// First integer vector, ordered by increasing max-norm and lexicographically
// descending within a norm shell, whose pairing with every weight of every
// fixed point is nonzero. Models in ambient dimension torus_rank+1 enumerate
// sum-zero vectors. Deterministic; the golden values are frozen in tests.
Generator choose_generator(const HamiltonianModel& m);

// count distinct valid generators. seed 0 continues the canonical enumeration
// from the start; seed > 0 draws random integer candidates from that seed.
std::vector<Generator> enumerate_generators(const HamiltonianModel& m, int count,
                                            std::uint64_t seed = 0);

// Number of weights at p pairing strictly negatively with xi. A zero pairing
// means xi is not a generator for this model: InvalidInput.
int half_morse_index(const FixedPointDatum& p, const Generator& xi);

struct MorseReport {
    Vec xi;
    std::vector<std::pair<std::string, int>> sigma;  // per point, model order
    std::vector<int> betti;                          // betti[k] = b_{2k}
    std::vector<std::string> warnings;
};

// Betti numbers by counting half Morse indices. Warnings flag b_0 != 1 and
// failures of the b_{2k} = b_{2(n-k)} symmetry; both indicate inconsistent
// input rather than a fault here.
MorseReport morse_report(const HamiltonianModel& m, const Generator& g);

struct InvarianceReport {
    bool invariant = false;
    std::vector<Vec> generators;
    std::vector<std::vector<int>> bettis;
};

// Betti vectors across `trials` distinct valid generators.
InvarianceReport betti_invariance(const HamiltonianModel& m, int trials, std::uint64_t seed = 0);

struct RayHit {
    Rational u;
    std::string target_id;

    bool operator==(const RayHit&) const = default;
};

// One entry per fixed point of half Morse index 1: the unique negative weight
// direction, every fixed image on its open ray, and (when the model annotates
// the far end) the designated hit with the exact squared distance to it.
struct DeformationEntry {
    std::string id;
    Vec image;
    Vec negative_weight;
    std::vector<RayHit> hits;  // sorted by parameter u
    std::optional<RayHit> designated;
    std::optional<Rational> squared_dist;
    std::optional<double> dist;
};

struct DeformationReport {
    Vec xi;
    std::vector<DeformationEntry> entries;
};

// Throws ModelInconsistency when an index-1 ray meets no fixed image, or when
// a targets annotation names a point that is not on the ray.
DeformationReport deformation_report(const HamiltonianModel& m, const Generator& g);

} // namespace momentpoly
