#pragma once

#include <string>
#include <vector>

#include "momentpoly/geometry.hpp"
#include "momentpoly/model.hpp"
#include "momentpoly/roots.hpp"

namespace momentpoly {

// Torus moment polytope recovered from a dominant-chamber polytope: the hull
// of the full Weyl sweep of its vertices.
Polytope mu_T_from_kirwan(const Polytope& delta, const WeylGroup& w);

struct ReflectiveReport {
    bool reflective = false;
    int failed_condition = 0;  // 0 when reflective, else 1 or 2
    std::string detail;        // witness: offending stabilizer move or face
};

// delta is reflective at q iff (1) the affine hull of delta and the set of
// supporting lines of the codimension-1 faces through q are both invariant
// under the stabilizer W_q, and (2) every such face, minus its endpoints, lies
// in the open dominant chamber. Points of delta in no codimension-1 face pass
// vacuously. Throws InvalidInput when q is outside delta; affine rank of delta
// must be <= 2 (UnsupportedRank otherwise).
ReflectiveReport reflective(const Polytope& delta, const Vec& q, const RootSystem& rs,
                            const WeylGroup& w);

struct VertexRecord {
    Vec q;
    bool on_wall = false;
    bool reflective = false;
    bool certified_fixed_image = false;  // non-reflective or strictly dominant
    std::vector<std::string> matched;    // fixed points of the model with image q
    bool discrepancy = false;            // certified yet matched is empty
};

// One record per vertex of delta, in vertex order. Certification combines the
// two routes: non-reflective points and open-chamber points are images of
// fixed points; a certified vertex matching no fixed point of m is flagged
// rather than trusted.
std::vector<VertexRecord> classify_vertices(const Polytope& delta, const HamiltonianModel& m,
                                            const RootSystem& rs, const WeylGroup& w);

} // namespace momentpoly
