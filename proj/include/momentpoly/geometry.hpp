#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "momentpoly/linalg.hpp"

namespace momentpoly {

// The set {x : <normal,x> <= offset}. normal must be nonzero.
struct Halfspace {
    Vec normal;
    Rational offset;
};

// Supporting halfspace plus its incident vertices. The normal is the primitive
// integer vector inside the direction space of the affine hull pointing
// outward, so the record is canonical. cycle indexes Polytope::vertices():
// counterclockwise as seen from outside in rank 3, the two edge endpoints in
// rank 2. Rotated so the smallest index comes first.
struct Facet {
    Halfspace plane;
    std::vector<int> cycle;
};

// Exact V-representation polytope of affine rank <= 3 in ambient dimension <= 4.
// Vertices are minimal and lex sorted, so equal vertex lists mean equal polytopes.
class Polytope {
public:
    static Polytope convex_hull(const std::vector<Vec>& points);

    int ambient_dim() const { return ambient_; }
    int rank() const { return rank_; }
    const std::vector<Vec>& vertices() const { return vertices_; }
    // Empty when rank <= 1; callers branch on rank.
    const std::vector<Facet>& facets() const { return facets_; }
    // Orthogonalized basis of the affine hull directions, primitive integer.
    const std::vector<Vec>& affine_basis() const { return basis_; }

    bool contains(const Vec& x) const;

    // Unordered vertex index pairs, sorted. Rank 1 has the single segment.
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> neighbors(int vi) const;
    // Rank 2 only: all vertex indices in counterclockwise frame order.
    const std::vector<int>& boundary_cycle() const;
    // Index into vertices(), or -1.
    int find_vertex(const Vec& x) const;

    bool operator==(const Polytope& other) const { return vertices_ == other.vertices_; }

private:
    int ambient_ = 0;
    int rank_ = 0;
    std::vector<Vec> vertices_;
    std::vector<Facet> facets_;
    std::vector<int> cycle_;
    Vec base_;
    std::vector<Vec> basis_;
};

// Exact intersection P cap H. Returns P's representation unchanged when no
// vertex lies strictly outside, and an empty optional when the intersection is
// empty (every vertex strictly outside). New vertices are exact segment
// crossings with the boundary hyperplane.
std::optional<Polytope> cut(const Polytope& p, const Halfspace& h);

} // namespace momentpoly
