#pragma once

#include <utility>
#include <vector>

#include "momentpoly/geometry.hpp"
#include "momentpoly/linalg.hpp"

namespace momentpoly {

enum class RootFamily { A, B, Explicit };

// Finite reduced root list closed under negation. Positive roots are the lex
// positive ones (first nonzero coordinate > 0), which matches the standard
// positive sets for the A and B coordinates used here. Simple roots are the
// positives that are not sums of two positives.
struct RootSystem {
    RootFamily family = RootFamily::Explicit;
    int rank = 0;
    int ambient_dim = 0;
    std::vector<Vec> roots;
    std::vector<Vec> positive_roots;
    std::vector<Vec> simple_roots;

    bool operator==(const RootSystem&) const = default;
};

// Type A_l in sum-zero R^{l+1} (roots e_i - e_j), type B_l in R^l
// (roots +-e_i and +-e_i +- e_j). Rank 1..3.
RootSystem build_root_system(RootFamily family, int rank);

// Escape hatch for any finite reduced negation-closed list.
RootSystem explicit_root_system(const std::vector<Vec>& roots);

struct WeylGroup {
    std::vector<Mat> elements;    // closed under product and inverse, identity included
    std::vector<Mat> generators;
};

// Closure of the simple reflections. Throws IterationLimit past 10^4 elements,
// which guards explicit lists that do not generate a finite group.
WeylGroup weyl_group(const RootSystem& rs);

// Group element w and w(v) with w(v) dominant. Total: never fails on root
// systems built here.
std::pair<Mat, Vec> to_dominant(const RootSystem& rs, const Vec& v);

// Elements of W fixing q exactly. generators holds the reflections among them,
// which generate the stabilizer of a point in a reflection group.
WeylGroup stabilizer(const WeylGroup& w, const Vec& q);

// One hyperplane through the origin per positive root, as the boundary
// {<root, x> = 0} of the halfspace record.
std::vector<Halfspace> walls(const RootSystem& rs);

bool is_dominant(const RootSystem& rs, const Vec& v);
bool on_wall(const RootSystem& rs, const Vec& v);

// Deduplicated lex sorted orbit of v.
std::vector<Vec> orbit(const WeylGroup& w, const Vec& v);

} // namespace momentpoly
