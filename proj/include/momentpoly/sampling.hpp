#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "momentpoly/geometry.hpp"
#include "momentpoly/model.hpp"
#include "momentpoly/rational.hpp"

namespace momentpoly {

using Complex = std::complex<double>;
// A point of projective 2-space as a unit vector in C^3.
using CVec3 = std::array<Complex, 3>;

enum class ActionFamily { Natural, Skew };

struct MomentSample {
    std::array<Complex, 9> mu_hat{};  // 3x3 Hermitian, row major, trace ~ 0
    std::array<double, 3> diag{};     // torus value
    std::array<double, 3> dominant{}; // eigenvalues, weakly decreasing
};

// index-th unit vector of the seeded stream. Counter based: any sample can be
// produced independently, so worker partitioning cannot change results.
CVec3 projective_sample(std::uint64_t seed, std::uint64_t index);
std::vector<CVec3> sample_projective(int n, std::uint64_t seed);

// t*mu_hat(x) + s*mu_hat(y), or minus for the skew family, with diagonal and
// eigenvalues. Eigenvalues by cyclic Jacobi to off-diagonal norm 1e-12;
// throws IterationLimit after 100 sweeps (only NaN input gets that far).
MomentSample moment_sample(ActionFamily family, double t, double s, const CVec3& x,
                           const CVec3& y);

// Descending eigenvalues of a 3x3 Hermitian matrix, same Jacobi loop. Exposed
// so tests can cross-check against exact characteristic polynomial roots.
std::array<double, 3> hermitian_eigenvalues(const std::array<Complex, 9>& h);

// Fraction of points satisfying every facet inequality of the exact hull
// within additive slack tol, and lying on its affine hull within tol.
double membership_fraction(const Polytope& hull, const std::vector<std::vector<double>>& points,
                           double tol);

// Fixed orthonormal frame for the sum-zero plane in R^3.
std::array<double, 2> project_sum_zero(const std::vector<double>& p);

// Counterclockwise convex hull of a 2D cloud. Throws InvalidInput when the
// cloud spans no area.
std::vector<std::array<double, 2>> approx_hull_2d(const std::vector<std::array<double, 2>>& pts);

// Symmetric Hausdorff distance between two convex polygons given as vertex
// lists in boundary order.
double hausdorff_2d(const std::vector<std::array<double, 2>>& a,
                    const std::vector<std::array<double, 2>>& b);

// Exact polytope as a projected polygon in boundary order (rank <= 2,
// ambient 3, sum-zero data).
std::vector<std::array<double, 2>> project_polytope(const Polytope& p);

struct SampleReport {
    int count = 0;
    double fraction_inside = 0;
    double hausdorff = 0;
    double exact_diameter = 0;
    std::uint64_t seed = 0;
};

// End-to-end oracle for one projective product family: seed-deterministic
// samples of the actual moment map against the exact image hull.
SampleReport sample_family(ActionFamily family, const Rational& t, const Rational& s, int count,
                           std::uint64_t seed, double tol);

} // namespace momentpoly
