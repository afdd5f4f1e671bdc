#pragma once

#include <vector>

#include "momentpoly/geometry.hpp"
#include "momentpoly/model.hpp"
#include "momentpoly/rational.hpp"
#include "momentpoly/roots.hpp"

namespace momentpoly {

struct ComplexRational {
    Rational re;
    Rational im;

    bool operator==(const ComplexRational&) const = default;
};

using ComplexVector = std::vector<ComplexRational>;

// Hermitian traceless matrix with exact complex rational entries: entry(i,j)
// is always the conjugate of entry(j,i) and the diagonal sums to zero.
struct HermitianMatrix {
    int size = 0;
    std::vector<ComplexRational> e;

    ComplexRational& at(int i, int j) { return e[static_cast<std::size_t>(i) * size + j]; }
    const ComplexRational& at(int i, int j) const {
        return e[static_cast<std::size_t>(i) * size + j];
    }
    // Diagonal as a real vector (imaginary parts vanish on a Hermitian diagonal).
    Vec diagonal() const;

    bool operator==(const HermitianMatrix&) const = default;
};

// Stored moment values omit a global 1/(2*pi) prefactor so everything stays
// rational; multiply by this to recover the unnormalized convention.
extern const double kOmittedMomentPrefactor;

// x x*/|x|^2 - I/m for a nonzero complex vector x with m components. Exact,
// and invariant under rescaling x by any nonzero complex scalar.
HermitianMatrix su_moment_hat(const ComplexVector& x);

// Projective space of complex dimension n under the diagonal torus, at
// symplectic scale t > 0. Fixed points e1..e(n+1); image(e_i) = t * (i-th
// diagonal of su_moment_hat), weights eps_j - eps_i with target e_j.
HamiltonianModel cpn_model(int n, const Rational& t);

// The conjugate action: images and weights flip sign, targets stay.
HamiltonianModel negated_model(const HamiltonianModel& m);

// Diagonal torus on a product: paired fixed points, summed images,
// concatenated weights, componentwise targets.
HamiltonianModel product_model(const HamiltonianModel& m1, const HamiltonianModel& m2);

// Weyl orbit of a nonzero dominant lambda, images scale*nu for scale > 0.
// Weights at nu are the roots pairing negatively with nu; the weight beta
// points along the edge to the reflected orbit point s_beta(nu), which is
// recorded as its target.
HamiltonianModel coadjoint_orbit_model(const RootSystem& rs, const Vec& lambda,
                                       const Rational& scale);

// Product of the two rank-2 orbit models through (gamma,gamma) and (delta,0):
// 16 fixed points, complex dimension 6.
HamiltonianModel so5_example(const Rational& gamma, const Rational& delta);

// product(cpn_model(2,t), cpn_model(2,s)) and the skew variant with the
// second factor conjugated.
HamiltonianModel su3_natural(const Rational& t, const Rational& s);
HamiltonianModel su3_skew(const Rational& t, const Rational& s);

// Truncate one vertex: cut by the hyperplane whose normal is the sum of the
// primitive integer edge directions leaving the vertex, passing through
// vertex + epsilon * normal. Throws unless the cut strictly separates the
// chosen vertex from every other one.
Polytope blowup_cut(const Polytope& delta, const Vec& vertex, const Rational& epsilon);

} // namespace momentpoly
