#include "momentpoly/builders.hpp"

#include <cstddef>
#include <numbers>
#include <string>
#include <utility>

#include "momentpoly/errors.hpp"
#include "momentpoly/linalg.hpp"

namespace momentpoly {

namespace {

ComplexRational conj(const ComplexRational& z) { return {z.re, -z.im}; }

ComplexRational mul(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Vec unit(int dim, int i) {
    Vec v(static_cast<std::size_t>(dim), Rational(0));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

ComplexVector complex_unit(int dim, int i) {
    ComplexVector v(static_cast<std::size_t>(dim));
    v[static_cast<std::size_t>(i)].re = 1;
    return v;
}

Vec reflect(const Vec& v, const Vec& beta) {
    return sub(v, scale(2 * dot(v, beta) / dot(beta, beta), beta));
}

} // namespace

const double kOmittedMomentPrefactor = 1.0 / (2.0 * std::numbers::pi);

Vec HermitianMatrix::diagonal() const {
    Vec d;
    for (int i = 0; i < size; ++i) d.push_back(at(i, i).re);
    return d;
}

HermitianMatrix su_moment_hat(const ComplexVector& x) {
    const int m = static_cast<int>(x.size());
    Rational norm2 = 0;
    for (const auto& z : x) norm2 += z.re * z.re + z.im * z.im;
    if (m == 0 || norm2 == 0) throw InvalidInput("su_moment_hat: x must be a nonzero vector");

    HermitianMatrix h;
    h.size = m;
    h.e.resize(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            ComplexRational z = mul(x[static_cast<std::size_t>(i)],
                                    conj(x[static_cast<std::size_t>(j)]));
            z.re /= norm2;
            z.im /= norm2;
            if (i == j) z.re -= Rational(1) / m;
            h.at(i, j) = z;
        }
    return h;
}

HamiltonianModel cpn_model(int n, const Rational& t) {
    if (n < 1) throw InvalidInput("cpn_model: n must be at least 1");
    // Negative t would flip every image while leaving the weights alone, so
    // the recorded edge targets would sit on the wrong ray. Compose with
    // negated_model for the mirrored action instead.
    if (t <= 0) throw InvalidInput("cpn_model: scale t must be positive");

    const int dim = n + 1;
    HamiltonianModel m;
    m.torus_rank = n;
    m.ambient_dim = dim;
    m.half_dim = n;
    if (n <= 3) m.root_system = build_root_system(RootFamily::A, n);

    for (int i = 0; i < dim; ++i) {
        FixedPointDatum p;
        p.id = "e" + std::to_string(i + 1);
        p.image = scale(t, su_moment_hat(complex_unit(dim, i)).diagonal());
        int k = 0;
        for (int j = 0; j < dim; ++j) {
            if (j == i) continue;
            p.weights.push_back(sub(unit(dim, j), unit(dim, i)));
            p.targets[k++] = "e" + std::to_string(j + 1);
        }
        m.fixed_points.push_back(std::move(p));
    }
    return m;
}

HamiltonianModel negated_model(const HamiltonianModel& m) {
    HamiltonianModel out = m;
    for (auto& p : out.fixed_points) {
        p.image = neg(p.image);
        for (auto& w : p.weights) w = neg(w);
    }
    return out;
}

HamiltonianModel product_model(const HamiltonianModel& m1, const HamiltonianModel& m2) {
    if (m1.ambient_dim != m2.ambient_dim || m1.torus_rank != m2.torus_rank)
        throw InvalidInput("product_model: factors live on different tori");

    HamiltonianModel out;
    out.torus_rank = m1.torus_rank;
    out.ambient_dim = m1.ambient_dim;
    out.half_dim = m1.half_dim + m2.half_dim;
    out.root_system = m1.root_system ? m1.root_system : m2.root_system;

    for (const auto& a : m1.fixed_points)
        for (const auto& b : m2.fixed_points) {
            FixedPointDatum p;
            p.id = "(" + a.id + "," + b.id + ")";
            p.image = add(a.image, b.image);
            p.weights = a.weights;
            p.weights.insert(p.weights.end(), b.weights.begin(), b.weights.end());
            for (const auto& [k, id] : a.targets) p.targets[k] = "(" + id + "," + b.id + ")";
            const int off = static_cast<int>(a.weights.size());
            for (const auto& [k, id] : b.targets) p.targets[off + k] = "(" + a.id + "," + id + ")";
            out.fixed_points.push_back(std::move(p));
        }
    return out;
}

HamiltonianModel coadjoint_orbit_model(const RootSystem& rs, const Vec& lambda,
                                       const Rational& scale_factor) {
    if (static_cast<int>(lambda.size()) != rs.ambient_dim)
        throw InvalidInput("coadjoint_orbit_model: lambda dimension mismatch");
    if (is_zero(lambda)) throw InvalidInput("coadjoint_orbit_model: lambda must be nonzero");
    if (!is_dominant(rs, lambda))
        throw InvalidInput("coadjoint_orbit_model: lambda must be dominant");
    if (scale_factor <= 0)
        throw InvalidInput("coadjoint_orbit_model: scale must be positive");

    const WeylGroup w = weyl_group(rs);
    const std::vector<Vec> points = orbit(w, lambda);

    HamiltonianModel m;
    m.torus_rank = rs.rank;
    m.ambient_dim = rs.ambient_dim;
    m.root_system = rs;

    for (const auto& nu : points) {
        FixedPointDatum p;
        p.id = format_vector(nu);
        p.image = scale(scale_factor, nu);
        int k = 0;
        for (const auto& beta : rs.roots) {
            if (dot(nu, beta) >= 0) continue;
            p.weights.push_back(beta);
            p.targets[k++] = format_vector(reflect(nu, beta));
        }
        m.fixed_points.push_back(std::move(p));
    }
    m.half_dim = m.fixed_points.empty()
                     ? 0
                     : static_cast<int>(m.fixed_points.front().weights.size());
    return m;
}

HamiltonianModel so5_example(const Rational& gamma, const Rational& delta) {
    const RootSystem b2 = build_root_system(RootFamily::B, 2);
    return product_model(coadjoint_orbit_model(b2, Vec{gamma, gamma}, 1),
                         coadjoint_orbit_model(b2, Vec{delta, Rational(0)}, 1));
}

HamiltonianModel su3_natural(const Rational& t, const Rational& s) {
    return product_model(cpn_model(2, t), cpn_model(2, s));
}

HamiltonianModel su3_skew(const Rational& t, const Rational& s) {
    return product_model(cpn_model(2, t), negated_model(cpn_model(2, s)));
}

Polytope blowup_cut(const Polytope& delta, const Vec& vertex, const Rational& epsilon) {
    if (epsilon <= 0) throw InvalidInput("blowup_cut: epsilon must be positive");
    const int vi = delta.find_vertex(vertex);
    if (vi < 0) throw InvalidInput("blowup_cut: vertex is not a vertex of delta");
    const std::vector<int> nbrs = delta.neighbors(vi);
    if (nbrs.empty()) throw InvalidInput("blowup_cut: delta has no edges at the vertex");

    // Inward normal: sum of primitive integer directions of the incident edges.
    Vec n(vertex.size(), Rational(0));
    for (const int u : nbrs)
        n = add(n, primitive_integer(sub(delta.vertices()[static_cast<std::size_t>(u)], vertex)));

    const Rational threshold = epsilon * dot(n, n);
    for (int i = 0; i < static_cast<int>(delta.vertices().size()); ++i) {
        if (i == vi) continue;
        if (dot(n, sub(delta.vertices()[static_cast<std::size_t>(i)], vertex)) <= threshold)
            throw InvalidInput("blowup_cut: epsilon separates more than the chosen vertex");
    }

    auto kept = cut(delta, Halfspace{neg(n), -(dot(n, vertex) + threshold)});
    if (!kept) throw InvalidInput("blowup_cut: cut removed everything");
    return *kept;
}

} // namespace momentpoly
