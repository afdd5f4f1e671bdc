#include "momentpoly/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "momentpoly/builders.hpp"
#include "momentpoly/errors.hpp"
#include "momentpoly/rng.hpp"

namespace momentpoly {

namespace {

double u01(std::uint64_t seed, std::uint64_t k) {
    // In (0,1) strictly, so logarithms stay finite.
    return (static_cast<double>(splitmix64(seed, k) >> 11) + 0.5) * 0x1p-53;
}

// mu_hat(v) = v v*/|v|^2 - I/3.
std::array<Complex, 9> mu_hat_of(const CVec3& v) {
    double n2 = 0;
    for (const auto& z : v) n2 += std::norm(z);
    std::array<Complex, 9> h{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            h[static_cast<std::size_t>(i) * 3 + j] =
                v[static_cast<std::size_t>(i)] * std::conj(v[static_cast<std::size_t>(j)]) / n2;
        }
    for (int i = 0; i < 3; ++i) h[static_cast<std::size_t>(i) * 4] -= 1.0 / 3.0;
    return h;
}

double off_norm(const std::array<Complex, 9>& a) {
    double s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) s += std::norm(a[static_cast<std::size_t>(i) * 3 + j]);
    return std::sqrt(s);
}

// One complex Jacobi rotation annihilating a_pq, a similarity by the unitary
// that diagonalizes the (p,q) block.
void rotate(std::array<Complex, 9>& a, int p, int q) {
    const Complex g = a[static_cast<std::size_t>(p) * 3 + q];
    const double mag = std::abs(g);
    if (mag == 0) return;
    const double alpha = a[static_cast<std::size_t>(p) * 4].real();
    const double beta = a[static_cast<std::size_t>(q) * 4].real();
    const double theta = 0.5 * std::atan2(2.0 * mag, alpha - beta);
    const double c = std::cos(theta), s = std::sin(theta);
    const Complex phase = g / mag;

    // Columns of V: v_p = c e_p + s conj(phase) e_q, v_q = -s phase e_p + c e_q.
    std::array<Complex, 9> v{};
    v[0] = v[4] = v[8] = 1.0;
    v[static_cast<std::size_t>(p) * 3 + p] = c;
    v[static_cast<std::size_t>(q) * 3 + p] = s * std::conj(phase);
    v[static_cast<std::size_t>(p) * 3 + q] = -s * phase;
    v[static_cast<std::size_t>(q) * 3 + q] = c;

    std::array<Complex, 9> av{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Complex sum = 0;
            for (int k = 0; k < 3; ++k)
                sum += a[static_cast<std::size_t>(i) * 3 + k] *
                       v[static_cast<std::size_t>(k) * 3 + j];
            av[static_cast<std::size_t>(i) * 3 + j] = sum;
        }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Complex sum = 0;
            for (int k = 0; k < 3; ++k)
                sum += std::conj(v[static_cast<std::size_t>(k) * 3 + i]) *
                       av[static_cast<std::size_t>(k) * 3 + j];
            a[static_cast<std::size_t>(i) * 3 + j] = sum;
        }
}

double seg_dist(const std::array<double, 2>& p, const std::array<double, 2>& a,
                const std::array<double, 2>& b) {
    const double dx = b[0] - a[0], dy = b[1] - a[1];
    const double len2 = dx * dx + dy * dy;
    double t = 0;
    if (len2 > 0) t = std::clamp(((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2, 0.0, 1.0);
    const double px = a[0] + t * dx - p[0], py = a[1] + t * dy - p[1];
    return std::sqrt(px * px + py * py);
}

double point_to_polygon(const std::array<double, 2>& p,
                        const std::vector<std::array<double, 2>>& poly) {
    if (poly.size() == 1) {
        const double dx = p[0] - poly[0][0], dy = p[1] - poly[0][1];
        return std::sqrt(dx * dx + dy * dy);
    }
    bool inside = poly.size() > 2;
    double best = std::numeric_limits<double>::infinity();
    int sign = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& a = poly[i];
        const auto& b = poly[(i + 1) % poly.size()];
        if (poly.size() == 2 && i == 1) break;
        best = std::min(best, seg_dist(p, a, b));
        const double cr = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
        if (cr > 0) {
            if (sign < 0) inside = false;
            sign = 1;
        } else if (cr < 0) {
            if (sign > 0) inside = false;
            sign = -1;
        }
    }
    if (poly.size() > 2 && inside) return 0;
    return best;
}

} // namespace

CVec3 projective_sample(std::uint64_t seed, std::uint64_t index) {
    CVec3 v{};
    const std::uint64_t base = index * 6;
    double n2 = 0;
    for (int c = 0; c < 3; ++c) {
        const double u1 = u01(seed, base + 2 * static_cast<std::uint64_t>(c));
        const double u2 = u01(seed, base + 2 * static_cast<std::uint64_t>(c) + 1);
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double re = r * std::cos(2.0 * std::numbers::pi * u2);
        const double im = r * std::sin(2.0 * std::numbers::pi * u2);
        v[static_cast<std::size_t>(c)] = Complex(re, im);
        n2 += re * re + im * im;
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& z : v) z *= inv;
    return v;
}

std::vector<CVec3> sample_projective(int n, std::uint64_t seed) {
    if (n < 1) throw InvalidInput("sample_projective: n must be at least 1");
    std::vector<CVec3> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out.push_back(projective_sample(seed, static_cast<std::uint64_t>(i)));
    return out;
}

std::array<double, 3> hermitian_eigenvalues(const std::array<Complex, 9>& h) {
    std::array<Complex, 9> a = h;
    bool converged = false;
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (off_norm(a) <= 1e-12) {
            converged = true;
            break;
        }
        rotate(a, 0, 1);
        rotate(a, 0, 2);
        rotate(a, 1, 2);
    }
    if (!converged && !(off_norm(a) <= 1e-12))
        throw IterationLimit("hermitian_eigenvalues: no convergence in 100 sweeps");
    std::array<double, 3> ev = {a[0].real(), a[4].real(), a[8].real()};
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

MomentSample moment_sample(ActionFamily family, double t, double s, const CVec3& x,
                           const CVec3& y) {
    const std::array<Complex, 9> mx = mu_hat_of(x);
    const std::array<Complex, 9> my = mu_hat_of(y);
    MomentSample out;
    const double sy = family == ActionFamily::Skew ? -s : s;
    for (int k = 0; k < 9; ++k)
        out.mu_hat[static_cast<std::size_t>(k)] = t * mx[static_cast<std::size_t>(k)] +
                                                  sy * my[static_cast<std::size_t>(k)];
    for (int i = 0; i < 3; ++i) out.diag[static_cast<std::size_t>(i)] =
        out.mu_hat[static_cast<std::size_t>(i) * 4].real();
    out.dominant = hermitian_eigenvalues(out.mu_hat);
    return out;
}

double membership_fraction(const Polytope& hull, const std::vector<std::vector<double>>& points,
                           double tol) {
    if (points.empty()) return 1.0;
    // Floating copies of the exact facet data and affine frame.
    struct F {
        std::vector<double> n;
        double off;
    };
    std::vector<F> facets;
    for (const auto& f : hull.facets())
        facets.push_back({to_doubles(f.plane.normal), to_double(f.plane.offset)});
    const std::vector<double> base = to_doubles(hull.vertices().front());
    std::vector<std::vector<double>> frame;
    for (const auto& b : hull.affine_basis()) frame.push_back(to_doubles(b));

    int inside = 0;
    for (const auto& p : points) {
        bool ok = true;
        // Residual orthogonal to the affine hull.
        std::vector<double> r(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i] - base[i];
        for (const auto& b : frame) {
            double num = 0, den = 0;
            for (std::size_t i = 0; i < r.size(); ++i) {
                num += r[i] * b[i];
                den += b[i] * b[i];
            }
            for (std::size_t i = 0; i < r.size(); ++i) r[i] -= num / den * b[i];
        }
        double r2 = 0;
        for (const double c : r) r2 += c * c;
        if (std::sqrt(r2) > tol) ok = false;

        for (const auto& f : facets) {
            if (!ok) break;
            double d = 0;
            for (std::size_t i = 0; i < p.size(); ++i) d += f.n[i] * p[i];
            if (d > f.off + tol) ok = false;
        }
        // Rank <= 1 has no facet records; clamp to the segment directly.
        if (ok && hull.facets().empty() && !hull.vertices().empty()) {
            std::vector<std::array<double, 2>> poly;
            if (p.size() == 2) {
                for (const auto& v : hull.vertices())
                    poly.push_back({to_double(v[0]), to_double(v[1])});
                if (point_to_polygon({p[0], p[1]}, poly) > tol) ok = false;
            }
        }
        if (ok) ++inside;
    }
    return static_cast<double>(inside) / static_cast<double>(points.size());
}

std::array<double, 2> project_sum_zero(const std::vector<double>& p) {
    static const double s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
    return {(p[0] - p[1]) / s2, (p[0] + p[1] - 2.0 * p[2]) / s6};
}

std::vector<std::array<double, 2>> approx_hull_2d(const std::vector<std::array<double, 2>>& pts) {
    std::vector<std::array<double, 2>> p = pts;
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    const auto cross = [](const std::array<double, 2>& o, const std::array<double, 2>& a,
                          const std::array<double, 2>& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<std::array<double, 2>> h(2 * p.size());
    std::size_t k = 0;
    for (const auto& pt : p) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pt) <= 0) --k;
        h[k++] = pt;
    }
    const std::size_t lower = k + 1;
    for (auto it = p.rbegin() + 1; it != p.rend(); ++it) {
        while (k >= lower && cross(h[k - 2], h[k - 1], *it) <= 0) --k;
        h[k++] = *it;
    }
    h.resize(k > 1 ? k - 1 : k);
    if (h.size() < 3) throw InvalidInput("approx_hull_2d: samples span no area");
    return h;
}

double hausdorff_2d(const std::vector<std::array<double, 2>>& a,
                    const std::vector<std::array<double, 2>>& b) {
    double worst = 0;
    for (const auto& p : a) worst = std::max(worst, point_to_polygon(p, b));
    for (const auto& p : b) worst = std::max(worst, point_to_polygon(p, a));
    return worst;
}

std::vector<std::array<double, 2>> project_polytope(const Polytope& p) {
    std::vector<std::array<double, 2>> out;
    if (p.rank() == 2) {
        for (const int i : p.boundary_cycle())
            out.push_back(project_sum_zero(to_doubles(p.vertices()[static_cast<std::size_t>(i)])));
    } else {
        for (const auto& v : p.vertices()) out.push_back(project_sum_zero(to_doubles(v)));
    }
    return out;
}

SampleReport sample_family(ActionFamily family, const Rational& t, const Rational& s, int count,
                           std::uint64_t seed, double tol) {
    if (count < 1) throw InvalidInput("sample_family: count must be at least 1");
    const HamiltonianModel model = family == ActionFamily::Natural ? su3_natural(t, s)
                                                                   : su3_skew(t, s);
    std::vector<Vec> images;
    for (const auto& p : model.fixed_points) images.push_back(p.image);
    const Polytope hull = Polytope::convex_hull(images);

    const double td = to_double(t), sd = to_double(s);
    std::vector<std::vector<double>> diags;
    std::vector<std::array<double, 2>> projected;
    diags.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const CVec3 x = projective_sample(seed, 2 * static_cast<std::uint64_t>(i));
        const CVec3 y = projective_sample(seed, 2 * static_cast<std::uint64_t>(i) + 1);
        const MomentSample ms = moment_sample(family, td, sd, x, y);
        diags.push_back({ms.diag[0], ms.diag[1], ms.diag[2]});
        projected.push_back(project_sum_zero(diags.back()));
    }

    SampleReport rep;
    rep.count = count;
    rep.seed = seed;
    rep.fraction_inside = membership_fraction(hull, diags, tol);
    const std::vector<std::array<double, 2>> exact_poly = project_polytope(hull);
    rep.hausdorff = hausdorff_2d(approx_hull_2d(projected), exact_poly);
    for (std::size_t i = 0; i < exact_poly.size(); ++i)
        for (std::size_t j = i + 1; j < exact_poly.size(); ++j) {
            const double dx = exact_poly[i][0] - exact_poly[j][0];
            const double dy = exact_poly[i][1] - exact_poly[j][1];
            rep.exact_diameter = std::max(rep.exact_diameter, std::sqrt(dx * dx + dy * dy));
        }
    return rep;
}

} // namespace momentpoly
