#include "momentpoly/classify.hpp"

#include <algorithm>
#include <set>

#include "momentpoly/errors.hpp"

namespace momentpoly {

namespace {

struct VecLex {
    bool operator()(const Vec& a, const Vec& b) const { return lex_less(a, b); }
};

// Primitive integer direction with the first nonzero entry positive, so a line
// through a common point compares by direction alone.
Vec canon_dir(const Vec& d) {
    Vec p = primitive_integer(d);
    for (const auto& c : p) {
        if (c > 0) break;
        if (c < 0) return neg(p);
    }
    return p;
}

// basis is pairwise orthogonal, so membership is a projection residual test.
bool in_span(const std::vector<Vec>& basis, const Vec& x) {
    Vec r = x;
    for (const auto& b : basis) r = sub(r, scale(dot(r, b) / dot(b, b), b));
    return is_zero(r);
}

std::string describe_face(const std::vector<Vec>& face) {
    std::string s = "[" + format_vector(face[0]);
    for (std::size_t i = 1; i < face.size(); ++i) s += ", " + format_vector(face[i]);
    return s + "]";
}

// Vertex lists of the codimension-1 faces of delta containing q: endpoints for
// a segment, incident edges for a polygon.
std::vector<std::vector<Vec>> faces_through(const Polytope& delta, const Vec& q) {
    std::vector<std::vector<Vec>> out;
    if (delta.rank() == 1) {
        for (const auto& v : delta.vertices())
            if (v == q) out.push_back({v});
    } else if (delta.rank() == 2) {
        for (const auto& f : delta.facets())
            if (dot(f.plane.normal, q) == f.plane.offset)
                out.push_back({delta.vertices()[static_cast<std::size_t>(f.cycle[0])],
                               delta.vertices()[static_cast<std::size_t>(f.cycle[1])]});
    }
    return out;
}

bool strictly_dominant(const RootSystem& rs, const Vec& q) {
    for (const auto& a : rs.simple_roots)
        if (dot(a, q) <= 0) return false;
    return true;
}

} // namespace

Polytope mu_T_from_kirwan(const Polytope& delta, const WeylGroup& w) {
    if (w.elements.empty()) throw InvalidInput("mu_T_from_kirwan: empty Weyl group");
    if (w.elements.front().n != delta.ambient_dim())
        throw InvalidInput("mu_T_from_kirwan: Weyl group dimension differs from delta's");
    std::vector<Vec> pts;
    pts.reserve(w.elements.size() * delta.vertices().size());
    for (const auto& g : w.elements)
        for (const auto& v : delta.vertices()) pts.push_back(g * v);
    return Polytope::convex_hull(pts);
}

ReflectiveReport reflective(const Polytope& delta, const Vec& q, const RootSystem& rs,
                            const WeylGroup& w) {
    if (!delta.contains(q)) throw InvalidInput("reflective: q is not a point of delta");
    if (delta.rank() > 2)
        throw UnsupportedRank("reflective: codimension-1 face analysis needs affine rank <= 2");

    ReflectiveReport rep;
    const auto faces = faces_through(delta, q);
    if (faces.empty()) {
        rep.reflective = true;
        rep.detail = "no codimension-1 face of delta contains q";
        return rep;
    }

    const WeylGroup wq = stabilizer(w, q);

    // Condition 1: W_q must preserve the affine hull and permute the
    // supporting lines, all of which pass through the fixed point q.
    std::set<Vec, VecLex> dirs;
    for (const auto& f : faces)
        if (f.size() == 2) dirs.insert(canon_dir(sub(f[1], f[0])));
    for (const auto& g : wq.elements) {
        for (const auto& b : delta.affine_basis())
            if (!in_span(delta.affine_basis(), g * b)) {
                rep.failed_condition = 1;
                rep.detail = "a stabilizer element moves the affine hull of delta";
                return rep;
            }
        for (const auto& d : dirs)
            if (!dirs.count(canon_dir(g * d))) {
                rep.failed_condition = 1;
                rep.detail = "a stabilizer element maps the face line along " +
                             format_vector(d) + " off the incident set";
                return rep;
            }
    }

    // Condition 2: each open incident face must sit in the open chamber. On a
    // face, a root pairing is affine, so nonnegative at the vertices and
    // positive somewhere means positive on the open part.
    for (const auto& f : faces)
        for (const auto& a : rs.simple_roots) {
            Rational lo = dot(a, f[0]), hi = lo;
            for (const auto& v : f) {
                const Rational t = dot(a, v);
                lo = std::min(lo, t);
                hi = std::max(hi, t);
            }
            if (lo < 0 || hi <= 0) {
                rep.failed_condition = 2;
                rep.detail = "open face " + describe_face(f) +
                             " leaves the open chamber of root " + format_vector(a);
                return rep;
            }
        }

    rep.reflective = true;
    return rep;
}

std::vector<VertexRecord> classify_vertices(const Polytope& delta, const HamiltonianModel& m,
                                            const RootSystem& rs, const WeylGroup& w) {
    std::vector<VertexRecord> out;
    for (const auto& q : delta.vertices()) {
        VertexRecord r;
        r.q = q;
        r.on_wall = on_wall(rs, q);
        r.reflective = reflective(delta, q, rs, w).reflective;
        r.certified_fixed_image = !r.reflective || strictly_dominant(rs, q);
        for (const auto& p : m.fixed_points)
            if (p.image == q) r.matched.push_back(p.id);
        r.discrepancy = r.certified_fixed_image && r.matched.empty();
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace momentpoly
