#include "momentpoly/geometry.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "momentpoly/errors.hpp"

namespace momentpoly {

namespace {

// Orthogonal (not orthonormal) frame for the affine hull. Basis vectors are
// primitive integer; nn caches <b_i,b_i>.
struct Frame {
    Vec base;
    std::vector<Vec> basis;
    std::vector<Rational> nn;
};

Frame build_frame(const std::vector<Vec>& pts) {
    Frame f;
    f.base = pts[0];
    for (const auto& p : pts) {
        Vec d = sub(p, f.base);
        for (std::size_t i = 0; i < f.basis.size(); ++i)
            d = sub(d, scale(dot(d, f.basis[i]) / f.nn[i], f.basis[i]));
        if (!is_zero(d)) {
            if (f.basis.size() == 3)
                throw UnsupportedRank("convex_hull: affine rank exceeds 3");
            Vec b = primitive_integer(d);
            f.nn.push_back(dot(b, b));
            f.basis.push_back(std::move(b));
        }
    }
    return f;
}

Vec frame_coords(const Frame& f, const Vec& p) {
    Vec d = sub(p, f.base);
    Vec c(f.basis.size());
    for (std::size_t i = 0; i < f.basis.size(); ++i) c[i] = dot(d, f.basis[i]) / f.nn[i];
    return c;
}

// Lifts a covector u on frame coordinates to the ambient functional that
// restricts to it on the affine hull, as a primitive integer normal.
Vec lift_covector(const Frame& f, const Vec& u) {
    Vec n(f.base.size(), Rational(0));
    for (std::size_t i = 0; i < f.basis.size(); ++i)
        n = add(n, scale(u[i] / f.nn[i], f.basis[i]));
    return primitive_integer(n);
}

Rational cross2(const std::array<Rational, 2>& o, const std::array<Rational, 2>& a,
                const std::array<Rational, 2>& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Counterclockwise hull cycle of a rank-2 point set given as coordinate pairs.
// Strictly convex turns only, so collinear and interior points drop out.
std::vector<int> chain_ccw(const std::vector<std::array<Rational, 2>>& q) {
    std::vector<int> order(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (q[i][0] != q[j][0]) return q[i][0] < q[j][0];
        return q[i][1] < q[j][1];
    });
    auto build = [&](auto begin, auto end) {
        std::vector<int> h;
        for (auto it = begin; it != end; ++it) {
            while (h.size() >= 2 && cross2(q[h[h.size() - 2]], q[h[h.size() - 1]], q[*it]) <= 0)
                h.pop_back();
            h.push_back(*it);
        }
        return h;
    };
    std::vector<int> lower = build(order.begin(), order.end());
    std::vector<int> upper = build(order.rbegin(), order.rend());
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

Vec cross3(const Vec& u, const Vec& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

struct VecLess {
    bool operator()(const Vec& a, const Vec& b) const { return lex_less(a, b); }
};

void rotate_min_first(std::vector<int>& cycle) {
    auto it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), it, cycle.end());
}

} // namespace

Polytope Polytope::convex_hull(const std::vector<Vec>& points) {
    if (points.empty()) throw InvalidInput("convex_hull: empty point set");
    const std::size_t dim = points[0].size();
    if (dim == 0 || dim > 4)
        throw UnsupportedRank("convex_hull: ambient dimension must be 1..4");
    for (const auto& p : points)
        if (p.size() != dim) throw InvalidInput("convex_hull: mixed dimensions");

    std::vector<Vec> pts = points;
    std::sort(pts.begin(), pts.end(), VecLess{});
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    Frame f = build_frame(pts);
    const int r = static_cast<int>(f.basis.size());

    Polytope P;
    P.ambient_ = static_cast<int>(dim);
    P.rank_ = r;
    P.base_ = f.base;
    P.basis_ = f.basis;

    if (r == 0) {
        P.vertices_ = {pts[0]};
        return P;
    }
    if (r == 1) {
        // Lex order is monotone along a line, so the extremes are front and back.
        P.vertices_ = {pts.front(), pts.back()};
        return P;
    }

    std::vector<Vec> C(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) C[i] = frame_coords(f, pts[i]);

    // Point index cycles per facet, plus the facet's covector in frame coordinates.
    std::vector<std::pair<Vec, std::vector<int>>> raw_facets;
    std::vector<int> hull_point_ids;

    if (r == 2) {
        std::vector<std::array<Rational, 2>> q(C.size());
        for (std::size_t i = 0; i < C.size(); ++i) q[i] = {C[i][0], C[i][1]};
        std::vector<int> cycle = chain_ccw(q);
        hull_point_ids = cycle;
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            const int i = cycle[k];
            const int j = cycle[(k + 1) % cycle.size()];
            // Outward covector of a counterclockwise edge.
            Vec u = {C[j][1] - C[i][1], C[i][0] - C[j][0]};
            raw_facets.push_back({std::move(u), {i, j}});
        }
        // Keep the frame cycle for boundary walking; translate below.
        P.cycle_ = cycle;
    } else {
        // Incremental hull. Faces are oriented triangles with outward normals;
        // only strictly visible faces are replaced, so points on a supporting
        // plane never create degenerate horizon triangles.
        struct Face {
            int a, b, c;
            Vec n;
            Rational off;
        };
        auto face_of = [&](int a, int b, int c) {
            Face t{a, b, c, cross3(sub(C[b], C[a]), sub(C[c], C[a])), Rational(0)};
            t.off = dot(t.n, C[a]);
            return t;
        };
        auto oriented = [&](int a, int b, int c, int beneath) {
            Face t = face_of(a, b, c);
            if (dot(t.n, C[beneath]) - t.off > 0) t = face_of(a, c, b);
            return t;
        };

        const int i0 = 0, i1 = 1;
        int i2 = -1, i3 = -1;
        for (std::size_t j = 0; j < C.size(); ++j)
            if (!is_zero(cross3(sub(C[i1], C[i0]), sub(C[j], C[i0])))) {
                i2 = static_cast<int>(j);
                break;
            }
        {
            const Vec n = cross3(sub(C[i1], C[i0]), sub(C[i2], C[i0]));
            for (std::size_t j = 0; j < C.size(); ++j)
                if (dot(n, sub(C[j], C[i0])) != 0) {
                    i3 = static_cast<int>(j);
                    break;
                }
        }

        std::vector<Face> faces = {oriented(i0, i1, i2, i3), oriented(i0, i1, i3, i2),
                                   oriented(i0, i2, i3, i1), oriented(i1, i2, i3, i0)};
        for (std::size_t j = 0; j < C.size(); ++j) {
            const int ji = static_cast<int>(j);
            if (ji == i0 || ji == i1 || ji == i2 || ji == i3) continue;
            std::vector<Face> kept;
            std::set<std::pair<int, int>> vis_edges;
            for (const auto& t : faces) {
                if (dot(t.n, C[j]) - t.off > 0) {
                    vis_edges.insert({t.a, t.b});
                    vis_edges.insert({t.b, t.c});
                    vis_edges.insert({t.c, t.a});
                } else {
                    kept.push_back(t);
                }
            }
            if (vis_edges.empty()) continue;
            for (const auto& [u, v] : vis_edges)
                if (!vis_edges.count({v, u})) kept.push_back(face_of(u, v, ji));
            faces = std::move(kept);
        }

        // Merge coplanar triangles into facets keyed by their supporting plane.
        auto plane_less = [](const std::pair<Vec, Rational>& x, const std::pair<Vec, Rational>& y) {
            if (x.first != y.first) return lex_less(x.first, y.first);
            return x.second < y.second;
        };
        std::set<std::pair<Vec, Rational>, decltype(plane_less)> plane_set(plane_less);
        for (const auto& t : faces) {
            Vec pn = primitive_integer(t.n);
            plane_set.insert({pn, dot(pn, C[t.a])});
        }
        std::set<int> vertex_ids;
        for (const auto& [pn, off] : plane_set) {
            std::vector<int> incident;
            for (std::size_t k = 0; k < C.size(); ++k)
                if (dot(pn, C[k]) == off) incident.push_back(static_cast<int>(k));
            // In-plane hull to order the incident set and drop edge-interior points.
            std::vector<Vec> ipts(incident.size());
            for (std::size_t k = 0; k < incident.size(); ++k) ipts[k] = C[incident[k]];
            Frame pf = build_frame(ipts);
            std::vector<std::array<Rational, 2>> q(ipts.size());
            for (std::size_t k = 0; k < ipts.size(); ++k) {
                Vec c2 = frame_coords(pf, ipts[k]);
                q[k] = {c2[0], c2[1]};
            }
            std::vector<int> sub_idx = chain_ccw(q);
            std::vector<int> cycle(sub_idx.size());
            for (std::size_t k = 0; k < sub_idx.size(); ++k) cycle[k] = incident[sub_idx[k]];
            // Counterclockwise as seen from the outward side of the plane.
            const Vec w =
                cross3(sub(C[cycle[1]], C[cycle[0]]), sub(C[cycle[2]], C[cycle[0]]));
            if (dot(w, pn) < 0) std::reverse(cycle.begin(), cycle.end());
            for (int id : cycle) vertex_ids.insert(id);
            raw_facets.push_back({pn, std::move(cycle)});
        }
        hull_point_ids.assign(vertex_ids.begin(), vertex_ids.end());
    }

    // Canonical vertex list: lex sorted ambient points.
    std::vector<int> sorted_ids = hull_point_ids;
    std::sort(sorted_ids.begin(), sorted_ids.end(),
              [&](int i, int j) { return lex_less(pts[i], pts[j]); });
    std::map<int, int> to_vertex;
    for (std::size_t k = 0; k < sorted_ids.size(); ++k) {
        to_vertex[sorted_ids[k]] = static_cast<int>(k);
        P.vertices_.push_back(pts[sorted_ids[k]]);
    }

    for (auto& [u, cycle] : raw_facets) {
        Facet fac;
        fac.plane.normal = lift_covector(f, u);
        std::vector<int> vc(cycle.size());
        for (std::size_t k = 0; k < cycle.size(); ++k) vc[k] = to_vertex.at(cycle[k]);
        fac.plane.offset = dot(fac.plane.normal, P.vertices_[vc[0]]);
        rotate_min_first(vc);
        fac.cycle = std::move(vc);
        P.facets_.push_back(std::move(fac));
    }
    std::sort(P.facets_.begin(), P.facets_.end(), [](const Facet& x, const Facet& y) {
        if (x.plane.normal != y.plane.normal) return lex_less(x.plane.normal, y.plane.normal);
        return x.plane.offset < y.plane.offset;
    });
    if (r == 2)
        for (auto& id : P.cycle_) id = to_vertex.at(id);
    if (r == 2) rotate_min_first(P.cycle_);
    return P;
}

bool Polytope::contains(const Vec& x) const {
    if (static_cast<int>(x.size()) != ambient_)
        throw InvalidInput("contains: dimension mismatch");
    if (rank_ == 0) return x == vertices_[0];
    Vec d = sub(x, base_);
    Vec res = d;
    std::vector<Rational> c(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        c[i] = dot(d, basis_[i]) / dot(basis_[i], basis_[i]);
        res = sub(res, scale(c[i], basis_[i]));
    }
    if (!is_zero(res)) return false;
    if (rank_ == 1) {
        const Rational t_end =
            dot(sub(vertices_[1], base_), basis_[0]) / dot(basis_[0], basis_[0]);
        return c[0] >= 0 && c[0] <= t_end;
    }
    for (const auto& fct : facets_)
        if (dot(fct.plane.normal, x) > fct.plane.offset) return false;
    return true;
}

std::vector<std::pair<int, int>> Polytope::edges() const {
    std::set<std::pair<int, int>> es;
    if (rank_ == 1) es.insert({0, 1});
    if (rank_ == 2) {
        for (std::size_t k = 0; k < cycle_.size(); ++k) {
            int a = cycle_[k], b = cycle_[(k + 1) % cycle_.size()];
            es.insert({std::min(a, b), std::max(a, b)});
        }
    }
    if (rank_ == 3) {
        for (const auto& fct : facets_)
            for (std::size_t k = 0; k < fct.cycle.size(); ++k) {
                int a = fct.cycle[k], b = fct.cycle[(k + 1) % fct.cycle.size()];
                es.insert({std::min(a, b), std::max(a, b)});
            }
    }
    return {es.begin(), es.end()};
}

std::vector<int> Polytope::neighbors(int vi) const {
    std::set<int> ns;
    for (const auto& [a, b] : edges()) {
        if (a == vi) ns.insert(b);
        if (b == vi) ns.insert(a);
    }
    return {ns.begin(), ns.end()};
}

const std::vector<int>& Polytope::boundary_cycle() const {
    if (rank_ != 2) throw InvalidInput("boundary_cycle: defined for affine rank 2 only");
    return cycle_;
}

int Polytope::find_vertex(const Vec& x) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] == x) return static_cast<int>(i);
    return -1;
}

std::optional<Polytope> cut(const Polytope& p, const Halfspace& h) {
    if (is_zero(h.normal)) throw InvalidInput("cut: zero normal");
    if (h.normal.size() != p.vertices()[0].size())
        throw InvalidInput("cut: dimension mismatch");
    const auto& V = p.vertices();
    std::vector<Rational> s(V.size());
    bool any_out = false, any_kept = false;
    for (std::size_t i = 0; i < V.size(); ++i) {
        s[i] = dot(h.normal, V[i]) - h.offset;
        (s[i] > 0 ? any_out : any_kept) = true;
    }
    if (!any_out) return p;
    if (!any_kept) return std::nullopt;
    std::vector<Vec> keep;
    for (std::size_t i = 0; i < V.size(); ++i)
        if (s[i] <= 0) keep.push_back(V[i]);
    // Crossings of all out/in vertex segments cover every edge crossing and
    // stay inside the intersection, so their hull is exactly P cap H.
    for (std::size_t i = 0; i < V.size(); ++i) {
        if (s[i] <= 0) continue;
        for (std::size_t j = 0; j < V.size(); ++j) {
            if (s[j] >= 0) continue;
            const Rational t = s[i] / (s[i] - s[j]);
            keep.push_back(add(V[i], scale(t, sub(V[j], V[i]))));
        }
    }
    return Polytope::convex_hull(keep);
}

} // namespace momentpoly
