#include "momentpoly/roots.hpp"

#include <algorithm>
#include <set>

#include "momentpoly/errors.hpp"

namespace momentpoly {

namespace {

constexpr int kClosureBound = 10000;

struct VecLess {
    bool operator()(const Vec& a, const Vec& b) const { return lex_less(a, b); }
};
struct MatLess {
    bool operator()(const Mat& a, const Mat& b) const { return lex_less(a, b); }
};

bool lex_positive(const Vec& v) {
    for (const auto& x : v) {
        if (x > 0) return true;
        if (x < 0) return false;
    }
    return false;
}

int span_rank(const std::vector<Vec>& vs) {
    std::vector<Vec> basis;
    for (const auto& v : vs) {
        Vec d = v;
        for (const auto& b : basis) d = sub(d, scale(dot(d, b) / dot(b, b), b));
        if (!is_zero(d)) basis.push_back(d);
    }
    return static_cast<int>(basis.size());
}

RootSystem finalize(RootFamily family, int rank, int dim, std::vector<Vec> roots) {
    std::sort(roots.begin(), roots.end(), VecLess{});
    RootSystem rs;
    rs.family = family;
    rs.rank = rank;
    rs.ambient_dim = dim;
    for (const auto& r : roots)
        if (lex_positive(r)) rs.positive_roots.push_back(r);
    for (const auto& a : rs.positive_roots) {
        bool decomposable = false;
        for (const auto& b : rs.positive_roots) {
            if (decomposable) break;
            for (const auto& c : rs.positive_roots)
                if (add(b, c) == a) {
                    decomposable = true;
                    break;
                }
        }
        if (!decomposable) rs.simple_roots.push_back(a);
    }
    rs.roots = std::move(roots);
    return rs;
}

Vec unit(int dim, int i) {
    Vec v(dim, Rational(0));
    v[i] = 1;
    return v;
}

} // namespace

RootSystem build_root_system(RootFamily family, int rank) {
    if (rank < 1 || rank > 3) throw UnsupportedRank("build_root_system: rank must be 1..3");
    std::vector<Vec> roots;
    int dim = 0;
    if (family == RootFamily::A) {
        dim = rank + 1;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (i != j) roots.push_back(sub(unit(dim, i), unit(dim, j)));
    } else if (family == RootFamily::B) {
        dim = rank;
        for (int i = 0; i < dim; ++i) {
            roots.push_back(unit(dim, i));
            roots.push_back(neg(unit(dim, i)));
        }
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j)
                for (int si : {1, -1})
                    for (int sj : {1, -1}) {
                        Vec v(dim, Rational(0));
                        v[i] = si;
                        v[j] = sj;
                        roots.push_back(v);
                    }
    } else {
        throw InvalidInput("build_root_system: named families are A and B");
    }
    return finalize(family, rank, dim, std::move(roots));
}

RootSystem explicit_root_system(const std::vector<Vec>& roots) {
    if (roots.empty()) throw InvalidInput("explicit_root_system: empty root list");
    const std::size_t dim = roots[0].size();
    std::set<Vec, VecLess> seen;
    for (const auto& r : roots) {
        if (r.size() != dim) throw InvalidInput("explicit_root_system: mixed dimensions");
        if (is_zero(r)) throw InvalidInput("explicit_root_system: zero root");
        seen.insert(r);
    }
    std::vector<Vec> rs(seen.begin(), seen.end());
    for (const auto& r : rs)
        if (!seen.count(neg(r)))
            throw InvalidInput("explicit_root_system: not closed under negation");
    // Reduced: parallel roots only in +-1 ratio.
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = i + 1; j < rs.size(); ++j) {
            if (primitive_integer(rs[i]) != primitive_integer(rs[j])) continue;
            if (rs[i] != rs[j])
                throw InvalidInput("explicit_root_system: parallel roots of unequal length");
        }
    const int rank = span_rank(rs);
    return finalize(RootFamily::Explicit, rank, static_cast<int>(dim), std::move(rs));
}

WeylGroup weyl_group(const RootSystem& rs) {
    WeylGroup w;
    for (const auto& a : rs.simple_roots) w.generators.push_back(reflection(a));
    std::set<Mat, MatLess> seen;
    std::vector<Mat> frontier = {Mat::identity(rs.ambient_dim)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<Mat> next;
        for (const auto& m : frontier)
            for (const auto& g : w.generators) {
                Mat p = matmul(g, m);
                if (seen.insert(p).second) {
                    if (static_cast<int>(seen.size()) > kClosureBound)
                        throw IterationLimit(
                            "weyl_group: closure exceeded 10000 elements; "
                            "roots do not generate a finite reflection group");
                    next.push_back(std::move(p));
                }
            }
        frontier = std::move(next);
    }
    w.elements.assign(seen.begin(), seen.end());
    return w;
}

std::pair<Mat, Vec> to_dominant(const RootSystem& rs, const Vec& v) {
    if (static_cast<int>(v.size()) != rs.ambient_dim)
        throw InvalidInput("to_dominant: dimension mismatch");
    Mat m = Mat::identity(rs.ambient_dim);
    Vec x = v;
    int guard = 0;
    for (;;) {
        bool moved = false;
        for (const auto& a : rs.simple_roots) {
            const Rational p = dot(x, a);
            if (p < 0) {
                x = sub(x, scale(2 * p / dot(a, a), a));
                m = matmul(reflection(a), m);
                moved = true;
                break;
            }
        }
        if (!moved) return {m, x};
        if (++guard > kClosureBound)
            throw IterationLimit("to_dominant: did not reach the chamber");
    }
}

WeylGroup stabilizer(const WeylGroup& w, const Vec& q) {
    WeylGroup s;
    for (const auto& m : w.elements) {
        if (apply(m, q) != q) continue;
        s.elements.push_back(m);
        // Reflections among the fixing elements: involutive with trace n-2.
        if (m != Mat::identity(m.n)) {
            Rational tr = 0;
            for (int i = 0; i < m.n; ++i) tr += m.at(i, i);
            if (tr == m.n - 2 && matmul(m, m) == Mat::identity(m.n)) s.generators.push_back(m);
        }
    }
    return s;
}

std::vector<Halfspace> walls(const RootSystem& rs) {
    std::vector<Halfspace> hs;
    for (const auto& a : rs.positive_roots) hs.push_back({a, Rational(0)});
    return hs;
}

bool is_dominant(const RootSystem& rs, const Vec& v) {
    for (const auto& a : rs.simple_roots)
        if (dot(v, a) < 0) return false;
    return true;
}

bool on_wall(const RootSystem& rs, const Vec& v) {
    for (const auto& a : rs.positive_roots)
        if (dot(v, a) == 0) return true;
    return false;
}

std::vector<Vec> orbit(const WeylGroup& w, const Vec& v) {
    std::set<Vec, VecLess> s;
    for (const auto& m : w.elements) s.insert(apply(m, v));
    return {s.begin(), s.end()};
}

} // namespace momentpoly
