#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "momentpoly/geometry.hpp"
#include "momentpoly/linalg.hpp"

namespace mptest {

using namespace momentpoly;

inline Vec iv(std::initializer_list<long long> xs) {
    Vec v;
    for (auto x : xs) v.push_back(Rational(x));
    return v;
}

inline Vec qv(std::initializer_list<const char*> xs) {
    Vec v;
    for (auto s : xs) v.push_back(parse_rational(s));
    return v;
}

// Unique solution of A x = b over the rationals, if the system is consistent
// with full column rank. Plain Gaussian elimination, exact arithmetic.
inline std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> A,
                                                        std::vector<Rational> b) {
    const std::size_t m = A.size();
    const std::size_t n = m ? A[0].size() : 0;
    std::size_t row = 0;
    std::vector<int> pivot_col;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t pr = row;
        while (pr < m && A[pr][col] == 0) ++pr;
        if (pr == m) continue;
        std::swap(A[pr], A[row]);
        std::swap(b[pr], b[row]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || A[i][col] == 0) continue;
            const Rational f = A[i][col] / A[row][col];
            for (std::size_t j = col; j < n; ++j) A[i][j] -= f * A[row][j];
            b[i] -= f * b[row];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (b[i] != 0) return std::nullopt;
    if (pivot_col.size() != n) return std::nullopt;
    std::vector<Rational> x(n);
    for (std::size_t k = 0; k < n; ++k) x[pivot_col[k]] = b[k] / A[k][pivot_col[k]];
    return x;
}

// Barycentric coordinates of x in the simplex spanned by pts, when pts are
// affinely independent and x lies in their affine hull.
inline std::optional<std::vector<Rational>> barycentric(const std::vector<Vec>& pts,
                                                        const Vec& x) {
    const std::size_t d = x.size();
    const std::size_t k = pts.size();
    std::vector<std::vector<Rational>> A(d + 1, std::vector<Rational>(k, Rational(0)));
    std::vector<Rational> b(d + 1);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < k; ++j) A[i][j] = pts[j][i];
        b[i] = x[i];
    }
    for (std::size_t j = 0; j < k; ++j) A[d][j] = 1;
    b[d] = 1;
    return solve_exact(std::move(A), std::move(b));
}

// Exact membership oracle, independent of the hull code: x is in conv(S) iff
// some affinely independent subset of size <= dim+1 carries it with
// nonnegative barycentric coordinates.
inline bool conv_member(const std::vector<Vec>& S, const Vec& x) {
    if (S.empty()) return false;
    const std::size_t d = x.size();
    const std::size_t limit = d + 1;
    std::vector<std::size_t> idx;
    // Enumerate subsets by recursion.
    auto rec = [&](auto&& self, std::size_t start) -> bool {
        if (!idx.empty()) {
            std::vector<Vec> pts;
            for (auto i : idx) pts.push_back(S[i]);
            if (auto lam = barycentric(pts, x)) {
                bool ok = true;
                for (const auto& l : *lam)
                    if (l < 0) ok = false;
                if (ok) return true;
            }
        }
        if (idx.size() == limit) return false;
        for (std::size_t i = start; i < S.size(); ++i) {
            idx.push_back(i);
            if (self(self, i + 1)) return true;
            idx.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

// Brute-force vertex set: points that are not in the hull of the others.
inline std::vector<Vec> bruteforce_vertices(std::vector<Vec> S) {
    std::sort(S.begin(), S.end(), [](const Vec& a, const Vec& b) { return lex_less(a, b); });
    S.erase(std::unique(S.begin(), S.end()), S.end());
    std::vector<Vec> out;
    for (std::size_t i = 0; i < S.size(); ++i) {
        std::vector<Vec> rest;
        for (std::size_t j = 0; j < S.size(); ++j)
            if (j != i) rest.push_back(S[j]);
        if (!conv_member(rest, S[i])) out.push_back(S[i]);
    }
    return out;
}

} // namespace mptest
