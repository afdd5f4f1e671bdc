#pragma once

#include <string>
#include <vector>

#include "momentpoly/rational.hpp"

namespace momentpoly {

using Vec = std::vector<Rational>;

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& c, const Vec& a);
Vec neg(const Vec& a);
Rational dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& a);
// Exact squared Euclidean distance.
Rational squared_distance(const Vec& a, const Vec& b);

bool lex_less(const Vec& a, const Vec& b);

// Shortest integer vector with the same direction (positive multiple).
// Entries come back as integral Rationals with collective gcd 1.
Vec primitive_integer(const Vec& v);

std::vector<double> to_doubles(const Vec& v);
// "(a,b,c)" with each entry through format_rational.
std::string format_vector(const Vec& v);
Vec parse_vector(const std::vector<std::string>& entries);

// Square matrix, row major.
struct Mat {
    int n = 0;
    std::vector<Rational> a;

    static Mat identity(int n);
    Rational& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    bool operator==(const Mat& other) const = default;
};

bool lex_less(const Mat& a, const Mat& b);
Vec apply(const Mat& m, const Vec& v);
Mat matmul(const Mat& a, const Mat& b);
// Orthogonal reflection across the hyperplane normal to alpha: I - 2 a a^T / <a,a>.
Mat reflection(const Vec& alpha);

inline Vec operator*(const Mat& m, const Vec& v) { return apply(m, v); }
inline Mat operator*(const Mat& a, const Mat& b) { return matmul(a, b); }

} // namespace momentpoly
