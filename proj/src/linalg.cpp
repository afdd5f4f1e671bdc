#include "momentpoly/linalg.hpp"

#include <cstddef>

#include "momentpoly/errors.hpp"

namespace momentpoly {

namespace {

void require_same_size(const Vec& a, const Vec& b, const char* op) {
    if (a.size() != b.size())
        throw InvalidInput(std::string(op) + ": dimension mismatch");
}

} // namespace

Vec add(const Vec& a, const Vec& b) {
    require_same_size(a, b, "add");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    require_same_size(a, b, "sub");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Rational& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Vec neg(const Vec& a) { return scale(Rational(-1), a); }

Rational dot(const Vec& a, const Vec& b) {
    require_same_size(a, b, "dot");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const Vec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

Rational squared_distance(const Vec& a, const Vec& b) {
    const Vec d = sub(a, b);
    return dot(d, d);
}

bool lex_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Vec primitive_integer(const Vec& v) {
    if (is_zero(v)) throw InvalidInput("primitive_integer: zero vector");
    Integer l = 1;
    for (const auto& x : v) l = lcm(l, denominator(x));
    Integer g = 0;
    std::vector<Integer> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = numerator(v[i]) * (l / denominator(v[i]));
        g = gcd(g, w[i]);
    }
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(w[i] / g);
    return r;
}

std::vector<double> to_doubles(const Vec& v) {
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = to_double(v[i]);
    return r;
}

std::string format_vector(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += format_rational(v[i]);
    }
    s += ")";
    return s;
}

Vec parse_vector(const std::vector<std::string>& entries) {
    Vec r;
    r.reserve(entries.size());
    for (const auto& e : entries) r.push_back(parse_rational(e));
    return r;
}

Mat Mat::identity(int n) {
    Mat m;
    m.n = n;
    m.a.assign(static_cast<std::size_t>(n) * n, Rational(0));
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool lex_less(const Mat& a, const Mat& b) {
    if (a.n != b.n) return a.n < b.n;
    return std::lexicographical_compare(a.a.begin(), a.a.end(), b.a.begin(), b.a.end());
}

Vec apply(const Mat& m, const Vec& v) {
    if (static_cast<int>(v.size()) != m.n) throw InvalidInput("apply: dimension mismatch");
    Vec r(v.size(), Rational(0));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) r[i] += m.at(i, j) * v[j];
    return r;
}

Mat matmul(const Mat& a, const Mat& b) {
    if (a.n != b.n) throw InvalidInput("matmul: dimension mismatch");
    Mat c;
    c.n = a.n;
    c.a.assign(static_cast<std::size_t>(a.n) * a.n, Rational(0));
    for (int i = 0; i < a.n; ++i)
        for (int k = 0; k < a.n; ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < a.n; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

Mat reflection(const Vec& alpha) {
    const Rational nn = dot(alpha, alpha);
    if (nn == 0) throw InvalidInput("reflection: zero vector");
    const int n = static_cast<int>(alpha.size());
    Mat m = Mat::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) -= 2 * alpha[i] * alpha[j] / nn;
    return m;
}

} // namespace momentpoly
