#include "momentpoly/figure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "momentpoly/errors.hpp"

namespace momentpoly {

namespace {

struct P2 {
    double x = 0, y = 0;
};

P2 project(const Vec& v) {
    if (v.size() == 2) return {to_double(v[0]), to_double(v[1])};
    const double a = to_double(v[0]), b = to_double(v[1]), c = to_double(v[2]);
    return {(a - b) / std::sqrt(2.0), (a + b - 2.0 * c) / std::sqrt(6.0)};
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v + 0.0);  // +0.0 kills negative zero
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&') out += "&amp;";
        else if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '"') out += "&quot;";
        else out += c;
    }
    return out;
}

// Data coordinates to canvas: uniform scale, centered, y flipped.
struct Frame {
    double scale = 1, cx = 0, cy = 0;  // data center
    double W = 0, H = 0;

    P2 map(P2 p) const {
        return {W / 2 + (p.x - cx) * scale, H / 2 - (p.y - cy) * scale};
    }
};

// Clip the line through `origin` with direction `dir` to the box
// [m, W-m] x [m, H-m] (canvas coordinates). False when it misses.
bool clip_line(P2 origin, P2 dir, double m, double W, double H, P2& a, P2& b) {
    double t0 = -1e18, t1 = 1e18;
    const double lo[2] = {m, m}, hi[2] = {W - m, H - m};
    const double o[2] = {origin.x, origin.y}, d[2] = {dir.x, dir.y};
    for (int i = 0; i < 2; ++i) {
        if (std::abs(d[i]) < 1e-12) {
            if (o[i] < lo[i] || o[i] > hi[i]) return false;
            continue;
        }
        double ta = (lo[i] - o[i]) / d[i], tb = (hi[i] - o[i]) / d[i];
        if (ta > tb) std::swap(ta, tb);
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
    }
    if (t0 >= t1) return false;
    a = {origin.x + t0 * dir.x, origin.y + t0 * dir.y};
    b = {origin.x + t1 * dir.x, origin.y + t1 * dir.y};
    return true;
}

} // namespace

std::string render_figure(const FigureSpec& fig) {
    int ambient = 0;
    auto note_ambient = [&](std::size_t d, const char* what) {
        if (d != 2 && d != 3)
            throw InvalidInput(std::string("render: ") + what +
                               " must live in ambient dimension 2 or 3");
        if (ambient == 0) ambient = static_cast<int>(d);
        else if (ambient != static_cast<int>(d))
            throw InvalidInput("render: mixed ambient dimensions in one figure");
    };
    for (const auto& fp : fig.polytopes) {
        note_ambient(static_cast<std::size_t>(fp.shape.ambient_dim()), "polytopes");
        if (fp.shape.rank() > 2)
            throw InvalidInput("render: rank 3 polytope has no 2-dim projection");
    }
    for (const auto& mk : fig.markers) note_ambient(mk.at.size(), "markers");
    for (const auto& w : fig.wall_normals) note_ambient(w.size(), "wall normals");
    if (ambient == 0) throw InvalidInput("render: figure has no geometry");

    // Bounds over everything that has a location (walls pass through 0).
    double xmin = 1e18, xmax = -1e18, ymin = 1e18, ymax = -1e18;
    auto grow = [&](P2 p) {
        xmin = std::min(xmin, p.x), xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y), ymax = std::max(ymax, p.y);
    };
    for (const auto& fp : fig.polytopes)
        for (const auto& v : fp.shape.vertices()) grow(project(v));
    for (const auto& mk : fig.markers) grow(project(mk.at));
    if (!fig.wall_normals.empty()) grow({0, 0});

    const double margin = 36;
    Frame fr;
    fr.W = fig.width;
    fr.H = fig.height;
    fr.cx = (xmin + xmax) / 2;
    fr.cy = (ymin + ymax) / 2;
    const double dx = std::max(xmax - xmin, 1e-9), dy = std::max(ymax - ymin, 1e-9);
    fr.scale = std::min((fr.W - 2 * margin) / dx, (fr.H - 2 * margin) / dy);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(fig.width) + "\" height=\"" + std::to_string(fig.height) +
           "\" viewBox=\"0 0 " + std::to_string(fig.width) + " " +
           std::to_string(fig.height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (fig.axis_frame)
        svg += "<rect x=\"" + num(margin) + "\" y=\"" + num(margin) + "\" width=\"" +
               num(fr.W - 2 * margin) + "\" height=\"" + num(fr.H - 2 * margin) +
               "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";

    for (const auto& w : fig.wall_normals) {
        const P2 n = project(w);
        const P2 dir{-n.y, n.x};
        if (std::hypot(dir.x, dir.y) < 1e-12) continue;
        P2 a, b;
        if (!clip_line(fr.map({0, 0}), dir, margin, fr.W, fr.H, a, b)) continue;
        svg += "<line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) +
               "\" y2=\"" + num(b.y) + "\" stroke=\"#999999\" stroke-width=\"0.7\"/>\n";
    }

    for (const auto& fp : fig.polytopes) {
        const std::string dash =
            fp.style == EdgeStyle::Dashed ? " stroke-dasharray=\"6 4\"" : "";
        const auto& verts = fp.shape.vertices();
        if (verts.size() == 1) {
            const P2 p = fr.map(project(verts[0]));
            svg += "<circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) +
                   "\" r=\"2.5\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
            continue;
        }
        for (const auto& [i, j] : fp.shape.edges()) {
            const P2 a = fr.map(project(verts[static_cast<std::size_t>(i)]));
            const P2 b = fr.map(project(verts[static_cast<std::size_t>(j)]));
            svg += "<line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" +
                   num(b.x) + "\" y2=\"" + num(b.y) +
                   "\" stroke=\"black\" stroke-width=\"1.5\"" + dash + "/>\n";
        }
    }

    for (const auto& mk : fig.markers) {
        const P2 p = fr.map(project(mk.at));
        svg += "<circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) +
               "\" r=\"3\" fill=\"black\"/>\n";
        if (!mk.label.empty())
            svg += "<text x=\"" + num(p.x + 5) + "\" y=\"" + num(p.y - 5) +
                   "\" font-family=\"sans-serif\" font-size=\"10\">" + escape(mk.label) +
                   "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

void save_figure(const FigureSpec& fig, const std::string& path) {
    const std::string text = render_figure(fig);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write figure file: " + path);
    out << text;
    if (!out) throw InvalidInput("cannot write figure file: " + path);
}

} // namespace momentpoly
