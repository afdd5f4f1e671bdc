// Command line front end. Every subcommand delegates to one library
// operation; all exactness lives there, this file only parses flags and
// formats output. Exit codes: 0 success, 1 validation or consistency
// findings in the input data, 2 usage errors (bad flags, unreadable or
// malformed files, unsupported ranks).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "momentpoly/builders.hpp"
#include "momentpoly/classify.hpp"
#include "momentpoly/errors.hpp"
#include "momentpoly/figure.hpp"
#include "momentpoly/model_io.hpp"
#include "momentpoly/sampling.hpp"

using namespace momentpoly;

namespace {

// Validation findings already printed; carries the exit code 1 decision.
struct ValidationFailed : std::runtime_error {
    ValidationFailed() : std::runtime_error("validation failed") {}
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write file: " + out_path);
    out << text;
    if (!out) throw InvalidInput("cannot write file: " + out_path);
}

void print_violations(const std::vector<Violation>& vs) {
    for (const auto& v : vs) {
        std::string line;
        if (v.point_id.empty()) line = "model";
        else {
            line = "point " + v.point_id;
            if (v.weight_index >= 0) line += " weight " + std::to_string(v.weight_index);
        }
        std::printf("%s: %s\n", line.c_str(), v.message.c_str());
    }
}

HamiltonianModel require_valid_model(const std::string& path) {
    HamiltonianModel m = load_model(path);
    const auto vs = validate_model(m);
    if (!vs.empty()) {
        print_violations(vs);
        throw ValidationFailed{};
    }
    return m;
}

RootSystem parse_group(const std::string& name) {
    if (name.size() == 2 && name[1] >= '1' && name[1] <= '9') {
        const char c = name[0];
        const int rank = name[1] - '0';
        if (c == 'A' || c == 'a') return build_root_system(RootFamily::A, rank);
        if (c == 'B' || c == 'b') return build_root_system(RootFamily::B, rank);
    }
    throw InvalidInput("unknown group \"" + name + "\" (expected A1..A3 or B1..B3)");
}

Vec parse_tuple(const std::string& csv) {
    std::vector<std::string> entries;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            entries.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    entries.push_back(cur);
    return parse_vector(entries);
}

Polytope hull_of(const HamiltonianModel& m) {
    std::vector<Vec> images;
    for (const auto& p : m.fixed_points) images.push_back(p.image);
    return Polytope::convex_hull(images);
}

// --delta accepts either a point list file or a model file (hull of images).
Polytope load_polytope(const std::string& path) {
    const std::string text = read_file(path);
    nlohmann::json probe;
    try {
        probe = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (probe.is_object() && probe.contains("points"))
        return Polytope::convex_hull(parse_points(text));
    if (probe.is_object() && probe.contains("fixed_points"))
        return hull_of(parse_model(text));
    throw ParseError(path + ": neither a points file nor a model file");
}

RootSystem resolve_group(const std::string& group_flag, const HamiltonianModel& m) {
    if (!group_flag.empty()) return parse_group(group_flag);
    if (m.root_system) return *m.root_system;
    throw InvalidInput("model carries no root system; pass --group");
}

Polytope dominant_cut(const Polytope& p, const RootSystem& rs) {
    Polytope cur = p;
    for (const auto& a : rs.simple_roots) {
        auto r = cut(cur, Halfspace{neg(a), Rational(0)});
        if (!r) throw InvalidInput("the polytope misses the dominant chamber");
        cur = *r;
    }
    return cur;
}

void print_polytope(const Polytope& p) {
    std::printf("rank %d ambient %d\n", p.rank(), p.ambient_dim());
    std::printf("vertices %zu\n", p.vertices().size());
    for (const auto& v : p.vertices()) std::printf("%s\n", format_vector(v).c_str());
    if (p.rank() >= 2) std::printf("facets %zu\n", p.facets().size());
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

int run_validate(const std::string& path) {
    const HamiltonianModel m = load_model(path);
    const auto vs = validate_model(m);
    if (vs.empty()) {
        std::printf("ok\n");
        return 0;
    }
    print_violations(vs);
    return 1;
}

int run_betti(const std::string& path, const std::string& xi_csv) {
    const HamiltonianModel m = require_valid_model(path);
    const Generator g = xi_csv.empty() ? choose_generator(m) : Generator{parse_tuple(xi_csv)};
    const MorseReport rep = morse_report(m, g);
    std::printf("xi = %s\n", format_vector(rep.xi).c_str());
    for (const auto& [id, k] : rep.sigma) std::printf("sigma %s = %d\n", id.c_str(), k);
    std::string betti = "[";
    for (std::size_t i = 0; i < rep.betti.size(); ++i)
        betti += (i ? "," : "") + std::to_string(rep.betti[i]);
    std::printf("betti %s]\n", betti.c_str());
    for (const auto& w : rep.warnings) std::printf("warning: %s\n", w.c_str());
    return 0;
}

int run_deform(const std::string& path, const std::string& xi_csv) {
    const HamiltonianModel m = require_valid_model(path);
    const Generator g = xi_csv.empty() ? choose_generator(m) : Generator{parse_tuple(xi_csv)};
    const DeformationReport rep = deformation_report(m, g);
    std::printf("xi = %s\n", format_vector(rep.xi).c_str());
    for (const auto& e : rep.entries) {
        std::string line = "coordinate " + e.id + ": image " + format_vector(e.image) +
                           " weight " + format_vector(e.negative_weight);
        if (e.designated) {
            line += " designated " + e.designated->target_id + " u=" +
                    format_rational(e.designated->u) +
                    " squared_distance=" + format_rational(*e.squared_dist) +
                    " distance=" + fmt_double(*e.dist);
        } else {
            line += " designated none";
        }
        std::printf("%s\n", line.c_str());
        for (const auto& h : e.hits)
            std::printf("  hit u=%s -> %s\n", format_rational(h.u).c_str(),
                        h.target_id.c_str());
    }
    return 0;
}

int run_hull(const std::string& path) {
    print_polytope(hull_of(require_valid_model(path)));
    return 0;
}

int run_weyl_hull(const std::string& group, const std::string& delta_path) {
    const RootSystem rs = parse_group(group);
    const Polytope delta = load_polytope(delta_path);
    print_polytope(mu_T_from_kirwan(delta, weyl_group(rs)));
    return 0;
}

int run_reflective(const std::string& group, const std::string& delta_path) {
    const RootSystem rs = parse_group(group);
    const WeylGroup w = weyl_group(rs);
    const Polytope delta = load_polytope(delta_path);
    for (const auto& q : delta.vertices()) {
        const ReflectiveReport r = reflective(delta, q, rs, w);
        if (r.reflective)
            std::printf("%s: reflective\n", format_vector(q).c_str());
        else
            std::printf("%s: not reflective (condition %d: %s)\n",
                        format_vector(q).c_str(), r.failed_condition, r.detail.c_str());
    }
    return 0;
}

int run_classify(const std::string& path, const std::string& group,
                 const std::string& delta_path) {
    const HamiltonianModel m = require_valid_model(path);
    const RootSystem rs = resolve_group(group, m);
    const Polytope delta =
        delta_path.empty() ? dominant_cut(hull_of(m), rs) : load_polytope(delta_path);
    const auto records = classify_vertices(delta, m, rs, weyl_group(rs));
    for (const auto& r : records) {
        std::string matched = "[";
        for (std::size_t i = 0; i < r.matched.size(); ++i)
            matched += (i ? "," : "") + r.matched[i];
        std::printf("%s: on_wall=%s reflective=%s certified=%s matched=%s] discrepancy=%s\n",
                    format_vector(r.q).c_str(), yn(r.on_wall), yn(r.reflective),
                    yn(r.certified_fixed_image), matched.c_str(), yn(r.discrepancy));
    }
    return 0;
}

int run_example(const std::string& name, const std::string& t, const std::string& s,
                const std::string& gamma, const std::string& delta,
                const std::string& out_path) {
    HamiltonianModel m;
    if (name == "cp1") m = cpn_model(1, parse_rational(t));
    else if (name == "cp2") m = cpn_model(2, parse_rational(t));
    else if (name == "cp3") m = cpn_model(3, parse_rational(t));
    else if (name == "su3-natural") m = su3_natural(parse_rational(t), parse_rational(s));
    else if (name == "su3-skew") m = su3_skew(parse_rational(t), parse_rational(s));
    else if (name == "so5") m = so5_example(parse_rational(gamma), parse_rational(delta));
    else
        throw InvalidInput("unknown example \"" + name +
                           "\" (cp1, cp2, cp3, su3-natural, su3-skew, so5)");
    write_output(serialize_model(m), out_path);
    return 0;
}

int run_cut(const std::string& path, const std::string& group, const std::string& out_path) {
    const HamiltonianModel m = require_valid_model(path);
    const RootSystem rs = resolve_group(group, m);
    const Polytope delta = dominant_cut(hull_of(m), rs);
    print_polytope(delta);
    if (!out_path.empty()) write_output(serialize_points(delta.vertices()), out_path);
    return 0;
}

int run_sample(const std::string& family, const std::string& t, const std::string& s,
               int count, std::uint64_t seed, double tol, const std::string& out_path) {
    ActionFamily fam;
    if (family == "natural") fam = ActionFamily::Natural;
    else if (family == "skew") fam = ActionFamily::Skew;
    else throw InvalidInput("unknown family \"" + family + "\" (natural or skew)");
    const SampleReport rep =
        sample_family(fam, parse_rational(t), parse_rational(s), count, seed, tol);
    nlohmann::ordered_json j;
    j["count"] = rep.count;
    j["fraction_inside"] = rep.fraction_inside;
    j["hausdorff"] = rep.hausdorff;
    j["seed"] = rep.seed;
    write_output(j.dump() + "\n", out_path);
    return 0;
}

int run_render(const std::string& path, const std::string& delta_path,
               const std::string& group, const std::string& out_path) {
    const HamiltonianModel m = require_valid_model(path);
    FigureSpec fig;
    fig.polytopes.push_back({hull_of(m), EdgeStyle::Solid});
    if (!delta_path.empty())
        fig.polytopes.push_back({load_polytope(delta_path), EdgeStyle::Dashed});
    for (const auto& p : m.fixed_points) fig.markers.push_back({p.image, p.id});
    std::optional<RootSystem> rs;
    if (!group.empty()) rs = parse_group(group);
    else if (m.root_system) rs = *m.root_system;
    if (rs)
        for (const auto& r : rs->positive_roots) fig.wall_normals.push_back(r);
    write_output(render_figure(fig), out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact moment polytope toolkit"};
    app.require_subcommand(1);

    std::string model_path, delta_path, group, xi_csv, out_path, name;
    std::string t = "1", s = "1", gamma = "1", delta_param = "1", family;
    int count = 10000;
    std::uint64_t seed = 1;
    double tol = 1e-9;

    auto* c_validate = app.add_subcommand("validate", "check a model file");
    c_validate->add_option("model", model_path, "model JSON file")->required();

    auto* c_betti = app.add_subcommand("betti", "even Betti numbers from fixed point data");
    c_betti->add_option("model", model_path)->required();
    c_betti->add_option("--xi", xi_csv, "generator a,b,c (default: canonical)");

    auto* c_deform = app.add_subcommand("deform", "index-1 coordinates and ray hits");
    c_deform->add_option("model", model_path)->required();
    c_deform->add_option("--xi", xi_csv);

    auto* c_hull = app.add_subcommand("hull", "convex hull of the fixed point images");
    c_hull->add_option("model", model_path)->required();

    auto* c_weyl = app.add_subcommand("weyl-hull", "hull of the Weyl sweep of a polytope");
    c_weyl->add_option("--group", group, "A1..A3 or B1..B3")->required();
    c_weyl->add_option("--delta", delta_path, "points or model JSON file")->required();

    auto* c_refl = app.add_subcommand("reflective", "reflective test at every vertex");
    c_refl->add_option("--group", group)->required();
    c_refl->add_option("--delta", delta_path)->required();

    auto* c_classify = app.add_subcommand("classify", "certify vertices as fixed images");
    c_classify->add_option("model", model_path)->required();
    c_classify->add_option("--group", group);
    c_classify->add_option("--delta", delta_path,
                           "moment polytope (default: dominant cut of the image hull)");

    auto* c_example = app.add_subcommand("example", "write a built-in example model");
    c_example->add_option("name", name, "cp1, cp2, cp3, su3-natural, su3-skew, so5")
        ->required();
    c_example->add_option("--t", t);
    c_example->add_option("--s", s);
    c_example->add_option("--gamma", gamma);
    c_example->add_option("--delta", delta_param);
    c_example->add_option("--out", out_path);

    auto* c_cut = app.add_subcommand("cut", "dominant chamber cut of the image hull");
    c_cut->add_option("model", model_path)->required();
    c_cut->add_option("--group", group);
    c_cut->add_option("--out", out_path, "write the vertices as a points file");

    auto* c_sample = app.add_subcommand("sample", "floating point spectrum sampling");
    c_sample->add_option("family", family, "natural or skew")->required();
    c_sample->add_option("--t", t);
    c_sample->add_option("--s", s);
    c_sample->add_option("--count", count);
    c_sample->add_option("--seed", seed);
    c_sample->add_option("--tol", tol);
    c_sample->add_option("--out", out_path);

    auto* c_render = app.add_subcommand("render", "SVG figure of a model");
    c_render->add_option("model", model_path)->required();
    c_render->add_option("--delta", delta_path, "dashed overlay, points or model file");
    c_render->add_option("--group", group);
    c_render->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*c_validate) return run_validate(model_path);
        if (*c_betti) return run_betti(model_path, xi_csv);
        if (*c_deform) return run_deform(model_path, xi_csv);
        if (*c_hull) return run_hull(model_path);
        if (*c_weyl) return run_weyl_hull(group, delta_path);
        if (*c_refl) return run_reflective(group, delta_path);
        if (*c_classify) return run_classify(model_path, group, delta_path);
        if (*c_example) return run_example(name, t, s, gamma, delta_param, out_path);
        if (*c_cut) return run_cut(model_path, group, out_path);
        if (*c_sample) return run_sample(family, t, s, count, seed, tol, out_path);
        if (*c_render) return run_render(model_path, delta_path, group, out_path);
    } catch (const ValidationFailed&) {
        return 1;
    } catch (const ModelInconsistency& e) {
        std::fprintf(stderr, "model inconsistency: %s\n", e.what());
        return 1;
    } catch (const UnsupportedRank& e) {
        std::fprintf(stderr, "unsupported rank: %s\n", e.what());
        return 2;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return 2;
    } catch (const InvalidInput& e) {
        std::fprintf(stderr, "invalid input: %s\n", e.what());
        return 2;
    } catch (const IterationLimit& e) {
        std::fprintf(stderr, "iteration limit: %s\n", e.what());
        return 2;
    }
    return 2;
}
