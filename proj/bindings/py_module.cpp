// Python face of the library. Every function speaks JSON strings (or SVG
// text), the same formats the CLI reads and writes, so exact rationals cross
// the boundary as "a/b" strings and the Python side stays schema-stable.

#include <pybind11/pybind11.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "momentpoly/builders.hpp"
#include "momentpoly/classify.hpp"
#include "momentpoly/errors.hpp"
#include "momentpoly/figure.hpp"
#include "momentpoly/model_io.hpp"
#include "momentpoly/sampling.hpp"

namespace py = pybind11;
using namespace momentpoly;
using Json = nlohmann::ordered_json;

namespace {

Json vec_json(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(format_rational(x));
    return a;
}

Json polytope_json(const Polytope& p) {
    Json obj = Json::object();
    obj["rank"] = p.rank();
    obj["ambient_dim"] = p.ambient_dim();
    Json verts = Json::array();
    for (const auto& v : p.vertices()) verts.push_back(vec_json(v));
    obj["vertices"] = verts;
    obj["facet_count"] = p.facets().size();
    return obj;
}

Polytope hull_of(const HamiltonianModel& m) {
    std::vector<Vec> images;
    for (const auto& f : m.fixed_points) images.push_back(f.image);
    return Polytope::convex_hull(images);
}

RootSystem parse_group(const std::string& name) {
    if (name.size() == 2 && name[1] >= '1' && name[1] <= '9') {
        const int rank = name[1] - '0';
        if (name[0] == 'A' || name[0] == 'a') return build_root_system(RootFamily::A, rank);
        if (name[0] == 'B' || name[0] == 'b') return build_root_system(RootFamily::B, rank);
    }
    throw InvalidInput("unknown group \"" + name + "\" (expected A1..A3 or B1..B3)");
}

RootSystem resolve_group(const std::string& group, const HamiltonianModel& m) {
    if (!group.empty()) return parse_group(group);
    if (m.root_system) return *m.root_system;
    throw InvalidInput("model carries no root system; pass group=");
}

Generator generator_for(const HamiltonianModel& m, const std::string& xi_csv) {
    if (xi_csv.empty()) return choose_generator(m);
    std::vector<std::string> entries;
    std::string cur;
    for (char c : xi_csv) {
        if (c == ',') {
            entries.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    entries.push_back(cur);
    return Generator{parse_vector(entries)};
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

std::string example_model(const std::string& name, const std::string& t, const std::string& s,
                          const std::string& gamma, const std::string& delta) {
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
    return serialize_model(m);
}

std::string validate_json(const std::string& model_json) {
    const auto vs = validate_model(parse_model(model_json));
    Json arr = Json::array();
    for (const auto& v : vs) {
        Json o = Json::object();
        o["point_id"] = v.point_id;
        o["weight_index"] = v.weight_index;
        o["message"] = v.message;
        arr.push_back(o);
    }
    return arr.dump();
}

std::string betti_json(const std::string& model_json, const std::string& xi_csv) {
    const HamiltonianModel m = parse_model(model_json);
    const MorseReport rep = morse_report(m, generator_for(m, xi_csv));
    Json obj = Json::object();
    obj["xi"] = vec_json(rep.xi);
    Json sigma = Json::object();
    for (const auto& [id, k] : rep.sigma) sigma[id] = k;
    obj["sigma"] = sigma;
    obj["betti"] = rep.betti;
    obj["warnings"] = rep.warnings;
    return obj.dump();
}

std::string deform_json(const std::string& model_json, const std::string& xi_csv) {
    const HamiltonianModel m = parse_model(model_json);
    const DeformationReport rep = deformation_report(m, generator_for(m, xi_csv));
    Json obj = Json::object();
    obj["xi"] = vec_json(rep.xi);
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json o = Json::object();
        o["id"] = e.id;
        o["image"] = vec_json(e.image);
        o["negative_weight"] = vec_json(e.negative_weight);
        Json hits = Json::array();
        for (const auto& h : e.hits) {
            Json ho = Json::object();
            ho["u"] = format_rational(h.u);
            ho["target_id"] = h.target_id;
            hits.push_back(ho);
        }
        o["hits"] = hits;
        if (e.designated) {
            o["designated"] = e.designated->target_id;
            o["squared_distance"] = format_rational(*e.squared_dist);
            o["distance"] = *e.dist;
        }
        entries.push_back(o);
    }
    obj["entries"] = entries;
    return obj.dump();
}

std::string hull_json(const std::string& model_json) {
    return polytope_json(hull_of(parse_model(model_json))).dump();
}

std::string cut_json(const std::string& model_json, const std::string& group) {
    const HamiltonianModel m = parse_model(model_json);
    const RootSystem rs = resolve_group(group, m);
    return polytope_json(dominant_cut(hull_of(m), rs)).dump();
}

std::string weyl_hull_json(const std::string& group, const std::string& points_json) {
    const RootSystem rs = parse_group(group);
    const Polytope delta = Polytope::convex_hull(parse_points(points_json));
    return polytope_json(mu_T_from_kirwan(delta, weyl_group(rs))).dump();
}

std::string reflective_json(const std::string& group, const std::string& points_json) {
    const RootSystem rs = parse_group(group);
    const WeylGroup w = weyl_group(rs);
    const Polytope delta = Polytope::convex_hull(parse_points(points_json));
    Json arr = Json::array();
    for (const auto& q : delta.vertices()) {
        const ReflectiveReport r = reflective(delta, q, rs, w);
        Json o = Json::object();
        o["q"] = vec_json(q);
        o["reflective"] = r.reflective;
        o["failed_condition"] = r.failed_condition;
        o["detail"] = r.detail;
        arr.push_back(o);
    }
    return arr.dump();
}

std::string classify_json(const std::string& model_json, const std::string& group,
                          const std::string& delta_points_json) {
    const HamiltonianModel m = parse_model(model_json);
    const RootSystem rs = resolve_group(group, m);
    const Polytope delta = delta_points_json.empty()
                               ? dominant_cut(hull_of(m), rs)
                               : Polytope::convex_hull(parse_points(delta_points_json));
    Json arr = Json::array();
    for (const auto& r : classify_vertices(delta, m, rs, weyl_group(rs))) {
        Json o = Json::object();
        o["q"] = vec_json(r.q);
        o["on_wall"] = r.on_wall;
        o["reflective"] = r.reflective;
        o["certified_fixed_image"] = r.certified_fixed_image;
        o["matched"] = r.matched;
        o["discrepancy"] = r.discrepancy;
        arr.push_back(o);
    }
    return arr.dump();
}

std::string sample_json(const std::string& family, const std::string& t, const std::string& s,
                        int count, std::uint64_t seed, double tol) {
    ActionFamily fam;
    if (family == "natural") fam = ActionFamily::Natural;
    else if (family == "skew") fam = ActionFamily::Skew;
    else throw InvalidInput("unknown family \"" + family + "\" (natural or skew)");
    const SampleReport rep =
        sample_family(fam, parse_rational(t), parse_rational(s), count, seed, tol);
    Json obj = Json::object();
    obj["count"] = rep.count;
    obj["fraction_inside"] = rep.fraction_inside;
    obj["hausdorff"] = rep.hausdorff;
    obj["seed"] = rep.seed;
    return obj.dump();
}

std::string render_svg(const std::string& model_json, const std::string& overlay_model_json) {
    const HamiltonianModel m = parse_model(model_json);
    FigureSpec fig;
    fig.polytopes.push_back({hull_of(m), EdgeStyle::Solid});
    if (!overlay_model_json.empty())
        fig.polytopes.push_back({hull_of(parse_model(overlay_model_json)), EdgeStyle::Dashed});
    for (const auto& p : m.fixed_points) fig.markers.push_back({p.image, p.id});
    if (m.root_system)
        for (const auto& r : m.root_system->positive_roots) fig.wall_normals.push_back(r);
    return render_figure(fig);
}

} // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "exact moment polytope toolkit (JSON string boundary)";

    // Most-derived classes registered last so their translators run first.
    py::register_exception<InvalidInput>(mod, "InvalidInput", PyExc_ValueError);
    py::register_exception<UnsupportedRank>(mod, "UnsupportedRank", PyExc_ValueError);
    py::register_exception<ParseError>(mod, "ParseError", PyExc_ValueError);
    py::register_exception<ModelInconsistency>(mod, "ModelInconsistency", PyExc_ValueError);
    py::register_exception<IterationLimit>(mod, "IterationLimit", PyExc_RuntimeError);

    mod.def("example_model", &example_model, py::arg("name"), py::arg("t") = "1",
            py::arg("s") = "1", py::arg("gamma") = "1", py::arg("delta") = "1",
            "built-in example model as model JSON");
    mod.def("validate_json", &validate_json, py::arg("model_json"),
            "JSON array of violations, empty when the model passes");
    mod.def("betti_json", &betti_json, py::arg("model_json"), py::arg("xi") = "",
            "Morse counts: xi, per-point sigma, betti vector, warnings");
    mod.def("deform_json", &deform_json, py::arg("model_json"), py::arg("xi") = "",
            "index-1 coordinates with exact ray hits and squared distances");
    mod.def("hull_json", &hull_json, py::arg("model_json"),
            "convex hull of the fixed point images");
    mod.def("cut_json", &cut_json, py::arg("model_json"), py::arg("group") = "",
            "dominant chamber cut of the image hull");
    mod.def("weyl_hull_json", &weyl_hull_json, py::arg("group"), py::arg("points_json"),
            "hull of the Weyl sweep of a point set");
    mod.def("reflective_json", &reflective_json, py::arg("group"), py::arg("points_json"),
            "reflective test at every hull vertex");
    mod.def("classify_json", &classify_json, py::arg("model_json"), py::arg("group") = "",
            py::arg("delta_points_json") = "",
            "per-vertex certification records against the model");
    mod.def("sample_json", &sample_json, py::arg("family"), py::arg("t") = "1",
            py::arg("s") = "1", py::arg("count") = 10000, py::arg("seed") = 1,
            py::arg("tol") = 1e-9, "floating point spectrum sampling report");
    mod.def("render_svg", &render_svg, py::arg("model_json"),
            py::arg("overlay_model_json") = "", "SVG figure of a model");
}
