#include "momentpoly/model_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "momentpoly/errors.hpp"
#include "momentpoly/rational.hpp"
#include "momentpoly/roots.hpp"

namespace momentpoly {

namespace {

using Json = nlohmann::ordered_json;

Json vec_json(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(format_rational(x));
    return a;
}

const Json& field(const Json& obj, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(std::string("model JSON: missing field \"") + key + "\"");
    return *it;
}

int int_field(const Json& obj, const char* key) {
    const Json& f = field(obj, key);
    if (!f.is_number_integer())
        throw ParseError(std::string("model JSON: field \"") + key + "\" must be an integer");
    return f.get<int>();
}

std::string string_field(const Json& obj, const char* key) {
    const Json& f = field(obj, key);
    if (!f.is_string())
        throw ParseError(std::string("model JSON: field \"") + key + "\" must be a string");
    return f.get<std::string>();
}

Vec parse_vec(const Json& a, const std::string& where) {
    if (!a.is_array()) throw ParseError("model JSON: " + where + " must be an array");
    Vec v;
    for (const auto& e : a) {
        if (!e.is_string())
            throw ParseError("model JSON: " + where +
                             " entries must be rational strings like \"a/b\", not numbers");
        v.push_back(parse_rational(e.get<std::string>()));
    }
    return v;
}

Json root_system_json(const std::optional<RootSystem>& rs) {
    if (!rs) return nullptr;
    Json obj = Json::object();
    switch (rs->family) {
        case RootFamily::A: obj["family"] = "A"; obj["rank"] = rs->rank; break;
        case RootFamily::B: obj["family"] = "B"; obj["rank"] = rs->rank; break;
        case RootFamily::Explicit: {
            Json roots = Json::array();
            for (const auto& r : rs->roots) roots.push_back(vec_json(r));
            obj["roots"] = roots;
            break;
        }
    }
    return obj;
}

std::optional<RootSystem> parse_root_system(const Json& j) {
    if (j.is_null()) return std::nullopt;
    if (!j.is_object())
        throw ParseError("model JSON: root_system must be null or an object");
    if (j.contains("roots")) {
        const Json& arr = j.at("roots");
        if (!arr.is_array())
            throw ParseError("model JSON: root_system.roots must be an array");
        std::vector<Vec> roots;
        for (const auto& r : arr) roots.push_back(parse_vec(r, "root_system.roots"));
        return explicit_root_system(roots);
    }
    const std::string fam = string_field(j, "family");
    const int rank = int_field(j, "rank");
    if (fam == "A") return build_root_system(RootFamily::A, rank);
    if (fam == "B") return build_root_system(RootFamily::B, rank);
    throw ParseError("model JSON: unknown root system family \"" + fam + "\"");
}

FixedPointDatum parse_point(const Json& j, std::size_t index) {
    const std::string where = "fixed_points[" + std::to_string(index) + "]";
    if (!j.is_object()) throw ParseError("model JSON: " + where + " must be an object");
    FixedPointDatum p;
    p.id = string_field(j, "id");
    p.image = parse_vec(field(j, "image"), where + ".image");
    const Json& ws = field(j, "weights");
    if (!ws.is_array())
        throw ParseError("model JSON: " + where + ".weights must be an array of arrays");
    for (const auto& w : ws) p.weights.push_back(parse_vec(w, where + ".weights"));
    if (j.contains("targets")) {
        const Json& ts = j.at("targets");
        if (!ts.is_object())
            throw ParseError("model JSON: " + where + ".targets must be an object");
        for (const auto& [key, val] : ts.items()) {
            int k = -1;
            const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), k);
            if (ec != std::errc{} || ptr != key.data() + key.size() || k < 0)
                throw ParseError("model JSON: " + where + ".targets key \"" + key +
                                 "\" is not a weight index");
            if (!val.is_string())
                throw ParseError("model JSON: " + where + ".targets values must be point ids");
            p.targets[k] = val.get<std::string>();
        }
    }
    return p;
}

} // namespace

std::string serialize_model(const HamiltonianModel& m) {
    Json obj = Json::object();
    obj["schema_version"] = kModelSchemaVersion;
    obj["torus_rank"] = m.torus_rank;
    obj["ambient_dim"] = m.ambient_dim;
    obj["half_dim"] = m.half_dim;
    obj["root_system"] = root_system_json(m.root_system);
    Json pts = Json::array();
    for (const auto& p : m.fixed_points) {
        Json pj = Json::object();
        pj["id"] = p.id;
        pj["image"] = vec_json(p.image);
        Json ws = Json::array();
        for (const auto& w : p.weights) ws.push_back(vec_json(w));
        pj["weights"] = ws;
        if (!p.targets.empty()) {
            Json ts = Json::object();
            for (const auto& [k, v] : p.targets) ts[std::to_string(k)] = v;
            pj["targets"] = ts;
        }
        pts.push_back(pj);
    }
    obj["fixed_points"] = pts;
    return obj.dump(2) + "\n";
}

HamiltonianModel parse_model(const std::string& text) {
    Json obj;
    try {
        obj = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("model JSON: ") + e.what());
    }
    if (!obj.is_object()) throw ParseError("model JSON: top level must be an object");
    const int version = int_field(obj, "schema_version");
    if (version != kModelSchemaVersion)
        throw ParseError("model JSON: unsupported schema_version " + std::to_string(version));
    HamiltonianModel m;
    m.torus_rank = int_field(obj, "torus_rank");
    m.ambient_dim = int_field(obj, "ambient_dim");
    m.half_dim = int_field(obj, "half_dim");
    m.root_system = parse_root_system(field(obj, "root_system"));
    const Json& pts = field(obj, "fixed_points");
    if (!pts.is_array()) throw ParseError("model JSON: fixed_points must be an array");
    for (std::size_t i = 0; i < pts.size(); ++i)
        m.fixed_points.push_back(parse_point(pts[i], i));
    return m;
}

std::string serialize_points(const std::vector<Vec>& pts) {
    Json obj = Json::object();
    Json arr = Json::array();
    for (const auto& p : pts) arr.push_back(vec_json(p));
    obj["points"] = arr;
    return obj.dump(2) + "\n";
}

std::vector<Vec> parse_points(const std::string& text) {
    Json obj;
    try {
        obj = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("points JSON: ") + e.what());
    }
    if (!obj.is_object()) throw ParseError("points JSON: top level must be an object");
    const Json& arr = field(obj, "points");
    if (!arr.is_array() || arr.empty())
        throw ParseError("points JSON: \"points\" must be a non-empty array");
    std::vector<Vec> pts;
    for (std::size_t i = 0; i < arr.size(); ++i)
        pts.push_back(parse_vec(arr[i], "points[" + std::to_string(i) + "]"));
    return pts;
}

HamiltonianModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open model file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str());
}

void save_model(const HamiltonianModel& m, const std::string& path) {
    const std::string text = serialize_model(m);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write model file: " + path);
    out << text;
    if (!out) throw InvalidInput("cannot write model file: " + path);
}

} // namespace momentpoly
