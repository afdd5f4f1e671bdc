#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "momentpoly/errors.hpp"
#include "momentpoly/model.hpp"
#include "momentpoly/roots.hpp"

#include "helpers.hpp"

using namespace momentpoly;
using mptest::iv;
using mptest::qv;

namespace {

Vec unit3(int k) {
    Vec v = iv({0, 0, 0});
    v[static_cast<std::size_t>(k)] = 1;
    return v;
}

FixedPointDatum point(std::string id, Vec image, std::vector<Vec> weights) {
    FixedPointDatum p;
    p.id = std::move(id);
    p.image = std::move(image);
    p.weights = std::move(weights);
    return p;
}

// Four fixed points of a rank-2 action with moment image the unit square.
HamiltonianModel square_model() {
    HamiltonianModel m;
    m.torus_rank = 2;
    m.ambient_dim = 2;
    m.half_dim = 2;
    m.fixed_points = {
        point("p00", iv({0, 0}), {iv({1, 0}), iv({0, 1})}),
        point("p10", iv({1, 0}), {iv({-1, 0}), iv({0, 1})}),
        point("p01", iv({0, 1}), {iv({1, 0}), iv({0, -1})}),
        point("p11", iv({1, 1}), {iv({-1, 0}), iv({0, -1})}),
    };
    return m;
}

// Product of two copies of the projective plane carrying the standard rank-2
// torus action in sum-zero coordinates: nine fixed points (e_i, e_j), image
// t*qhat_i + s*qhat_j, tangent weights e_k - e_i and e_k - e_j. Carries the
// far-end annotations for the two index-1 points of the canonical generator.
HamiltonianModel su3_product(const Rational& t, const Rational& s) {
    HamiltonianModel m;
    m.torus_rank = 2;
    m.ambient_dim = 3;
    m.half_dim = 4;
    auto qhat = [](int i) {
        Vec v = qv({"-1/3", "-1/3", "-1/3"});
        v[static_cast<std::size_t>(i)] += 1;
        return v;
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            FixedPointDatum p;
            p.id = "(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ")";
            p.image = add(scale(t, qhat(i)), scale(s, qhat(j)));
            for (int k = 0; k < 3; ++k)
                if (k != i) p.weights.push_back(sub(unit3(k), unit3(i)));
            for (int k = 0; k < 3; ++k)
                if (k != j) p.weights.push_back(sub(unit3(k), unit3(j)));
            m.fixed_points.push_back(std::move(p));
        }
    for (auto& p : m.fixed_points) {
        if (p.id == "(e2,e3)") p.targets[1] = "(e3,e3)";
        if (p.id == "(e3,e2)") p.targets[3] = "(e3,e3)";
    }
    return m;
}

int violation_count(const std::vector<Violation>& vs, const std::string& id, int j) {
    return static_cast<int>(std::count_if(vs.begin(), vs.end(), [&](const Violation& v) {
        return v.point_id == id && v.weight_index == j;
    }));
}

} // namespace

TEST_CASE("unit square model: validation, canonical generator, betti") {
    const HamiltonianModel m = square_model();
    CHECK(validate_model(m).empty());

    const Generator g = choose_generator(m);
    CHECK(g.xi == iv({1, 1}));

    const MorseReport r = morse_report(m, g);
    CHECK(r.betti == std::vector<int>{1, 2, 1});
    CHECK(r.warnings.empty());
    std::map<std::string, int> sigma(r.sigma.begin(), r.sigma.end());
    CHECK(sigma["p00"] == 0);
    CHECK(sigma["p10"] == 1);
    CHECK(sigma["p01"] == 1);
    CHECK(sigma["p11"] == 2);
}

TEST_CASE("su3 product model: canonical generator and betti numbers") {
    const HamiltonianModel m = su3_product(2, 1);
    CHECK(validate_model(m).empty());

    const Generator g = choose_generator(m);
    CHECK(g.xi == iv({1, 0, -1}));

    const MorseReport r = morse_report(m, g);
    CHECK(r.betti == std::vector<int>{1, 2, 3, 2, 1});
    CHECK(r.warnings.empty());

    std::map<std::string, int> sigma(r.sigma.begin(), r.sigma.end());
    CHECK(sigma["(e3,e3)"] == 0);
    CHECK(sigma["(e2,e3)"] == 1);
    CHECK(sigma["(e3,e2)"] == 1);
    CHECK(sigma["(e1,e1)"] == 4);

    std::multiset<int> all;
    for (const auto& [id, s] : r.sigma) all.insert(s);
    CHECK(all == std::multiset<int>{0, 1, 1, 2, 2, 2, 3, 3, 4});
}

TEST_CASE("su3 deformation report at t=2, s=1") {
    const HamiltonianModel m = su3_product(2, 1);
    const DeformationReport rep = deformation_report(m, choose_generator(m));
    REQUIRE(rep.entries.size() == 2);

    const DeformationEntry& a = rep.entries[0];
    CHECK(a.id == "(e2,e3)");
    CHECK(a.negative_weight == iv({0, -1, 1}));
    REQUIRE(a.hits.size() == 2);
    CHECK(a.hits[0] == RayHit{1, "(e3,e2)"});
    CHECK(a.hits[1] == RayHit{2, "(e3,e3)"});
    REQUIRE(a.designated.has_value());
    CHECK(*a.designated == RayHit{2, "(e3,e3)"});
    CHECK(*a.squared_dist == 8);
    CHECK(*a.dist == doctest::Approx(2.8284271247).epsilon(1e-9));

    const DeformationEntry& b = rep.entries[1];
    CHECK(b.id == "(e3,e2)");
    CHECK(b.negative_weight == iv({0, -1, 1}));
    REQUIRE(b.hits.size() == 1);
    CHECK(b.hits[0] == RayHit{1, "(e3,e3)"});
    REQUIRE(b.designated.has_value());
    CHECK(*b.squared_dist == 2);
    CHECK(*b.dist == doctest::Approx(1.4142135624).epsilon(1e-9));
}

TEST_CASE("su3 deformation at t=s: coincident images are not ray hits") {
    const HamiltonianModel m = su3_product(1, 1);
    CHECK(validate_model(m).empty());
    const DeformationReport rep = deformation_report(m, choose_generator(m));
    REQUIRE(rep.entries.size() == 2);

    // (e2,e3) and (e3,e2) now share an image; the ray from one must not count
    // the other (u would be 0), leaving only the far vertex.
    const DeformationEntry& a = rep.entries[0];
    CHECK(a.id == "(e2,e3)");
    REQUIRE(a.hits.size() == 1);
    CHECK(a.hits[0] == RayHit{1, "(e3,e3)"});
    CHECK(*a.squared_dist == 2);
}

TEST_CASE("deformation errors: annotation off the ray, empty ray") {
    HamiltonianModel m = su3_product(2, 1);
    const Generator g = choose_generator(m);

    HamiltonianModel broken = m;
    std::erase_if(broken.fixed_points,
                  [](const FixedPointDatum& p) { return p.id == "(e3,e3)"; });
    CHECK_THROWS_AS(deformation_report(broken, g), ModelInconsistency);

    std::erase_if(broken.fixed_points,
                  [](const FixedPointDatum& p) { return p.id == "(e3,e2)"; });
    for (auto& p : broken.fixed_points) p.targets.clear();
    CHECK_THROWS_AS(deformation_report(broken, g), ModelInconsistency);
}

TEST_CASE("weight set with both axis and diagonal directions needs norm 2") {
    HamiltonianModel m;
    m.torus_rank = 2;
    m.ambient_dim = 2;
    m.half_dim = 4;
    m.fixed_points = {point(
        "q", iv({0, 0}), {iv({1, 0}), iv({0, 1}), iv({1, 1}), iv({1, -1})})};
    CHECK(choose_generator(m).xi == iv({2, 1}));
}

TEST_CASE("canonical enumeration order is frozen") {
    const auto square = enumerate_generators(square_model(), 3);
    REQUIRE(square.size() == 3);
    CHECK(square[0].xi == iv({1, 1}));
    CHECK(square[1].xi == iv({1, -1}));
    CHECK(square[2].xi == iv({-1, 1}));

    const auto su3 = enumerate_generators(su3_product(2, 1), 3);
    REQUIRE(su3.size() == 3);
    CHECK(su3[0].xi == iv({1, 0, -1}));
    CHECK(su3[1].xi == iv({1, -1, 0}));
    CHECK(su3[2].xi == iv({0, 1, -1}));
}

TEST_CASE("betti numbers are generator independent") {
    const HamiltonianModel m = su3_product(2, 1);

    const InvarianceReport canonical = betti_invariance(m, 3);
    CHECK(canonical.invariant);
    REQUIRE(canonical.bettis.size() == 3);
    for (const auto& b : canonical.bettis) CHECK(b == std::vector<int>{1, 2, 3, 2, 1});
    CHECK(canonical.generators[0] == iv({1, 0, -1}));

    const InvarianceReport seeded = betti_invariance(m, 5, 42);
    CHECK(seeded.invariant);
    REQUIRE(seeded.generators.size() == 5);
    std::set<Vec, bool (*)(const Vec&, const Vec&)> distinct(lex_less);
    for (const auto& xi : seeded.generators) {
        CHECK(distinct.insert(xi).second);
        Rational sum = 0;
        for (const auto& c : xi) sum += c;
        CHECK(sum == 0);  // sum-zero mode in ambient dimension rank+1
    }
    for (const auto& b : seeded.bettis) CHECK(b == std::vector<int>{1, 2, 3, 2, 1});

    // Counter-based draws: the same seed reproduces the same generators.
    const InvarianceReport again = betti_invariance(m, 5, 42);
    CHECK(again.generators == seeded.generators);
}

TEST_CASE("half_morse_index rejects a zero pairing") {
    const HamiltonianModel m = square_model();
    Generator bad;
    bad.xi = iv({1, -1});
    HamiltonianModel diag = m;
    diag.fixed_points[0].weights.push_back(iv({1, 1}));
    CHECK_THROWS_AS(half_morse_index(diag.fixed_points[0], bad), InvalidInput);
    CHECK_THROWS_AS(morse_report(diag, bad), InvalidInput);
    CHECK(half_morse_index(m.fixed_points[3], bad) == 1);
}

TEST_CASE("validate_model flags structural damage") {
    const HamiltonianModel good = square_model();

    SUBCASE("empty model") {
        HamiltonianModel m;
        m.torus_rank = 2;
        m.ambient_dim = 2;
        const auto vs = validate_model(m);
        REQUIRE(vs.size() == 1);
        CHECK(vs[0].point_id.empty());
    }
    SUBCASE("negated weight breaks the edge-ray closure") {
        HamiltonianModel m = good;
        m.fixed_points[1].weights[0] = iv({1, 0});
        const auto vs = validate_model(m);
        REQUIRE(vs.size() == 1);
        CHECK(violation_count(vs, "p10", 0) == 1);
    }
    SUBCASE("duplicate id") {
        HamiltonianModel m = good;
        m.fixed_points[2].id = "p10";
        CHECK(violation_count(validate_model(m), "p10", -1) == 1);
    }
    SUBCASE("weight count differs from half_dim") {
        HamiltonianModel m = good;
        m.fixed_points[3].weights.pop_back();
        const auto vs = validate_model(m);
        REQUIRE(vs.size() == 1);
        CHECK(violation_count(vs, "p11", -1) == 1);
    }
    SUBCASE("zero weight") {
        HamiltonianModel m = good;
        m.fixed_points[0].weights[1] = iv({0, 0});
        const auto vs = validate_model(m);
        REQUIRE(vs.size() == 1);
        CHECK(violation_count(vs, "p00", 1) == 1);
    }
    SUBCASE("image dimension mismatch also breaks rays into the point") {
        HamiltonianModel m = good;
        m.fixed_points[0].image = iv({0, 0, 0});
        const auto vs = validate_model(m);
        CHECK(violation_count(vs, "p00", -1) == 1);
        CHECK(violation_count(vs, "p10", 0) == 1);
        CHECK(violation_count(vs, "p01", 1) == 1);
        CHECK(vs.size() == 3);
    }
    SUBCASE("target annotation errors") {
        HamiltonianModel m = good;
        m.fixed_points[0].targets[0] = "nope";
        CHECK(violation_count(validate_model(m), "p00", 0) == 1);

        m = good;
        m.fixed_points[0].targets[0] = "p01";  // off the (1,0) ray
        CHECK(violation_count(validate_model(m), "p00", 0) == 1);

        m = good;
        m.fixed_points[0].targets[5] = "p10";
        CHECK(violation_count(validate_model(m), "p00", 5) == 1);

        m = good;
        m.fixed_points[0].targets[0] = "p10";  // legitimate annotation
        CHECK(validate_model(m).empty());
    }
    SUBCASE("root system ambient mismatch") {
        HamiltonianModel m = good;
        m.root_system = build_root_system(RootFamily::A, 2);  // ambient 3
        CHECK(violation_count(validate_model(m), "", -1) == 1);
    }
}

TEST_CASE("a single fixed point with no weights is a valid rank-0 model") {
    HamiltonianModel m;
    m.torus_rank = 2;
    m.ambient_dim = 2;
    m.half_dim = 0;
    m.fixed_points = {point("pt", iv({3, 4}), {})};
    CHECK(validate_model(m).empty());
    CHECK(choose_generator(m).xi == iv({1, 1}));
    const MorseReport r = morse_report(m, choose_generator(m));
    CHECK(r.betti == std::vector<int>{1});
    CHECK(r.warnings.empty());
    CHECK(betti_invariance(m, 2).invariant);
}

TEST_CASE("morse warnings flag disconnected or asymmetric counts") {
    HamiltonianModel m;
    m.torus_rank = 2;
    m.ambient_dim = 2;
    m.half_dim = 2;
    m.fixed_points = {
        point("a", iv({0, 0}), {iv({1, 0}), iv({0, 1})}),
        point("b", iv({1, 0}), {iv({-1, 0}), iv({0, 1})}),
        point("c", iv({0, 1}), {iv({1, 0}), iv({0, -1})}),
    };
    Generator g;
    g.xi = iv({1, 1});
    const MorseReport r = morse_report(m, g);
    CHECK(r.betti == std::vector<int>{1, 2, 0});
    REQUIRE(r.warnings.size() == 1);
    CHECK(r.warnings[0].find("duality") != std::string::npos);

    m.fixed_points[1] = point("b", iv({1, 0}), {iv({1, 0}), iv({0, 1})});
    const MorseReport r2 = morse_report(m, g);
    CHECK(r2.betti == std::vector<int>{2, 1, 0});
    CHECK(r2.warnings.size() == 2);
    CHECK(r2.warnings[0].find("b_0 = 2") != std::string::npos);
}

TEST_CASE("generator enumeration exhaustion and zero-weight rejection") {
    HamiltonianModel line;
    line.torus_rank = 1;
    line.ambient_dim = 1;
    line.half_dim = 1;
    line.fixed_points = {
        point("lo", iv({0}), {iv({1})}),
        point("hi", iv({1}), {iv({-1})}),
    };
    CHECK(validate_model(line).empty());
    const auto all = enumerate_generators(line, 100);
    CHECK(all.size() == 100);
    CHECK(all[0].xi == iv({1}));
    CHECK(all[1].xi == iv({-1}));
    CHECK(all[2].xi == iv({2}));
    CHECK_THROWS_AS(enumerate_generators(line, 101), InvalidInput);
    CHECK(enumerate_generators(line, 100, 9).size() == 100);
    CHECK_THROWS_AS(enumerate_generators(line, 101, 9), InvalidInput);

    HamiltonianModel zero = square_model();
    zero.fixed_points[0].weights[0] = iv({0, 0});
    CHECK_THROWS_AS(choose_generator(zero), InvalidInput);
    CHECK_THROWS_AS(enumerate_generators(zero, 1), InvalidInput);
}
