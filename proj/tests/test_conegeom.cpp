#include <random>

#include "doctest.h"
#include "fibcones/conegeom.hpp"
#include "fibcones/effcones.hpp"
#include "oracles.hpp"

using namespace fibcones;

namespace {

Vector v(std::initializer_list<int> xs) {
    Vector out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

Cone cone(std::size_t dim, std::vector<Vector> gens) { return Cone::from_generators(dim, gens); }

}  // namespace

TEST_CASE("quadrant") {
    auto q = cone(2, {v({1, 0}), v({0, 1})});
    CHECK(q.contains(v({1, 1})));
    CHECK_FALSE(q.contains(v({-1, 1})));
    CHECK(q.contains(v({0, 0})));
    CHECK(q.lineality_dim() == 0);
    CHECK(q.facets().inequalities.size() == 2);
    CHECK(q.facets().equalities.empty());
    CHECK(q.is_extremal(v({1, 0})));
    CHECK(q.is_extremal(v({3, 0})));
}

TEST_CASE("line") {
    auto l = cone(2, {v({1, 0}), v({-1, 0})});
    CHECK(l.contains(v({5, 0})));
    CHECK(l.contains(v({-5, 0})));
    CHECK_FALSE(l.contains(v({0, 1})));
    CHECK(l.lineality_dim() == 1);
}

TEST_CASE("interior generator is not extremal") {
    auto c = cone(2, {v({1, 0}), v({0, 1}), v({1, 1})});
    CHECK_FALSE(c.is_extremal(v({1, 1})));
    CHECK(c.is_extremal(v({0, 1})));
    CHECK_THROWS_AS(c.is_extremal(v({1, 2})), Error);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(cone(2, {v({1, 0, 0})}), Error);
    try {
        cone(2, {v({0, 0})});
        FAIL("expected ZeroGenerator");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroGenerator);
    }
    CHECK_THROWS_AS(cone(2, {v({1, 0})}).contains(v({1})), Error);
}

TEST_CASE("generators are primitive and deduplicated") {
    std::vector<Vector> g{Vector{Rational(1, 2), Rational(1, 3)}, v({3, 2}), v({6, 4})};
    auto c = Cone::from_generators(2, g);
    REQUIRE(c.generators().size() == 1);
    CHECK(c.generators()[0] == v({3, 2}));
    CHECK(primitive(v({0, 0})) == v({0, 0}));
    CHECK(primitive(Vector{Rational(-2, 3), Rational(4, 9)}) == v({-3, 2}));
}

TEST_CASE("duals") {
    auto q = cone(2, {v({1, 0}), v({0, 1})});
    CHECK(cones_equal(dual_cone(q, Matrix::identity(2)), q));
    auto plane = cone(2, {v({1, 0}), v({-1, 0}), v({0, 1}), v({0, -1})});
    auto d = dual_cone(plane, Matrix::identity(2));
    CHECK(d.generators().empty());
    CHECK_FALSE(d.contains(v({1, 0})));
    auto zero = cone(2, {});
    CHECK(cones_equal(dual_cone(zero, Matrix::identity(2)), plane));
}

TEST_CASE("cones_equal") {
    CHECK(cones_equal(cone(2, {v({1, 0}), v({0, 1})}), cone(2, {v({1, 0}), v({0, 1}), v({1, 1})})));
    CHECK_FALSE(cones_equal(cone(2, {v({1, 0})}), cone(2, {v({0, 1})})));
    CHECK_THROWS_AS(cones_equal(cone(2, {}), cone(3, {})), Error);
}

TEST_CASE("nonnegative combination") {
    CHECK(is_nonnegative_combination({v({1, 0}), v({0, 1})}, v({2, 3})));
    CHECK_FALSE(is_nonnegative_combination({v({1, 0}), v({0, 1})}, v({2, -3})));
    CHECK(is_nonnegative_combination({}, v({0, 0})));
    CHECK_FALSE(is_nonnegative_combination({}, v({0, 1})));
}

TEST_CASE("double description of a pointed cone") {
    // x >= 0, y >= 0, z >= 0, x + y >= z
    auto rd = double_description({v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1}), v({1, 1, -1})}, 3);
    CHECK(rd.lineality.empty());
    CHECK(rd.rays.size() == 4);
}

TEST_CASE("random cones against brute force") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t dim = 2 + trial % 4;
        const std::size_t n = 1 + (trial * 7) % 6;
        std::uniform_int_distribution<int> e(-3, 3);
        std::vector<Vector> gens;
        while (gens.size() < n) {
            Vector g(dim);
            for (auto& x : g) x = e(rng);
            if (std::any_of(g.begin(), g.end(), [](const Rational& q) { return q != 0; })) gens.push_back(g);
        }
        auto c = Cone::from_generators(dim, gens);
        const auto& gs = c.generators();
        for (std::size_t i = 0; i < gs.size(); ++i) CHECK(c.is_extremal(gs[i]) == oracle::brute_extremal(gs, i));
        for (int probe = 0; probe < 10; ++probe) {
            Vector p(dim);
            for (auto& x : p) x = e(rng);
            CHECK(c.contains(p) == oracle::brute_contains(gs, p));
        }
        auto dd = dual_cone(dual_cone(c, Matrix::identity(dim)), Matrix::identity(dim));
        CHECK(cones_equal(dd, c));
    }
}

TEST_CASE("semistable cone of P1xP1-type space") {
    auto s = build_space({2, 0, {}}, {2, 0, {}});
    auto r = semistable_eff_generators(s, 1);
    for (const auto& g : r.cone.generators()) {
        CHECK(r.cone.contains(g));
        CHECK(r.cone.is_extremal(g));
    }
    // the r1 = r2 = 2, mu = 0 cone is the orthant over (z2, z1, F)
    CHECK(cones_equal(r.cone, cone(3, {v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})})));
}
