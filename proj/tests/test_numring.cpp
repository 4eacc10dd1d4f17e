#include <random>

#include "doctest.h"
#include "fibcones/numring.hpp"
#include "fibcones/prodspace.hpp"
#include "oracles.hpp"

using namespace fibcones;

namespace {

// P(V) over the curve, V of rank m and degree d.
RingTower bundle_over_curve(int m, int d) {
    auto c = curve_ring("F");
    std::vector<CycleClass> chern{Rational(d) * c.generator(0)};
    for (int i = 2; i <= m; ++i) chern.emplace_back();
    return c.extend(std::move(chern), "z");
}

}  // namespace

TEST_CASE("curve ring") {
    auto c = curve_ring();
    CHECK(c.dimension() == 1);
    CHECK(c.ring_dimension() == 2);
    CHECK(c.multiply(c.generator(0), c.generator(0)).is_zero());
    CHECK(c.degree(c.generator(0)) == 1);
    CHECK_THROWS_AS(c.degree(c.unit()), Error);
}

TEST_CASE("grothendieck relation on P(V) over a curve") {
    auto t = bundle_over_curve(2, 3);
    const auto z = t.generator(1);
    const auto F = t.generator(0);
    // z^2 = 3 F z
    CHECK(t.power(z, 2) == Rational(3) * t.multiply(F, z));
    CHECK(t.degree(t.power(z, 2)) == 3);
    CHECK(t.degree(t.multiply(F, z)) == 1);
    CHECK(t.power(z, 3).is_zero());
}

TEST_CASE("normal form of zero and unit") {
    auto t = bundle_over_curve(3, -2);
    CHECK(t.normal_form({}).is_zero());
    CHECK(t.normal_form({{Monomial{}, Rational(1)}}) == t.unit());
    CHECK(t.normal_form({{Monomial::single(1), Rational(0)}}).is_zero());
}

TEST_CASE("duplicate generator names are rejected") {
    auto c = curve_ring("F");
    CHECK_THROWS_AS(c.extend({CycleClass{}}, "F"), Error);
}

TEST_CASE("chern classes must have the right grade") {
    auto c = curve_ring("F");
    try {
        c.extend({c.unit(), CycleClass{}}, "z");
        FAIL("expected GradeMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::GradeMismatch);
    }
}

TEST_CASE("graded basis of X") {
    auto s = build_space({2, 0, {}}, {2, 0, {}});
    const auto& t = s.ring();
    auto b1 = t.graded_basis(1);
    REQUIRE(b1.size() == 3);
    CHECK(t.format(b1[0]) == "F");
    CHECK(t.format(b1[1]) == "z1");
    CHECK(t.format(b1[2]) == "z2");
    CHECK(t.graded_basis(0).size() == 1);
    auto s23 = build_space({2, 0, {}}, {3, 0, {}});
    CHECK(s23.ring().graded_basis(2).size() == 4);
    CHECK_THROWS_AS(t.graded_basis(4), Error);
    CHECK_THROWS_AS(t.graded_basis(-1), Error);
}

TEST_CASE("coordinates round trip") {
    auto s = build_space({2, 3, {}}, {2, 1, {}});
    const auto& t = s.ring();
    const Rational mu = make_rational(3, 2);
    auto a = s.zeta1() - mu * s.fiber();
    auto v = t.coordinates(a, 1);
    CHECK(v == std::vector<Rational>{-mu, 1, 0});
    CHECK(t.from_coordinates(v, 1) == a);
    CHECK(t.coordinates(s.zeta1(), 1) == std::vector<Rational>{0, 1, 0});
    CHECK_THROWS_AS(t.coordinates(s.zeta1(), 2), Error);
}

TEST_CASE("delta3 coordinates") {
    auto s = build_space({2, 1, {}}, {2, 3, {}});
    auto d = dual_one_cycle_basis(s);
    const auto& t = s.ring();
    auto basis = t.graded_basis(2);
    auto v = t.coordinates(d[2], 2);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto name = t.format(basis[i]);
        if (name == "z1*z2") CHECK(v[i] == 1);
        else if (name == "F*z2") CHECK(v[i] == -1);  // -d1 F z1^(r1-2) z2^(r2-1)
        else if (name == "F*z1") CHECK(v[i] == -3);  // -d2 F z1^(r1-1) z2^(r2-2)
        else CHECK(v[i] == 0);
    }
}

TEST_CASE("ring laws on random classes") {
    std::mt19937 rng(7);
    auto s = build_space({3, -2, {}}, {3, 5, {}});
    const auto& t = s.ring();
    auto random_class = [&](int k) {
        auto b = t.graded_basis(k);
        CycleClass a;
        std::uniform_int_distribution<int> coef(-4, 4);
        for (const auto& m : b) a.add_term(m, Rational(coef(rng)));
        return a;
    };
    for (int trial = 0; trial < 60; ++trial) {
        const int i = trial % 3, j = (trial / 3) % 3, k = (trial / 9) % 2;
        auto a = random_class(i), b = random_class(j), c = random_class(k);
        CHECK(t.multiply(a, b) == t.multiply(b, a));
        CHECK(t.multiply(t.multiply(a, b), c) == t.multiply(a, t.multiply(b, c)));
        CHECK(t.multiply(a, b + c) == t.multiply(a, b) + t.multiply(a, c));
        CHECK(t.multiply(a, b).is_pure(i + j));
    }
}

TEST_CASE("normal form agrees with randomized rewriting") {
    std::mt19937 rng(11);
    auto s = build_space({2, 1, {}}, {3, -2, {}});
    const auto& t = s.ring();
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> e(0, 4);
        FormalSum raw;
        oracle::Poly p;
        for (int term = 0; term < 3; ++term) {
            oracle::Exps x{e(rng) % 3, e(rng), e(rng)};
            raw.emplace_back(Monomial::from_exponents(x), Rational(term + 1));
            oracle::add_to(p, x, Rational(term + 1));
        }
        CHECK(oracle::tower_poly(t.normal_form(raw), 3) == oracle::reduce_random(t, p, rng));
    }
}

TEST_CASE("format") {
    auto s = build_space({2, 0, {}}, {2, 0, {}});
    CHECK(s.format(CycleClass{}) == "0");
    CHECK(s.format(s.ring().unit()) == "1");
    CHECK(s.format(s.monomial(1, 1, 1)) == "F*z1*z2");
    CHECK(s.format(make_rational(-1, 2) * s.fiber()) == "-1/2*F");
}
