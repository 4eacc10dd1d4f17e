#include "doctest.h"
#include "fibcones/blowver.hpp"
#include "fibcones/effcones.hpp"

using namespace fibcones;

namespace {

const BundleData kSplit{2, 0, {{1, 1}, {1, -1}}};

bool vanishing_holds(const BlowupModel& m) {
    const auto& r = m.tower;
    return r.multiply(m.exceptional(), r.power(m.gamma() - m.mu11() * m.f1(), m.n11)).is_zero();
}

}  // namespace

TEST_CASE("rank-two example") {
    auto s = build_space(kSplit, {2, 0, {}});
    auto m = build_blowup_model(s);
    const auto& r = m.tower;
    CHECK(m.n11 == 1);
    CHECK(m.d11 == 1);
    CHECK(m.dimension() == s.dimension());
    CHECK(m.dimension() == m.zprime->dimension() + m.n11);
    auto g = m.gamma(), z = m.zeta_zprime(), f = m.f1();
    CHECK(r.power(g, 2) == r.multiply(z + f, g) - r.multiply(z, f));
    // E11 has rank 1 and degree -1, so zZ' = -F1
    CHECK(z == -f);
    CHECK(r.multiply(g - z, g - f).is_zero());
    auto rep = verify_exceptional_vanishing(m);
    CHECK(rep.all_passed());
    CHECK(rep.notes.size() == 2);
}

TEST_CASE("exceptional vanishing for n11 = 1, 2, 3") {
    std::vector<BundleData> bundles{
        {3, 1, {{1, 2}, {2, -1}}},
        {4, 5, {{2, 4}, {2, 1}}},
        {4, 2, {{3, 3}, {1, -1}}},
        {4, 0, {{1, 2}, {2, 0}, {1, -2}}},
    };
    for (const auto& b : bundles)
        for (const auto& other : {BundleData{2, 1, {}}, BundleData{3, -2, {}}}) {
            auto s = build_space(b, other);
            auto m = build_blowup_model(s);
            CHECK(verify_exceptional_vanishing(m).all_passed());
            CHECK(vanishing_holds(m));
            CHECK_FALSE(m.exceptional().is_zero());
        }
}

TEST_CASE("flipped c2 breaks the vanishing") {
    auto s = build_space({3, 1, {{1, 2}, {2, -1}}}, {2, 0, {}});
    auto m = build_blowup_model(s, Factor::First, true);
    CHECK(m.c2_flipped);
    CHECK_FALSE(vanishing_holds(m));
    auto rep = verify_exceptional_vanishing(m);
    CHECK_FALSE(rep.all_passed());
    CHECK(rep.notes.size() == 3);
}

TEST_CASE("second factor and swapped input") {
    auto s = build_space({2, 0, {}}, {3, 1, {{1, 2}, {2, -1}}});
    auto m = build_blowup_model(s, Factor::Second);
    CHECK(m.bundle_label == "z2");
    CHECK(m.other_label == "z1");
    CHECK(verify_exceptional_vanishing(m).all_passed());
    try {
        build_blowup_model(s, Factor::First);
        FAIL("expected NotUnstable");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotUnstable);
    }
    auto t = build_space({3, 1, {{1, 2}, {2, -1}}}, {2, 0, {}});
    CHECK(t.swapped());
    auto mt = build_blowup_model(t, Factor::First);
    CHECK(mt.bundle_label == "z1");
    CHECK(mt.bundle.rank == 3);
}

TEST_CASE("pull-back preserves top degrees") {
    auto s = build_space({3, 1, {{1, 2}, {2, -1}}}, {3, 2, {}});
    auto m = build_blowup_model(s);
    const int top = s.dimension();
    for (const auto& mono : s.ring().graded_basis(top - 1))
        for (const auto& gen : {s.zeta1(), s.zeta2(), s.fiber()}) {
            auto a = s.multiply(s.ring().monomial(mono), gen);
            CHECK(m.tower.degree(pull_back(m, s, a)) == s.degree(a));
        }
    for (int f = 0; f <= 1; ++f)
        for (int i = 0; i + f <= top; ++i) {
            auto a = s.monomial(f, i, top - f - i);
            CHECK(m.tower.degree(pull_back(m, s, a)) == s.degree(a));
        }
}
