#include "fibcones/prodspace.hpp"

#include <algorithm>
#include <utility>

namespace fibcones {

namespace {

// "z1" -> "1": the suffix used to spell r1, d1, ... in the caller's labeling.
std::string suffix_of(const std::string& label) {
    return label.size() > 1 ? label.substr(1) : label;
}

}  // namespace

BundleData BundleData::truncated() const {
    if (hn.empty()) throw Error(ErrorKind::NotUnstable, "a semistable bundle has no HN truncation");
    BundleData t;
    t.rank = rank - hn.front().rank;
    t.degree = degree - hn.front().degree;
    if (hn.size() > 2) t.hn.assign(hn.begin() + 1, hn.end());
    return t;
}

void validate(const BundleData& e, int min_rank) {
    if (e.rank < min_rank)
        throw Error(ErrorKind::RankTooSmall,
                    "rank " + std::to_string(e.rank) + " < " + std::to_string(min_rank));
    if (e.hn.empty()) return;
    if (e.hn.size() < 2)
        throw Error(ErrorKind::InvalidHN, "an HN filtration of an unstable bundle has at least 2 quotients");
    int rank_sum = 0;
    long long degree_sum = 0;
    for (std::size_t i = 0; i < e.hn.size(); ++i) {
        const auto& q = e.hn[i];
        if (q.rank < 1)
            throw Error(ErrorKind::InvalidHN, "HN quotient " + std::to_string(i + 1) + " has rank < 1");
        rank_sum += q.rank;
        degree_sum += q.degree;
        if (i > 0 && !(q.slope() < e.hn[i - 1].slope()))
            throw Error(ErrorKind::InvalidHN, "HN slopes must strictly decrease (quotient " +
                                                  std::to_string(i + 1) + ")");
    }
    if (rank_sum != e.rank)
        throw Error(ErrorKind::InvalidHN, "HN ranks sum to " + std::to_string(rank_sum) +
                                              ", bundle rank is " + std::to_string(e.rank));
    if (degree_sum != e.degree)
        throw Error(ErrorKind::InvalidHN, "HN degrees sum to " + std::to_string(degree_sum) +
                                              ", bundle degree is " + std::to_string(e.degree));
}

ProductSpace::ProductSpace(BundleData e1, BundleData e2, bool swapped, std::array<std::string, 2> labels)
    : e1_(std::move(e1)), e2_(std::move(e2)), swapped_(swapped), labels_(std::move(labels)),
      tower_(RingTower::curve("F")) {
    const Monomial pt = Monomial::single(kFiberSlot);
    std::vector<CycleClass> c2(static_cast<std::size_t>(e2_.rank));
    c2[0] = CycleClass(pt, e2_.degree);
    tower_ = tower_.extend(std::move(c2), labels_[1]);
    std::vector<CycleClass> c1(static_cast<std::size_t>(e1_.rank));
    c1[0] = CycleClass(pt, e1_.degree);
    tower_ = tower_.extend(std::move(c1), labels_[0]);
}

ProductSpace ProductSpace::build(const BundleData& e1, const BundleData& e2) {
    validate(e1, 2);
    validate(e2, 2);
    return build_derived(e1, e2);
}

ProductSpace ProductSpace::build_derived(const BundleData& e1, const BundleData& e2,
                                         std::array<std::string, 2> labels) {
    validate(e1, 1);
    validate(e2, 1);
    if (e1.rank > e2.rank) return ProductSpace(e2, e1, true, {labels[1], labels[0]});
    return ProductSpace(e1, e2, false, std::move(labels));
}

ProductSpace build_space(const BundleData& e1, const BundleData& e2) { return ProductSpace::build(e1, e2); }

Monomial ProductSpace::raw_monomial(int f, int i, int j) {
    Monomial m;
    m.set(kFiberSlot, f);
    m.set(kZeta1Slot, i);
    m.set(kZeta2Slot, j);
    return m;
}

CycleClass ProductSpace::monomial(int f, int i, int j) const { return tower_.monomial(raw_monomial(f, i, j)); }

Rational ProductSpace::pair(const CycleClass& a, const CycleClass& b) const {
    return tower_.degree(tower_.multiply(a, b));
}

const std::string& ProductSpace::label(Factor f) const { return labels_[f == Factor::First ? 0 : 1]; }

const BundleData& ProductSpace::original(Factor f) const {
    const bool first = (f == Factor::First) != swapped_;
    return first ? e1_ : e2_;
}

std::optional<int> ProductSpace::low_dim_bound() const {
    if (!unstable()) return std::nullopt;
    return e1_.hn.front().rank + e2_.hn.front().rank - 1;
}

bool IdentityReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

IdentityReport verify_relations(const ProductSpace& space) {
    const RingTower& ring = space.ring();
    IdentityReport report;

    auto class_check = [&](std::string name, const CycleClass& lhs, const CycleClass& rhs) {
        report.checks.push_back({std::move(name), ring.format(lhs), ring.format(rhs), lhs == rhs});
    };
    auto degree_check = [&](std::string name, const CycleClass& cls, const Rational& expected) {
        const Rational got = ring.degree(cls);
        report.checks.push_back({std::move(name), to_string(got), to_string(expected), got == expected});
    };

    struct FactorView {
        std::string z, r, d;
        int rank, degree;
        std::size_t slot, other_slot;
    };
    auto view = [&](bool engine_first) {
        const std::string& z = space.label(engine_first ? Factor::First : Factor::Second);
        const std::string sfx = suffix_of(z);
        return FactorView{z,
                          "r" + sfx,
                          "d" + sfx,
                          engine_first ? space.r1() : space.r2(),
                          engine_first ? space.d1() : space.d2(),
                          engine_first ? ProductSpace::kZeta1Slot : ProductSpace::kZeta2Slot,
                          engine_first ? ProductSpace::kZeta2Slot : ProductSpace::kZeta1Slot};
    };
    // Caller's E1 first.
    const FactorView a = view(!space.swapped());
    const FactorView b = view(space.swapped());
    const std::size_t f = ProductSpace::kFiberSlot;

    auto mono = [&](std::initializer_list<std::pair<std::size_t, int>> exps) {
        Monomial m;
        for (auto [slot, e] : exps) m.set(slot, e);
        return ring.monomial(m);
    };

    for (const FactorView* v : {&a, &b}) {
        class_check(v->z + "^" + v->r + "*F = 0", mono({{v->slot, v->rank}, {f, 1}}), CycleClass{});
        class_check(v->z + "^(" + v->r + "+1) = 0", mono({{v->slot, v->rank + 1}}), CycleClass{});
    }
    class_check("F^2 = 0", mono({{f, 2}}), CycleClass{});
    for (const FactorView* v : {&a, &b}) {
        class_check(v->z + "^" + v->r + " = " + v->d + "*F*" + v->z + "^(" + v->r + "-1)",
                    mono({{v->slot, v->rank}}),
                    Rational(v->degree) * mono({{f, 1}, {v->slot, v->rank - 1}}));
    }
    for (const auto& [v, w] : {std::pair{&a, &b}, std::pair{&b, &a}}) {
        degree_check("deg " + v->z + "^" + v->r + "*" + w->z + "^(" + w->r + "-1) = " + v->d,
                     mono({{v->slot, v->rank}, {w->slot, w->rank - 1}}), Rational(v->degree));
    }
    degree_check("deg F*" + a.z + "^(" + a.r + "-1)*" + b.z + "^(" + b.r + "-1) = 1",
                 mono({{f, 1}, {a.slot, a.rank - 1}, {b.slot, b.rank - 1}}), Rational(1));
    return report;
}

std::vector<Monomial> nk_basis_monomials(const ProductSpace& space, int k) {
    if (k < 0 || k > space.dimension())
        throw Error(ErrorKind::OutOfRange, "codimension " + std::to_string(k) + " outside 0.." +
                                               std::to_string(space.dimension()));
    const int r1 = space.r1();
    const int r2 = space.r2();
    int i_lo, i_hi, j_lo, j_hi;
    if (k < r1) {
        i_lo = 0, i_hi = k, j_lo = 0, j_hi = k - 1;
    } else if (k < r2) {
        i_lo = 0, i_hi = r1 - 1, j_lo = 0, j_hi = r1 - 1;
    } else {
        const int t = k - r2;
        i_lo = t + 1, i_hi = r1 - 1, j_lo = t, j_hi = r1 - 1;
    }
    std::vector<Monomial> out;
    for (int i = i_lo; i <= i_hi; ++i) out.push_back(ProductSpace::raw_monomial(0, i, k - i));
    for (int j = j_lo; j <= j_hi; ++j) out.push_back(ProductSpace::raw_monomial(1, j, k - j - 1));
    return out;
}

std::vector<CycleClass> nk_basis(const ProductSpace& space, int k) {
    std::vector<CycleClass> out;
    for (const auto& m : nk_basis_monomials(space, k)) out.emplace_back(m);
    return out;
}

std::vector<CycleClass> separating_classes(const ProductSpace& space, int k) {
    const int r1 = space.r1();
    const int r2 = space.r2();
    // alpha_i = F z1^(r1-i-1) z2^(r2+i-k-1) detects z1^i z2^(k-i).
    auto alpha = [&](int i) -> CycleClass {
        if (i < 0 || i > k || r1 - i - 1 < 0 || r2 + i - k - 1 < 0) return {};
        return space.monomial(1, r1 - i - 1, r2 + i - k - 1);
    };
    std::vector<CycleClass> out;
    for (const auto& m : nk_basis_monomials(space, k)) {
        if (m[ProductSpace::kFiberSlot] == 0) {
            out.push_back(alpha(m[ProductSpace::kZeta1Slot]));
        } else {
            // beta_j = z1^(r1-j-1) z2^(r2+j-k) pairs to d2 with z1^j z2^(k-j) and to d1 with
            // z1^(j+1) z2^(k-j-1); subtract those so only F z1^j z2^(k-j-1) survives.
            const int j = m[ProductSpace::kZeta1Slot];
            CycleClass beta = space.monomial(0, r1 - j - 1, r2 + j - k);
            beta -= Rational(space.d2()) * alpha(j);
            beta -= Rational(space.d1()) * alpha(j + 1);
            out.push_back(std::move(beta));
        }
    }
    return out;
}

Vector basis_coordinates(const ProductSpace& space, const CycleClass& a, int k) {
    if (!a.is_pure(k))
        throw Error(ErrorKind::GradeMismatch, "class is not of pure codimension " + std::to_string(k));
    const auto basis = nk_basis_monomials(space, k);
    Vector v(basis.size());
    std::size_t hits = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        v[i] = a.coefficient(basis[i]);
        if (!is_zero(v[i])) ++hits;
    }
    if (hits != a.size()) throw Error(ErrorKind::BasisMismatch, "class has terms outside nk_basis");
    return v;
}

CycleClass from_basis_coordinates(const ProductSpace& space, const Vector& coords, int k) {
    const auto basis = nk_basis_monomials(space, k);
    if (coords.size() != basis.size()) throw Error(ErrorKind::DimMismatch, "coordinate vector has wrong length");
    CycleClass c;
    for (std::size_t i = 0; i < basis.size(); ++i) c.add_term(basis[i], coords[i]);
    return c;
}

Matrix pairing_matrix(const ProductSpace& space, const std::vector<CycleClass>& rows,
                      const std::vector<CycleClass>& cols) {
    Matrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = space.pair(rows[i], cols[j]);
    return m;
}

std::array<CycleClass, 3> dual_one_cycle_basis(const ProductSpace& space) {
    const int r1 = space.r1();
    const int r2 = space.r2();
    if (r1 < 2 || r2 < 2) throw Error(ErrorKind::RankTooSmall, "dual one-cycle basis needs r1, r2 >= 2");
    CycleClass d1 = space.monomial(1, r1 - 2, r2 - 1);
    CycleClass d2 = space.monomial(1, r1 - 1, r2 - 2);
    CycleClass d3 = space.monomial(0, r1 - 1, r2 - 1);
    d3 -= Rational(space.d1()) * d1;
    d3 -= Rational(space.d2()) * d2;
    return {std::move(d1), std::move(d2), std::move(d3)};
}

CycleClass subproduct_class(const ProductSpace& space) {
    if (!space.unstable()) throw Error(ErrorKind::NotUnstable, "both bundles must be unstable");
    const auto& q1 = space.e1().hn.front();
    const auto& q2 = space.e2().hn.front();
    const int a = space.r1() - q1.rank;
    const int b = space.r2() - q2.rank;
    if (a < 1 || b < 1) throw Error(ErrorKind::InvalidHN, "first HN quotient cannot be the whole bundle");
    CycleClass p1 = space.monomial(0, a, 0) + Rational(q1.degree - space.d1()) * space.monomial(1, a - 1, 0);
    CycleClass p2 = space.monomial(0, 0, b) + Rational(q2.degree - space.d2()) * space.monomial(1, 0, b - 1);
    return space.multiply(p1, p2);
}

CycleClass exchange_factors(const ProductSpace& from, const CycleClass& a, const ProductSpace& to) {
    if (from.r1() != to.r2() || from.r2() != to.r1())
        throw Error(ErrorKind::DimMismatch, "factor exchange needs matching ranks");
    FormalSum raw;
    for (const auto& [m, c] : a.terms())
        raw.emplace_back(ProductSpace::raw_monomial(m[ProductSpace::kFiberSlot], m[ProductSpace::kZeta2Slot],
                                                     m[ProductSpace::kZeta1Slot]),
                         c);
    return to.ring().normal_form(raw);
}

}  // namespace fibcones
