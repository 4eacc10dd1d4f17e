#include "fibcones/blowver.hpp"

namespace fibcones {

namespace {

Factor other_factor(Factor f) { return f == Factor::First ? Factor::Second : Factor::First; }

// Label of the caller's factor f (ProductSpace::label speaks engine order).
const std::string& caller_label(const ProductSpace& space, Factor f) {
    return space.label(space.swapped() ? other_factor(f) : f);
}

std::size_t x_slot(const ProductSpace& space, const std::string& label) {
    if (space.label(Factor::First) == label) return ProductSpace::kZeta1Slot;
    if (space.label(Factor::Second) == label) return ProductSpace::kZeta2Slot;
    throw Error(ErrorKind::DimMismatch, "space has no factor labelled " + label);
}

// Product in the free polynomial ring, without any reduction.
CycleClass expand(const CycleClass& a, const CycleClass& b) {
    CycleClass out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
    return out;
}

}  // namespace

CycleClass BlowupModel::c1() const { return zeta_zprime() + Rational(d11) * f1(); }

CycleClass BlowupModel::c2() const { return Rational(d11) * tower.multiply(f1(), zeta_zprime()); }

BlowupModel build_blowup_model(const ProductSpace& space, Factor factor, bool flip_c2_sign) {
    BlowupModel m;
    m.factor = factor;
    m.bundle = space.original(factor);
    m.other = space.original(other_factor(factor));
    m.bundle_label = caller_label(space, factor);
    m.other_label = caller_label(space, other_factor(factor));
    if (m.bundle.semistable())
        throw Error(ErrorKind::NotUnstable, m.bundle_label + " bundle is semistable; nothing to blow up");
    m.n11 = m.bundle.hn.front().rank;
    m.d11 = m.bundle.hn.front().degree;
    m.truncated = m.bundle.truncated();
    m.c2_flipped = flip_c2_sign;

    m.zprime = std::make_shared<const ProductSpace>(
        factor == Factor::First
            ? ProductSpace::build_derived(m.truncated, m.other, {m.bundle_label, m.other_label})
            : ProductSpace::build_derived(m.other, m.truncated, {m.other_label, m.bundle_label}));

    const Monomial pt = Monomial::single(BlowupModel::kF1Slot);
    RingTower t = RingTower::curve("F1");
    std::vector<CycleClass> co(static_cast<std::size_t>(m.other.rank));
    co[0] = CycleClass(pt, m.other.degree);
    t = t.extend(std::move(co), m.other_label);
    std::vector<CycleClass> ct(static_cast<std::size_t>(m.truncated.rank));
    ct[0] = CycleClass(pt, m.truncated.degree);
    t = t.extend(std::move(ct), "zZ'");

    const CycleClass f1 = t.generator(BlowupModel::kF1Slot);
    const CycleClass z = t.generator(BlowupModel::kZPrimeSlot);
    std::vector<CycleClass> cg(static_cast<std::size_t>(m.n11 + 1));
    cg[0] = z + Rational(m.d11) * f1;
    cg[1] = Rational(flip_c2_sign ? -m.d11 : m.d11) * t.multiply(f1, z);
    m.tower = t.extend(std::move(cg), "gamma");
    return m;
}

IdentityReport verify_exceptional_vanishing(const BlowupModel& model) {
    const RingTower& r = model.tower;
    const int n = model.n11;
    IdentityReport report;

    const CycleClass g = model.gamma();
    const CycleClass groth = r.power(g, n + 1) - r.multiply(model.c1(), r.power(g, n)) +
                             r.multiply(model.c2(), r.power(g, n - 1));
    report.checks.push_back({"gamma^(n11+1) - (zZ' + d11*F1)*gamma^n11 + d11*F1*zZ'*gamma^(n11-1) = 0",
                             r.format(groth), "0", groth.is_zero()});

    const CycleClass e = model.exceptional();
    const CycleClass twist = g - model.mu11() * model.f1();
    CycleClass raw = e;
    for (int i = 0; i < n; ++i) raw = expand(raw, twist);
    const CycleClass vanishing = r.multiply(e, r.power(twist, n));
    report.checks.push_back({"E~*(gamma - mu11*F1)^n11 = " + r.format(raw), r.format(vanishing), "0",
                             vanishing.is_zero()});

    report.checks.push_back({"E~ = gamma - zZ' is nonzero", r.format(e), "nonzero", !e.is_zero()});

    const int dz = model.zprime->dimension();
    report.checks.push_back({"dim = dim Z' + n11", std::to_string(model.dimension()),
                             std::to_string(dz) + " + " + std::to_string(n), model.dimension() == dz + n});

    Monomial top;
    top.set(BlowupModel::kF1Slot, 1);
    top.set(BlowupModel::kOtherSlot, model.other.rank - 1);
    top.set(BlowupModel::kZPrimeSlot, model.truncated.rank - 1);
    top.set(BlowupModel::kGammaSlot, n);
    const Rational deg = r.degree(r.monomial(top));
    report.checks.push_back({"deg gamma^n11 * [pt of Z'] = 1", to_string(deg), "1", deg == 1});

    report.notes.push_back("gamma = pullback of " + model.bundle_label +
                           " and F1 = pullback of F are built in as definitions, not checked");
    report.notes.push_back("delta = (xi2 - mu11*F)^n11 is read as (" + model.bundle_label + " - mu11*F)^n11");
    if (model.c2_flipped) report.notes.push_back("c2 of G' built with the opposite sign (negative control)");
    return report;
}

CycleClass pull_back(const BlowupModel& model, const ProductSpace& space, const CycleClass& a) {
    const std::size_t blown = x_slot(space, model.bundle_label);
    const std::size_t other = x_slot(space, model.other_label);
    FormalSum raw;
    for (const auto& [m, c] : a.terms()) {
        Monomial t;
        t.set(BlowupModel::kF1Slot, m[ProductSpace::kFiberSlot]);
        t.set(BlowupModel::kGammaSlot, m[blown]);
        t.set(BlowupModel::kOtherSlot, m[other]);
        raw.emplace_back(t, c);
    }
    return model.tower.normal_form(raw);
}

}  // namespace fibcones
