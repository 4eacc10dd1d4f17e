#pragma once

// Numerical model of the blow-up of P(E) along P(Q11), presented as the
// projective bundle P_{Z'}(G') over Z' = P(E11) x_C P(E_other), where
// c(G') = (1 + zeta_Z')(1 + d11 F1) and rank G' = n11 + 1.

#include <memory>

#include "fibcones/prodspace.hpp"

namespace fibcones {

struct BlowupModel {
    /// The caller's factor whose first HN quotient is blown up.
    Factor factor = Factor::First;
    BundleData bundle;
    BundleData truncated;
    BundleData other;
    int n11 = 0;
    int d11 = 0;
    bool c2_flipped = false;

    std::string bundle_label;
    std::string other_label;
    /// Z' in the caller's labeling.
    std::shared_ptr<const ProductSpace> zprime;
    /// Curve (F1) -> other factor -> truncated factor (zeta_Z') -> gamma.
    RingTower tower = RingTower::curve("F1");

    static constexpr std::size_t kF1Slot = 0;
    static constexpr std::size_t kOtherSlot = 1;
    static constexpr std::size_t kZPrimeSlot = 2;
    static constexpr std::size_t kGammaSlot = 3;

    Rational mu11() const { return make_rational(d11, n11); }
    int dimension() const { return tower.dimension(); }

    CycleClass f1() const { return tower.generator(kF1Slot); }
    CycleClass other_class() const { return tower.generator(kOtherSlot); }
    CycleClass zeta_zprime() const { return tower.generator(kZPrimeSlot); }
    CycleClass gamma() const { return tower.generator(kGammaSlot); }
    /// Exceptional divisor, gamma - zeta_Z'.
    CycleClass exceptional() const { return gamma() - zeta_zprime(); }

    /// c_1(G') = zZ' + d11 F1 and c_2(G') = d11 F1 zZ', whatever c2_flipped says.
    CycleClass c1() const;
    CycleClass c2() const;
};

/// Throws NotUnstable when the chosen factor is semistable. `flip_c2_sign` builds the
/// tower with -c2 instead of c2; only useful as a negative control.
BlowupModel build_blowup_model(const ProductSpace& space, Factor factor = Factor::First,
                               bool flip_c2_sign = false);

/// Grothendieck relation for G', the exceptional vanishing E~ (gamma - mu11 F1)^n11 = 0,
/// and a few degree sanity checks.
IdentityReport verify_exceptional_vanishing(const BlowupModel& model);

/// Pull a class of X back to the model: F -> F1, blown-up factor -> gamma, other factor -> itself.
CycleClass pull_back(const BlowupModel& model, const ProductSpace& space, const CycleClass& a);

}  // namespace fibcones
