#pragma once

// Pseudo-effective and nef cones of X = P(E1) x_C P(E2).
//
// Everything is indexed by codimension. The low-dimension generators for
// unstable pairs are naturally stated by cycle dimension; the entry point for
// those takes a dimension and stores the result at codimension dim X - k_dim.

#include <memory>
#include <string_view>
#include <vector>

#include "fibcones/conegeom.hpp"
#include "fibcones/prodspace.hpp"

namespace fibcones {

enum class Provenance { Trivial, Semistable, UnstableLowDim, Transported };

std::string_view provenance_name(Provenance p);

struct EffConeResult {
    int codim = 0;
    std::vector<CycleClass> generators;
    /// Cone in nk_basis(codim) coordinates.
    Cone cone;
    Provenance provenance = Provenance::Trivial;
    std::shared_ptr<const ProductSpace> space;
    /// For Transported: the cone on the HN-truncated space it came from.
    std::vector<EffConeResult> sub_results;

    int cycle_dim() const { return space->dimension() - codim; }
};

/// (z - mu F)^n for the engine factor f.
CycleClass twisted_power(const ProductSpace& space, Factor f, const Rational& mu, int n);

/// (z1 - mu1 F)^i (z2 - mu2 F)^(k-i) and F z1^j z2^(k-j-1) over the index sets of nk_basis(k), in that order.
std::vector<CycleClass> slope_twisted_generators(const ProductSpace& space, int k, const Rational& mu1,
                                                 const Rational& mu2);

/// Both bundles semistable; 0 <= k <= dim. Generators (z1 - mu1 F)^i (z2 - mu2 F)^(k-i) and F z1^j z2^(k-j-1)
/// over the index sets of nk_basis(k), in the same order.
EffConeResult semistable_eff_generators(const ProductSpace& space, int k);

/// Classes D aligned with semistable_eff_generators(k) so that deg(G_a * D_b) = delta_ab.
std::vector<CycleClass> extremality_certificates(const ProductSpace& space, int k);

/// Both bundles unstable; 1 <= k_dim <= n11 + n21 - 1. Generators
/// [P(Q11) x P(Q21)] (z1 - mu11 F)^i (z2 - mu21 F)^(nn-k-i) and F z1^(r1-n11+j) z2^(r2+n11-k-j-2),
/// with the factors exchanged when n21 < n11.
EffConeResult unstable_low_dim_generators(const ProductSpace& space, int k_dim);

/// The complementary products phi_i * (z1 - mu11 F)^(n11-i) * (z2 - mu21 F)^(k+i+shift-n11)
/// (factors exchanged when n21 < n11), one per phi_i of unstable_low_dim_generators.
/// shift = 1 lands above the top grade; shift = 0 gives top-grade classes of degree 0.
std::vector<CycleClass> boundary_vanishing_products(const ProductSpace& space, int k_dim, int shift = 1);

/// The pair of HN truncations (E11, E21), in the caller's labeling.
ProductSpace truncated_space(const ProductSpace& space);

/// Monomial transport N^k(source) -> N^k(target) matching factors by label. Entry (a, b) = 1 when
/// source basis element b maps to target basis element a. Throws OutOfRange outside the range where
/// the truncation argument applies, BasisMismatch when the grade-k monomials do not biject.
Matrix theta_map(const ProductSpace& source, const ProductSpace& target, int k);

/// Which construction eff_cone uses for codimension k.
Provenance dispatch_branch(const ProductSpace& space, int k);

/// Throws MixedStabilityUnsupported when exactly one bundle is semistable.
EffConeResult eff_cone(const ProductSpace& space, int k);

/// Dual of eff_cone(dim - k) under the pairing of nk_basis(k) with nk_basis(dim - k).
Cone nef_cone(const ProductSpace& space, int k);

}  // namespace fibcones
