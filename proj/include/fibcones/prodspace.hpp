#pragma once

// X = P(E1) x_C P(E2) as a two-level tower: curve (F) -> P(E2) (z2) -> P(pi2^* E1) (z1).
//
// The engine always works with r1 <= r2. When the caller passes the larger
// bundle first, the factors are exchanged and swapped() is set; generator
// names keep the caller's labels so everything printed reads in the original
// labeling.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fibcones/linalg.hpp"
#include "fibcones/numring.hpp"

namespace fibcones {

struct HNQuotient {
    int rank = 0;
    int degree = 0;

    Rational slope() const { return make_rational(degree, rank); }
    friend bool operator==(const HNQuotient&, const HNQuotient&) = default;
};

/// Rank, degree and Harder-Narasimhan quotients Q_1, Q_2, ... (empty: semistable).
struct BundleData {
    int rank = 0;
    int degree = 0;
    std::vector<HNQuotient> hn;

    bool semistable() const { return hn.empty(); }
    Rational slope() const { return make_rational(degree, rank); }
    /// E_1 = ker(E -> Q_1): rank and degree drop by Q_1's, HN list loses its head
    /// and becomes empty (semistable) once a single quotient remains.
    BundleData truncated() const;

    friend bool operator==(const BundleData&, const BundleData&) = default;
};

/// Throws InvalidHN or RankTooSmall. `min_rank` is 2 for user input; HN truncations may reach 1.
void validate(const BundleData& e, int min_rank = 2);

enum class Factor { First, Second };

class ProductSpace {
public:
    static constexpr std::size_t kFiberSlot = 0;
    static constexpr std::size_t kZeta2Slot = 1;
    static constexpr std::size_t kZeta1Slot = 2;

    /// Validates both bundles (rank >= 2) and normalizes to r1 <= r2.
    static ProductSpace build(const BundleData& e1, const BundleData& e2);
    /// Same, for HN truncations: line-bundle factors allowed. `labels` names the two factors.
    static ProductSpace build_derived(const BundleData& e1, const BundleData& e2,
                                      std::array<std::string, 2> labels = {"z1", "z2"});

    /// Bundles in engine order (r1 <= r2).
    const BundleData& e1() const { return e1_; }
    const BundleData& e2() const { return e2_; }
    bool swapped() const { return swapped_; }

    int r1() const { return e1_.rank; }
    int r2() const { return e2_.rank; }
    int d1() const { return e1_.degree; }
    int d2() const { return e2_.degree; }
    int dimension() const { return tower_.dimension(); }
    bool semistable() const { return e1_.semistable() && e2_.semistable(); }
    bool unstable() const { return !e1_.semistable() && !e2_.semistable(); }

    const RingTower& ring() const { return tower_; }
    CycleClass zeta1() const { return tower_.generator(kZeta1Slot); }
    CycleClass zeta2() const { return tower_.generator(kZeta2Slot); }
    CycleClass fiber() const { return tower_.generator(kFiberSlot); }

    /// Normal form of F^f * z1^i * z2^j.
    CycleClass monomial(int f, int i, int j) const;
    static Monomial raw_monomial(int f, int i, int j);

    /// Degree of the product of two classes of complementary grade.
    Rational pair(const CycleClass& a, const CycleClass& b) const;
    Rational degree(const CycleClass& a) const { return tower_.degree(a); }
    CycleClass multiply(const CycleClass& a, const CycleClass& b) const { return tower_.multiply(a, b); }
    std::string format(const CycleClass& a) const { return tower_.format(a); }

    /// Caller's label for engine factor 1 / 2 ("z1" or "z2").
    const std::string& label(Factor f) const;
    /// The bundle the caller passed as E1 / E2.
    const BundleData& original(Factor f) const;

    /// nn = n11 + n21 - 1 for unstable pairs: cycles of dimension <= nn come from P(Q11) x_C P(Q21).
    std::optional<int> low_dim_bound() const;

private:
    ProductSpace(BundleData e1, BundleData e2, bool swapped, std::array<std::string, 2> labels);

    BundleData e1_;
    BundleData e2_;
    bool swapped_ = false;
    std::array<std::string, 2> labels_;
    RingTower tower_;
};

ProductSpace build_space(const BundleData& e1, const BundleData& e2);

/// One exactly-evaluated identity, rendered for reports.
struct IdentityCheck {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool passed = false;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    std::vector<std::string> notes;

    bool all_passed() const;
};

/// Vanishings, reductions and degree evaluations of the ring of X.
IdentityReport verify_relations(const ProductSpace& space);

/// Basis of N^k(X): the z-family z1^i z2^(k-i) followed by the F-family F z1^j z2^(k-j-1).
std::vector<Monomial> nk_basis_monomials(const ProductSpace& space, int k);
std::vector<CycleClass> nk_basis(const ProductSpace& space, int k);

/// Test classes of grade dim-k, aligned with nk_basis(k), whose pairing matrix with it is the identity.
std::vector<CycleClass> separating_classes(const ProductSpace& space, int k);

/// Coordinates of a pure grade-k class against nk_basis(k).
Vector basis_coordinates(const ProductSpace& space, const CycleClass& a, int k);
CycleClass from_basis_coordinates(const ProductSpace& space, const Vector& coords, int k);

/// Entry (i, j) = degree(rows[i] * cols[j]).
Matrix pairing_matrix(const ProductSpace& space, const std::vector<CycleClass>& rows,
                      const std::vector<CycleClass>& cols);

/// delta1 = F z1^(r1-2) z2^(r2-1), delta2 = F z1^(r1-1) z2^(r2-2),
/// delta3 = z1^(r1-1) z2^(r2-1) - d1 delta1 - d2 delta2. Dual to (z1, z2, F).
std::array<CycleClass, 3> dual_one_cycle_basis(const ProductSpace& space);

/// [P(Q11) x_C P(Q21)] = (z1^(r1-n11) + (d11-d1) F z1^(r1-n11-1)) (z2^(r2-n21) + (d21-d2) F z2^(r2-n21-1)).
CycleClass subproduct_class(const ProductSpace& space);

/// Image of a class under the exchange z1 <-> z2 from `from` into `to`; the ranks must line up.
CycleClass exchange_factors(const ProductSpace& from, const CycleClass& a, const ProductSpace& to);

}  // namespace fibcones
