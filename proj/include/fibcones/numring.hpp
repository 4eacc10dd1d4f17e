#pragma once

// Numerical ring of an iterated projective bundle over a curve.
//
// Slot 0 is the point class of the curve (pt^2 = 0). Each later slot is the
// tautological class xi of a projective bundle P(V) over everything below it,
// subject to the Grothendieck relation
//
//     xi^m = sum_{i=1..m} (-1)^(i+1) c_i(V) xi^(m-i),      m = rank V.
//
// Canonical monomials have pt-exponent <= 1 and xi-exponent <= m - 1; they form
// a basis, and the degree map reads off the coefficient of the unique top one.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fibcones/errors.hpp"
#include "fibcones/rational.hpp"

namespace fibcones {

inline constexpr std::size_t kMaxGenerators = 8;

class Monomial {
public:
    Monomial() = default;

    /// gen^power in the given slot.
    static Monomial single(std::size_t slot, int power = 1);
    static Monomial from_exponents(std::span<const int> exponents);

    int operator[](std::size_t slot) const { return exps_.at(slot); }
    void set(std::size_t slot, int exponent);
    int total_degree() const;

    Monomial operator*(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::array<std::int16_t, kMaxGenerators> exps_{};
};

/// Order of graded_basis: descending lex on (slot 0, slot N-1, ..., slot 1).
/// For P(E1) x_C P(E2) this lists F first, then the top generator.
struct BasisOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Order used by the reduction worklist: top slot first, curve slot last.
/// Every rewrite step produces strictly smaller monomials in this order.
struct ReductionOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

using FormalSum = std::vector<std::pair<Monomial, Rational>>;

/// Sparse rational combination of canonical monomials. Zero coefficients are never stored.
class CycleClass {
public:
    using Terms = std::map<Monomial, Rational, BasisOrder>;

    CycleClass() = default;
    explicit CycleClass(const Monomial& m, const Rational& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Common total degree of all terms; nullopt for the zero class or a mixed class.
    std::optional<int> grade() const;
    /// Zero counts as pure of every grade.
    bool is_pure(int k) const;

    Rational coefficient(const Monomial& m) const;

    /// Adds c*m without any normalization; callers guarantee m is canonical.
    void add_term(const Monomial& m, const Rational& c);

    CycleClass& operator+=(const CycleClass& other);
    CycleClass& operator-=(const CycleClass& other);
    CycleClass& operator*=(const Rational& s);

    friend CycleClass operator+(CycleClass a, const CycleClass& b) { return a += b; }
    friend CycleClass operator-(CycleClass a, const CycleClass& b) { return a -= b; }
    friend CycleClass operator*(const Rational& s, CycleClass a) { return a *= s; }
    friend CycleClass operator-(CycleClass a) { return a *= Rational(-1); }

    friend bool operator==(const CycleClass&, const CycleClass&) = default;

private:
    Terms terms_;
};

struct TowerLevel {
    std::string name;
    int rank = 0;
    /// c_1..c_rank, each pure of grade i in the tower below this level.
    std::vector<CycleClass> chern;
};

class RingTower {
public:
    /// The curve: basis {1, pt}, pt^2 = 0.
    static RingTower curve(std::string point_name = "pt");

    /// Adds the tautological class of a rank-m bundle with the given Chern classes.
    /// Rank 1 is allowed: P(L) is the base itself and xi = c1(L).
    RingTower extend(std::vector<CycleClass> chern, std::string name) const;

    int dimension() const { return dimension_; }
    std::size_t num_generators() const { return levels_.size() + 1; }
    const std::vector<TowerLevel>& levels() const { return levels_; }

    const std::string& generator_name(std::size_t slot) const;
    std::optional<std::size_t> slot_of(std::string_view name) const;
    /// Largest exponent a canonical monomial may carry in this slot.
    int exponent_bound(std::size_t slot) const;
    bool is_canonical(const Monomial& m) const;
    /// pt * prod xi_i^(rank_i - 1), the unique canonical monomial of top degree.
    Monomial top_monomial() const;
    /// Vector-space dimension, 2 * prod(rank).
    std::size_t ring_dimension() const;

    /// Normal form of the generator in this slot (for rank-1 levels this is c1).
    CycleClass generator(std::size_t slot) const;
    CycleClass unit() const { return CycleClass(Monomial{}); }
    /// Normal form of a single arbitrary monomial.
    CycleClass monomial(const Monomial& m) const;

    CycleClass normal_form(const FormalSum& raw) const;
    CycleClass multiply(const CycleClass& a, const CycleClass& b) const;
    CycleClass power(const CycleClass& a, int n) const;
    CycleClass product(std::span<const CycleClass> factors) const;

    /// Coefficient of the top monomial; throws NotTopGrade for anything of lower grade.
    Rational degree(const CycleClass& a) const;

    /// Canonical monomials of total degree k in BasisOrder.
    std::vector<Monomial> graded_basis(int k) const;
    std::vector<Rational> coordinates(const CycleClass& a, int k) const;
    CycleClass from_coordinates(std::span<const Rational> coords, int k) const;

    std::string format(const Monomial& m) const;
    std::string format(const CycleClass& a) const;

private:
    RingTower() = default;

    void check_slot(std::size_t slot) const;

    std::string point_name_;
    std::vector<TowerLevel> levels_;
    int dimension_ = 1;
};

RingTower curve_ring(std::string point_name = "pt");
RingTower extend_projective(const RingTower& base, std::vector<CycleClass> chern, std::string name);

}  // namespace fibcones
