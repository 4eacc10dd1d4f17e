#include "fibcones/numring.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

namespace fibcones {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::single(std::size_t slot, int power) {
    Monomial m;
    m.set(slot, power);
    return m;
}

Monomial Monomial::from_exponents(std::span<const int> exponents) {
    if (exponents.size() > kMaxGenerators)
        throw std::invalid_argument("Monomial: too many generators");
    Monomial m;
    for (std::size_t i = 0; i < exponents.size(); ++i) m.set(i, exponents[i]);
    return m;
}

void Monomial::set(std::size_t slot, int exponent) {
    if (exponent < 0 || exponent > std::numeric_limits<std::int16_t>::max())
        throw std::invalid_argument("Monomial: exponent out of range");
    exps_.at(slot) = static_cast<std::int16_t>(exponent);
}

int Monomial::total_degree() const {
    int d = 0;
    for (auto e : exps_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial m;
    for (std::size_t i = 0; i < kMaxGenerators; ++i) m.set(i, exps_[i] + other.exps_[i]);
    return m;
}

bool BasisOrder::operator()(const Monomial& a, const Monomial& b) const {
    if (a[0] != b[0]) return a[0] > b[0];
    for (std::size_t s = kMaxGenerators - 1; s >= 1; --s)
        if (a[s] != b[s]) return a[s] > b[s];
    return false;
}

bool ReductionOrder::operator()(const Monomial& a, const Monomial& b) const {
    for (std::size_t s = kMaxGenerators; s-- > 0;)
        if (a[s] != b[s]) return a[s] < b[s];
    return false;
}

// ---------------------------------------------------------------------------
// CycleClass

CycleClass::CycleClass(const Monomial& m, const Rational& c) {
    if (!fibcones::is_zero(c)) terms_.emplace(m, c);
}

std::optional<int> CycleClass::grade() const {
    if (terms_.empty()) return std::nullopt;
    const int g = terms_.begin()->first.total_degree();
    for (const auto& [m, c] : terms_)
        if (m.total_degree() != g) return std::nullopt;
    return g;
}

bool CycleClass::is_pure(int k) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [k](const auto& t) { return t.first.total_degree() == k; });
}

Rational CycleClass::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void CycleClass::add_term(const Monomial& m, const Rational& c) {
    if (fibcones::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (fibcones::is_zero(it->second)) terms_.erase(it);
    }
}

CycleClass& CycleClass::operator+=(const CycleClass& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

CycleClass& CycleClass::operator-=(const CycleClass& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

CycleClass& CycleClass::operator*=(const Rational& s) {
    if (fibcones::is_zero(s)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

// ---------------------------------------------------------------------------
// RingTower

RingTower RingTower::curve(std::string point_name) {
    RingTower t;
    t.point_name_ = std::move(point_name);
    return t;
}

RingTower RingTower::extend(std::vector<CycleClass> chern, std::string name) const {
    if (num_generators() >= kMaxGenerators)
        throw std::invalid_argument("RingTower: generator capacity exhausted");
    if (chern.empty())
        throw Error(ErrorKind::GradeMismatch, "a bundle needs rank >= 1 (empty Chern list)");
    if (slot_of(name))
        throw Error(ErrorKind::DuplicateName, "generator name '" + name + "' already used");
    const std::size_t new_slot = num_generators();
    for (std::size_t i = 0; i < chern.size(); ++i) {
        const int want = static_cast<int>(i) + 1;
        const CycleClass& c = chern[i];
        if (!c.is_pure(want))
            throw Error(ErrorKind::GradeMismatch,
                        "c_" + std::to_string(want) + " is not of pure grade " + std::to_string(want));
        for (const auto& [m, coef] : c.terms()) {
            for (std::size_t s = new_slot; s < kMaxGenerators; ++s)
                if (m[s] != 0)
                    throw Error(ErrorKind::GradeMismatch,
                                "c_" + std::to_string(want) + " involves a generator outside the base");
            if (!is_canonical(m))
                throw Error(ErrorKind::GradeMismatch,
                            "c_" + std::to_string(want) + " is not in normal form");
        }
    }
    RingTower t = *this;
    TowerLevel level;
    level.name = std::move(name);
    level.rank = static_cast<int>(chern.size());
    level.chern = std::move(chern);
    t.dimension_ += level.rank - 1;
    t.levels_.push_back(std::move(level));
    return t;
}

void RingTower::check_slot(std::size_t slot) const {
    if (slot >= num_generators())
        throw std::out_of_range("RingTower: slot " + std::to_string(slot) + " out of range");
}

const std::string& RingTower::generator_name(std::size_t slot) const {
    check_slot(slot);
    return slot == 0 ? point_name_ : levels_[slot - 1].name;
}

std::optional<std::size_t> RingTower::slot_of(std::string_view name) const {
    if (name == point_name_) return 0;
    for (std::size_t i = 0; i < levels_.size(); ++i)
        if (levels_[i].name == name) return i + 1;
    return std::nullopt;
}

int RingTower::exponent_bound(std::size_t slot) const {
    check_slot(slot);
    return slot == 0 ? 1 : levels_[slot - 1].rank - 1;
}

bool RingTower::is_canonical(const Monomial& m) const {
    for (std::size_t s = 0; s < kMaxGenerators; ++s) {
        const int bound = s < num_generators() ? exponent_bound(s) : 0;
        if (m[s] > bound) return false;
    }
    return true;
}

Monomial RingTower::top_monomial() const {
    Monomial m;
    for (std::size_t s = 0; s < num_generators(); ++s) m.set(s, exponent_bound(s));
    return m;
}

std::size_t RingTower::ring_dimension() const {
    std::size_t n = 2;
    for (const auto& l : levels_) n *= static_cast<std::size_t>(l.rank);
    return n;
}

CycleClass RingTower::generator(std::size_t slot) const {
    check_slot(slot);
    return monomial(Monomial::single(slot));
}

CycleClass RingTower::monomial(const Monomial& m) const {
    return normal_form({{m, Rational(1)}});
}

namespace {

using Worklist = std::map<Monomial, Rational, ReductionOrder>;

void accumulate(Worklist& w, const Monomial& m, const Rational& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = w.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) w.erase(it);
    }
}

}  // namespace

CycleClass RingTower::normal_form(const FormalSum& raw) const {
    for (const auto& [m, c] : raw)
        for (std::size_t s = num_generators(); s < kMaxGenerators; ++s)
            if (m[s] != 0) throw std::invalid_argument("normal_form: monomial uses an unknown slot");

    Worklist work;
    for (const auto& [m, c] : raw)
        if (m.total_degree() <= dimension_) accumulate(work, m, c);

    CycleClass out;
    // Pop the largest monomial; rewriting only ever yields smaller ones, so
    // each monomial is finalized exactly when it reaches the front.
    while (!work.empty()) {
        auto node = work.extract(std::prev(work.end()));
        const Monomial& m = node.key();
        const Rational& coef = node.mapped();

        std::size_t slot = num_generators();
        for (std::size_t s = num_generators(); s-- > 1;) {
            if (m[s] > levels_[s - 1].rank - 1) {
                slot = s;
                break;
            }
        }
        if (slot == num_generators()) {
            if (m[0] <= 1) out.add_term(m, coef);
            // pt^2 = 0 otherwise
            continue;
        }

        const TowerLevel& level = levels_[slot - 1];
        Monomial base = m;
        base.set(slot, m[slot] - level.rank);
        for (int i = 1; i <= level.rank; ++i) {
            const CycleClass& c = level.chern[static_cast<std::size_t>(i - 1)];
            if (c.is_zero()) continue;
            const Rational sign = (i % 2 == 1) ? Rational(1) : Rational(-1);
            Monomial shifted = base;
            shifted.set(slot, base[slot] + level.rank - i);
            for (const auto& [cm, cc] : c.terms()) {
                const Monomial next = shifted * cm;
                if (next.total_degree() <= dimension_) accumulate(work, next, sign * cc * coef);
            }
        }
    }
    return out;
}

CycleClass RingTower::multiply(const CycleClass& a, const CycleClass& b) const {
    FormalSum raw;
    raw.reserve(a.size() * b.size());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) raw.emplace_back(ma * mb, ca * cb);
    return normal_form(raw);
}

CycleClass RingTower::power(const CycleClass& a, int n) const {
    if (n < 0) throw std::invalid_argument("power: negative exponent");
    CycleClass result = unit();
    for (int i = 0; i < n; ++i) {
        result = multiply(result, a);
        if (result.is_zero()) break;
    }
    return result;
}

CycleClass RingTower::product(std::span<const CycleClass> factors) const {
    CycleClass result = unit();
    for (const auto& f : factors) result = multiply(result, f);
    return result;
}

Rational RingTower::degree(const CycleClass& a) const {
    if (!a.is_pure(dimension_))
        throw Error(ErrorKind::NotTopGrade,
                    "degree needs a class of grade " + std::to_string(dimension_));
    return a.coefficient(top_monomial());
}

std::vector<Monomial> RingTower::graded_basis(int k) const {
    if (k < 0 || k > dimension_)
        throw Error(ErrorKind::OutOfRange, "grade " + std::to_string(k) + " outside 0.." +
                                               std::to_string(dimension_));
    std::vector<Monomial> out;
    Monomial m;
    std::function<void(std::size_t, int)> rec = [&](std::size_t slot, int remaining) {
        if (slot == num_generators()) {
            if (remaining == 0) out.push_back(m);
            return;
        }
        const int hi = std::min(remaining, exponent_bound(slot));
        for (int e = 0; e <= hi; ++e) {
            m.set(slot, e);
            rec(slot + 1, remaining - e);
        }
        m.set(slot, 0);
    };
    rec(0, k);
    std::sort(out.begin(), out.end(), BasisOrder{});
    return out;
}

std::vector<Rational> RingTower::coordinates(const CycleClass& a, int k) const {
    if (!a.is_pure(k))
        throw Error(ErrorKind::GradeMismatch, "class is not of pure grade " + std::to_string(k));
    const auto basis = graded_basis(k);
    std::vector<Rational> v(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) v[i] = a.coefficient(basis[i]);
    return v;
}

CycleClass RingTower::from_coordinates(std::span<const Rational> coords, int k) const {
    const auto basis = graded_basis(k);
    if (coords.size() != basis.size())
        throw Error(ErrorKind::DimMismatch, "coordinate vector has wrong length");
    CycleClass c;
    for (std::size_t i = 0; i < basis.size(); ++i) c.add_term(basis[i], coords[i]);
    return c;
}

std::string RingTower::format(const Monomial& m) const {
    std::string s;
    auto emit = [&](std::size_t slot) {
        if (m[slot] == 0) return;
        if (!s.empty()) s += '*';
        s += generator_name(slot);
        if (m[slot] > 1) s += '^' + std::to_string(m[slot]);
    };
    // Same order as BasisOrder: curve first, then from the top level down.
    emit(0);
    for (std::size_t slot = num_generators() - 1; slot >= 1; --slot) emit(slot);
    return s.empty() ? "1" : s;
}

std::string RingTower::format(const CycleClass& a) const {
    if (a.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : a.terms()) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        const std::string mono = format(m);
        if (mono == "1") {
            s += to_string(mag);
        } else {
            if (mag != 1) s += to_string(mag) + "*";
            s += mono;
        }
    }
    return s;
}

RingTower curve_ring(std::string point_name) { return RingTower::curve(std::move(point_name)); }

RingTower extend_projective(const RingTower& base, std::vector<CycleClass> chern, std::string name) {
    return base.extend(std::move(chern), std::move(name));
}

}  // namespace fibcones
