#pragma once

// Reference implementations used only by tests. None of them calls the
// library's normal form, degree map, cone engine or linear algebra.

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "fibcones/numring.hpp"
#include "fibcones/prodspace.hpp"

namespace oracle {

using fibcones::Rational;
using Exps = std::vector<int>;
using Poly = std::map<Exps, Rational>;
using Vec = std::vector<Rational>;

inline void add_to(Poly& p, const Exps& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = p.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

// ---- closed-form degree on X --------------------------------------------------

struct XData {
    int r1, r2, d1, d2;
};

/// deg F^f z1^a z2^b for f + a + b = r1 + r2 - 1, from pushing forward one factor at a time:
/// p_*(z^(r-1)) = 1, p_*(z^r) = d pt, higher powers vanish because pt^2 = 0.
inline Rational x_degree(const XData& x, int f, int a, int b) {
    if (f + a + b != x.r1 + x.r2 - 1) return 0;
    if (f >= 2) return 0;
    if (f == 1) return (a == x.r1 - 1 && b == x.r2 - 1) ? 1 : 0;
    if (a == x.r1 - 1 && b == x.r2) return x.d2;
    if (a == x.r1 && b == x.r2 - 1) return x.d1;
    return 0;
}

inline XData x_data(const fibcones::ProductSpace& s) { return {s.r1(), s.r2(), s.d1(), s.d2()}; }

/// Raw exponent triples (f, z1, z2) of a class of X.
inline Poly x_poly(const fibcones::CycleClass& a) {
    using fibcones::ProductSpace;
    Poly p;
    for (const auto& [m, c] : a.terms())
        add_to(p, {m[ProductSpace::kFiberSlot], m[ProductSpace::kZeta1Slot], m[ProductSpace::kZeta2Slot]}, c);
    return p;
}

inline Poly poly_product(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exps e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            add_to(out, e, ca * cb);
        }
    return out;
}

inline Rational x_pair(const XData& x, const Poly& a, const Poly& b) {
    Rational s = 0;
    for (const auto& [e, c] : poly_product(a, b)) s += c * x_degree(x, e[0], e[1], e[2]);
    return s;
}

/// Every raw monomial F^f z1^a z2^b of grade k with f <= 1 (a spanning set of N^k).
inline std::vector<Poly> x_test_monomials(const XData& x, int k) {
    std::vector<Poly> out;
    for (int f = 0; f <= 1; ++f)
        for (int a = 0; a <= k - f; ++a) {
            const int b = k - f - a;
            if (a > x.r1 || b > x.r2) continue;
            out.push_back(Poly{{{f, a, b}, Rational(1)}});
        }
    return out;
}

/// Two grade-k classes agree numerically iff they pair equally with every complementary monomial.
inline bool x_numerically_equal(const XData& x, const Poly& a, const Poly& b, int k) {
    for (const auto& t : x_test_monomials(x, x.r1 + x.r2 - 1 - k))
        if (x_pair(x, a, t) != x_pair(x, b, t)) return false;
    return true;
}

// ---- randomized-order rewriting ----------------------------------------------

/// Applies pt^2 = 0 and the Grothendieck relations one monomial at a time, choosing the
/// monomial and the violated level at random, until every monomial is canonical.
inline Poly reduce_random(const fibcones::RingTower& t, Poly p, std::mt19937& rng) {
    const auto& levels = t.levels();
    const std::size_t n = t.num_generators();
    for (;;) {
        std::vector<Exps> bad;
        for (const auto& [e, c] : p) {
            bool ok = e[0] <= 1;
            for (std::size_t s = 1; s < n && ok; ++s) ok = e[s] <= levels[s - 1].rank - 1;
            if (!ok) bad.push_back(e);
        }
        if (bad.empty()) return p;
        const Exps m = bad[std::uniform_int_distribution<std::size_t>(0, bad.size() - 1)(rng)];
        std::vector<std::size_t> slots;
        if (m[0] >= 2) slots.push_back(0);
        for (std::size_t s = 1; s < n; ++s)
            if (m[s] >= levels[s - 1].rank) slots.push_back(s);
        const std::size_t s = slots[std::uniform_int_distribution<std::size_t>(0, slots.size() - 1)(rng)];
        const Rational c = p.at(m);
        p.erase(m);
        if (s == 0) continue;
        const auto& lvl = levels[s - 1];
        Exps base = m;
        base[s] -= lvl.rank;
        for (int i = 1; i <= lvl.rank; ++i) {
            const Rational sign = (i % 2 == 1) ? 1 : -1;
            for (const auto& [cm, cc] : lvl.chern[static_cast<std::size_t>(i - 1)].terms()) {
                Exps e = base;
                e[s] += lvl.rank - i;
                for (std::size_t j = 0; j < s; ++j) e[j] += cm[j];
                add_to(p, e, sign * c * cc);
            }
        }
    }
}

inline Poly tower_poly(const fibcones::CycleClass& a, std::size_t n) {
    Poly p;
    for (const auto& [m, c] : a.terms()) {
        Exps e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = m[i];
        add_to(p, e, c);
    }
    return p;
}

// ---- exact linear algebra and cone membership ---------------------------------

/// Solves sum x_i cols_i = b exactly when the columns are independent; nullopt otherwise
/// (dependent columns or no solution).
inline std::optional<Vec> solve_independent(const std::vector<Vec>& cols, const Vec& b) {
    const std::size_t m = b.size();
    const std::size_t n = cols.size();
    std::vector<Vec> a(m, Vec(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = cols[j][i];
        a[i][n] = b[i];
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_row(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t p = row;
        while (p < m && a[p][j] == 0) ++p;
        if (p == m) return std::nullopt;
        std::swap(a[p], a[row]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a[i][j] == 0) continue;
            const Rational f = a[i][j] / a[row][j];
            for (std::size_t c = j; c <= n; ++c) a[i][c] -= f * a[row][c];
        }
        pivot_row[j] = row++;
    }
    for (std::size_t i = row; i < m; ++i)
        if (a[i][n] != 0) return std::nullopt;
    Vec x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = a[pivot_row[j]][n] / a[pivot_row[j]][j];
    return x;
}

/// Caratheodory: v is in cone(gens) iff it is a non-negative combination of some linearly
/// independent subset. Exhaustive over subsets; fine for at most ~10 generators.
inline bool brute_contains(const std::vector<Vec>& gens, const Vec& v) {
    if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) return true;
    const std::size_t n = gens.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Vec> cols;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) cols.push_back(gens[i]);
        if (cols.size() > v.size()) continue;
        auto x = solve_independent(cols, v);
        if (x && std::all_of(x->begin(), x->end(), [](const Rational& q) { return q >= 0; })) return true;
    }
    return false;
}

inline bool brute_extremal(const std::vector<Vec>& gens, std::size_t idx) {
    std::vector<Vec> rest;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (i != idx) rest.push_back(gens[i]);
    return !brute_contains(rest, gens[idx]);
}

}  // namespace oracle
