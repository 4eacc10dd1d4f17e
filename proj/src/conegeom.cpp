#include "fibcones/conegeom.hpp"

#include <algorithm>
#include <numeric>

namespace fibcones {

namespace {

using ZeroSet = std::vector<bool>;

bool subset_of(const ZeroSet& a, const ZeroSet& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) return false;
    return true;
}

ZeroSet intersect(const ZeroSet& a, const ZeroSet& b) {
    ZeroSet z(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) z[i] = a[i] && b[i];
    return z;
}

std::size_t count(const ZeroSet& z) { return static_cast<std::size_t>(std::count(z.begin(), z.end(), true)); }

void axpy(Vector& y, const Rational& a, const Vector& x) {
    if (is_zero(a)) return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!is_zero(x[i])) y[i] += a * x[i];
}

bool is_zero_vector(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_zero(x); });
}

}  // namespace

Vector primitive(const Vector& v) {
    Integer lcm_den = 1;
    for (const auto& x : v)
        if (!is_zero(x)) lcm_den = boost::multiprecision::lcm(lcm_den, Integer(denominator(x)));
    Integer g = 0;
    std::vector<Integer> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (is_zero(v[i])) continue;
        ints[i] = Integer(numerator(v[i])) * (lcm_den / Integer(denominator(v[i])));
        g = boost::multiprecision::gcd(g, Integer(abs(ints[i])));
    }
    Vector out(v.size());
    if (g == 0) return out;
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(ints[i] / g);
    return out;
}

RayDescription double_description(const std::vector<Vector>& inequalities, std::size_t dim) {
    std::vector<Vector> lineality;
    for (std::size_t i = 0; i < dim; ++i) {
        Vector e(dim);
        e[i] = 1;
        lineality.push_back(std::move(e));
    }
    std::vector<Vector> rays;
    std::vector<ZeroSet> zeros;
    const std::size_t n_ineq = inequalities.size();

    for (std::size_t t = 0; t < n_ineq; ++t) {
        const Vector& a = inequalities[t];
        if (a.size() != dim) throw Error(ErrorKind::DimMismatch, "inequality has wrong length");

        auto pivot = std::find_if(lineality.begin(), lineality.end(),
                                  [&](const Vector& l) { return !is_zero(dot(a, l)); });
        if (pivot != lineality.end()) {
            Vector l0 = *pivot;
            lineality.erase(pivot);
            Rational s0 = dot(a, l0);
            if (s0 < 0) {
                for (auto& x : l0) x = -x;
                s0 = -s0;
            }
            for (auto& l : lineality) {
                axpy(l, -dot(a, l) / s0, l0);
                l = primitive(l);
            }
            for (std::size_t r = 0; r < rays.size(); ++r) {
                axpy(rays[r], -dot(a, rays[r]) / s0, l0);
                rays[r] = primitive(rays[r]);
                zeros[r][t] = true;
            }
            ZeroSet z(n_ineq, false);
            for (std::size_t u = 0; u < t; ++u) z[u] = true;
            rays.push_back(primitive(l0));
            zeros.push_back(std::move(z));
            continue;
        }

        std::vector<Rational> s(rays.size());
        for (std::size_t r = 0; r < rays.size(); ++r) s[r] = dot(a, rays[r]);

        std::vector<Vector> next;
        std::vector<ZeroSet> next_zeros;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (s[r] < 0) continue;
            next.push_back(rays[r]);
            next_zeros.push_back(zeros[r]);
            if (is_zero(s[r])) next_zeros.back()[t] = true;
        }

        const std::size_t pointed_dim = dim - lineality.size();
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (!(s[p] > 0)) continue;
            for (std::size_t n = 0; n < rays.size(); ++n) {
                if (!(s[n] < 0)) continue;
                ZeroSet z = intersect(zeros[p], zeros[n]);
                if (pointed_dim >= 2 && count(z) + 2 < pointed_dim) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == n) continue;
                    if (subset_of(z, zeros[r])) adjacent = false;
                }
                if (!adjacent) continue;
                Vector v = rays[n];
                for (auto& x : v) x *= s[p];
                axpy(v, -s[n], rays[p]);
                z[t] = true;
                next.push_back(primitive(v));
                next_zeros.push_back(std::move(z));
            }
        }
        rays = std::move(next);
        zeros = std::move(next_zeros);
    }
    return {std::move(rays), std::move(lineality)};
}

bool is_nonnegative_combination(const std::vector<Vector>& gens, const Vector& target) {
    const std::size_t n = target.size();
    const std::size_t m = gens.size();
    for (const auto& g : gens)
        if (g.size() != n) throw Error(ErrorKind::DimMismatch, "generator has wrong length");
    if (m == 0) return is_zero_vector(target);

    // Phase-one tableau: columns 0..m-1 lambda, m..m+n-1 artificials, last column rhs.
    const std::size_t cols = m + n + 1;
    std::vector<Vector> tab(n, Vector(cols));
    std::vector<std::size_t> basis(n);
    for (std::size_t i = 0; i < n; ++i) {
        const bool flip = target[i] < 0;
        for (std::size_t j = 0; j < m; ++j) tab[i][j] = flip ? Rational(-gens[j][i]) : gens[j][i];
        tab[i][m + i] = 1;
        tab[i][cols - 1] = flip ? Rational(-target[i]) : target[i];
        basis[i] = m + i;
    }
    // Reduced costs of min sum(artificials).
    Vector cost(cols);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i) cost[j] -= tab[i][j];

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j + 1 < cols; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == cols) break;

        std::size_t leave = n;
        Rational best;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(tab[i][enter] > 0)) continue;
            const Rational ratio = tab[i][cols - 1] / tab[i][enter];
            if (leave == n || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == n) break;  // unbounded; impossible for a phase-one objective

        const Rational p = tab[leave][enter];
        for (auto& x : tab[leave]) x /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == leave || is_zero(tab[i][enter])) continue;
            const Rational f = tab[i][enter];
            for (std::size_t j = 0; j < cols; ++j) tab[i][j] -= f * tab[leave][j];
        }
        const Rational f = cost[enter];
        for (std::size_t j = 0; j < cols; ++j) cost[j] -= f * tab[leave][j];
        basis[leave] = enter;
    }

    for (std::size_t i = 0; i < n; ++i)
        if (basis[i] >= m && !is_zero(tab[i][cols - 1])) return false;
    return true;
}

Cone::Cone(std::size_t dim, std::vector<Vector> gens)
    : dim_(dim), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {}

Cone Cone::from_generators(std::size_t ambient_dim, const std::vector<Vector>& generators) {
    if (ambient_dim == 0) throw Error(ErrorKind::DimMismatch, "ambient dimension must be positive");
    std::vector<Vector> gens;
    for (const auto& g : generators) {
        if (g.size() != ambient_dim)
            throw Error(ErrorKind::DimMismatch, "generator of length " + std::to_string(g.size()) +
                                                    " in dimension " + std::to_string(ambient_dim));
        if (is_zero_vector(g)) throw Error(ErrorKind::ZeroGenerator, "zero vector is not a generator");
        Vector p = primitive(g);
        if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(std::move(p));
    }
    return Cone(ambient_dim, std::move(gens));
}

Cone cone_from_generators(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
    return Cone::from_generators(ambient_dim, vectors);
}

const Cone::Cache& Cone::cache() const {
    std::call_once(cache_->once, [this] {
        RayDescription rd = double_description(gens_, dim_);
        std::vector<Vector> all = rd.rays;
        all.insert(all.end(), rd.lineality.begin(), rd.lineality.end());
        cache_->lineality_dim = dim_ - rank(all, dim_);
        cache_->facets.inequalities = std::move(rd.rays);
        cache_->facets.equalities = std::move(rd.lineality);
    });
    return *cache_;
}

const Facets& Cone::facets() const { return cache().facets; }

std::size_t Cone::lineality_dim() const { return cache().lineality_dim; }

bool Cone::contains(const Vector& v) const {
    if (v.size() != dim_) throw Error(ErrorKind::DimMismatch, "vector has wrong length");
    const Facets& f = facets();
    for (const auto& e : f.equalities)
        if (!is_zero(dot(e, v))) return false;
    for (const auto& a : f.inequalities)
        if (dot(a, v) < 0) return false;
    return true;
}

bool Cone::is_extremal(const Vector& g) const {
    if (g.size() != dim_) throw Error(ErrorKind::DimMismatch, "vector has wrong length");
    const Vector p = primitive(g);
    auto it = is_zero_vector(p) ? gens_.end() : std::find(gens_.begin(), gens_.end(), p);
    if (it == gens_.end()) throw Error(ErrorKind::NotAGenerator, "vector is not a generator of the cone");
    std::vector<Vector> others;
    for (auto jt = gens_.begin(); jt != gens_.end(); ++jt)
        if (jt != it) others.push_back(*jt);
    return !is_nonnegative_combination(others, p);
}

Cone dual_cone(const Cone& c, const Matrix& pairing) {
    if (pairing.cols() != c.ambient_dim())
        throw Error(ErrorKind::DimMismatch, "pairing has " + std::to_string(pairing.cols()) +
                                                " columns, cone lives in dimension " +
                                                std::to_string(c.ambient_dim()));
    std::vector<Vector> ineqs;
    for (const auto& g : c.generators()) ineqs.push_back(pairing.apply(g));
    RayDescription rd = double_description(ineqs, pairing.rows());
    std::vector<Vector> gens = rd.rays;
    for (const auto& l : rd.lineality) {
        gens.push_back(l);
        Vector neg = l;
        for (auto& x : neg) x = -x;
        gens.push_back(std::move(neg));
    }
    return Cone::from_generators(pairing.rows(), gens);
}

bool cones_equal(const Cone& a, const Cone& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorKind::DimMismatch, "cones live in different spaces");
    for (const auto& g : a.generators())
        if (!b.contains(g)) return false;
    for (const auto& g : b.generators())
        if (!a.contains(g)) return false;
    return true;
}

}  // namespace fibcones
