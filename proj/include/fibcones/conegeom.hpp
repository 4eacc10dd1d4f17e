#pragma once

// Exact rational polyhedral cones.
//
// A Cone is stored by generators (normalized to primitive integer vectors,
// duplicates removed). The inequality description is derived on first use by
// the double description method and cached; copies share the cache.

#include <memory>
#include <mutex>
#include <vector>

#include "fibcones/errors.hpp"
#include "fibcones/linalg.hpp"

namespace fibcones {

/// {x : <a, x> >= 0 for a in inequalities, <e, x> = 0 for e in equalities}.
struct Facets {
    std::vector<Vector> inequalities;
    std::vector<Vector> equalities;
};

/// {x : A x >= 0} = cone(rays) + span(lineality). Rays are extreme modulo the lineality space.
struct RayDescription {
    std::vector<Vector> rays;
    std::vector<Vector> lineality;
};

/// Double description over the rationals.
RayDescription double_description(const std::vector<Vector>& inequalities, std::size_t dim);

/// Positive multiple with coprime integer entries. The zero vector maps to itself.
Vector primitive(const Vector& v);

/// Exact feasibility of sum lambda_i gens_i = target with lambda >= 0 (phase-one simplex, Bland's rule).
bool is_nonnegative_combination(const std::vector<Vector>& gens, const Vector& target);

class Cone {
public:
    /// Throws DimMismatch or ZeroGenerator. An empty list gives the zero cone.
    static Cone from_generators(std::size_t ambient_dim, const std::vector<Vector>& generators);

    std::size_t ambient_dim() const { return dim_; }
    const std::vector<Vector>& generators() const { return gens_; }

    const Facets& facets() const;
    /// Dimension of the largest linear subspace inside the cone.
    std::size_t lineality_dim() const;

    bool contains(const Vector& v) const;
    /// True iff g (a generator, up to positive scaling) is not a non-negative
    /// combination of the remaining generators.
    bool is_extremal(const Vector& g) const;

private:
    struct Cache {
        std::once_flag once;
        Facets facets;
        std::size_t lineality_dim = 0;
    };

    Cone(std::size_t dim, std::vector<Vector> gens);
    const Cache& cache() const;

    std::size_t dim_ = 0;
    std::vector<Vector> gens_;
    std::shared_ptr<Cache> cache_;
};

Cone cone_from_generators(const std::vector<Vector>& vectors, std::size_t ambient_dim);

/// {y : sum_j y_i pairing(i, j) g_j >= 0 for every generator g}, a cone in
/// dimension pairing.rows(). pairing.cols() must equal c.ambient_dim().
Cone dual_cone(const Cone& c, const Matrix& pairing);

bool cones_equal(const Cone& a, const Cone& b);

}  // namespace fibcones
