#include "fibcones/effcones.hpp"

#include <algorithm>
#include <cassert>

namespace fibcones {

namespace {

std::size_t slot_of(Factor f) { return f == Factor::First ? ProductSpace::kZeta1Slot : ProductSpace::kZeta2Slot; }

void check_codim(const ProductSpace& space, int k) {
    if (k < 0 || k > space.dimension())
        throw Error(ErrorKind::OutOfRange, "codimension " + std::to_string(k) + " outside 0.." +
                                               std::to_string(space.dimension()));
}

EffConeResult make_result(const ProductSpace& space, int k, std::vector<CycleClass> gens, Provenance p) {
    std::vector<Vector> coords;
    coords.reserve(gens.size());
    for (const auto& g : gens) coords.push_back(basis_coordinates(space, g, k));
    const std::size_t n = nk_basis_monomials(space, k).size();
    return EffConeResult{k, std::move(gens), Cone::from_generators(n, coords), p,
                         std::make_shared<const ProductSpace>(space), {}};
}

// One factor of the low-dimension construction, in engine slots.
struct Side {
    Factor factor;
    int rank;
    int n;  // rank of the first HN quotient
    Rational mu;
};

// The lead side is the factor with the smaller first quotient (the first on ties).
std::pair<Side, Side> low_dim_sides(const ProductSpace& space) {
    const auto& q1 = space.e1().hn.front();
    const auto& q2 = space.e2().hn.front();
    Side a{Factor::First, space.r1(), q1.rank, q1.slope()};
    Side b{Factor::Second, space.r2(), q2.rank, q2.slope()};
    if (q2.rank < q1.rank) std::swap(a, b);
    return {a, b};
}

struct LowDimRanges {
    int i_lo, i_hi, j_lo, j_hi;
};

LowDimRanges low_dim_ranges(const Side& a, const Side& b, int nn, int k) {
    if (k < a.n) {
        const int t = a.n - 1 - k;
        return {t + 1, a.n - 1, t, a.n - 1};
    }
    if (k < b.n) return {0, a.n - 1, 0, a.n - 1};
    return {0, nn - k, 0, nn - k};
}

void check_low_dim(const ProductSpace& space, int k_dim) {
    if (!space.unstable()) throw Error(ErrorKind::NotUnstable, "both bundles must be unstable");
    const int nn = *space.low_dim_bound();
    if (k_dim < 1 || k_dim > nn)
        throw Error(ErrorKind::OutOfRange, "cycle dimension " + std::to_string(k_dim) + " outside 1.." +
                                               std::to_string(nn));
}

CycleClass mixed_monomial(const ProductSpace& space, int f, const Side& a, int ea, const Side& b, int eb) {
    Monomial m;
    m.set(ProductSpace::kFiberSlot, f);
    m.set(slot_of(a.factor), ea);
    m.set(slot_of(b.factor), eb);
    return space.ring().monomial(m);
}

}  // namespace

std::string_view provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Trivial: return "Trivial";
        case Provenance::Semistable: return "Semistable";
        case Provenance::UnstableLowDim: return "UnstableLowDim";
        case Provenance::Transported: return "Transported";
    }
    return "?";
}

CycleClass twisted_power(const ProductSpace& space, Factor f, const Rational& mu, int n) {
    if (n < 0) throw Error(ErrorKind::OutOfRange, "negative exponent " + std::to_string(n));
    const CycleClass eta = space.ring().generator(slot_of(f)) - mu * space.fiber();
    return space.ring().power(eta, n);
}

std::vector<CycleClass> slope_twisted_generators(const ProductSpace& space, int k, const Rational& mu1,
                                                 const Rational& mu2) {
    std::vector<CycleClass> gens;
    for (const auto& m : nk_basis_monomials(space, k)) {
        if (m[ProductSpace::kFiberSlot] == 1) {
            gens.push_back(space.ring().monomial(m));
            continue;
        }
        const int i = m[ProductSpace::kZeta1Slot];
        gens.push_back(space.multiply(twisted_power(space, Factor::First, mu1, i),
                                      twisted_power(space, Factor::Second, mu2, k - i)));
    }
    return gens;
}

EffConeResult semistable_eff_generators(const ProductSpace& space, int k) {
    if (!space.semistable()) throw Error(ErrorKind::NotSemistable, "both bundles must be semistable");
    check_codim(space, k);
    return make_result(space, k, slope_twisted_generators(space, k, space.e1().slope(), space.e2().slope()),
                       Provenance::Semistable);
}

std::vector<CycleClass> extremality_certificates(const ProductSpace& space, int k) {
    if (!space.semistable()) throw Error(ErrorKind::NotSemistable, "both bundles must be semistable");
    check_codim(space, k);
    const Rational mu1 = space.e1().slope();
    const Rational mu2 = space.e2().slope();
    const int r1 = space.r1();
    const int r2 = space.r2();
    auto eta = [&](int a, int b) {
        return space.multiply(twisted_power(space, Factor::First, mu1, a),
                              twisted_power(space, Factor::Second, mu2, b));
    };
    std::vector<CycleClass> out;
    for (const auto& m : nk_basis_monomials(space, k)) {
        const int i = m[ProductSpace::kZeta1Slot];
        if (m[ProductSpace::kFiberSlot] == 0)
            out.push_back(space.multiply(space.fiber(), eta(r1 - i - 1, r2 - k + i - 1)));
        else
            out.push_back(eta(r1 - i - 1, r2 + i - k));
    }
    return out;
}

EffConeResult unstable_low_dim_generators(const ProductSpace& space, int k_dim) {
    check_low_dim(space, k_dim);
    const int nn = *space.low_dim_bound();
    const auto [a, b] = low_dim_sides(space);
    const LowDimRanges rg = low_dim_ranges(a, b, nn, k_dim);
    const CycleClass sub = subproduct_class(space);

    std::vector<CycleClass> gens;
    for (int i = rg.i_lo; i <= rg.i_hi; ++i) {
        CycleClass phi = space.multiply(sub, twisted_power(space, a.factor, a.mu, i));
        gens.push_back(space.multiply(phi, twisted_power(space, b.factor, b.mu, nn - k_dim - i)));
    }
    for (int j = rg.j_lo; j <= rg.j_hi; ++j)
        gens.push_back(mixed_monomial(space, 1, a, a.rank - a.n + j, b, b.rank + a.n - k_dim - j - 2));
    return make_result(space, space.dimension() - k_dim, std::move(gens), Provenance::UnstableLowDim);
}

std::vector<CycleClass> boundary_vanishing_products(const ProductSpace& space, int k_dim, int shift) {
    check_low_dim(space, k_dim);
    const int nn = *space.low_dim_bound();
    const auto [a, b] = low_dim_sides(space);
    const LowDimRanges rg = low_dim_ranges(a, b, nn, k_dim);
    const CycleClass sub = subproduct_class(space);

    std::vector<CycleClass> out;
    for (int i = rg.i_lo; i <= rg.i_hi; ++i) {
        CycleClass phi = space.multiply(sub, space.multiply(twisted_power(space, a.factor, a.mu, i),
                                                            twisted_power(space, b.factor, b.mu, nn - k_dim - i)));
        CycleClass nef = space.multiply(twisted_power(space, a.factor, a.mu, a.n - i),
                                        twisted_power(space, b.factor, b.mu, k_dim + i + shift - a.n));
        out.push_back(space.multiply(phi, nef));
    }
    return out;
}

ProductSpace truncated_space(const ProductSpace& space) {
    if (!space.unstable()) throw Error(ErrorKind::NotUnstable, "both bundles must be unstable");
    return ProductSpace::build_derived(space.e1().truncated(), space.e2().truncated(),
                                       {space.label(Factor::First), space.label(Factor::Second)});
}

Matrix theta_map(const ProductSpace& source, const ProductSpace& target, int k) {
    const int top = std::min(source.dimension(), target.dimension());
    if (k < 0 || k > top)
        throw Error(ErrorKind::OutOfRange, "codimension " + std::to_string(k) + " outside 0.." + std::to_string(top));
    if (source.unstable()) {
        const int bound = source.dimension() - *source.low_dim_bound();
        if (k >= bound)
            throw Error(ErrorKind::OutOfRange, "transport needs codimension < " + std::to_string(bound));
    }

    // Target slot carrying the same label as each source slot.
    std::array<std::size_t, 3> to_slot{ProductSpace::kFiberSlot, 0, 0};
    for (Factor f : {Factor::First, Factor::Second}) {
        const std::string& name = source.label(f);
        if (name == target.label(Factor::First))
            to_slot[slot_of(f)] = ProductSpace::kZeta1Slot;
        else if (name == target.label(Factor::Second))
            to_slot[slot_of(f)] = ProductSpace::kZeta2Slot;
        else
            throw Error(ErrorKind::BasisMismatch, "no factor labelled " + name + " in the target");
    }

    const auto src = nk_basis_monomials(source, k);
    const auto dst = nk_basis_monomials(target, k);
    if (src.size() != dst.size())
        throw Error(ErrorKind::BasisMismatch, "N^" + std::to_string(k) + " has dimension " +
                                                  std::to_string(src.size()) + " on the source and " +
                                                  std::to_string(dst.size()) + " on the target");
    Matrix m(dst.size(), src.size());
    for (std::size_t b = 0; b < src.size(); ++b) {
        Monomial image;
        for (std::size_t s = 0; s < 3; ++s) image.set(to_slot[s], src[b][s]);
        auto it = std::find(dst.begin(), dst.end(), image);
        if (it == dst.end())
            throw Error(ErrorKind::BasisMismatch, source.format(CycleClass(src[b])) +
                                                      " has no counterpart in the target basis");
        m(static_cast<std::size_t>(it - dst.begin()), b) = 1;
    }
    return m;
}

Provenance dispatch_branch(const ProductSpace& space, int k) {
    check_codim(space, k);
    if (!space.semistable() && !space.unstable())
        throw Error(ErrorKind::MixedStabilityUnsupported, "exactly one bundle is semistable");
    if (k == 0 || k == space.dimension()) return Provenance::Trivial;
    if (space.semistable()) return Provenance::Semistable;
    const int nn = *space.low_dim_bound();
    const bool low = space.dimension() - k <= nn;
    const bool transported = k < space.dimension() - nn;
    assert(low != transported);
    (void)transported;
    return low ? Provenance::UnstableLowDim : Provenance::Transported;
}

EffConeResult eff_cone(const ProductSpace& space, int k) {
    switch (dispatch_branch(space, k)) {
        case Provenance::Trivial: return make_result(space, k, nk_basis(space, k), Provenance::Trivial);
        case Provenance::Semistable: return semistable_eff_generators(space, k);
        case Provenance::UnstableLowDim: return unstable_low_dim_generators(space, space.dimension() - k);
        case Provenance::Transported: break;
    }
    const ProductSpace sub_space = truncated_space(space);
    EffConeResult sub = eff_cone(sub_space, k);
    const Matrix back = theta_map(space, sub_space, k).transposed();
    std::vector<CycleClass> gens;
    for (const auto& g : sub.generators)
        gens.push_back(from_basis_coordinates(space, back.apply(basis_coordinates(sub_space, g, k)), k));
    EffConeResult out = make_result(space, k, std::move(gens), Provenance::Transported);
    out.sub_results.push_back(std::move(sub));
    return out;
}

Cone nef_cone(const ProductSpace& space, int k) {
    check_codim(space, k);
    const int c = space.dimension() - k;
    const EffConeResult eff = eff_cone(space, c);
    return dual_cone(eff.cone, pairing_matrix(space, nk_basis(space, k), nk_basis(space, c)));
}

}  // namespace fibcones
