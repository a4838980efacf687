#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pincurve/artinian.hpp"
#include "pincurve/finite_field.hpp"
#include "pincurve/semigroup.hpp"
#include "pincurve/stability.hpp"
#include "pincurve/upoly.hpp"

namespace pincurve {

enum class NormalizationKind { AffineLine, ProjectiveLine, Conic, RussellCompletion };

// Which catalog construction produced a descriptor.  The pinch data of
// different families can coincide (the same curve may carry different group
// actions); the family records the intended construction.
enum class CurveFamily {
    GaPinch,            // P^1_{k,n}: nth neighborhood of infinity pinched to Spec k
    AffineMonomial,     // A^1_{k,m}(c)
    TwoPoint,           // P^1_{k,m,n}(c,d): both neighborhoods pinched separately
    TwoPointPrime,      // P^1_{k,m,n}(c,d)': local subalgebra, one image point
    ConicDescent,       // Ctilde_m(P,c): Galois-descended pair pinch, kappa(P) quadratic
    ConicDescentPrime,  // Ctilde_m(P,c)': further pinched onto a rational point
};

struct SupportPoint {
    std::string label;
    uint32_t residue_degree = 1;  // of the image point over the base field
    uint32_t neighborhood = 1;    // infinitesimal order pinched in ztilde

    bool operator==(const SupportPoint&) const = default;
};

// A curve presented by its normalization label and the finite pinch data
// (Z tilde, Z) of the conductor square; the global facts consumed downstream
// (units of a projective curve are k^*, Pic of the normalization is Z) are
// axioms attached to the normalization label.
template <FieldLike F>
struct PinchDescriptor {
    CurveFamily family;
    NormalizationKind normalization;
    bool projective;
    ArtinianAlgebra<F> ztilde;
    Subspace<F> z_sub;
    std::vector<TailSemigroup> semigroups;  // per pinched factor, where applicable
    uint32_t ga_n = 0;                      // GaPinch only
    uint64_t q = 0;                         // conic families: base field order
    std::vector<SupportPoint> support;

    bool operator==(const PinchDescriptor&) const = default;

    const F& base() const { return ztilde.base(); }
    bool unpinched() const { return ztilde.dim() == 0; }
};

namespace detail {

template <FieldLike F>
Subspace<F> monomial_subspace(const F& k, const ArtinianAlgebra<F>& amb, size_t factor,
                              const std::vector<uint32_t>& degs, Mat<F>&& seed = {}) {
    Mat<F> rows = std::move(seed);
    for (auto i : degs)
        for (uint32_t e = 0; e < amb.factors()[factor].ext(); ++e)
            rows.push_back(unit_vec(k, amb.dim(), amb.index(factor, i, e)));
    return echelon_basis(k, amb.dim(), std::move(rows));
}

inline QuadraticCoefficients<FiniteField> quadratic_over(const FiniteField& k) {
    // smallest (s, r) with x^2 - s x - r irreducible over F_q (no root)
    for (uint64_t si = 0; si < k.order(); ++si)
        for (uint64_t ri = 0; ri < k.order(); ++ri) {
            auto s = k.element_at(si), r = k.element_at(ri);
            bool has_root = false;
            for (uint64_t xi = 0; xi < k.order() && !has_root; ++xi) {
                auto x = k.element_at(xi);
                auto v = k.sub(k.mul(x, x), k.add(k.mul(s, x), r));
                if (k.is_zero(v)) has_root = true;
            }
            if (!has_root) return {r, s};
        }
    throw error("no irreducible quadratic over the base field");  // unreachable
}

}  // namespace detail

// ---- catalog ----

// P^1_{k,n}: pinch the nth infinitesimal neighborhood of infinity onto
// Spec k.  n = 0 is the un-pinched projective line.
template <FieldLike F>
PinchDescriptor<F> catalog_p1n(const F& k, uint32_t n) {
    std::vector<typename ArtinianAlgebra<F>::Factor> fs;
    if (n >= 1) fs.push_back({"u", n, std::nullopt});
    ArtinianAlgebra<F> zt(k, fs);
    Mat<F> rows;
    if (n >= 1) rows.push_back(unit_vec(k, zt.dim(), 0));
    std::vector<SupportPoint> sup;
    if (n >= 1) sup.push_back({"inf", 1, n});
    return {CurveFamily::GaPinch, NormalizationKind::ProjectiveLine, true,
            zt,  echelon_basis(k, zt.dim(), std::move(rows)),
            {},  n, 0, std::move(sup)};
}

// A^1_{k,m}(c): monomial subalgebra pinch at the origin.  ambient = 0 means
// the minimal neighborhood (the tail start itself).
template <FieldLike F>
PinchDescriptor<F> catalog_a1mc(const F& k, const TailSemigroup& z, uint32_t ambient = 0) {
    uint32_t m = std::max(ambient, z.tail_start());
    std::vector<typename ArtinianAlgebra<F>::Factor> fs;
    if (m >= 1) fs.push_back({"t", m, std::nullopt});
    ArtinianAlgebra<F> zt(k, fs);
    Subspace<F> sub = (m >= 1) ? detail::monomial_subspace(k, zt, 0, z.elements_below(m))
                               : echelon_basis(k, 0, Mat<F>{});
    std::vector<SupportPoint> sup;
    if (m >= 1) sup.push_back({"0", 1, m});
    return {CurveFamily::AffineMonomial, NormalizationKind::AffineLine, false,
            zt,  std::move(sub),
            {z}, 0, 0, std::move(sup)};
}

// P^1_{k,m,n}(c,d): the two neighborhoods of 0 and infinity pinched onto the
// two monomial algebras (two image points).
template <FieldLike F>
PinchDescriptor<F> catalog_p1mncd(const F& k, const TailSemigroup& zc, const TailSemigroup& zd,
                                  uint32_t ambient_m = 0, uint32_t ambient_n = 0) {
    uint32_t m = std::max(ambient_m, zc.tail_start());
    uint32_t n = std::max(ambient_n, zd.tail_start());
    std::vector<typename ArtinianAlgebra<F>::Factor> fs;
    if (m >= 1) fs.push_back({"t", m, std::nullopt});
    if (n >= 1) fs.push_back({"u", n, std::nullopt});
    ArtinianAlgebra<F> zt(k, fs);
    Mat<F> rows;
    size_t factor = 0;
    std::vector<SupportPoint> sup;
    if (m >= 1) {
        for (auto i : zc.elements_below(m)) rows.push_back(unit_vec(k, zt.dim(), zt.index(factor, i)));
        sup.push_back({"0", 1, m});
        ++factor;
    }
    if (n >= 1) {
        for (auto j : zd.elements_below(n)) rows.push_back(unit_vec(k, zt.dim(), zt.index(factor, j)));
        sup.push_back({"inf", 1, n});
    }
    return {CurveFamily::TwoPoint, NormalizationKind::ProjectiveLine, true,
            zt,       echelon_basis(k, zt.dim(), std::move(rows)),
            {zc, zd}, 0, 0, std::move(sup)};
}

// P^1_{k,m,n}(c,d)': both points glued to a single rational point; the
// subalgebra is the positive monomials plus the diagonal k*(1,1).
template <FieldLike F>
PinchDescriptor<F> catalog_p1prime(const F& k, const TailSemigroup& zc, const TailSemigroup& zd,
                                   uint32_t ambient_m = 0, uint32_t ambient_n = 0) {
    uint32_t m = std::max({ambient_m, zc.tail_start(), 1u});
    uint32_t n = std::max({ambient_n, zd.tail_start(), 1u});
    ArtinianAlgebra<F> zt(k, {{"t", m, std::nullopt}, {"u", n, std::nullopt}});
    Mat<F> rows;
    auto diag = zero_vec(k, zt.dim());
    diag[zt.index(0, 0)] = k.one();
    diag[zt.index(1, 0)] = k.one();
    rows.push_back(std::move(diag));
    for (auto i : zc.elements_below(m))
        if (i >= 1) rows.push_back(unit_vec(k, zt.dim(), zt.index(0, i)));
    for (auto j : zd.elements_below(n))
        if (j >= 1) rows.push_back(unit_vec(k, zt.dim(), zt.index(1, j)));
    return {CurveFamily::TwoPointPrime, NormalizationKind::ProjectiveLine, true,
            zt,       echelon_basis(k, zt.dim(), std::move(rows)),
            {zc, zd}, 0, 0, {SupportPoint{"0~inf", 1, std::max(m, n)}}};
}

// Ctilde_m(P,c) over F_q: the conic is realized as P^1 (the Brauer group of
// a finite field is trivial), the degree-2 point P has residue field F_{q^2},
// and the descended subalgebra is the monomial algebra with F_{q^2}
// coefficients.  The primed variant further pinches onto a rational point:
// k*1 plus the positive part.
inline PinchDescriptor<FiniteField> catalog_conic_descent(const FiniteField& k,
                                                          const TailSemigroup& z, bool primed,
                                                          uint32_t ambient = 0) {
    uint32_t m = std::max(ambient, z.tail_start());
    if (primed) m = std::max(m, 1u);
    std::vector<typename ArtinianAlgebra<FiniteField>::Factor> fs;
    auto quad = detail::quadratic_over(k);
    if (m >= 1) fs.push_back({"t", m, quad});
    ArtinianAlgebra<FiniteField> zt(k, fs);
    Mat<FiniteField> rows;
    std::vector<SupportPoint> sup;
    if (m >= 1) {
        if (primed) {
            rows.push_back(unit_vec(k, zt.dim(), zt.index(0, 0, 0)));  // k * 1
            for (auto i : z.elements_below(m))
                if (i >= 1)
                    for (uint32_t e = 0; e < 2; ++e)
                        rows.push_back(unit_vec(k, zt.dim(), zt.index(0, i, e)));
            sup.push_back({"Ptilde", 1, m});
        } else {
            for (auto i : z.elements_below(m))
                for (uint32_t e = 0; e < 2; ++e)
                    rows.push_back(unit_vec(k, zt.dim(), zt.index(0, i, e)));
            sup.push_back({"Ptilde", 2, m});
        }
    }
    return {primed ? CurveFamily::ConicDescentPrime : CurveFamily::ConicDescent,
            NormalizationKind::Conic,
            true,
            zt,
            echelon_basis(k, zt.dim(), std::move(rows)),
            {z},
            0,
            k.order(),
            std::move(sup)};
}

// ---- seminormality and minimal presentation ----

// A pinched curve is seminormal iff Z tilde is reduced; the subalgebra is
// then automatically reduced, which we verify as well.
template <FieldLike F>
bool is_seminormal(const PinchDescriptor<F>& d) {
    if (!is_reduced(d.ztilde)) return false;
    if (!is_reduced_subalgebra(d.ztilde, d.z_sub))
        throw error("z_sub of a reduced Z tilde must be reduced");
    return true;
}

// Truncate every factor to its semigroup's tail start: the minimal Z tilde
// inducing the same pinched curve.  Idempotent; conductor and seminormality
// are invariant under it.
template <FieldLike F>
PinchDescriptor<F> minimal_presentation(const PinchDescriptor<F>& d) {
    const F& k = d.base();
    switch (d.family) {
        case CurveFamily::GaPinch:
            // pinching a reduced point onto itself is the identity
            return catalog_p1n(k, d.ga_n <= 1 ? 0 : d.ga_n);
        case CurveFamily::AffineMonomial:
            return catalog_a1mc(k, d.semigroups.at(0));
        case CurveFamily::TwoPoint:
            return catalog_p1mncd(k, d.semigroups.at(0), d.semigroups.at(1));
        case CurveFamily::TwoPointPrime:
            return catalog_p1prime(k, d.semigroups.at(0), d.semigroups.at(1));
        case CurveFamily::ConicDescent:
        case CurveFamily::ConicDescentPrime:
            if constexpr (std::is_same_v<F, FiniteField>) {
                return catalog_conic_descent(k, d.semigroups.at(0),
                                             d.family == CurveFamily::ConicDescentPrime);
            } else {
                throw unsupported("conic descent requires a finite base field");
            }
    }
    throw error("unknown curve family");
}

// ---- pinched chart rings and conductors ----

// Ferrand's cartesian ring square in one affine chart: A = {f in k[x] :
// f mod I lies in z_sub}.  I = (g) has finite codimension, so membership and
// the conductor reduce to linear algebra on k[x]/(g).
template <FieldLike F>
struct PinchedChartRing {
    F base;
    up::UPoly<F> ideal_gen;  // monic, degree >= 1
    Subspace<F> sub;         // over the basis 1, x, ..., x^{deg-1}
};

template <FieldLike F>
Vec<F> chart_reduce(const PinchedChartRing<F>& r, const up::UPoly<F>& f) {
    auto rem = up::mod(r.base, f, r.ideal_gen);
    Vec<F> v(r.ideal_gen.size() - 1, r.base.zero());
    for (size_t i = 0; i < rem.size(); ++i) v[i] = rem[i];
    return v;
}

template <FieldLike F>
PinchedChartRing<F> pinch(const F& k, up::UPoly<F> g, Subspace<F> sub) {
    g = up::monic(k, up::trim(k, std::move(g)));
    if (up::degree<F>(g) < 1) throw parameter_error("chart ideal must have finite positive codimension");
    const uint32_t d = static_cast<uint32_t>(g.size()) - 1;
    if (sub.ambient_dim != d) throw descriptor_mismatch("z_sub lives in a different quotient");
    PinchedChartRing<F> r{k, std::move(g), std::move(sub)};
    // unital subalgebra check
    if (!contains(k, r.sub, unit_vec(k, d, 0)))
        throw not_closed("z_sub does not contain 1");
    for (auto& a : r.sub.rows)
        for (auto& b : r.sub.rows) {
            up::UPoly<F> pa(a.begin(), a.end()), pb(b.begin(), b.end());
            auto prod = chart_reduce(r, up::mul(k, up::trim(k, std::move(pa)), up::trim(k, std::move(pb))));
            if (!contains(k, r.sub, prod))
                throw not_closed("z_sub is not multiplicatively closed");
        }
    return r;
}

template <FieldLike F>
bool chart_member(const PinchedChartRing<F>& r, const up::UPoly<F>& f) {
    return contains(r.base, r.sub, chart_reduce(r, f));
}

// Monic generator of {f : f * k[x] <= A}.  Testing f against the monomial
// basis of k[x]/(g) suffices: I = (g) annihilates the quotient, so the
// a-priori infinite condition is the finite linear one below.
template <FieldLike F>
up::UPoly<F> conductor(const PinchedChartRing<F>& r) {
    const F& k = r.base;
    const uint32_t d = static_cast<uint32_t>(r.ideal_gen.size()) - 1;
    // rows of the constraint matrix: for each power b and each coordinate of
    // the residue, one linear condition on v
    Mat<F> constraints;
    std::vector<Vec<F>> reduced(d * d);  // residue of x^i * x^b
    for (uint32_t b = 0; b < d; ++b)
        for (uint32_t i = 0; i < d; ++i) {
            auto prod = up::monomial(k, b + i, k.one());
            reduced[b * d + i] = reduce_mod(k, r.sub, chart_reduce(r, prod));
        }
    for (uint32_t b = 0; b < d; ++b)
        for (uint32_t j = 0; j < d; ++j) {
            Vec<F> row(d, k.zero());
            bool nonzero = false;
            for (uint32_t i = 0; i < d; ++i) {
                row[i] = reduced[b * d + i][j];
                if (!k.is_zero(row[i])) nonzero = true;
            }
            if (nonzero) constraints.push_back(std::move(row));
        }
    Mat<F> w;
    if (constraints.empty()) {
        // no condition at all: the subalgebra is everything, the conductor
        // is the unit ideal
        for (uint32_t i = 0; i < d; ++i) w.push_back(unit_vec(k, d, i));
    } else {
        w = right_kernel(k, std::move(constraints));
    }
    up::UPoly<F> g0 = r.ideal_gen;
    for (auto& row : w) {
        up::UPoly<F> lift(row.begin(), row.end());
        g0 = up::gcd(k, g0, up::trim(k, std::move(lift)));
    }
    return g0;
}

// ---- chart realization of catalog descriptors ----

// Realizes the pinch data of a descriptor inside one affine chart k[x]:
// the support points are placed at x = 0 and x = 1 (rational points) or at
// an irreducible quadratic (conic point), and z_sub is transported through
// the CRT / Hensel isomorphism.  Unpinched descriptors have no chart.
template <FieldLike F>
std::optional<PinchedChartRing<F>> chart_ring(const PinchDescriptor<F>& d) {
    const F& k = d.base();
    if (d.unpinched()) return std::nullopt;
    const auto& fs = d.ztilde.factors();

    if (fs.size() == 1 && !fs[0].quad) {
        // single rational point at x = 0
        auto g = up::monomial(k, fs[0].trunc, k.one());
        Mat<F> rows;
        for (auto& r : d.z_sub.rows) rows.push_back(r);
        return pinch(k, std::move(g), echelon_basis(k, fs[0].trunc, std::move(rows)));
    }

    if (fs.size() == 2 && !fs[0].quad && !fs[1].quad) {
        // points at x = 0 and x = 1; CRT idempotents transport the basis
        const uint32_t m = fs[0].trunc, n = fs[1].trunc;
        auto xm = up::monomial(k, m, k.one());
        up::UPoly<F> xm1{k.neg(k.one()), k.one()};  // x - 1
        auto xn1 = up::power(k, xm1, n);
        up::UPoly<F> gg, uu, vv;
        up::xgcd(k, xm, xn1, gg, uu, vv);
        if (up::degree<F>(gg) != 0) throw error("chart points are not coprime");
        auto g = up::mul(k, xm, xn1);
        auto e_t = up::mod(k, up::mul(k, vv, xn1), g);  // 1 mod x^m, 0 mod (x-1)^n
        auto e_u = up::mod(k, up::mul(k, uu, xm), g);
        const uint32_t dtot = m + n;
        // transported images of the Z tilde basis vectors
        std::vector<up::UPoly<F>> images(dtot);
        for (uint32_t i = 0; i < m; ++i)
            images[d.ztilde.index(0, i)] =
                up::mod(k, up::mul(k, up::monomial(k, i, k.one()), e_t), g);
        for (uint32_t j = 0; j < n; ++j)
            images[d.ztilde.index(1, j)] =
                up::mod(k, up::mul(k, up::power(k, xm1, j), e_u), g);
        Mat<F> rows;
        for (auto& r : d.z_sub.rows) {
            up::UPoly<F> acc{};
            for (uint32_t i = 0; i < dtot; ++i)
                if (!k.is_zero(r[i])) acc = up::add(k, acc, up::scale(k, images[i], r[i]));
            Vec<F> v(dtot, k.zero());
            for (size_t i = 0; i < acc.size(); ++i) v[i] = acc[i];
            rows.push_back(std::move(v));
        }
        return pinch(k, std::move(g), echelon_basis(k, dtot, std::move(rows)));
    }

    if (fs.size() == 1 && fs[0].quad) {
        // quadratic point: pi(x) = x^2 - s x - r, Z tilde = k[x]/(pi^m);
        // Hensel-lift x to a root rho of the quadratic mod pi^m
        const auto& qc = *fs[0].quad;
        const uint32_t m = fs[0].trunc;
        up::UPoly<F> pi{k.neg(qc.r), k.neg(qc.s), k.one()};
        auto g = up::power(k, pi, m);
        auto modg = [&](up::UPoly<F> f) { return up::mod(k, std::move(f), g); };
        up::UPoly<F> rho{k.zero(), k.one()};  // x
        for (uint32_t it = 0; it < m + 2; ++it) {
            // f(rho) = rho^2 - s rho - r ; f'(rho) = 2 rho - s
            auto frho = modg(up::sub(k, up::mul(k, rho, rho),
                                     up::add(k, up::scale(k, rho, qc.s), up::constant(k, qc.r))));
            if (up::is_zero<F>(frho)) break;
            auto fprime = modg(up::sub(k, up::scale(k, rho, k.from_int(2)), up::constant(k, qc.s)));
            // invert f'(rho) mod g
            up::UPoly<F> gg, uu, vv;
            up::xgcd(k, fprime, g, gg, uu, vv);
            if (up::degree<F>(gg) != 0) throw error("Hensel derivative is not invertible");
            rho = modg(up::sub(k, rho, up::mul(k, frho, uu)));
        }
        const uint32_t dtot = 2 * m;
        std::vector<up::UPoly<F>> images(dtot);
        for (uint32_t i = 0; i < m; ++i) {
            auto pii = modg(up::power(k, pi, i));
            images[d.ztilde.index(0, i, 0)] = pii;
            images[d.ztilde.index(0, i, 1)] = modg(up::mul(k, pii, rho));
        }
        Mat<F> rows;
        for (auto& r : d.z_sub.rows) {
            up::UPoly<F> acc{};
            for (uint32_t i = 0; i < dtot; ++i)
                if (!k.is_zero(r[i])) acc = up::add(k, acc, up::scale(k, images[i], r[i]));
            Vec<F> v(dtot, k.zero());
            for (size_t i = 0; i < acc.size(); ++i) v[i] = acc[i];
            rows.push_back(std::move(v));
        }
        return pinch(k, std::move(g), echelon_basis(k, dtot, std::move(rows)));
    }

    throw unsupported("no chart realization for this factor shape");
}

}  // namespace pincurve
