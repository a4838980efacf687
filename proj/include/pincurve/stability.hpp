#pragma once

#include <string>
#include <vector>

#include "pincurve/artinian.hpp"
#include "pincurve/finite_field.hpp"
#include "pincurve/function_field.hpp"
#include "pincurve/semigroup.hpp"

namespace pincurve {

enum class StableKind { GmMonomial, GmLocal, GaTail };

// A unital subalgebra of a truncated algebra, stable under the declared
// one-parameter group action, together with its combinatorial index.
template <FieldLike F>
struct StableSubalgebraRecord {
    StableKind kind;
    ArtinianAlgebra<F> ambient;
    Subspace<F> basis;
    std::vector<TailSemigroup> semigroups;  // one per factor (Gm kinds)
    uint32_t tail_start = 0;                // GaTail: n_1, with n_1 = N meaning A = k

    bool operator==(const StableSubalgebraRecord&) const = default;
};

namespace detail {

// Extend scalars of a subspace to the rational function field F(params).
template <FieldLike F>
Subspace<FunctionField<F>> extend_scalars(const FunctionField<F>& kk, const Subspace<F>& s) {
    Mat<FunctionField<F>> rows;
    for (auto& r : s.rows) {
        Vec<FunctionField<F>> v;
        v.reserve(r.size());
        for (auto& c : r) v.push_back(kk.from_base(c));
        rows.push_back(std::move(v));
    }
    return echelon_basis(kk, s.ambient_dim, std::move(rows));
}

template <FieldLike F>
void require_plain_ambient(const ArtinianAlgebra<F>& alg, size_t max_factors) {
    if (alg.factors().size() > max_factors)
        throw unsupported("ambient with more than " + std::to_string(max_factors) + " factors");
    for (auto& f : alg.factors())
        if (f.quad) throw unsupported("quadratic-coefficient factors are out of scope here");
}

}  // namespace detail

// Generic-parameter test for G_m-stability: substитute t |-> l*t on the first
// factor and u |-> l^{-1}*u on the second (weights i and -j on t^i and u^j),
// with l transcendental over the base, and test that every basis vector's
// image stays in the extended span.  For these diagonalizable actions the
// one-parameter generic check is equivalent to stability over every base.
template <FieldLike F>
bool is_gm_stable(const ArtinianAlgebra<F>& alg, const Subspace<F>& v) {
    detail::require_plain_ambient(alg, 2);
    if (v.ambient_dim != alg.dim()) throw descriptor_mismatch("subspace/ambient mismatch");
    FunctionField<F> kk(alg.base(), {"l"});
    auto span = detail::extend_scalars(kk, v);
    auto lambda = kk.var(0);
    auto lambda_inv = kk.inv(lambda);
    for (auto& row : v.rows) {
        Vec<FunctionField<F>> image(alg.dim(), kk.zero());
        for (size_t j = 0; j < alg.factors().size(); ++j) {
            const auto& fac = alg.factors()[j];
            auto w = kk.one();
            const auto& step = (j == 0) ? lambda : lambda_inv;
            for (uint32_t i = 0; i < fac.trunc; ++i) {
                image[alg.index(j, i)] = kk.mul(kk.from_base(row[alg.index(j, i)]), w);
                w = kk.mul(w, step);
            }
        }
        if (!contains(kk, span, image)) return false;
    }
    return true;
}

// Fast structural characterization: an echelon basis is spanned by monomials
// iff every row is a unit vector.
template <FieldLike F>
bool is_monomial_span(const F& k, const Subspace<F>& v) {
    for (auto& row : v.rows) {
        size_t nz = 0;
        for (auto& c : row)
            if (!k.is_zero(c)) ++nz;
        if (nz != 1) return false;
    }
    return true;
}

// Truncated images of the monomial basis of k[u]/(u^n) under the generic
// translation u |-> u/(1+au) = u - a u^2 + a^2 u^3 - ..., over F(a).
// Index i holds the expansion of (u/(1+au))^i.
template <FieldLike F>
std::vector<typename ArtinianAlgebra<FunctionField<F>>::Elem> ga_substitution_powers(
    const FunctionField<F>& kk, const ArtinianAlgebra<FunctionField<F>>& ext, uint32_t n) {
    auto s = ext.zero();
    auto a = kk.var(0);
    auto coef = kk.one();
    for (uint32_t i = 1; i < n; ++i) {
        s[i] = coef;
        coef = kk.neg(kk.mul(coef, a));
    }
    std::vector<typename ArtinianAlgebra<FunctionField<F>>::Elem> powers(n, ext.one());
    for (uint32_t i = 1; i < n; ++i) powers[i] = ext.mul(powers[i - 1], s);
    return powers;
}

// Generic-parameter test for G_a-stability in characteristic zero: the
// translation u |-> u/(1+au) truncated at u^N, over the field F(a).
template <FieldLike F>
bool is_ga_stable_char0(const ArtinianAlgebra<F>& alg, const Subspace<F>& v) {
    if (alg.base().characteristic() != 0)
        throw unsupported("G_a-stability in positive characteristic is out of scope");
    detail::require_plain_ambient(alg, 1);
    if (alg.factors().empty()) return true;
    if (v.ambient_dim != alg.dim()) throw descriptor_mismatch("subspace/ambient mismatch");
    const uint32_t n = alg.factors()[0].trunc;
    FunctionField<F> kk(alg.base(), {"a"});
    ArtinianAlgebra<FunctionField<F>> ext(kk, {{alg.factors()[0].var, n, std::nullopt}});
    auto span = detail::extend_scalars(kk, v);
    auto powers = ga_substitution_powers(kk, ext, n);
    for (auto& row : v.rows) {
        Vec<FunctionField<F>> image(n, kk.zero());
        for (uint32_t i = 0; i < n; ++i) {
            if (alg.base().is_zero(row[i])) continue;
            auto scaled = ext.scale(powers[i], kk.from_base(row[i]));
            for (uint32_t t = 0; t < n; ++t) image[t] = kk.add(image[t], scaled[t]);
        }
        if (!contains(kk, span, image)) return false;
    }
    return true;
}

// Monomial subalgebra of k[t]/(t^m) attached to a semigroup (exponents read
// below the truncation order).
template <FieldLike F>
StableSubalgebraRecord<F> gm_monomial_record(const F& k, const TailSemigroup& z, uint32_t m,
                                             const std::string& var = "t") {
    ArtinianAlgebra<F> amb(k, {{var, m, std::nullopt}});
    Mat<F> rows;
    for (auto i : z.elements_below(m)) rows.push_back(unit_vec(k, m, i));
    return {StableKind::GmMonomial, amb, echelon_basis(k, m, std::move(rows)), {z}, 0};
}

// Local stable subalgebra of k[t]/(t^m) x k[u]/(u^n): the positive monomials
// of each semigroup plus the diagonal line k*(1,1).
template <FieldLike F>
StableSubalgebraRecord<F> gm_local_record(const F& k, const TailSemigroup& zc,
                                          const TailSemigroup& zd, uint32_t m, uint32_t n) {
    ArtinianAlgebra<F> amb(k, {{"t", m, std::nullopt}, {"u", n, std::nullopt}});
    Mat<F> rows;
    auto diag = zero_vec(k, amb.dim());
    diag[amb.index(0, 0)] = k.one();
    diag[amb.index(1, 0)] = k.one();
    rows.push_back(std::move(diag));
    for (auto i : zc.elements_below(m))
        if (i >= 1) rows.push_back(unit_vec(k, amb.dim(), amb.index(0, i)));
    for (auto j : zd.elements_below(n))
        if (j >= 1) rows.push_back(unit_vec(k, amb.dim(), amb.index(1, j)));
    return {StableKind::GmLocal, amb, echelon_basis(k, amb.dim(), std::move(rows)), {zc, zd}, 0};
}

// Tail subalgebra k + u^{n1}*k[u]/(u^N); n1 = N is the trivial algebra k.
template <FieldLike F>
StableSubalgebraRecord<F> ga_tail_record(const F& k, uint32_t n1, uint32_t big_n,
                                         const std::string& var = "u") {
    ArtinianAlgebra<F> amb(k, {{var, big_n, std::nullopt}});
    Mat<F> rows{unit_vec(k, big_n, 0)};
    for (uint32_t i = n1; i < big_n; ++i) rows.push_back(unit_vec(k, big_n, i));
    StableSubalgebraRecord<F> rec{StableKind::GaTail, amb,
                                  echelon_basis(k, big_n, std::move(rows)), {}, n1};
    return rec;
}

// All G_m-stable unital subalgebras of k[t]/(t^m): exactly the monomial
// algebras of tail semigroups with tail start <= m.
template <FieldLike F>
std::vector<StableSubalgebraRecord<F>> classify_gm_stable(const F& k, uint32_t m,
                                                          uint32_t guard = 20) {
    if (m < 1) throw parameter_error("truncation order must be >= 1");
    std::vector<StableSubalgebraRecord<F>> out;
    for (auto& z : enumerate_semigroups(m, guard)) out.push_back(gm_monomial_record(k, z, m));
    return out;
}

// All local G_m-stable unital subalgebras of the two-factor product.
template <FieldLike F>
std::vector<StableSubalgebraRecord<F>> classify_gm_stable_local(const F& k, uint32_t m,
                                                                uint32_t n, uint32_t guard = 20) {
    if (m < 1 || n < 1) throw parameter_error("truncation orders must be >= 1");
    std::vector<StableSubalgebraRecord<F>> out;
    for (auto& zc : enumerate_semigroups(m, guard))
        for (auto& zd : enumerate_semigroups(n, guard))
            out.push_back(gm_local_record(k, zc, zd, m, n));
    return out;
}

// All G_a-stable unital subalgebras of k[u]/(u^N) in characteristic zero:
// the tails n1 in {1, ..., N}, the last of which is the trivial algebra k.
template <FieldLike F>
std::vector<StableSubalgebraRecord<F>> classify_ga_stable_char0(const F& k, uint32_t big_n,
                                                                uint32_t guard = 24) {
    if (k.characteristic() != 0)
        throw unsupported("G_a-stability in positive characteristic is out of scope");
    if (big_n < 1) throw parameter_error("truncation order must be >= 1");
    if (big_n > guard) throw guard_exceeded("truncation order exceeds guard");
    std::vector<StableSubalgebraRecord<F>> out;
    for (uint32_t n1 = 1; n1 <= big_n; ++n1) out.push_back(ga_tail_record(k, n1, big_n));
    return out;
}

// Subalgebra test: contains 1 and closed under pairwise products of rows.
template <FieldLike F>
bool is_unital_subalgebra(const ArtinianAlgebra<F>& alg, const Subspace<F>& v) {
    if (!contains(alg.base(), v, alg.one())) return false;
    for (auto& a : v.rows)
        for (auto& b : v.rows)
            if (!contains(alg.base(), v, alg.mul(a, b))) return false;
    return true;
}

// Local-ring check for a unital subalgebra given with its echelon basis:
// the non-unit rows must span an ideal, and representatives of the cosets
// outside it must be invertible inside the subalgebra.  Decides "local with
// residue field k", the shape the primed catalog requires.
template <FieldLike F>
bool has_unique_maximal_ideal(const ArtinianAlgebra<F>& alg, const Subspace<F>& v) {
    const auto& k = alg.base();
    Mat<F> nonunit;
    Mat<F> unit_rows;
    for (auto& r : v.rows)
        (alg.is_unit(r) ? unit_rows : nonunit).push_back(r);
    auto m_ideal = echelon_basis(k, alg.dim(), nonunit);
    if (m_ideal.rank() + 1 != v.rank()) return false;  // residue field must be k itself
    for (auto& a : v.rows)
        for (auto& b : m_ideal.rows)
            if (!contains(k, m_ideal, alg.mul(a, b))) return false;
    if (unit_rows.empty()) return false;
    // invertibility of unit + ideal elements, checked on basis translates
    auto check_inv = [&](const Vec<F>& x) {
        if (!alg.is_unit(x)) return false;
        return contains(k, v, alg.inv(x));
    };
    if (!check_inv(unit_rows[0])) return false;
    for (auto& b : m_ideal.rows) {
        auto x = unit_rows[0];
        for (size_t i = 0; i < x.size(); ++i) x[i] = k.add(x[i], b[i]);
        if (!check_inv(x)) return false;
    }
    return true;
}

// ---- exhaustive subspace enumeration (the brute-force oracle) ----

// Enumerates every subspace of F^n via all reduced-echelon matrices.
// Finite fields only; count grows like Gaussian binomials.
inline std::vector<Subspace<FiniteField>> enumerate_all_subspaces(const FiniteField& k,
                                                                  uint32_t n) {
    std::vector<Subspace<FiniteField>> out;
    const uint64_t q = k.order();
    std::vector<uint32_t> pivots;
    // iterate over pivot-column subsets
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        pivots.clear();
        for (uint32_t c = 0; c < n; ++c)
            if (mask & (1u << c)) pivots.push_back(c);
        const uint32_t r = static_cast<uint32_t>(pivots.size());
        // free positions: (row i, col c) with c non-pivot and c > pivots[i]
        std::vector<std::pair<uint32_t, uint32_t>> free_pos;
        for (uint32_t i = 0; i < r; ++i)
            for (uint32_t c = pivots[i] + 1; c < n; ++c)
                if (!(mask & (1u << c))) free_pos.push_back({i, c});
        uint64_t fills = 1;
        for (size_t t = 0; t < free_pos.size(); ++t) fills *= q;
        for (uint64_t idx = 0; idx < fills; ++idx) {
            Mat<FiniteField> rows(r, zero_vec(k, n));
            for (uint32_t i = 0; i < r; ++i) rows[i][pivots[i]] = k.one();
            uint64_t t = idx;
            for (auto& [i, c] : free_pos) {
                rows[i][c] = k.element_at(t % q);
                t /= q;
            }
            out.push_back(Subspace<FiniteField>{n, std::move(rows), pivots});
        }
    }
    return out;
}

}  // namespace pincurve
