#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "pincurve/abelian.hpp"
#include "pincurve/artinian.hpp"
#include "pincurve/finite_field.hpp"

namespace pincurve {

// Explicit unit group of an artinian algebra over a finite field.
template <FieldLike F>
struct UnitGroup {
    std::vector<typename ArtinianAlgebra<F>::Elem> elements;  // canonical coordinate order
    AbelianGroupDescription structure;
};

// Only finite base fields can be enumerated.
template <FieldLike F>
UnitGroup<F> unit_group(const ArtinianAlgebra<F>&, std::size_t = default_guard_limit) {
    throw unsupported("unit-group enumeration needs a finite base field");
}

// Enumerates all invertible elements; requires q^dim <= guard.  Elements are
// listed in coordinate-lexicographic order, the canonical ordering used
// everywhere downstream.
inline UnitGroup<FiniteField> unit_group(const ArtinianAlgebra<FiniteField>& alg,
                                         std::size_t guard = default_guard_limit) {
    const auto& k = alg.base();
    const uint64_t q = k.order();
    uint64_t total = 1;
    for (uint32_t i = 0; i < alg.dim(); ++i) {
        total *= q;
        if (total > guard)
            throw guard_exceeded("unit enumeration of " + std::to_string(alg.dim()) +
                                 "-dimensional algebra over F_" + std::to_string(q) +
                                 " exceeds the guard limit of " + std::to_string(guard));
    }
    UnitGroup<FiniteField> out;
    for (uint64_t idx = 0; idx < total; ++idx) {
        typename ArtinianAlgebra<FiniteField>::Elem e(alg.dim());
        uint64_t t = idx;
        for (uint32_t i = 0; i < alg.dim(); ++i) {
            e[i] = k.element_at(t % q);
            t /= q;
        }
        if (alg.is_unit(e)) out.elements.push_back(std::move(e));
    }
    std::sort(out.elements.begin(), out.elements.end());
    auto mul = [&](const auto& a, const auto& b) { return alg.mul(a, b); };
    auto eqf = [&](const auto& a, const auto& b) { return a == b; };
    out.structure.cyclic_orders = invariant_factors(out.elements, mul, alg.one(), eqf);
    return out;
}

// Subgroup generated by a set of units, by closure.
template <typename Elem, typename Mul>
std::vector<Elem> generated_subgroup(const std::vector<Elem>& gens, Mul mul, const Elem& id) {
    std::set<Elem> seen{id};
    std::vector<Elem> frontier{id};
    while (!frontier.empty()) {
        std::vector<Elem> next;
        for (auto& x : frontier)
            for (auto& g : gens) {
                Elem y = mul(x, g);
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

// The quotient of a finite abelian group by a subgroup, with canonical coset
// representatives (the minimal element of each coset in the ambient order).
template <typename Elem, typename Mul>
struct QuotientGroup {
    std::vector<Elem> reps;  // sorted canonical representatives
    AbelianGroupDescription structure;
};

template <typename Elem, typename Mul>
QuotientGroup<Elem, Mul> quotient_group(const std::vector<Elem>& group,
                                        const std::vector<Elem>& subgroup, Mul mul,
                                        const Elem& id) {
    std::map<Elem, Elem> rep_of;  // element -> canonical coset representative
    QuotientGroup<Elem, Mul> out;
    for (auto& g : group) {
        if (rep_of.count(g)) continue;
        std::vector<Elem> coset;
        for (auto& h : subgroup) coset.push_back(mul(g, h));
        Elem rep = *std::min_element(coset.begin(), coset.end());
        for (auto& c : coset) rep_of.emplace(c, rep);
        out.reps.push_back(rep);
    }
    std::sort(out.reps.begin(), out.reps.end());
    out.reps.erase(std::unique(out.reps.begin(), out.reps.end()), out.reps.end());
    auto qmul = [&](const Elem& a, const Elem& b) { return rep_of.at(mul(a, b)); };
    auto eqf = [](const Elem& a, const Elem& b) { return a == b; };
    out.structure.cyclic_orders = invariant_factors(out.reps, qmul, rep_of.at(id), eqf);
    return out;
}

}  // namespace pincurve
