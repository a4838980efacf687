#pragma once

#include <random>

#include "pincurve/finite_field.hpp"
#include "pincurve/function_field.hpp"
#include "pincurve/rationals.hpp"

// Deterministic random elements for the algebraic-axiom property tests.
namespace testsupport {

using namespace pincurve;

inline FiniteField::Elem random_elem(const FiniteField& k, std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> dist(0, k.order() - 1);
    return k.element_at(dist(rng));
}

inline BigRat random_elem(const Rationals&, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 20);
    return BigRat(num(rng), den(rng));
}

template <pincurve::FieldLike F>
typename FunctionField<F>::Elem random_elem(const FunctionField<F>& kk, std::mt19937& rng) {
    std::uniform_int_distribution<uint32_t> deg(0, 2);
    std::uniform_int_distribution<int> nterms(1, 2);
    auto rand_poly = [&](bool nonzero) {
        auto p = mp::zero(kk.base(), kk.nvars());
        int t = nterms(rng);
        for (int i = 0; i < t; ++i) {
            std::vector<uint32_t> e(kk.nvars());
            for (auto& x : e) x = deg(rng);
            auto c = random_elem(kk.base(), rng);
            p = mp::add(kk.base(), p, mp::from_terms(kk.base(), kk.nvars(), {{e, c}}));
        }
        if (nonzero && p.is_zero()) p = mp::one(kk.base(), kk.nvars());
        return p;
    };
    auto num = rand_poly(false);
    auto den = rand_poly(true);
    // route through field arithmetic so the result is in canonical form
    return kk.mul(kk.from_poly(num), kk.inv(kk.from_poly(den)));
}

}  // namespace testsupport
