#pragma once

#include <string>
#include <vector>

#include "pincurve/mpoly.hpp"

namespace pincurve {

// Fraction field of F[x_1,...,x_n].  Canonical form: gcd(num, den) = 1 and
// den monic w.r.t. lex, zero stored as 0/1, so structural equality decides
// mathematical equality.
template <FieldLike F>
class FunctionField {
public:
    struct Elem {
        MPoly<F> num, den;
        bool operator==(const Elem&) const = default;
    };

    FunctionField(F base, std::vector<std::string> vars)
        : base_(std::move(base)), vars_(std::move(vars)) {}

    const F& base() const { return base_; }
    const std::vector<std::string>& vars() const { return vars_; }
    uint32_t nvars() const { return static_cast<uint32_t>(vars_.size()); }

    Elem zero() const { return {mp::zero(base_, nvars()), mp::one(base_, nvars())}; }
    Elem one() const { return {mp::one(base_, nvars()), mp::one(base_, nvars())}; }
    Elem from_int(long long n) const { return from_base(base_.from_int(n)); }
    Elem from_base(const typename F::Elem& c) const {
        return {mp::constant(base_, nvars(), c), mp::one(base_, nvars())};
    }
    Elem from_poly(MPoly<F> p) const {
        if (p.nvars != nvars()) throw descriptor_mismatch("polynomial from wrong variable set");
        return {std::move(p), mp::one(base_, nvars())};
    }
    Elem var(uint32_t v, uint32_t power = 1) const {
        return {mp::variable(base_, nvars(), v, power), mp::one(base_, nvars())};
    }

    Elem add(const Elem& a, const Elem& b) const {
        auto n = mp::add(base_, mp::mul(base_, a.num, b.den), mp::mul(base_, b.num, a.den));
        return reduce(std::move(n), mp::mul(base_, a.den, b.den));
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem neg(const Elem& a) const { return {mp::neg(base_, a.num), a.den}; }
    Elem mul(const Elem& a, const Elem& b) const {
        return reduce(mp::mul(base_, a.num, b.num), mp::mul(base_, a.den, b.den));
    }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw error("inverse of zero in function field");
        return reduce(a.den, a.num);
    }

    bool is_zero(const Elem& a) const { return a.num.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const {
        return mp::eq(base_, a.num, b.num) && mp::eq(base_, a.den, b.den);
    }

    unsigned characteristic() const { return base_.characteristic(); }

    std::string to_string(const Elem& a) const {
        std::string n = mp::to_string(base_, a.num, vars_);
        if (mp::eq(base_, a.den, mp::one(base_, nvars()))) return n;
        return "(" + n + ")/(" + mp::to_string(base_, a.den, vars_) + ")";
    }

    bool operator==(const FunctionField& o) const {
        return base_ == o.base_ && vars_ == o.vars_;
    }

private:
    Elem reduce(MPoly<F> n, MPoly<F> d) const {
        if (d.is_zero()) throw error("zero denominator in function field");
        if (n.is_zero()) return zero();
        auto g = mp::gcd(base_, n, d);
        n = mp::divexact(base_, std::move(n), g);
        d = mp::divexact(base_, std::move(d), g);
        auto lead = d.terms.front().second;
        n = mp::scale(base_, n, base_.inv(lead));
        d = mp::scale(base_, d, base_.inv(lead));
        return {std::move(n), std::move(d)};
    }

    F base_;
    std::vector<std::string> vars_;
};

}  // namespace pincurve
