#pragma once

#include <vector>

#include "pincurve/field_concepts.hpp"
#include "pincurve/errors.hpp"

namespace pincurve {

// Dense univariate polynomials over F, little-endian coefficients, trimmed
// so that the zero polynomial is {} and otherwise back() != 0.
namespace up {

template <FieldLike F>
using UPoly = std::vector<typename F::Elem>;

template <FieldLike F>
UPoly<F> trim(const F& k, UPoly<F> f) {
    while (!f.empty() && k.is_zero(f.back())) f.pop_back();
    return f;
}

template <FieldLike F>
bool is_zero(const UPoly<F>& f) {
    return f.empty();
}

template <FieldLike F>
int degree(const UPoly<F>& f) {
    return static_cast<int>(f.size()) - 1;  // -1 for the zero polynomial
}

template <FieldLike F>
UPoly<F> constant(const F& k, const typename F::Elem& c) {
    if (k.is_zero(c)) return {};
    return {c};
}

template <FieldLike F>
UPoly<F> monomial(const F& k, uint32_t d, const typename F::Elem& c) {
    if (k.is_zero(c)) return {};
    UPoly<F> f(d + 1, k.zero());
    f[d] = c;
    return f;
}

template <FieldLike F>
UPoly<F> add(const F& k, const UPoly<F>& a, const UPoly<F>& b) {
    UPoly<F> c(std::max(a.size(), b.size()), k.zero());
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.size()) c[i] = k.add(c[i], a[i]);
        if (i < b.size()) c[i] = k.add(c[i], b[i]);
    }
    return trim(k, std::move(c));
}

template <FieldLike F>
UPoly<F> neg(const F& k, UPoly<F> a) {
    for (auto& c : a) c = k.neg(c);
    return a;
}

template <FieldLike F>
UPoly<F> sub(const F& k, const UPoly<F>& a, const UPoly<F>& b) {
    return add(k, a, neg(k, b));
}

template <FieldLike F>
UPoly<F> mul(const F& k, const UPoly<F>& a, const UPoly<F>& b) {
    if (a.empty() || b.empty()) return {};
    UPoly<F> c(a.size() + b.size() - 1, k.zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = k.add(c[i + j], k.mul(a[i], b[j]));
    return trim(k, std::move(c));
}

template <FieldLike F>
UPoly<F> scale(const F& k, UPoly<F> a, const typename F::Elem& c) {
    for (auto& x : a) x = k.mul(x, c);
    return trim(k, std::move(a));
}

template <FieldLike F>
std::pair<UPoly<F>, UPoly<F>> divmod(const F& k, UPoly<F> a, const UPoly<F>& b) {
    if (b.empty()) throw error("univariate division by zero");
    if (a.size() < b.size()) return {{}, std::move(a)};
    UPoly<F> q(a.size() - b.size() + 1, k.zero());
    auto lead_inv = k.inv(b.back());
    while (a.size() >= b.size() && !a.empty()) {
        size_t shift = a.size() - b.size();
        auto c = k.mul(a.back(), lead_inv);
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = k.sub(a[shift + i], k.mul(c, b[i]));
        a = trim(k, std::move(a));
    }
    return {trim(k, std::move(q)), std::move(a)};
}

template <FieldLike F>
UPoly<F> mod(const F& k, UPoly<F> a, const UPoly<F>& b) {
    return divmod(k, std::move(a), b).second;
}

template <FieldLike F>
UPoly<F> monic(const F& k, UPoly<F> a) {
    if (a.empty()) return a;
    return scale(k, std::move(a), k.inv(a.back()));
}

template <FieldLike F>
UPoly<F> gcd(const F& k, UPoly<F> a, UPoly<F> b) {
    while (!b.empty()) {
        auto r = mod(k, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(k, std::move(a));
}

// g, u, v with g = gcd and u*a + v*b = g.
template <FieldLike F>
void xgcd(const F& k, UPoly<F> a, UPoly<F> b, UPoly<F>& g, UPoly<F>& u, UPoly<F>& v) {
    UPoly<F> u0{k.one()}, v0{}, u1{}, v1{k.one()};
    u0 = trim(k, std::move(u0));
    v1 = trim(k, std::move(v1));
    while (!b.empty()) {
        auto [q, r] = divmod(k, a, b);
        a = std::move(b);
        b = std::move(r);
        auto u2 = sub(k, u0, mul(k, q, u1));
        auto v2 = sub(k, v0, mul(k, q, v1));
        u0 = std::move(u1);
        v0 = std::move(v1);
        u1 = std::move(u2);
        v1 = std::move(v2);
    }
    if (a.empty()) {
        g = {};
        u = {};
        v = {};
        return;
    }
    auto lead_inv = k.inv(a.back());
    g = scale(k, std::move(a), lead_inv);
    u = scale(k, std::move(u0), lead_inv);
    v = scale(k, std::move(v0), lead_inv);
}

template <FieldLike F>
UPoly<F> power(const F& k, UPoly<F> a, uint32_t e) {
    UPoly<F> r{k.one()};
    while (e) {
        if (e & 1) r = mul(k, r, a);
        a = mul(k, a, a);
        e >>= 1;
    }
    return r;
}

template <FieldLike F>
bool eq(const F& k, const UPoly<F>& a, const UPoly<F>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!k.eq(a[i], b[i])) return false;
    return true;
}

template <FieldLike F>
typename F::Elem eval(const F& k, const UPoly<F>& f, const typename F::Elem& x) {
    auto r = k.zero();
    for (size_t i = f.size(); i-- > 0;) r = k.add(k.mul(r, x), f[i]);
    return r;
}

// Substitute a polynomial: f(g(x)).
template <FieldLike F>
UPoly<F> compose(const F& k, const UPoly<F>& f, const UPoly<F>& g) {
    UPoly<F> r{};
    for (size_t i = f.size(); i-- > 0;) {
        r = mul(k, r, g);
        r = add(k, r, constant(k, f[i]));
    }
    return r;
}

template <FieldLike F>
std::string to_string(const F& k, const UPoly<F>& f, const std::string& var = "x") {
    if (f.empty()) return "0";
    std::string s;
    for (size_t i = f.size(); i-- > 0;) {
        if (k.is_zero(f[i])) continue;
        if (!s.empty()) s += " + ";
        std::string cs = k.to_string(f[i]);
        if (i == 0) {
            s += cs;
        } else {
            if (cs != "1") s += cs + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace up

}  // namespace pincurve
