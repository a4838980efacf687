#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pincurve/errors.hpp"
#include "pincurve/field_concepts.hpp"

namespace pincurve {

// Sparse multivariate polynomial over a coefficient field F.  Terms are kept
// sorted in descending lexicographic order on exponent vectors and never
// carry a zero coefficient, so equal polynomials are structurally equal.
template <FieldLike F>
struct MPoly {
    using Coef = typename F::Elem;
    using Expo = std::vector<uint32_t>;

    uint32_t nvars = 0;
    std::vector<std::pair<Expo, Coef>> terms;  // lex-descending

    bool operator==(const MPoly&) const = default;

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const {
        if (terms.empty()) return true;
        for (auto e : terms.front().first)
            if (e) return false;
        return terms.size() == 1;
    }
    uint32_t degree_in(uint32_t v) const {
        uint32_t d = 0;
        for (auto& [e, c] : terms) d = std::max(d, e[v]);
        return d;
    }
};

namespace mp {

inline bool expo_lex_less(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

template <FieldLike F>
MPoly<F> zero(const F&, uint32_t nvars) {
    return MPoly<F>{nvars, {}};
}

template <FieldLike F>
MPoly<F> constant(const F& k, uint32_t nvars, const typename F::Elem& c) {
    MPoly<F> p{nvars, {}};
    if (!k.is_zero(c)) p.terms.push_back({std::vector<uint32_t>(nvars, 0), c});
    return p;
}

template <FieldLike F>
MPoly<F> one(const F& k, uint32_t nvars) {
    return constant(k, nvars, k.one());
}

template <FieldLike F>
MPoly<F> variable(const F& k, uint32_t nvars, uint32_t v, uint32_t power = 1) {
    MPoly<F> p{nvars, {}};
    std::vector<uint32_t> e(nvars, 0);
    e[v] = power;
    p.terms.push_back({std::move(e), k.one()});
    return p;
}

template <FieldLike F>
MPoly<F> from_terms(const F& k, uint32_t nvars,
                    std::vector<std::pair<std::vector<uint32_t>, typename F::Elem>> ts) {
    std::map<std::vector<uint32_t>, typename F::Elem, std::greater<>> acc;
    for (auto& [e, c] : ts) {
        auto it = acc.find(e);
        if (it == acc.end())
            acc.emplace(e, c);
        else
            it->second = k.add(it->second, c);
    }
    MPoly<F> p{nvars, {}};
    for (auto& [e, c] : acc)
        if (!k.is_zero(c)) p.terms.push_back({e, c});
    return p;
}

template <FieldLike F>
MPoly<F> add(const F& k, const MPoly<F>& a, const MPoly<F>& b) {
    if (a.nvars != b.nvars) throw descriptor_mismatch("polynomial variable counts differ");
    MPoly<F> out{a.nvars, {}};
    size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() ||
            (i < a.terms.size() && expo_lex_less(b.terms[j].first, a.terms[i].first))) {
            out.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size() || expo_lex_less(a.terms[i].first, b.terms[j].first)) {
            out.terms.push_back(b.terms[j++]);
        } else {
            auto c = k.add(a.terms[i].second, b.terms[j].second);
            if (!k.is_zero(c)) out.terms.push_back({a.terms[i].first, c});
            ++i, ++j;
        }
    }
    return out;
}

template <FieldLike F>
MPoly<F> neg(const F& k, const MPoly<F>& a) {
    MPoly<F> out = a;
    for (auto& [e, c] : out.terms) c = k.neg(c);
    return out;
}

template <FieldLike F>
MPoly<F> sub(const F& k, const MPoly<F>& a, const MPoly<F>& b) {
    return add(k, a, neg(k, b));
}

template <FieldLike F>
MPoly<F> mul(const F& k, const MPoly<F>& a, const MPoly<F>& b) {
    if (a.nvars != b.nvars) throw descriptor_mismatch("polynomial variable counts differ");
    std::map<std::vector<uint32_t>, typename F::Elem, std::greater<>> acc;
    for (auto& [ea, ca] : a.terms)
        for (auto& [eb, cb] : b.terms) {
            std::vector<uint32_t> e(a.nvars);
            for (uint32_t v = 0; v < a.nvars; ++v) e[v] = ea[v] + eb[v];
            auto c = k.mul(ca, cb);
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(std::move(e), c);
            else
                it->second = k.add(it->second, c);
        }
    MPoly<F> out{a.nvars, {}};
    for (auto& [e, c] : acc)
        if (!k.is_zero(c)) out.terms.push_back({e, c});
    return out;
}

template <FieldLike F>
MPoly<F> scale(const F& k, const MPoly<F>& a, const typename F::Elem& c) {
    if (k.is_zero(c)) return zero(k, a.nvars);
    MPoly<F> out = a;
    for (auto& [e, x] : out.terms) x = k.mul(x, c);
    return out;
}

template <FieldLike F>
bool eq(const F& k, const MPoly<F>& a, const MPoly<F>& b) {
    if (a.nvars != b.nvars || a.terms.size() != b.terms.size()) return false;
    for (size_t i = 0; i < a.terms.size(); ++i)
        if (a.terms[i].first != b.terms[i].first || !k.eq(a.terms[i].second, b.terms[i].second))
            return false;
    return true;
}

// Divide leading coefficient (w.r.t. lex) through, making the polynomial monic.
template <FieldLike F>
MPoly<F> monic(const F& k, const MPoly<F>& a) {
    if (a.is_zero()) return a;
    return scale(k, a, k.inv(a.terms.front().second));
}

// Exact division; throws if b does not divide a.
template <FieldLike F>
MPoly<F> divexact(const F& k, MPoly<F> a, const MPoly<F>& b) {
    if (b.is_zero()) throw error("polynomial division by zero");
    MPoly<F> q = zero(k, a.nvars);
    while (!a.is_zero()) {
        const auto& [ea, ca] = a.terms.front();
        const auto& [eb, cb] = b.terms.front();
        std::vector<uint32_t> e(a.nvars);
        for (uint32_t v = 0; v < a.nvars; ++v) {
            if (ea[v] < eb[v]) throw error("inexact polynomial division");
            e[v] = ea[v] - eb[v];
        }
        MPoly<F> t{a.nvars, {{e, k.mul(ca, k.inv(cb))}}};
        q = add(k, q, t);
        a = sub(k, a, mul(k, t, b));
    }
    return q;
}

// -- univariate view in a main variable, coefficients are MPoly in the rest --

template <FieldLike F>
std::vector<MPoly<F>> coeffs_in(const F& k, const MPoly<F>& a, uint32_t v) {
    std::vector<MPoly<F>> cs(a.degree_in(v) + 1, zero(k, a.nvars));
    for (auto& [e, c] : a.terms) {
        auto e2 = e;
        uint32_t d = e2[v];
        e2[v] = 0;
        cs[d] = add(k, cs[d], MPoly<F>{a.nvars, {{e2, c}}});
    }
    return cs;
}

template <FieldLike F>
MPoly<F> from_coeffs_in(const F& k, uint32_t v, const std::vector<MPoly<F>>& cs) {
    if (cs.empty()) throw error("empty coefficient list");
    MPoly<F> out = zero(k, cs[0].nvars);
    for (uint32_t d = 0; d < cs.size(); ++d)
        out = add(k, out, mul(k, cs[d], variable(k, cs[0].nvars, v, d)));
    return out;
}

template <FieldLike F>
MPoly<F> gcd(const F& k, MPoly<F> a, MPoly<F> b);

// gcd of the univariate-view coefficients of a in variable v
template <FieldLike F>
MPoly<F> content_in(const F& k, const MPoly<F>& a, uint32_t v) {
    MPoly<F> g = zero(k, a.nvars);
    for (auto& c : coeffs_in(k, a, v)) g = gcd(k, g, c);
    return g;
}

// Pseudo-remainder of a by b in variable v: lc(b)^(dega-degb+1) * a mod b.
template <FieldLike F>
MPoly<F> prem_in(const F& k, MPoly<F> a, const MPoly<F>& b, uint32_t v) {
    uint32_t db = b.degree_in(v);
    auto bc = coeffs_in(k, b, v);
    const MPoly<F>& lb = bc[db];
    while (!a.is_zero() && a.degree_in(v) >= db) {
        uint32_t da = a.degree_in(v);
        auto ac = coeffs_in(k, a, v);
        MPoly<F> t = mul(k, ac[da], variable(k, a.nvars, v, da - db));
        a = sub(k, mul(k, a, lb), mul(k, t, b));
    }
    return a;
}

// Primitive-PRS multivariate gcd, normalized monic w.r.t. lex.
template <FieldLike F>
MPoly<F> gcd(const F& k, MPoly<F> a, MPoly<F> b) {
    if (a.is_zero()) return monic(k, b);
    if (b.is_zero()) return monic(k, a);
    if (a.is_constant() || b.is_constant()) return one(k, a.nvars);
    // main variable: highest index present in either
    uint32_t v = 0;
    bool found = false;
    for (uint32_t i = a.nvars; i-- > 0;) {
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
            v = i;
            found = true;
            break;
        }
    }
    if (!found) return one(k, a.nvars);
    if (a.degree_in(v) == 0) return monic(k, gcd(k, a, content_in(k, b, v)));
    if (b.degree_in(v) == 0) return monic(k, gcd(k, content_in(k, a, v), b));

    MPoly<F> ca = content_in(k, a, v), cb = content_in(k, b, v);
    MPoly<F> g = gcd(k, ca, cb);
    a = divexact(k, a, ca);
    b = divexact(k, b, cb);
    while (!b.is_zero()) {
        MPoly<F> r = prem_in(k, a, b, v);
        a = b;
        if (r.is_zero()) {
            b = r;
        } else {
            b = divexact(k, r, content_in(k, r, v));
        }
    }
    a = divexact(k, a, content_in(k, a, v));
    return monic(k, mul(k, g, a));
}

template <FieldLike F>
std::string to_string(const F& k, const MPoly<F>& a, const std::vector<std::string>& vars) {
    if (a.is_zero()) return "0";
    std::string s;
    for (auto& [e, c] : a.terms) {
        if (!s.empty()) s += " + ";
        std::string mono;
        for (uint32_t v = 0; v < a.nvars; ++v) {
            if (!e[v]) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[v];
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        std::string cs = k.to_string(c);
        if (mono.empty())
            s += cs;
        else if (cs == "1")
            s += mono;
        else
            s += cs + "*" + mono;
    }
    return s;
}

}  // namespace mp

}  // namespace pincurve
