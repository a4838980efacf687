#pragma once

#include <string>
#include <vector>

#include "pincurve/linalg.hpp"

namespace pincurve {

// k[u_1,...,u_r]/(u_i^{e_i} - g_i) with e_i a p-power and g_i in k: the
// concrete model of a purely inseparable extension k(g_1^{1/e_1}, ...).
// Elements are coordinate vectors over the monomial basis
// {u^alpha : alpha_i < e_i}; multiplication is exponent arithmetic with
// u_i^{e_i} folding to g_i.
template <FieldLike F>
class RootAlgebra {
public:
    struct Generator {
        typename F::Elem radicand;  // g_i
        uint32_t root_order;        // e_i (a power of the characteristic)
        std::string name;

        bool operator==(const Generator&) const = default;
    };

    using Elem = Vec<F>;

    RootAlgebra(F base, std::vector<Generator> gens)
        : base_(std::move(base)), gens_(std::move(gens)) {
        dim_ = 1;
        for (auto& g : gens_) {
            if (g.root_order < 2) throw parameter_error("root order must be >= 2");
            dim_ *= g.root_order;
        }
    }

    const F& base() const { return base_; }
    const std::vector<Generator>& generators() const { return gens_; }
    uint32_t dim() const { return dim_; }

    // basis index of u^alpha, mixed-radix little-endian in alpha
    uint32_t index(const std::vector<uint32_t>& alpha) const {
        uint32_t idx = 0, stride = 1;
        for (size_t i = 0; i < gens_.size(); ++i) {
            idx += alpha[i] * stride;
            stride *= gens_[i].root_order;
        }
        return idx;
    }
    std::vector<uint32_t> exponents(uint32_t idx) const {
        std::vector<uint32_t> alpha(gens_.size());
        for (size_t i = 0; i < gens_.size(); ++i) {
            alpha[i] = idx % gens_[i].root_order;
            idx /= gens_[i].root_order;
        }
        return alpha;
    }

    Elem zero() const { return Elem(dim_, base_.zero()); }
    Elem one() const {
        Elem v = zero();
        v[0] = base_.one();
        return v;
    }
    Elem from_base(const typename F::Elem& c) const {
        Elem v = zero();
        v[0] = c;
        return v;
    }
    Elem root(size_t i, uint32_t power = 1) const {
        std::vector<uint32_t> alpha(gens_.size(), 0);
        alpha[i] = power;
        Elem v = zero();
        v[index(alpha)] = base_.one();
        return v;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem c(dim_);
        for (uint32_t i = 0; i < dim_; ++i) c[i] = base_.add(a[i], b[i]);
        return c;
    }
    Elem scale(const Elem& a, const typename F::Elem& c) const {
        Elem out = a;
        for (auto& x : out) x = base_.mul(x, c);
        return out;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        Elem c = zero();
        for (uint32_t i = 0; i < dim_; ++i) {
            if (base_.is_zero(a[i])) continue;
            auto ai = exponents(i);
            for (uint32_t j = 0; j < dim_; ++j) {
                if (base_.is_zero(b[j])) continue;
                auto bj = exponents(j);
                auto coef = base_.mul(a[i], b[j]);
                std::vector<uint32_t> e(gens_.size());
                for (size_t t = 0; t < gens_.size(); ++t) {
                    e[t] = ai[t] + bj[t];
                    if (e[t] >= gens_[t].root_order) {
                        e[t] -= gens_[t].root_order;
                        coef = base_.mul(coef, gens_[t].radicand);
                    }
                }
                auto idx = index(e);
                c[idx] = base_.add(c[idx], coef);
            }
        }
        return c;
    }

    Elem pow(Elem a, uint32_t e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    bool is_zero(const Elem& a) const { return is_zero_vec(base_, a); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    std::string to_string(const Elem& a) const {
        std::string s;
        for (uint32_t i = 0; i < dim_; ++i) {
            if (base_.is_zero(a[i])) continue;
            if (!s.empty()) s += " + ";
            auto alpha = exponents(i);
            std::string mono;
            for (size_t t = 0; t < gens_.size(); ++t) {
                if (!alpha[t]) continue;
                if (!mono.empty()) mono += "*";
                mono += gens_[t].name;
                if (alpha[t] > 1) mono += "^" + std::to_string(alpha[t]);
            }
            std::string cs = base_.to_string(a[i]);
            if (mono.empty())
                s += cs;
            else if (cs == "1")
                s += mono;
            else
                s += "(" + cs + ")*" + mono;
        }
        return s.empty() ? "0" : s;
    }

    bool operator==(const RootAlgebra& o) const {
        return base_ == o.base_ && gens_ == o.gens_;
    }

private:
    F base_;
    std::vector<Generator> gens_;
    uint32_t dim_ = 1;
};

}  // namespace pincurve
