#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pincurve/linalg.hpp"

namespace pincurve {

// Coefficient extension of degree 2: factor coefficients live in
// kappa = k[w]/(w^2 - s*w - r) with the quadratic irreducible over k.
// The Galois conjugate is w |-> s - w.
template <FieldLike F>
struct QuadraticCoefficients {
    typename F::Elem r, s;
    bool operator==(const QuadraticCoefficients&) const = default;
};

// A finite product of truncated polynomial algebras kappa_j[t_j]/(t_j^{m_j})
// over a base field k, where kappa_j is k itself or a quadratic extension.
// The fixed coordinate basis is, per factor, w^e * t^i with e < ext degree
// and i < truncation, ordered by (i, e); factors are concatenated.
template <FieldLike F>
class ArtinianAlgebra {
public:
    struct Factor {
        std::string var;
        uint32_t trunc = 1;
        std::optional<QuadraticCoefficients<F>> quad;

        uint32_t ext() const { return quad ? 2 : 1; }
        uint32_t dim() const { return trunc * ext(); }
        bool operator==(const Factor&) const = default;
    };

    using Elem = Vec<F>;

    ArtinianAlgebra(F base, std::vector<Factor> factors)
        : base_(std::move(base)), factors_(std::move(factors)) {
        offsets_.reserve(factors_.size());
        uint32_t off = 0;
        for (auto& f : factors_) {
            if (f.trunc < 1) throw parameter_error("truncation order must be >= 1");
            offsets_.push_back(off);
            off += f.dim();
        }
        dim_ = off;
    }

    const F& base() const { return base_; }
    const std::vector<Factor>& factors() const { return factors_; }
    uint32_t dim() const { return dim_; }
    uint32_t offset(size_t j) const { return offsets_[j]; }
    uint32_t index(size_t j, uint32_t deg, uint32_t e = 0) const {
        return offsets_[j] + deg * factors_[j].ext() + e;
    }

    Elem zero() const { return Elem(dim_, base_.zero()); }
    Elem one() const {
        Elem v = zero();
        for (size_t j = 0; j < factors_.size(); ++j) v[index(j, 0, 0)] = base_.one();
        return v;
    }
    Elem basis_elem(size_t j, uint32_t deg, uint32_t e = 0) const {
        Elem v = zero();
        v[index(j, deg, e)] = base_.one();
        return v;
    }

    Elem add(const Elem& a, const Elem& b) const {
        check(a), check(b);
        Elem c(dim_);
        for (uint32_t i = 0; i < dim_; ++i) c[i] = base_.add(a[i], b[i]);
        return c;
    }
    Elem scale(const Elem& a, const typename F::Elem& c) const {
        Elem out = a;
        for (auto& x : out) x = base_.mul(x, c);
        return out;
    }

    // Componentwise truncated product; quadratic coefficients multiply via
    // w^2 = s*w + r.
    Elem mul(const Elem& a, const Elem& b) const {
        check(a), check(b);
        Elem c(dim_, base_.zero());
        for (size_t j = 0; j < factors_.size(); ++j) {
            const auto& f = factors_[j];
            for (uint32_t i1 = 0; i1 < f.trunc; ++i1)
                for (uint32_t i2 = 0; i1 + i2 < f.trunc; ++i2) {
                    if (!f.quad) {
                        auto p = base_.mul(a[index(j, i1)], b[index(j, i2)]);
                        c[index(j, i1 + i2)] = base_.add(c[index(j, i1 + i2)], p);
                    } else {
                        auto a0 = a[index(j, i1, 0)], a1 = a[index(j, i1, 1)];
                        auto b0 = b[index(j, i2, 0)], b1 = b[index(j, i2, 1)];
                        // (a0 + a1 w)(b0 + b1 w) = a0 b0 + a1 b1 r + (a0 b1 + a1 b0 + a1 b1 s) w
                        auto a1b1 = base_.mul(a1, b1);
                        auto c0 = base_.add(base_.mul(a0, b0), base_.mul(a1b1, f.quad->r));
                        auto c1 = base_.add(base_.add(base_.mul(a0, b1), base_.mul(a1, b0)),
                                            base_.mul(a1b1, f.quad->s));
                        c[index(j, i1 + i2, 0)] = base_.add(c[index(j, i1 + i2, 0)], c0);
                        c[index(j, i1 + i2, 1)] = base_.add(c[index(j, i1 + i2, 1)], c1);
                    }
                }
        }
        return c;
    }

    // Unit iff the constant term is nonzero in each factor's residue field.
    bool is_unit(const Elem& a) const {
        check(a);
        for (size_t j = 0; j < factors_.size(); ++j) {
            bool nz = false;
            for (uint32_t e = 0; e < factors_[j].ext(); ++e)
                if (!base_.is_zero(a[index(j, 0, e)])) nz = true;
            if (!nz) return false;
        }
        return true;
    }

    Elem inv(const Elem& a) const {
        if (!is_unit(a)) throw error("element is not a unit of the artinian algebra");
        // solve a*x = 1 by linear algebra on the multiplication matrix
        Mat<F> sys(dim_, Vec<F>(dim_ + 1, base_.zero()));
        for (uint32_t i = 0; i < dim_; ++i) {
            Elem col = mul(a, basis_elem_by_index(i));
            for (uint32_t r = 0; r < dim_; ++r) sys[r][i] = col[r];
        }
        Elem rhs = one();
        for (uint32_t r = 0; r < dim_; ++r) sys[r][dim_] = rhs[r];
        rref(base_, sys);
        Elem x(dim_, base_.zero());
        // back-read: system was put in rref with augmented column
        for (auto& row : sys) {
            uint32_t lead = dim_;
            for (uint32_t i = 0; i < dim_; ++i)
                if (!base_.is_zero(row[i])) {
                    lead = i;
                    break;
                }
            if (lead < dim_) x[lead] = row[dim_];
        }
        return x;
    }

    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return is_zero_vec(base_, a); }

    // Jacobson radical = span of positive-degree monomials of every factor.
    std::vector<uint32_t> radical_coordinates() const {
        std::vector<uint32_t> idx;
        for (size_t j = 0; j < factors_.size(); ++j)
            for (uint32_t i = 1; i < factors_[j].trunc; ++i)
                for (uint32_t e = 0; e < factors_[j].ext(); ++e) idx.push_back(index(j, i, e));
        return idx;
    }

    bool is_nilpotent(Elem a) const {
        for (uint32_t i = 0; i < dim_ + 1; ++i) {
            if (is_zero(a)) return true;
            a = mul(a, a);
        }
        return false;
    }

    // Coefficientwise Galois conjugation on quadratic factors:
    // a + b*w |-> (a + b*s) - b*w.  Identity on plain factors.
    Elem conjugate(const Elem& a) const {
        Elem c = a;
        for (size_t j = 0; j < factors_.size(); ++j) {
            if (!factors_[j].quad) continue;
            for (uint32_t i = 0; i < factors_[j].trunc; ++i) {
                auto a0 = a[index(j, i, 0)], a1 = a[index(j, i, 1)];
                c[index(j, i, 0)] = base_.add(a0, base_.mul(a1, factors_[j].quad->s));
                c[index(j, i, 1)] = base_.neg(a1);
            }
        }
        return c;
    }

    std::string describe() const {
        if (factors_.empty()) return "0";
        std::string s;
        for (size_t j = 0; j < factors_.size(); ++j) {
            if (j) s += " x ";
            std::string coef = factors_[j].quad ? "k2" : "k";
            s += coef + "[" + factors_[j].var + "]/(" + factors_[j].var + "^" +
                 std::to_string(factors_[j].trunc) + ")";
        }
        return s;
    }

    bool operator==(const ArtinianAlgebra& o) const {
        return base_ == o.base_ && factors_ == o.factors_;
    }

private:
    Elem basis_elem_by_index(uint32_t i) const {
        Elem v = zero();
        v[i] = base_.one();
        return v;
    }
    void check(const Elem& a) const {
        if (a.size() != dim_) throw descriptor_mismatch("element from a different algebra");
    }

    F base_;
    std::vector<Factor> factors_;
    std::vector<uint32_t> offsets_;
    uint32_t dim_ = 0;
};

// True iff the algebra has no nonzero nilpotents.  The radical is the span
// of the positive-degree monomials; each of its basis elements is checked
// nilpotent, and the algebra is reduced exactly when the radical vanishes.
template <FieldLike F>
bool is_reduced(const ArtinianAlgebra<F>& alg) {
    auto rad = alg.radical_coordinates();
    for (auto i : rad) {
        typename ArtinianAlgebra<F>::Elem v = alg.zero();
        v[i] = alg.base().one();
        if (!alg.is_nilpotent(v)) throw error("radical basis element is not nilpotent");
    }
    return rad.empty();
}

// A subalgebra is reduced iff it meets the ambient nilradical trivially.
template <FieldLike F>
bool is_reduced_subalgebra(const ArtinianAlgebra<F>& alg, const Subspace<F>& sub) {
    auto rad = alg.radical_coordinates();
    std::vector<bool> in_rad(alg.dim(), false);
    for (auto i : rad) in_rad[i] = true;
    // intersection with a coordinate subspace: combinations of basis rows
    // vanishing on the non-radical coordinates
    Mat<F> proj;
    for (auto& row : sub.rows) {
        Vec<F> r;
        for (uint32_t i = 0; i < alg.dim(); ++i)
            if (!in_rad[i]) r.push_back(row[i]);
        proj.push_back(std::move(r));
    }
    if (proj.empty()) return true;
    auto ker = left_kernel(alg.base(), proj);
    return ker.empty();
}

}  // namespace pincurve
