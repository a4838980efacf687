#pragma once

#include <optional>
#include <vector>

#include "pincurve/errors.hpp"
#include "pincurve/field_concepts.hpp"

namespace pincurve {

template <FieldLike F>
using Vec = std::vector<typename F::Elem>;

template <FieldLike F>
using Mat = std::vector<Vec<F>>;

// In-place reduced row echelon form; returns pivot column indices.
template <FieldLike F>
std::vector<uint32_t> rref(const F& k, Mat<F>& m) {
    std::vector<uint32_t> pivots;
    if (m.empty()) return pivots;
    const size_t ncols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && k.is_zero(m[sel][col])) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        auto piv = k.inv(m[row][col]);
        for (size_t j = col; j < ncols; ++j) m[row][j] = k.mul(m[row][j], piv);
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || k.is_zero(m[i][col])) continue;
            auto f = m[i][col];
            for (size_t j = col; j < ncols; ++j)
                m[i][j] = k.sub(m[i][j], k.mul(f, m[row][j]));
        }
        pivots.push_back(static_cast<uint32_t>(col));
        ++row;
    }
    m.resize(row);
    return pivots;
}

// A linear subspace in unique reduced-echelon presentation.
template <FieldLike F>
struct Subspace {
    uint32_t ambient_dim = 0;
    Mat<F> rows;     // rref, no zero rows
    std::vector<uint32_t> pivots;

    uint32_t rank() const { return static_cast<uint32_t>(rows.size()); }
    bool operator==(const Subspace&) const = default;
};

template <FieldLike F>
Subspace<F> echelon_basis(const F& k, uint32_t ambient_dim, Mat<F> vectors) {
    for (auto& v : vectors)
        if (v.size() != ambient_dim)
            throw descriptor_mismatch("vector length differs from ambient dimension");
    auto pivots = rref(k, vectors);
    return {ambient_dim, std::move(vectors), std::move(pivots)};
}

// Reduce v against the echelon rows; returns the residue (zero iff v in span).
template <FieldLike F>
Vec<F> reduce_mod(const F& k, const Subspace<F>& s, Vec<F> v) {
    if (v.size() != s.ambient_dim) throw descriptor_mismatch("vector/ambient dimension mismatch");
    for (size_t r = 0; r < s.rows.size(); ++r) {
        auto c = v[s.pivots[r]];
        if (k.is_zero(c)) continue;
        for (size_t j = 0; j < v.size(); ++j) v[j] = k.sub(v[j], k.mul(c, s.rows[r][j]));
    }
    return v;
}

template <FieldLike F>
bool contains(const F& k, const Subspace<F>& s, const Vec<F>& v) {
    for (auto& c : reduce_mod(k, s, v))
        if (!k.is_zero(c)) return false;
    return true;
}

template <FieldLike F>
bool is_zero_vec(const F& k, const Vec<F>& v) {
    for (auto& c : v)
        if (!k.is_zero(c)) return false;
    return true;
}

template <FieldLike F>
Vec<F> zero_vec(const F& k, uint32_t n) {
    return Vec<F>(n, k.zero());
}

template <FieldLike F>
Vec<F> unit_vec(const F& k, uint32_t n, uint32_t i) {
    Vec<F> v(n, k.zero());
    v[i] = k.one();
    return v;
}

// Basis of {x : m x = 0} for m given as rows (x a column vector), returned
// as echelonized row vectors.
template <FieldLike F>
Mat<F> right_kernel(const F& k, Mat<F> m) {
    if (m.empty()) return {};
    const uint32_t n = static_cast<uint32_t>(m[0].size());
    auto pivots = rref(k, m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    Mat<F> basis;
    for (uint32_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        Vec<F> v(n, k.zero());
        v[j] = k.one();
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = k.neg(m[r][j]);
        basis.push_back(std::move(v));
    }
    rref(k, basis);
    return basis;
}

// Basis of the kernel of the row-vector map v |-> v * m, m given as rows.
template <FieldLike F>
Mat<F> left_kernel(const F& k, const Mat<F>& m) {
    if (m.empty()) return {};
    const size_t nrows = m.size(), ncols = m[0].size();
    Mat<F> mt(ncols, Vec<F>(nrows, k.zero()));
    for (size_t i = 0; i < nrows; ++i)
        for (size_t j = 0; j < ncols; ++j) mt[j][i] = m[i][j];
    return right_kernel(k, std::move(mt));
}

// Solve x * rows(s) = v; returns coordinates w.r.t. the echelon rows.
template <FieldLike F>
std::optional<Vec<F>> coordinates(const F& k, const Subspace<F>& s, Vec<F> v) {
    Vec<F> coords(s.rows.size(), k.zero());
    for (size_t r = 0; r < s.rows.size(); ++r) {
        auto c = v[s.pivots[r]];
        if (k.is_zero(c)) continue;
        coords[r] = c;
        for (size_t j = 0; j < v.size(); ++j) v[j] = k.sub(v[j], k.mul(c, s.rows[r][j]));
    }
    if (!is_zero_vec(k, v)) return std::nullopt;
    return coords;
}

}  // namespace pincurve
