#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "pincurve/errors.hpp"

namespace pincurve {

// Finitely generated abelian group, possibly with symbolic summands that
// could not be resolved over an infinite base field.  cyclic_orders is in
// invariant-factor form d_1 | d_2 | ... (ascending divisibility).
struct AbelianGroupDescription {
    int64_t free_rank = 0;
    std::vector<int64_t> cyclic_orders;
    std::vector<std::string> symbolic;

    bool operator==(const AbelianGroupDescription&) const = default;

    int64_t torsion_order() const {
        int64_t n = 1;
        for (auto d : cyclic_orders) n *= d;
        return n;
    }
    bool is_trivial() const { return free_rank == 0 && cyclic_orders.empty() && symbolic.empty(); }

    std::string to_string() const {
        std::string s;
        auto app = [&](const std::string& t) {
            if (!s.empty()) s += " x ";
            s += t;
        };
        if (free_rank >= 1) app("Z^" + std::to_string(free_rank));
        for (auto d : cyclic_orders) app("Z/" + std::to_string(d));
        for (auto& t : symbolic) app(t);
        return s.empty() ? "0" : s;
    }
};

inline std::vector<int64_t> prime_divisors(int64_t n) {
    std::vector<int64_t> ps;
    for (int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Invariant factors of a finite abelian group presented by its elements and
// multiplication law.  For each prime p, the count of solutions of
// x^{p^j} = 1 determines the multiset of cyclic p-power factors.
template <typename Elem, typename Mul, typename Eq>
std::vector<int64_t> invariant_factors(const std::vector<Elem>& elements, Mul mul, const Elem& id,
                                       Eq eq) {
    const int64_t n = static_cast<int64_t>(elements.size());
    if (n <= 1) return {};
    auto power = [&](Elem x, int64_t e) {
        Elem r = id;
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    };
    std::map<int64_t, std::vector<int>> p_exponents;  // prime -> exponents, descending
    for (int64_t p : prime_divisors(n)) {
        std::vector<int64_t> counts{1};  // counts[j] = #{x : x^{p^j} = 1}
        for (int64_t pj = p;; pj *= p) {
            int64_t cnt = 0;
            for (auto& x : elements)
                if (eq(power(x, pj), id)) ++cnt;
            if (cnt == counts.back()) break;
            counts.push_back(cnt);
            if (cnt >= n) break;
        }
        auto logp = [&](int64_t v) {
            int r = 0;
            while (v > 1) v /= p, ++r;
            return r;
        };
        std::vector<int> exps;
        for (size_t j = 1; j < counts.size(); ++j) {
            int ge_j = logp(counts[j]) - logp(counts[j - 1]);  // #factors Z/p^i with i >= j
            while (static_cast<int>(exps.size()) < ge_j) exps.push_back(0);
            for (int t = 0; t < ge_j; ++t) exps[t] = static_cast<int>(j);
        }
        std::sort(exps.rbegin(), exps.rend());
        p_exponents[p] = std::move(exps);
    }
    size_t maxlen = 0;
    for (auto& [p, exps] : p_exponents) maxlen = std::max(maxlen, exps.size());
    std::vector<int64_t> invs(maxlen, 1);
    for (auto& [p, exps] : p_exponents)
        for (size_t i = 0; i < exps.size(); ++i) {
            int64_t pe = 1;
            for (int t = 0; t < exps[i]; ++t) pe *= p;
            invs[i] *= pe;  // invs[0] largest
        }
    std::reverse(invs.begin(), invs.end());  // ascending divisibility
    return invs;
}

// ---- integer matrices: Smith normal form and lattice kernels ----

using IntMat = std::vector<std::vector<int64_t>>;

inline IntMat identity_mat(size_t n) {
    IntMat m(n, std::vector<int64_t>(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

struct SmithDecomposition {
    IntMat u, s, v;  // s = u * m * v with u, v unimodular
    size_t rank = 0;
    std::vector<int64_t> diagonal;  // nonzero entries, d_1 | d_2 | ...
};

inline SmithDecomposition smith_normal_form(IntMat m) {
    const size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    SmithDecomposition out;
    out.u = identity_mat(rows);
    out.v = identity_mat(cols);
    if (rows == 0 || cols == 0) {
        out.s = m;
        return out;
    }
    auto row_op = [&](size_t i, size_t j, int64_t f) {  // row_i -= f * row_j
        for (size_t c = 0; c < cols; ++c) m[i][c] -= f * m[j][c];
        for (size_t c = 0; c < rows; ++c) out.u[i][c] -= f * out.u[j][c];
    };
    auto col_op = [&](size_t i, size_t j, int64_t f) {  // col_i -= f * col_j
        for (size_t r = 0; r < rows; ++r) m[r][i] -= f * m[r][j];
        for (size_t r = 0; r < cols; ++r) out.v[r][i] -= f * out.v[r][j];
    };
    auto row_swap = [&](size_t i, size_t j) {
        if (i == j) return;
        std::swap(m[i], m[j]);
        std::swap(out.u[i], out.u[j]);
    };
    auto col_swap = [&](size_t i, size_t j) {
        if (i == j) return;
        for (size_t r = 0; r < rows; ++r) std::swap(m[r][i], m[r][j]);
        for (size_t r = 0; r < cols; ++r) std::swap(out.v[r][i], out.v[r][j]);
    };
    auto diagonalize = [&]() {
        size_t t = 0;
        while (t < rows && t < cols) {
            // smallest nonzero pivot in the trailing submatrix
            size_t pi = t, pj = t;
            int64_t best = 0;
            for (size_t i = t; i < rows; ++i)
                for (size_t j = t; j < cols; ++j)
                    if (m[i][j] != 0 && (best == 0 || std::abs(m[i][j]) < best)) {
                        best = std::abs(m[i][j]);
                        pi = i, pj = j;
                    }
            if (best == 0) return;
            row_swap(t, pi);
            col_swap(t, pj);
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (size_t i = t + 1; i < rows; ++i)
                    if (m[i][t] != 0) {
                        row_op(i, t, m[i][t] / m[t][t]);
                        if (m[i][t] != 0) {
                            row_swap(t, i);
                            dirty = true;
                        }
                    }
                for (size_t j = t + 1; j < cols; ++j)
                    if (m[t][j] != 0) {
                        col_op(j, t, m[t][j] / m[t][t]);
                        if (m[t][j] != 0) {
                            col_swap(t, j);
                            dirty = true;
                        }
                    }
            }
            ++t;
        }
    };
    // diagonalize, then restore the divisibility chain; each fix strictly
    // shrinks a diagonal entry to a gcd, so this terminates fast
    for (int pass = 0; pass < 256; ++pass) {
        diagonalize();
        size_t r = std::min(rows, cols);
        for (size_t i = 0; i < r; ++i)
            if (m[i][i] < 0) {
                for (size_t c = 0; c < cols; ++c) m[i][c] = -m[i][c];
                for (size_t c = 0; c < rows; ++c) out.u[i][c] = -out.u[i][c];
            }
        bool ok = true;
        for (size_t i = 0; i + 1 < r && ok; ++i)
            if (m[i][i] != 0 && m[i + 1][i + 1] % m[i][i] != 0) {
                for (size_t rr = 0; rr < rows; ++rr) m[rr][i] += m[rr][i + 1];
                for (size_t rr = 0; rr < cols; ++rr) out.v[rr][i] += out.v[rr][i + 1];
                ok = false;
            }
        if (ok) break;
        if (pass == 255) throw error("smith normal form did not stabilize");
    }
    out.s = m;
    for (size_t i = 0; i < std::min(rows, cols); ++i)
        if (m[i][i] != 0) {
            out.diagonal.push_back(m[i][i]);
            ++out.rank;
        }
    return out;
}

// Basis of the integer kernel {x : m x = 0}, as column vectors of m.
inline IntMat integer_kernel(const IntMat& m) {
    if (m.empty() || m[0].empty()) return {};
    auto snf = smith_normal_form(m);
    const size_t cols = m[0].size();
    IntMat basis;
    for (size_t j = snf.rank; j < cols; ++j) {
        std::vector<int64_t> x(cols);
        for (size_t r = 0; r < cols; ++r) x[r] = snf.v[r][j];
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace pincurve
