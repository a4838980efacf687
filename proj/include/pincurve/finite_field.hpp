#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pincurve/errors.hpp"

namespace pincurve {

// F_q = F_p[x]/(f) with f monic irreducible, stored flat over the prime
// field.  Elements are coefficient vectors of fixed length deg(f) with
// entries in [0, p); this makes canonical forms and enumeration order
// (little-endian digits) immediate.
class FiniteField {
public:
    using Elem = std::vector<uint32_t>;

    // Prime field F_p.
    explicit FiniteField(uint32_t p) : p_(p), modulus_{0, 1} { check_prime(p); }

    // F_p[x]/(modulus); modulus monic of degree >= 1, coefficients mod p,
    // constant term first.  Irreducibility is verified by trial division.
    FiniteField(uint32_t p, std::vector<uint32_t> modulus) : p_(p), modulus_(std::move(modulus)) {
        check_prime(p);
        if (modulus_.size() < 2 || modulus_.back() % p != 1)
            throw parameter_error("extension modulus must be monic of degree >= 1");
        for (auto& c : modulus_) c %= p;
        if (degree() > 1 && !poly_irreducible(p_, modulus_))
            throw parameter_error("extension modulus is reducible over F_p");
    }

    // F_{p^n} with the lexicographically first monic irreducible of degree n.
    static FiniteField of_order(uint64_t q) {
        uint32_t p = 0, n = 0;
        factor_prime_power(q, p, n);
        if (n == 1) return FiniteField(p);
        return FiniteField(p, find_irreducible(p, n));
    }

    uint32_t characteristic() const { return p_; }
    uint32_t degree() const { return static_cast<uint32_t>(modulus_.size()) - 1; }
    uint64_t order() const {
        uint64_t q = 1;
        for (uint32_t i = 0; i < degree(); ++i) q *= p_;
        return q;
    }
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    Elem zero() const { return Elem(degree(), 0); }
    Elem one() const { return from_int(1); }
    Elem from_int(long long n) const {
        Elem e(degree(), 0);
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += p_;
        e[0] = static_cast<uint32_t>(r);
        return e;
    }
    // Class of x (degree >= 2 only).
    Elem gen() const {
        Elem e(degree(), 0);
        e[1] = 1;
        return e;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem c(degree());
        for (uint32_t i = 0; i < degree(); ++i) c[i] = (a[i] + b[i]) % p_;
        return c;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem c(degree());
        for (uint32_t i = 0; i < degree(); ++i) c[i] = (a[i] + p_ - b[i]) % p_;
        return c;
    }
    Elem neg(const Elem& a) const {
        Elem c(degree());
        for (uint32_t i = 0; i < degree(); ++i) c[i] = (p_ - a[i]) % p_;
        return c;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        const uint32_t n = degree();
        if (n == 1) return Elem{static_cast<uint32_t>(static_cast<uint64_t>(a[0]) * b[0] % p_)};
        std::vector<uint32_t> prod(2 * n - 1, 0);
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t j = 0; j < n; ++j)
                prod[i + j] = static_cast<uint32_t>((prod[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p_);
        // x^n = -(m_0 + ... + m_{n-1} x^{n-1}); fold high degrees down
        for (uint32_t d = 2 * n - 2; d >= n; --d) {
            uint32_t c = prod[d];
            if (!c) continue;
            prod[d] = 0;
            for (uint32_t i = 0; i < n; ++i) {
                uint32_t s = static_cast<uint32_t>(static_cast<uint64_t>(modulus_[i]) * c % p_);
                prod[d - n + i] = (prod[d - n + i] + p_ - s) % p_;
            }
        }
        return Elem(prod.begin(), prod.begin() + n);
    }

    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw error("inverse of zero in finite field");
        if (degree() == 1) return Elem{mod_inverse(a[0], p_)};
        // extended Euclid in F_p[x] against the modulus
        std::vector<uint32_t> r0 = modulus_, r1 = trim(a);
        std::vector<uint32_t> t0 = {0}, t1 = {1};
        while (!(r1.size() == 1 && r1[0] == 0)) {
            auto [q, r] = poly_divmod(r0, r1);
            r0 = r1;
            r1 = r;
            auto t2 = poly_sub(t0, poly_mul(q, t1));
            t0 = t1;
            t1 = t2;
        }
        // r0 is now a nonzero constant gcd
        uint32_t lead = mod_inverse(r0[0], p_);
        Elem out(degree(), 0);
        for (size_t i = 0; i < t0.size() && i < out.size(); ++i)
            out[i] = static_cast<uint32_t>(static_cast<uint64_t>(t0[i]) * lead % p_);
        return out;
    }

    bool is_zero(const Elem& a) const {
        for (auto c : a)
            if (c) return false;
        return true;
    }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem pow(Elem a, uint64_t e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    // x -> x^p iterated k times.
    Elem frobenius(const Elem& a, uint32_t k = 1) const {
        Elem r = a;
        for (uint32_t i = 0; i < k; ++i) r = pow(r, p_);
        return r;
    }

    // Canonical enumeration: index as little-endian base-p digits.
    Elem element_at(std::size_t idx) const {
        Elem e(degree());
        for (uint32_t i = 0; i < degree(); ++i) {
            e[i] = static_cast<uint32_t>(idx % p_);
            idx /= p_;
        }
        return e;
    }
    std::size_t index_of(const Elem& a) const {
        std::size_t idx = 0;
        for (uint32_t i = degree(); i-- > 0;) idx = idx * p_ + a[i];
        return idx;
    }

    std::string to_string(const Elem& a) const {
        if (degree() == 1) return std::to_string(a[0]);
        std::string s;
        bool any = false;
        for (uint32_t i = 0; i < degree(); ++i) {
            if (!a[i]) continue;
            if (any) s += "+";
            if (i == 0 || a[i] != 1) s += std::to_string(a[i]);
            if (i >= 1) {
                if (a[i] != 1) s += "*";
                s += "w";
                if (i > 1) s += "^" + std::to_string(i);
            }
            any = true;
        }
        return any ? s : "0";
    }

    bool operator==(const FiniteField& o) const { return p_ == o.p_ && modulus_ == o.modulus_; }

    static std::vector<uint32_t> find_irreducible(uint32_t p, uint32_t n) {
        // lexicographic scan over monic degree-n polynomials, low coeffs fast
        uint64_t count = 1;
        for (uint32_t i = 0; i < n; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            std::vector<uint32_t> f(n + 1, 0);
            uint64_t t = idx;
            for (uint32_t i = 0; i < n; ++i) {
                f[i] = static_cast<uint32_t>(t % p);
                t /= p;
            }
            f[n] = 1;
            if (poly_irreducible(p, f)) return f;
        }
        throw error("no irreducible polynomial found");  // unreachable for n >= 1
    }

    static bool is_prime(uint32_t p) {
        if (p < 2) return false;
        for (uint32_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    static void factor_prime_power(uint64_t q, uint32_t& p, uint32_t& n) {
        if (q < 2) throw parameter_error("field order must be >= 2");
        uint64_t m = q;
        uint32_t d = 2;
        while (static_cast<uint64_t>(d) * d <= m && m % d != 0) ++d;
        p = (static_cast<uint64_t>(d) * d <= m) ? d : static_cast<uint32_t>(m);
        n = 0;
        while (m > 1) {
            if (m % p != 0) throw parameter_error("field order is not a prime power");
            m /= p;
            ++n;
        }
    }

private:
    static void check_prime(uint32_t p) {
        if (!is_prime(p)) throw parameter_error("characteristic must be prime");
    }

    static uint32_t mod_inverse(uint32_t a, uint32_t p) {
        // Fermat; p is prime and small
        uint32_t r = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = static_cast<uint32_t>(static_cast<uint64_t>(r) * b % p);
            b = static_cast<uint32_t>(static_cast<uint64_t>(b) * b % p);
            e >>= 1;
        }
        return r;
    }

    // dense univariate helpers over F_p (constant term first, trimmed)
    std::vector<uint32_t> trim(std::vector<uint32_t> f) const { return trim_p(f); }
    static std::vector<uint32_t> trim_p(std::vector<uint32_t> f) {
        while (f.size() > 1 && f.back() == 0) f.pop_back();
        return f;
    }
    std::vector<uint32_t> poly_mul(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) const {
        return poly_mul_p(p_, a, b);
    }
    std::vector<uint32_t> poly_sub(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) const {
        std::vector<uint32_t> c(std::max(a.size(), b.size()), 0);
        for (size_t i = 0; i < c.size(); ++i) {
            uint32_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
            c[i] = (x + p_ - y % p_) % p_;
        }
        return trim_p(c);
    }
    std::pair<std::vector<uint32_t>, std::vector<uint32_t>> poly_divmod(std::vector<uint32_t> a,
                                                                        const std::vector<uint32_t>& b) const {
        return poly_divmod_p(p_, std::move(a), b);
    }

    static std::vector<uint32_t> poly_mul_p(uint32_t p, const std::vector<uint32_t>& a,
                                            const std::vector<uint32_t>& b) {
        std::vector<uint32_t> c(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j)
                c[i + j] = static_cast<uint32_t>((c[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
        return trim_p(c);
    }

    static std::pair<std::vector<uint32_t>, std::vector<uint32_t>> poly_divmod_p(
        uint32_t p, std::vector<uint32_t> a, const std::vector<uint32_t>& b) {
        a = trim_p(a);
        auto bb = trim_p(b);
        if (bb.size() == 1 && bb[0] == 0) throw error("division by zero polynomial");
        std::vector<uint32_t> q(a.size() > bb.size() ? a.size() - bb.size() + 1 : 1, 0);
        uint32_t invlead = 1;
        {
            uint32_t r = 1, x = bb.back(), e = p - 2;
            while (e) {
                if (e & 1) r = static_cast<uint32_t>(static_cast<uint64_t>(r) * x % p);
                x = static_cast<uint32_t>(static_cast<uint64_t>(x) * x % p);
                e >>= 1;
            }
            invlead = r;
        }
        while (a.size() >= bb.size() && !(a.size() == 1 && a[0] == 0)) {
            size_t shift = a.size() - bb.size();
            uint32_t c = static_cast<uint32_t>(static_cast<uint64_t>(a.back()) * invlead % p);
            if (c != 0) {
                q[shift] = c;
                for (size_t i = 0; i < bb.size(); ++i) {
                    uint64_t s = static_cast<uint64_t>(bb[i]) * c % p;
                    a[shift + i] = static_cast<uint32_t>((a[shift + i] + p - s) % p);
                }
            }
            a = trim_p(a);
            if (a.size() < bb.size()) break;
            if (a.back() == 0) a = trim_p(a);
        }
        return {trim_p(q), trim_p(a)};
    }

    static bool poly_irreducible(uint32_t p, const std::vector<uint32_t>& f) {
        uint32_t n = static_cast<uint32_t>(f.size()) - 1;
        if (n == 1) return true;
        // trial division by every monic polynomial of degree <= n/2
        for (uint32_t d = 1; 2 * d <= n; ++d) {
            uint64_t count = 1;
            for (uint32_t i = 0; i < d; ++i) count *= p;
            for (uint64_t idx = 0; idx < count; ++idx) {
                std::vector<uint32_t> g(d + 1, 0);
                uint64_t t = idx;
                for (uint32_t i = 0; i < d; ++i) {
                    g[i] = static_cast<uint32_t>(t % p);
                    t /= p;
                }
                g[d] = 1;
                auto [q, r] = poly_divmod_p(p, f, g);
                if (r.size() == 1 && r[0] == 0) return false;
            }
        }
        return true;
    }

    uint32_t p_;
    std::vector<uint32_t> modulus_;
};

}  // namespace pincurve
