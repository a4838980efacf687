#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "pincurve/errors.hpp"

namespace pincurve {

// Cofinite subsemigroup of (N, +) containing 0, written as its sporadic
// elements c_0 < ... < c_p together with the full tail {r >= m}.  Canonical
// shape: m = 0 forces c empty (the semigroup is N); otherwise c starts at 0
// and ends strictly below m - 1, which makes (m, c) unique.  m = 1 can never
// occur: c would have to contain 0 with 0 < m - 1 = 0.
class TailSemigroup {
public:
    TailSemigroup() = default;  // the full semigroup N

    TailSemigroup(uint32_t m, std::vector<uint32_t> c) : m_(m), c_(std::move(c)) {
        if (!valid_shape(m_, c_) || !closed(m_, c_))
            throw parameter_error("not a tail semigroup: " + render(m_, c_));
    }

    static bool validate(uint32_t m, const std::vector<uint32_t>& c) {
        return valid_shape(m, c) && closed(m, c);
    }

    uint32_t tail_start() const { return m_; }
    const std::vector<uint32_t>& sporadic() const { return c_; }
    bool is_full() const { return m_ == 0; }

    bool contains(uint32_t r) const {
        if (r >= m_) return true;
        return std::binary_search(c_.begin(), c_.end(), r);
    }

    // Elements below the bound, ascending.
    std::vector<uint32_t> elements_below(uint32_t bound) const {
        std::vector<uint32_t> out;
        for (uint32_t r = 0; r < bound; ++r)
            if (contains(r)) out.push_back(r);
        return out;
    }

    bool operator==(const TailSemigroup&) const = default;
    bool operator<(const TailSemigroup& o) const {
        if (m_ != o.m_) return m_ < o.m_;
        return c_ < o.c_;
    }

    std::string to_string() const { return render(m_, c_); }

private:
    static std::string render(uint32_t m, const std::vector<uint32_t>& c) {
        std::string s = "{";
        for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
        s += "}";
        if (m == 0) return "N";
        return s + " u {r>=" + std::to_string(m) + "}";
    }

    static bool valid_shape(uint32_t m, const std::vector<uint32_t>& c) {
        if (m == 0) return c.empty();
        if (m == 1) return false;
        if (c.empty() || c.front() != 0) return false;
        for (size_t i = 0; i + 1 < c.size(); ++i)
            if (c[i] >= c[i + 1]) return false;
        return c.back() < m - 1;
    }

    // Additive closure, decided on the finitely many pair sums below m.
    static bool closed(uint32_t m, const std::vector<uint32_t>& c) {
        for (auto a : c)
            for (auto b : c) {
                uint32_t s = a + b;
                if (s >= m) continue;
                if (!std::binary_search(c.begin(), c.end(), s)) return false;
            }
        return true;
    }

    uint32_t m_ = 0;
    std::vector<uint32_t> c_;
};

// The unique (m, c) presentation of a cofinite subsemigroup given by its
// members below `bound` plus a guaranteed tail from `bound` on.
inline TailSemigroup canonicalize_semigroup(const std::vector<uint32_t>& below,
                                            uint32_t bound) {
    std::set<uint32_t> s(below.begin(), below.end());
    for (auto r : s)
        if (r >= bound) throw parameter_error("listed element at or above the tail bound");
    if (!s.count(0)) throw not_closed("semigroup must contain 0");
    auto member = [&](uint32_t r) { return r >= bound || s.count(r) > 0; };
    // closure check: sums of members below the bound must be members
    for (auto a : s)
        for (auto b : s) {
            if (a + b < bound && !member(a + b))
                throw not_closed("input set is not closed under addition: " +
                                 std::to_string(a) + "+" + std::to_string(b) + " missing");
        }
    // minimal tail start = one past the largest gap
    uint32_t m = 0;
    for (uint32_t r = 0; r < bound; ++r)
        if (!member(r)) m = r + 1;
    std::vector<uint32_t> c;
    for (uint32_t r = 0; r < m; ++r)
        if (member(r)) c.push_back(r);
    if (m == 0) return TailSemigroup{};
    return TailSemigroup{m, c};
}

// All tail semigroups with tail start <= m_max, lexicographic in (m, c).
inline std::vector<TailSemigroup> enumerate_semigroups(uint32_t m_max, uint32_t guard = 20) {
    if (m_max > guard)
        throw guard_exceeded("semigroup enumeration bound " + std::to_string(m_max) +
                             " exceeds guard " + std::to_string(guard));
    std::vector<TailSemigroup> out{TailSemigroup{}};
    for (uint32_t m = 2; m <= m_max; ++m) {
        // candidate sporadic sets: {0} plus any subset of {1, ..., m-2}
        uint32_t free = m - 2;  // candidates 1..m-2
        for (uint32_t mask = 0; mask < (1u << free); ++mask) {
            std::vector<uint32_t> c{0};
            for (uint32_t b = 0; b < free; ++b)
                if (mask & (1u << b)) c.push_back(b + 1);
            if (TailSemigroup::validate(m, c)) out.push_back(TailSemigroup{m, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pincurve
