#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "pincurve/semigroup.hpp"

using namespace pincurve;

TEST_CASE("tail semigroup validation", "[semigroups]") {
    REQUIRE(TailSemigroup::validate(0, {}));          // N itself
    REQUIRE(!TailSemigroup::validate(5, {0, 2}));     // 2+2 = 4 missing
    REQUIRE(TailSemigroup::validate(4, {0}));
    REQUIRE(TailSemigroup::validate(4, {0, 2}));      // 2+2 = 4 lands in the tail
    REQUIRE(!TailSemigroup::validate(1, {}));         // m = 1 is never canonical
    REQUIRE(!TailSemigroup::validate(1, {0}));
    REQUIRE(!TailSemigroup::validate(3, {}));         // 0 must be sporadic when m >= 2
    REQUIRE(!TailSemigroup::validate(4, {0, 3}));     // c_p < m-1 fails
    REQUIRE(!TailSemigroup::validate(4, {1, 2}));     // must start at 0
    REQUIRE_THROWS_AS(TailSemigroup(5, {0, 2}), parameter_error);
}

TEST_CASE("membership", "[semigroups]") {
    TailSemigroup z3(3, {0});
    REQUIRE(z3.contains(0));
    REQUIRE(!z3.contains(2));
    REQUIRE(z3.contains(3));
    REQUIRE(TailSemigroup{}.contains(7));
    REQUIRE(z3.elements_below(5) == std::vector<uint32_t>{0, 3, 4});
}

TEST_CASE("canonicalization", "[semigroups]") {
    SECTION("{0} u {r >= 3} -> (3, (0))") {
        auto z = canonicalize_semigroup({0}, 3);
        REQUIRE(z.tail_start() == 3);
        REQUIRE(z.sporadic() == std::vector<uint32_t>{0});
    }
    SECTION("N -> (0, ())") {
        auto z = canonicalize_semigroup({0, 1, 2, 3}, 4);
        REQUIRE(z.is_full());
    }
    SECTION("{0,2} u {r >= 4} -> (4, (0,2))") {
        auto z = canonicalize_semigroup({0, 2}, 4);
        REQUIRE(z.tail_start() == 4);
        REQUIRE(z.sporadic() == std::vector<uint32_t>{0, 2});
    }
    SECTION("non-closed input is rejected") {
        REQUIRE_THROWS_AS(canonicalize_semigroup({0, 2}, 5), not_closed);
        REQUIRE_THROWS_AS(canonicalize_semigroup({1, 2}, 4), not_closed);
    }
}

TEST_CASE("enumeration", "[semigroups]") {
    REQUIRE(enumerate_semigroups(0).size() == 1);
    auto e2 = enumerate_semigroups(2);
    REQUIRE(e2.size() == 2);
    REQUIRE(e2[0].is_full());
    REQUIRE(e2[1] == TailSemigroup(2, {0}));
    auto e3 = enumerate_semigroups(3);
    REQUIRE(e3.size() == 3);
    REQUIRE(e3[2] == TailSemigroup(3, {0}));
    SECTION("every member validates; output is sorted and duplicate-free") {
        auto all = enumerate_semigroups(10);
        for (auto& z : all)
            REQUIRE(TailSemigroup::validate(z.tail_start(), z.sporadic()));
        for (size_t i = 0; i + 1 < all.size(); ++i) REQUIRE(all[i] < all[i + 1]);
    }
    SECTION("the guard is enforced") {
        REQUIRE_THROWS_AS(enumerate_semigroups(25), guard_exceeded);
    }
}

TEST_CASE("round trip through membership sets", "[semigroups]") {
    // canonicalize . membership-set = identity for all m <= 10
    for (auto& z : enumerate_semigroups(10)) {
        uint32_t bound = z.tail_start() + 3;
        auto back = canonicalize_semigroup(z.elements_below(bound), bound);
        REQUIRE(back == z);
    }
}

TEST_CASE("enumeration agrees with brute-force subset filtering", "[semigroups]") {
    // all subsets of {0,...,B-1}, closed off with a tail from B, canonicalized
    const uint32_t m_max = 8, bound = m_max;
    std::set<TailSemigroup> brute;
    for (uint32_t mask = 0; mask < (1u << bound); ++mask) {
        std::vector<uint32_t> members;
        for (uint32_t r = 0; r < bound; ++r)
            if (mask & (1u << r)) members.push_back(r);
        try {
            auto z = canonicalize_semigroup(members, bound);
            if (z.tail_start() <= m_max) brute.insert(z);
        } catch (const error&) {
            continue;
        }
    }
    auto listed = enumerate_semigroups(m_max);
    REQUIRE(brute == std::set<TailSemigroup>(listed.begin(), listed.end()));
}

TEST_CASE("closure is decided below 2m", "[semigroups]") {
    // pair sums below m suffice: verify against the full window [0, 2m)
    for (auto& z : enumerate_semigroups(8)) {
        uint32_t m = z.tail_start();
        auto below = z.elements_below(2 * m + 1);
        for (auto x : below)
            for (auto y : below)
                if (x + y < 2 * m) REQUIRE(z.contains(x + y));
    }
}
