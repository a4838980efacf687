#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "pincurve/rationals.hpp"
#include "pincurve/stability.hpp"

using namespace pincurve;

namespace {

// the exhaustive filter: unital subalgebras passing the generic lambda check
std::vector<Subspace<FiniteField>> stable_subalgebras_brute_force(
    const FiniteField& k, const ArtinianAlgebra<FiniteField>& amb) {
    std::vector<Subspace<FiniteField>> out;
    for (auto& s : enumerate_all_subspaces(k, amb.dim()))
        if (is_unital_subalgebra(amb, s) && is_gm_stable(amb, s)) out.push_back(s);
    return out;
}

}  // namespace

TEST_CASE("generic-parameter Gm stability", "[stability]") {
    FiniteField f2(2);
    ArtinianAlgebra<FiniteField> a3(f2, {{"t", 3, std::nullopt}});
    SECTION("span{1, t^2} is stable") {
        auto s = echelon_basis(f2, 3, {unit_vec(f2, 3, 0), unit_vec(f2, 3, 2)});
        REQUIRE(is_gm_stable(a3, s));
    }
    SECTION("span{1, t + t^2} is not") {
        Vec<FiniteField> v{f2.zero(), f2.one(), f2.one()};
        auto s = echelon_basis(f2, 3, {unit_vec(f2, 3, 0), v});
        REQUIRE(!is_gm_stable(a3, s));
    }
    SECTION("the full algebra is stable") {
        Mat<FiniteField> rows;
        for (uint32_t i = 0; i < 3; ++i) rows.push_back(unit_vec(f2, 3, i));
        REQUIRE(is_gm_stable(a3, echelon_basis(f2, 3, rows)));
    }
    SECTION("three factors are unsupported") {
        ArtinianAlgebra<FiniteField> big(
            f2, {{"t", 1, std::nullopt}, {"u", 1, std::nullopt}, {"v", 1, std::nullopt}});
        REQUIRE_THROWS_AS(is_gm_stable(big, echelon_basis(f2, 3, {big.one()})), unsupported);
    }
    SECTION("the diagonal line in k x k is stable but not monomial") {
        ArtinianAlgebra<FiniteField> kk(f2, {{"t", 1, std::nullopt}, {"u", 1, std::nullopt}});
        auto diag = echelon_basis(f2, 2, {kk.one()});
        REQUIRE(is_gm_stable(kk, diag));
        REQUIRE(!is_monomial_span(f2, diag));
    }
}

TEST_CASE("stability equals homogeneity in one factor", "[stability]") {
    // exhaustive over subspaces of F_2[t]/(t^m), m <= 5
    FiniteField f2(2);
    for (uint32_t m = 1; m <= 5; ++m) {
        ArtinianAlgebra<FiniteField> amb(f2, {{"t", m, std::nullopt}});
        for (auto& s : enumerate_all_subspaces(f2, m))
            REQUIRE(is_gm_stable(amb, s) == is_monomial_span(f2, s));
    }
}

TEST_CASE("two-factor stable subspaces decompose along weights", "[stability]") {
    // on k[t]/(t^m) x k[u]/(u^n) the weights i and -j only collide at 0, so a
    // stable subspace is the span of the monomials it contains plus its
    // intersection with the two-dimensional weight-zero plane; exhaustive
    // over F_2 with m = n = 2
    FiniteField f2(2);
    ArtinianAlgebra<FiniteField> amb(f2, {{"t", 2, std::nullopt}, {"u", 2, std::nullopt}});
    const uint32_t dim = amb.dim();
    const uint32_t w0a = amb.index(0, 0), w0b = amb.index(1, 0);
    for (auto& s : enumerate_all_subspaces(f2, dim)) {
        Mat<FiniteField> predicted_rows;
        // monomial unit vectors inside s
        for (uint32_t i = 0; i < dim; ++i)
            if (contains(f2, s, unit_vec(f2, dim, i)))
                predicted_rows.push_back(unit_vec(f2, dim, i));
        // s intersected with the weight-zero plane: combinations of the rows
        // supported on the two degree-zero coordinates
        Mat<FiniteField> restricted;
        for (auto& row : s.rows) {
            Vec<FiniteField> r;
            for (uint32_t i = 0; i < dim; ++i)
                if (i != w0a && i != w0b) r.push_back(row[i]);
            restricted.push_back(std::move(r));
        }
        for (auto& combo : left_kernel(f2, restricted)) {
            Vec<FiniteField> v = zero_vec(f2, dim);
            for (size_t r = 0; r < s.rows.size(); ++r)
                for (uint32_t i = 0; i < dim; ++i)
                    v[i] = f2.add(v[i], f2.mul(combo[r], s.rows[r][i]));
            predicted_rows.push_back(std::move(v));
        }
        auto predicted = echelon_basis(f2, dim, std::move(predicted_rows));
        REQUIRE(is_gm_stable(amb, s) == (predicted == s));
    }
}

TEST_CASE("classification of Gm-stable subalgebras", "[stability]") {
    FiniteField f2(2);
    SECTION("m = 1: only k") {
        auto recs = classify_gm_stable(f2, 1);
        REQUIRE(recs.size() == 1);
        REQUIRE(recs[0].basis.rank() == 1);
    }
    SECTION("m = 3: bases {1,t,t^2}, {1,t^2}, {1}") {
        auto recs = classify_gm_stable(f2, 3);
        REQUIRE(recs.size() == 3);
        std::set<uint32_t> ranks;
        for (auto& r : recs) {
            ranks.insert(r.basis.rank());
            REQUIRE(is_monomial_span(f2, r.basis));
            REQUIRE(is_gm_stable(r.ambient, r.basis));
            REQUIRE(is_unital_subalgebra(r.ambient, r.basis));
        }
        REQUIRE(ranks == std::set<uint32_t>{1, 2, 3});
    }
    SECTION("oracle equivalence over F_2, m <= 3 (the full ranges run in acceptance)") {
        for (uint32_t m = 1; m <= 3; ++m) {
            ArtinianAlgebra<FiniteField> amb(f2, {{"t", m, std::nullopt}});
            auto brute = stable_subalgebras_brute_force(f2, amb);
            auto classified = classify_gm_stable(f2, m);
            std::set<Mat<FiniteField>> lhs, rhs;
            for (auto& s : brute) lhs.insert(s.rows);
            for (auto& r : classified) rhs.insert(r.basis.rows);
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("local Gm-stable subalgebras of two factors", "[stability]") {
    FiniteField f2(2);
    SECTION("(1,1): only the diagonal") {
        auto recs = classify_gm_stable_local(f2, 1, 1);
        REQUIRE(recs.size() == 1);
        REQUIRE(recs[0].basis.rank() == 1);
        REQUIRE(contains(f2, recs[0].basis, recs[0].ambient.one()));
    }
    SECTION("(2,2): four records, all local, matching brute force") {
        auto recs = classify_gm_stable_local(f2, 2, 2);
        REQUIRE(recs.size() == 4);
        ArtinianAlgebra<FiniteField> amb(f2, {{"t", 2, std::nullopt}, {"u", 2, std::nullopt}});
        std::set<Mat<FiniteField>> produced;
        for (auto& r : recs) {
            REQUIRE(is_unital_subalgebra(r.ambient, r.basis));
            REQUIRE(is_gm_stable(r.ambient, r.basis));
            REQUIRE(has_unique_maximal_ideal(r.ambient, r.basis));
            produced.insert(r.basis.rows);
        }
        REQUIRE(produced.size() == 4);
        std::set<Mat<FiniteField>> brute;
        for (auto& s : enumerate_all_subspaces(f2, amb.dim()))
            if (is_unital_subalgebra(amb, s) && is_gm_stable(amb, s) &&
                has_unique_maximal_ideal(amb, s))
                brute.insert(s.rows);
        REQUIRE(brute == produced);
    }
    SECTION("the full product k x k is not local") {
        ArtinianAlgebra<FiniteField> amb(f2, {{"t", 1, std::nullopt}, {"u", 1, std::nullopt}});
        Mat<FiniteField> rows{unit_vec(f2, 2, 0), unit_vec(f2, 2, 1)};
        REQUIRE(!has_unique_maximal_ideal(amb, echelon_basis(f2, 2, rows)));
    }
    SECTION("(2,2) over F_3 also matches brute force") {
        FiniteField f3(3);
        auto recs = classify_gm_stable_local(f3, 2, 2);
        REQUIRE(recs.size() == 4);
        ArtinianAlgebra<FiniteField> amb(f3, {{"t", 2, std::nullopt}, {"u", 2, std::nullopt}});
        std::set<Mat<FiniteField>> produced, brute;
        for (auto& r : recs) produced.insert(r.basis.rows);
        for (auto& s : enumerate_all_subspaces(f3, amb.dim()))
            if (is_unital_subalgebra(amb, s) && is_gm_stable(amb, s) &&
                has_unique_maximal_ideal(amb, s))
                brute.insert(s.rows);
        REQUIRE(brute == produced);
    }
}

TEST_CASE("Ga stability in characteristic zero", "[stability]") {
    Rationals Q;
    SECTION("span{1, u^2, u^3} in Q[u]/(u^4) is stable") {
        ArtinianAlgebra<Rationals> amb(Q, {{"u", 4, std::nullopt}});
        auto s = echelon_basis(Q, 4, {unit_vec(Q, 4, 0), unit_vec(Q, 4, 2), unit_vec(Q, 4, 3)});
        REQUIRE(is_ga_stable_char0(amb, s));
    }
    SECTION("span{1, u} in Q[u]/(u^3) is not") {
        ArtinianAlgebra<Rationals> amb(Q, {{"u", 3, std::nullopt}});
        auto s = echelon_basis(Q, 3, {unit_vec(Q, 3, 0), unit_vec(Q, 3, 1)});
        REQUIRE(!is_ga_stable_char0(amb, s));
    }
    SECTION("the whole algebra is stable") {
        ArtinianAlgebra<Rationals> amb(Q, {{"u", 4, std::nullopt}});
        Mat<Rationals> rows;
        for (uint32_t i = 0; i < 4; ++i) rows.push_back(unit_vec(Q, 4, i));
        REQUIRE(is_ga_stable_char0(amb, echelon_basis(Q, 4, rows)));
    }
    SECTION("positive characteristic is refused") {
        FiniteField f2(2);
        ArtinianAlgebra<FiniteField> amb(f2, {{"u", 3, std::nullopt}});
        REQUIRE_THROWS_AS(is_ga_stable_char0(amb, echelon_basis(f2, 3, {amb.one()})),
                          unsupported);
        REQUIRE_THROWS_AS(classify_ga_stable_char0(f2, 3), unsupported);
    }
}

TEST_CASE("the Ga substitution matches the closed binomial form", "[stability]") {
    // (u/(1+au))^i = sum_j (-1)^{j-i} C(j-1, j-i) a^{j-i} u^j, truncated
    Rationals Q;
    const uint32_t n = 6;
    FunctionField<Rationals> kk(Q, {"a"});
    ArtinianAlgebra<FunctionField<Rationals>> ext(kk, {{"u", n, std::nullopt}});
    auto powers = ga_substitution_powers(kk, ext, n);
    auto binom = [](uint32_t top, uint32_t bot) {
        BigInt r = 1;
        for (uint32_t i = 0; i < bot; ++i) r = r * (top - i) / (i + 1);
        return r;
    };
    for (uint32_t i = 1; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) {
            auto expect = kk.zero();
            if (j >= i) {
                BigRat c{binom(j - 1, j - i)};
                if ((j - i) % 2 == 1) c = -c;
                expect = kk.mul(kk.from_base(c), kk.var(0, j - i));
            }
            REQUIRE(kk.eq(powers[i][j], expect));
        }
}

TEST_CASE("classification of Ga-stable subalgebras", "[stability]") {
    Rationals Q;
    SECTION("N = 1: only k") {
        auto recs = classify_ga_stable_char0(Q, 1);
        REQUIRE(recs.size() == 1);
        REQUIRE(recs[0].basis.rank() == 1);
    }
    SECTION("N = 3: tails n1 in {1,2,3} with bases {1,u,u^2}, {1,u^2}, {1}") {
        auto recs = classify_ga_stable_char0(Q, 3);
        REQUIRE(recs.size() == 3);
        for (auto& r : recs) {
            REQUIRE(is_ga_stable_char0(r.ambient, r.basis));
            REQUIRE(is_unital_subalgebra(r.ambient, r.basis));
            REQUIRE(r.basis.rank() == 3 - r.tail_start + 1);
        }
        // pairwise distinct
        for (size_t i = 0; i < recs.size(); ++i)
            for (size_t j = i + 1; j < recs.size(); ++j)
                REQUIRE(!(recs[i].basis == recs[j].basis));
    }
    SECTION("non-tail monomial subalgebras fail the check") {
        // span{1, u} in Q[u]/(u^3): a subalgebra? u*u = u^2 not in span, so
        // take span{1, u, u^2}... that is the full tail.  Use span{1, u^3}
        // in Q[u]/(u^5): closed (u^3 * u^3 = 0) but not a tail.
        ArtinianAlgebra<Rationals> amb(Q, {{"u", 5, std::nullopt}});
        auto s = echelon_basis(Q, 5, {unit_vec(Q, 5, 0), unit_vec(Q, 5, 3)});
        REQUIRE(is_unital_subalgebra(amb, s));
        REQUIRE(!is_ga_stable_char0(amb, s));
    }
}
