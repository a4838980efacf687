#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pincurve/pinching.hpp"
#include "pincurve/rationals.hpp"

using namespace pincurve;

namespace {

template <FieldLike F>
up::UPoly<F> upoly_of(const F& k, std::initializer_list<long long> coeffs) {
    up::UPoly<F> f;
    for (auto c : coeffs) f.push_back(k.from_int(c));
    return up::trim(k, std::move(f));
}

}  // namespace

TEST_CASE("pinched chart rings and membership", "[pinching]") {
    Rationals Q;
    SECTION("node: chart k[x], I = (x^2 - x), z_sub = constants") {
        auto g = upoly_of(Q, {0, -1, 1});
        auto sub = echelon_basis(Q, 2, {unit_vec(Q, 2, 0)});
        auto r = pinch(Q, g, sub);
        REQUIRE(!chart_member(r, upoly_of(Q, {0, 1})));      // x not in A
        REQUIRE(chart_member(r, upoly_of(Q, {0, -1, 1})));   // x^2 - x in A
        REQUIRE(chart_member(r, upoly_of(Q, {7})));          // constants in A
    }
    SECTION("cusp: chart k[x], I = (x^2), z_sub = constants: A = k + x^2 k[x]") {
        auto r = pinch(Q, upoly_of(Q, {0, 0, 1}), echelon_basis(Q, 2, {unit_vec(Q, 2, 0)}));
        REQUIRE(chart_member(r, upoly_of(Q, {1})));
        REQUIRE(!chart_member(r, upoly_of(Q, {0, 1})));
        REQUIRE(chart_member(r, upoly_of(Q, {0, 0, 1})));
        REQUIRE(chart_member(r, upoly_of(Q, {0, 0, 0, 1})));
    }
    SECTION("the trivial pinch accepts everything") {
        Mat<Rationals> rows{unit_vec(Q, 2, 0), unit_vec(Q, 2, 1)};
        auto r = pinch(Q, upoly_of(Q, {0, 0, 1}), echelon_basis(Q, 2, rows));
        REQUIRE(chart_member(r, upoly_of(Q, {0, 1})));
        REQUIRE(chart_member(r, upoly_of(Q, {3, 5, 7, 11})));
    }
    SECTION("a non-subalgebra is rejected") {
        // span{1, x} in k[x]/(x^3): x*x = x^2 escapes
        auto g = upoly_of(Q, {0, 0, 0, 1});
        Mat<Rationals> rows{unit_vec(Q, 3, 0), unit_vec(Q, 3, 1)};
        REQUIRE_THROWS_AS(pinch(Q, g, echelon_basis(Q, 3, rows)), not_closed);
        // missing 1
        REQUIRE_THROWS_AS(pinch(Q, g, echelon_basis(Q, 3, {unit_vec(Q, 3, 2)})), not_closed);
    }
}

TEST_CASE("node in one chart: x^2 mod I", "[pinching]") {
    // x^2 = x mod (x^2 - x), and x is not in A: so x^2 is not in A either
    Rationals Q;
    auto r = pinch(Q, upoly_of(Q, {0, -1, 1}), echelon_basis(Q, 2, {unit_vec(Q, 2, 0)}));
    REQUIRE(!chart_member(r, upoly_of(Q, {0, 0, 1})));
}

TEST_CASE("conductors", "[pinching]") {
    Rationals Q;
    SECTION("node -> x^2 - x") {
        auto r = pinch(Q, upoly_of(Q, {0, -1, 1}), echelon_basis(Q, 2, {unit_vec(Q, 2, 0)}));
        REQUIRE(up::eq(Q, conductor(r), upoly_of(Q, {0, -1, 1})));
    }
    SECTION("cusp -> x^2") {
        auto r = pinch(Q, upoly_of(Q, {0, 0, 1}), echelon_basis(Q, 2, {unit_vec(Q, 2, 0)}));
        REQUIRE(up::eq(Q, conductor(r), upoly_of(Q, {0, 0, 1})));
    }
    SECTION("monomial curves: conductor = t^{tail start}, any ambient") {
        FiniteField f3(3);
        for (auto& z : enumerate_semigroups(5)) {
            if (z.is_full()) continue;
            for (uint32_t ambient : {z.tail_start(), z.tail_start() + 2}) {
                auto d = catalog_a1mc(f3, z, ambient);
                auto chart = chart_ring(d);
                REQUIRE(chart.has_value());
                auto g0 = conductor(*chart);
                REQUIRE(up::degree<FiniteField>(g0) == static_cast<int>(z.tail_start()));
                for (uint32_t i = 0; i < z.tail_start(); ++i) REQUIRE(f3.is_zero(g0[i]));
            }
        }
    }
}

TEST_CASE("catalog constructions", "[pinching]") {
    FiniteField f3(3);
    TailSemigroup nat;
    SECTION("p1n(0) is the un-pinched projective line") {
        auto d = catalog_p1n(f3, 0);
        REQUIRE(d.unpinched());
        REQUIRE(d.projective);
        REQUIRE(is_seminormal(d));
    }
    SECTION("the nodal curve: two rational points onto one") {
        auto d = catalog_p1prime(f3, nat, nat);
        REQUIRE(d.ztilde.dim() == 2);
        REQUIRE(d.z_sub.rank() == 1);
        REQUIRE(contains(f3, d.z_sub, d.ztilde.one()));
        REQUIRE(is_seminormal(d));
        REQUIRE(is_reduced(d.ztilde));
    }
    SECTION("conic descent onto a rational point: F_9 pinched to F_3") {
        auto d = catalog_conic_descent(f3, nat, true);
        REQUIRE(d.ztilde.dim() == 2);           // F_9 as a 2-dimensional F_3-algebra
        REQUIRE(d.z_sub.rank() == 1);           // the Frobenius-fixed subfield F_3
        REQUIRE(is_seminormal(d));
        // z_sub equals the fixed space of the semilinear involution
        Mat<FiniteField> diff_rows;
        for (uint32_t i = 0; i < d.ztilde.dim(); ++i) {
            auto e = d.ztilde.zero();
            e[i] = f3.one();
            auto im = d.ztilde.conjugate(e);
            Vec<FiniteField> row;
            for (uint32_t j = 0; j < d.ztilde.dim(); ++j) row.push_back(f3.sub(im[j], e[j]));
            diff_rows.push_back(std::move(row));
        }
        auto fixed = left_kernel(f3, diff_rows);
        auto fixed_space = echelon_basis(f3, d.ztilde.dim(), fixed);
        REQUIRE(fixed_space == d.z_sub);
    }
    SECTION("descent subalgebras are conjugation-stable with the branch dimension") {
        for (auto& z : enumerate_semigroups(3)) {
            for (bool primed : {false, true}) {
                auto d = catalog_conic_descent(f3, z, primed);
                if (d.unpinched()) continue;
                // stability under the semilinear involution
                for (auto& row : d.z_sub.rows)
                    REQUIRE(contains(f3, d.z_sub, d.ztilde.conjugate(row)));
                if (!primed) {
                    // Frobenius-fixed subspace of z_sub has F_q-dimension equal
                    // to the F_{q^2}-dimension of one branch
                    uint32_t m = d.ztilde.factors()[0].trunc;
                    Mat<FiniteField> diff_rows;
                    for (auto& row : d.z_sub.rows) {
                        auto im = d.ztilde.conjugate(row);
                        Vec<FiniteField> v;
                        for (uint32_t j = 0; j < d.ztilde.dim(); ++j)
                            v.push_back(f3.sub(im[j], row[j]));
                        diff_rows.push_back(std::move(v));
                    }
                    auto ker = left_kernel(f3, diff_rows);
                    REQUIRE(ker.size() == z.elements_below(m).size());
                }
            }
        }
    }
    SECTION("invalid parameters are rejected") {
        REQUIRE_THROWS_AS(TailSemigroup(5, {0, 2}), parameter_error);
        REQUIRE_THROWS_AS(FiniteField::of_order(6), parameter_error);
    }
}

TEST_CASE("conic descent splits over the quadratic extension", "[pinching]") {
    // base-changing the descended subalgebra to K = F_{q^2} must give the
    // two-branch shape: the full monomial pair for the unprimed curve, the
    // diagonal-plus-positive local form for the primed one
    for (uint32_t q : {2u, 3u, 5u}) {
        FiniteField k(q);
        FiniteField big = FiniteField::of_order(static_cast<uint64_t>(q) * q);
        for (auto& z : enumerate_semigroups(3)) {
            for (bool primed : {false, true}) {
                auto d = catalog_conic_descent(k, z, primed);
                if (d.unpinched()) continue;
                const auto& fac = d.ztilde.factors()[0];
                const uint32_t m = fac.trunc;
                // root of x^2 - s x - r in K, and its conjugate root^q
                auto s_in_big = big.from_int(fac.quad->s[0]);
                auto r_in_big = big.from_int(fac.quad->r[0]);
                std::optional<FiniteField::Elem> root;
                for (uint64_t i = 0; i < big.order(); ++i) {
                    auto x = big.element_at(i);
                    auto val = big.sub(big.mul(x, x),
                                       big.add(big.mul(s_in_big, x), r_in_big));
                    if (big.is_zero(val)) {
                        root = x;
                        break;
                    }
                }
                REQUIRE(root.has_value());
                auto conj = big.pow(*root, q);  // the Galois conjugate over F_q
                REQUIRE(!big.eq(*root, conj));  // separable quadratic
                // base change: omega^e t^i |-> (root^e t^i, conj^e t^i) in
                // K[t]/(t^m) x K[t]/(t^m)
                ArtinianAlgebra<FiniteField> split(
                    big, {{"t", m, std::nullopt}, {"u", m, std::nullopt}});
                Mat<FiniteField> image_rows;
                for (auto& row : d.z_sub.rows) {
                    Vec<FiniteField> v = zero_vec(big, split.dim());
                    for (uint32_t i = 0; i < m; ++i)
                        for (uint32_t e = 0; e < 2; ++e) {
                            auto c = row[d.ztilde.index(0, i, e)];
                            if (k.is_zero(c)) continue;
                            auto cc = big.from_int(c[0]);
                            auto w1 = e ? *root : big.one();
                            auto w2 = e ? conj : big.one();
                            v[split.index(0, i)] =
                                big.add(v[split.index(0, i)], big.mul(cc, w1));
                            v[split.index(1, i)] =
                                big.add(v[split.index(1, i)], big.mul(cc, w2));
                        }
                    image_rows.push_back(std::move(v));
                }
                auto image = echelon_basis(big, split.dim(), std::move(image_rows));
                // expected: the K-span of the catalog shape on two branches
                PinchDescriptor<FiniteField> expect =
                    primed ? catalog_p1prime(big, z, z, m, m)
                           : catalog_p1mncd(big, z, z, m, m);
                REQUIRE(image == expect.z_sub);
            }
        }
    }
}

TEST_CASE("seminormality across the catalog", "[pinching]") {
    FiniteField f2(2);
    TailSemigroup nat;
    TailSemigroup z2(2, {0});
    REQUIRE(is_seminormal(catalog_p1prime(f2, nat, nat)));        // node
    REQUIRE(!is_seminormal(catalog_p1n(f2, 2)));                  // cusp
    REQUIRE(is_seminormal(catalog_p1n(f2, 0)));                   // P^1
    REQUIRE(!is_seminormal(catalog_a1mc(f2, z2)));
    REQUIRE(!is_seminormal(catalog_p1mncd(f2, z2, nat)));
    REQUIRE(is_seminormal(catalog_conic_descent(f2, nat, true)));
    REQUIRE(!is_seminormal(catalog_conic_descent(f2, z2, false)));
}

TEST_CASE("minimal presentation", "[pinching]") {
    FiniteField f3(3);
    TailSemigroup z3(3, {0});
    SECTION("ambient 5 truncates to the tail start 3") {
        auto big = catalog_a1mc(f3, z3, 5);
        auto small = minimal_presentation(big);
        REQUIRE(small.ztilde.dim() == 3);
        REQUIRE(minimal_presentation(small) == small);  // idempotent
        // conductor degree is invariant
        REQUIRE(up::degree<FiniteField>(conductor(*chart_ring(big))) == 3);
        REQUIRE(up::degree<FiniteField>(conductor(*chart_ring(small))) == 3);
        REQUIRE(is_seminormal(big) == is_seminormal(small));
    }
    SECTION("p1n is already minimal") {
        auto d = catalog_p1n(f3, 3);
        REQUIRE(minimal_presentation(d) == d);
    }
    SECTION("two-point curves truncate per factor") {
        TailSemigroup nat;
        auto big = catalog_p1mncd(f3, z3, nat, 4, 2);
        REQUIRE(big.ztilde.dim() == 6);
        auto small = minimal_presentation(big);
        REQUIRE(small.ztilde.dim() == 3);
        REQUIRE(small.ztilde.factors().size() == 1);
    }
}

TEST_CASE("conductor square recovers the minimal pinch", "[pinching]") {
    FiniteField f2(2);
    auto check_roundtrip = [&](const PinchDescriptor<FiniteField>& d) {
        auto minimal = minimal_presentation(d);
        auto chart = chart_ring(d);
        if (!chart) {
            REQUIRE(minimal.unpinched());
            return;
        }
        auto g0 = conductor(*chart);
        REQUIRE(up::degree<FiniteField>(g0) == static_cast<int>(minimal.ztilde.dim()));
        // the conductor contains (g), so A mod (g0) is the span of the
        // lifted z_sub rows; its dimension is the minimal subalgebra's
        const auto& k = chart->base;
        uint32_t d0 = static_cast<uint32_t>(g0.size()) - 1;
        auto quot = up::mod(k, chart->ideal_gen, g0);
        REQUIRE(up::is_zero<FiniteField>(quot));  // g0 divides g
        Mat<FiniteField> rows;
        for (auto& r : chart->sub.rows) {
            up::UPoly<FiniteField> f(r.begin(), r.end());
            auto rem = up::mod(k, up::trim(k, std::move(f)), g0);
            Vec<FiniteField> v(d0, k.zero());
            for (size_t i = 0; i < rem.size(); ++i) v[i] = rem[i];
            rows.push_back(std::move(v));
        }
        auto span = echelon_basis(k, d0, std::move(rows));
        REQUIRE(span.rank() == minimal.z_sub.rank());
    };
    TailSemigroup nat;
    for (auto& z : enumerate_semigroups(4)) {
        check_roundtrip(catalog_a1mc(f2, z));
        check_roundtrip(catalog_a1mc(f2, z, z.tail_start() + 2));
        check_roundtrip(catalog_p1mncd(f2, z, nat));
        check_roundtrip(catalog_p1prime(f2, z, nat));
        check_roundtrip(catalog_conic_descent(f2, z, true));
    }
}

TEST_CASE("the conductor is the largest chart ideal inside A", "[pinching]") {
    // independent of the linear-algebra route: every bounded multiple of the
    // conductor is a member, and every proper monic divisor admits a
    // bounded multiple that escapes
    FiniteField f3(3);
    TailSemigroup nat, z3(3, {0}), z42(4, {0, 2});
    std::vector<PinchDescriptor<FiniteField>> ds{
        catalog_p1prime(f3, nat, nat), catalog_p1n(f3, 2), catalog_a1mc(f3, z3),
        catalog_a1mc(f3, z42), catalog_conic_descent(f3, nat, true)};
    for (auto& d : ds) {
        auto chart = chart_ring(d);
        auto g0 = conductor(*chart);
        const uint32_t deg = static_cast<uint32_t>(chart->ideal_gen.size()) - 1;
        // membership of all multiples f * g0 with deg f <= deg + 2
        for (uint32_t fdeg = 0; fdeg <= deg + 2; ++fdeg)
            for (uint64_t lead = 1; lead < f3.order(); ++lead) {
                auto f = up::monomial(f3, fdeg, f3.element_at(lead));
                REQUIRE(chart_member(*chart, up::mul(f3, f, g0)));
            }
        // maximality: enumerate monic divisors h of g0 of lower degree and
        // find an escaping multiple
        const int d0 = up::degree<FiniteField>(g0);
        std::vector<up::UPoly<FiniteField>> divisors;
        // monic polynomials of degree < d0 dividing g0 (scan all of degree <= d0-1)
        for (int hd = 1; hd < d0; ++hd) {
            uint64_t count = 1;
            for (int i = 0; i < hd; ++i) count *= f3.order();
            for (uint64_t idx = 0; idx < count; ++idx) {
                up::UPoly<FiniteField> h(hd + 1, f3.zero());
                uint64_t t = idx;
                for (int i = 0; i < hd; ++i) {
                    h[i] = f3.element_at(t % f3.order());
                    t /= f3.order();
                }
                h[hd] = f3.one();
                if (up::is_zero<FiniteField>(up::mod(f3, g0, h))) divisors.push_back(h);
            }
        }
        for (auto& h : divisors) {
            bool escapes = false;
            for (uint32_t fdeg = 0; fdeg <= deg + 2 && !escapes; ++fdeg)
                for (uint64_t lead = 1; lead < f3.order() && !escapes; ++lead) {
                    auto f = up::monomial(f3, fdeg, f3.element_at(lead));
                    if (!chart_member(*chart, up::mul(f3, f, h))) escapes = true;
                }
            REQUIRE(escapes);
        }
    }
}

TEST_CASE("pinch membership is multiplicatively closed", "[pinching]") {
    FiniteField f5(5);
    std::mt19937 rng(17);
    TailSemigroup nat, z4(4, {0, 2});
    std::vector<PinchDescriptor<FiniteField>> ds{
        catalog_a1mc(f5, z4), catalog_p1prime(f5, nat, nat),
        catalog_conic_descent(f5, TailSemigroup(2, {0}), false)};
    for (auto& d : ds) {
        auto chart = chart_ring(d);
        const uint64_t q = f5.order();
        std::uniform_int_distribution<std::size_t> coef(0, q - 1);
        std::uniform_int_distribution<int> deg(0, 6);
        auto random_member = [&]() {
            // random subalgebra combination plus a random multiple of the ideal
            up::UPoly<FiniteField> f{};
            for (auto& row : chart->sub.rows) {
                up::UPoly<FiniteField> lift(row.begin(), row.end());
                f = up::add(f5, f, up::scale(f5, up::trim(f5, std::move(lift)),
                                             f5.element_at(coef(rng))));
            }
            auto noise = up::monomial(f5, deg(rng), f5.element_at(coef(rng)));
            return up::add(f5, f, up::mul(f5, noise, chart->ideal_gen));
        };
        for (int i = 0; i < 1000; ++i) {
            auto a = random_member(), b = random_member();
            REQUIRE(chart_member(*chart, a));
            REQUIRE(chart_member(*chart, b));
            REQUIRE(chart_member(*chart, up::mul(f5, a, b)));
        }
    }
}

TEST_CASE("cartesian slice of the pinched ring", "[pinching]") {
    // A = chart x_{chart/I} z_sub: adding ideal elements never changes
    // membership, and the dimension of the degree-D slice is
    // rank(z_sub) + (D - deg g) + 1 monomials... checked as membership laws
    Rationals Q;
    auto g = upoly_of(Q, {0, 0, 0, 1});  // x^3
    auto sub = echelon_basis(Q, 3, {unit_vec(Q, 3, 0)});
    auto r = pinch(Q, g, sub);
    for (int d = 0; d <= 6; ++d) {
        auto f = up::monomial(Q, d, Q.one());
        bool member = chart_member(r, f);
        REQUIRE(member == (d == 0 || d >= 3));
        auto shifted = up::add(Q, f, up::mul(Q, g, upoly_of(Q, {1, 2})));
        REQUIRE(chart_member(r, shifted) == member);
    }
}
