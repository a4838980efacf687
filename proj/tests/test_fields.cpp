#include <catch2/catch_amalgamated.hpp>

#include "pincurve/field_descriptor.hpp"
#include "pincurve/finite_field.hpp"
#include "pincurve/function_field.hpp"
#include "pincurve/rationals.hpp"
#include "support.hpp"

using namespace pincurve;

namespace {

template <FieldLike F>
void check_axioms(const F& k, std::mt19937& rng, int trials) {
    for (int i = 0; i < trials; ++i) {
        auto a = testsupport::random_elem(k, rng);
        auto b = testsupport::random_elem(k, rng);
        auto c = testsupport::random_elem(k, rng);
        REQUIRE(k.eq(k.add(k.add(a, b), c), k.add(a, k.add(b, c))));
        REQUIRE(k.eq(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c))));
        REQUIRE(k.eq(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c))));
        REQUIRE(k.eq(k.add(a, k.neg(a)), k.zero()));
        REQUIRE(k.eq(k.mul(a, k.one()), a));
        if (!k.is_zero(a)) REQUIRE(k.eq(k.mul(a, k.inv(a)), k.one()));
    }
}

}  // namespace

TEST_CASE("field axioms hold on random samples", "[fields]") {
    std::mt19937 rng(20240811);
    SECTION("prime and Galois fields") {
        for (uint64_t q : {2, 3, 5, 7, 4, 9}) {
            auto k = FiniteField::of_order(q);
            check_axioms(k, rng, 1000);
        }
    }
    SECTION("rationals") {
        Rationals Q;
        check_axioms(Q, rng, 1000);
    }
    SECTION("rational function fields") {
        FunctionField<FiniteField> k2ab(FiniteField(2), {"a", "b"});
        check_axioms(k2ab, rng, 1000);
        FunctionField<FiniteField> k5a(FiniteField(5), {"a"});
        check_axioms(k5a, rng, 1000);
        FunctionField<Rationals> qa(Rationals{}, {"a"});
        check_axioms(qa, rng, 1000);
    }
}

TEST_CASE("canonical forms are unique", "[fields]") {
    FiniteField f3(3);
    FunctionField<FiniteField> k(f3, {"a", "b"});
    auto a = k.var(0), b = k.var(1);
    // (a^2 - b^2)/(a - b) reduces to a + b
    auto num = k.sub(k.mul(a, a), k.mul(b, b));
    auto frac = k.mul(num, k.inv(k.sub(a, b)));
    REQUIRE(k.eq(frac, k.add(a, b)));
    REQUIRE(frac == k.add(a, b));  // structural equality of canonical forms
    // denominators are monic under lex
    auto g = k.inv(k.from_int(2));
    auto h = k.mul(g, k.inv(a));
    REQUIRE(mp::eq(f3, h.den, k.var(0).num));
    // double inversion is the identity on canonical forms
    auto x = k.mul(k.add(a, k.one()), k.inv(k.add(b, k.from_int(2))));
    REQUIRE(k.inv(k.inv(x)) == x);
}

TEST_CASE("finite field construction and enumeration", "[fields]") {
    auto f9 = FiniteField::of_order(9);
    REQUIRE(f9.order() == 9);
    REQUIRE(f9.characteristic() == 3);
    // every element has a working inverse; enumeration covers the field
    for (std::size_t i = 1; i < 9; ++i) {
        auto x = f9.element_at(i);
        REQUIRE(f9.eq(f9.mul(x, f9.inv(x)), f9.one()));
        REQUIRE(f9.index_of(x) == i);
    }
    // frobenius x -> x^3 fixes exactly F_3
    int fixed = 0;
    for (std::size_t i = 0; i < 9; ++i)
        if (f9.eq(f9.frobenius(f9.element_at(i)), f9.element_at(i))) ++fixed;
    REQUIRE(fixed == 3);
    SECTION("reducible modulus is rejected") {
        REQUIRE_THROWS_AS(FiniteField(2, std::vector<uint32_t>{1, 0, 1}), parameter_error);
        REQUIRE_NOTHROW(FiniteField(2, std::vector<uint32_t>{1, 1, 1}));
        REQUIRE_THROWS_AS(FiniteField(4), parameter_error);
    }
}

TEST_CASE("generic parameter adjunction", "[fields]") {
    auto f2 = FieldDescriptor::prime_field(2);
    auto f2l = adjoin_generic_parameter(f2);
    REQUIRE(f2l.kind == FieldDescriptor::Kind::RationalFunctionField);
    REQUIRE(f2l.vars == std::vector<std::string>{"lambda"});
    REQUIRE(f2l.characteristic() == 2);
    auto ql = adjoin_generic_parameter(FieldDescriptor::rationals());
    REQUIRE(ql.characteristic() == 0);
    // transcendence: 1 + lambda != 1 in F_2(lambda)
    FunctionField<FiniteField> kk(FiniteField(2), {"lambda"});
    REQUIRE(!kk.eq(kk.add(kk.one(), kk.var(0)), kk.one()));
    // a second parameter is allowed, a third is not
    auto two = adjoin_generic_parameter(f2l);
    REQUIRE(two.vars.size() == 2);
    REQUIRE_THROWS_AS(adjoin_generic_parameter(two), unsupported);
}

TEST_CASE("field descriptors render and compare", "[fields]") {
    REQUIRE(FieldDescriptor::of_order(9).to_string() == "F_9");
    REQUIRE(FieldDescriptor::prime_field(5).to_string() == "F_5");
    auto rf = FieldDescriptor::function_field(FieldDescriptor::prime_field(2), {"a", "b"});
    REQUIRE(rf.to_string() == "F_2(a,b)");
    REQUIRE(rf == FieldDescriptor::function_field(FieldDescriptor::prime_field(2), {"a", "b"}));
    REQUIRE(!(rf == FieldDescriptor::prime_field(2)));
}
