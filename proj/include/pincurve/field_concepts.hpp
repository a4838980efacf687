#pragma once

#include <concepts>
#include <string>

namespace pincurve {

// Protocol shared by all coefficient fields.  A field object carries the
// arithmetic context (modulus, variable names, ...); elements are plain
// values with no back-pointer, so they stay cheap to copy and hash-free
// structural equality works.
template <typename F>
concept FieldLike = requires(const F& f, const typename F::Elem& a, const typename F::Elem& b) {
    { f.zero() } -> std::convertible_to<typename F::Elem>;
    { f.one() } -> std::convertible_to<typename F::Elem>;
    { f.from_int(1LL) } -> std::convertible_to<typename F::Elem>;
    { f.add(a, b) } -> std::convertible_to<typename F::Elem>;
    { f.sub(a, b) } -> std::convertible_to<typename F::Elem>;
    { f.mul(a, b) } -> std::convertible_to<typename F::Elem>;
    { f.neg(a) } -> std::convertible_to<typename F::Elem>;
    { f.inv(a) } -> std::convertible_to<typename F::Elem>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.eq(a, b) } -> std::convertible_to<bool>;
    { f.characteristic() } -> std::convertible_to<unsigned>;
    { f.to_string(a) } -> std::convertible_to<std::string>;
};

// Fields whose elements can be exhaustively enumerated in a canonical order.
template <typename F>
concept EnumerableField = FieldLike<F> && requires(const F& f, std::size_t i) {
    { f.order() } -> std::convertible_to<unsigned long long>;
    { f.element_at(i) } -> std::convertible_to<typename F::Elem>;
};

}  // namespace pincurve
