#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace pincurve {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// The field Q with exact arbitrary-precision arithmetic.  Field objects
// follow a uniform protocol (zero/one/add/sub/mul/neg/inv/eq/is_zero/
// from_int/to_string) so that linear algebra and polynomial code can be
// written once; see field_concepts.hpp.
class Rationals {
public:
    using Elem = BigRat;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long n) const { return Elem(n); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return Elem(1) / a; }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    unsigned characteristic() const { return 0; }

    std::string to_string(const Elem& a) const { return a.str(); }

    bool operator==(const Rationals&) const { return true; }
};

}  // namespace pincurve
