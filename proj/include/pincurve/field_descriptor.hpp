#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pincurve/finite_field.hpp"
#include "pincurve/function_field.hpp"
#include "pincurve/rationals.hpp"

namespace pincurve {

// Runtime description of a coefficient field, the serialization-facing
// counterpart of the concrete field objects.
struct FieldDescriptor {
    enum class Kind {
        Rationals,
        PrimeField,
        GaloisField,
        RationalFunctionField,
        PurelyInseparableExt,
    };

    Kind kind = Kind::Rationals;
    uint32_t p = 0;                       // characteristic (0 for Q)
    uint32_t n = 1;                       // extension degree (GaloisField)
    std::vector<uint32_t> modulus;        // GaloisField: monic irreducible over F_p
    std::vector<std::string> vars;        // RationalFunctionField
    std::shared_ptr<FieldDescriptor> base;  // nested base field
    struct RootGen {
        std::string radicand;  // rendered base element (monomial scope)
        uint32_t root_order = 2;
        bool operator==(const RootGen&) const = default;
    };
    std::vector<RootGen> generators;  // PurelyInseparableExt

    static FieldDescriptor rationals() { return {}; }
    static FieldDescriptor prime_field(uint32_t p) {
        FieldDescriptor d;
        d.kind = Kind::PrimeField;
        d.p = p;
        if (!FiniteField::is_prime(p)) throw parameter_error("characteristic must be prime");
        return d;
    }
    static FieldDescriptor galois_field(uint32_t p, uint32_t n, std::vector<uint32_t> modulus) {
        FieldDescriptor d;
        d.kind = Kind::GaloisField;
        d.p = p;
        d.n = n;
        d.modulus = std::move(modulus);
        FiniteField check(p, d.modulus);  // verifies primality and irreducibility
        if (check.degree() != n) throw parameter_error("modulus degree differs from n");
        return d;
    }
    static FieldDescriptor of_order(uint64_t q) {
        uint32_t p = 0, n = 0;
        FiniteField::factor_prime_power(q, p, n);
        if (n == 1) return prime_field(p);
        return galois_field(p, n, FiniteField::find_irreducible(p, n));
    }
    static FieldDescriptor function_field(FieldDescriptor base_field,
                                          std::vector<std::string> variables) {
        FieldDescriptor d;
        d.kind = Kind::RationalFunctionField;
        d.p = base_field.characteristic();
        d.vars = std::move(variables);
        d.base = std::make_shared<FieldDescriptor>(std::move(base_field));
        return d;
    }

    uint32_t characteristic() const { return kind == Kind::Rationals ? 0 : p; }

    bool operator==(const FieldDescriptor& o) const {
        if (kind != o.kind || p != o.p || n != o.n || modulus != o.modulus || vars != o.vars ||
            generators != o.generators)
            return false;
        if (!base != !o.base) return false;
        return !base || *base == *o.base;
    }

    std::string to_string() const {
        switch (kind) {
            case Kind::Rationals: return "Q";
            case Kind::PrimeField: return "F_" + std::to_string(p);
            case Kind::GaloisField: {
                uint64_t q = 1;
                for (uint32_t i = 0; i < n; ++i) q *= p;
                return "F_" + std::to_string(q);
            }
            case Kind::RationalFunctionField: {
                std::string s = (base ? base->to_string() : "?") + "(";
                for (size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i];
                return s + ")";
            }
            case Kind::PurelyInseparableExt: {
                std::string s = (base ? base->to_string() : "?") + "[";
                for (size_t i = 0; i < generators.size(); ++i)
                    s += (i ? ", " : "") + generators[i].radicand + "^{1/" +
                         std::to_string(generators[i].root_order) + "}";
                return s + "]";
            }
        }
        return "?";
    }
};

// Adjoins one transcendental parameter: the generic point of the
// one-parameter group the stability checks substitute for "every k-scheme S".
// At most two generic parameters are supported.
inline FieldDescriptor adjoin_generic_parameter(const FieldDescriptor& f) {
    switch (f.kind) {
        case FieldDescriptor::Kind::Rationals:
        case FieldDescriptor::Kind::PrimeField:
        case FieldDescriptor::Kind::GaloisField:
            return FieldDescriptor::function_field(f, {"lambda"});
        case FieldDescriptor::Kind::RationalFunctionField: {
            if (f.vars.size() >= 2)
                throw unsupported("at most two generic parameters are supported");
            FieldDescriptor d = f;
            d.vars.push_back(f.vars[0] == "mu" ? "lambda" : "mu");
            return d;
        }
        default:
            throw unsupported("cannot adjoin a generic parameter to this field");
    }
}

}  // namespace pincurve
