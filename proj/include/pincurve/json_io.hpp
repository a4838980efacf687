#pragma once

#include <json.hpp>

#include "pincurve/abelian.hpp"
#include "pincurve/classify.hpp"
#include "pincurve/field_descriptor.hpp"
#include "pincurve/picard.hpp"

namespace pincurve {

using Json = nlohmann::json;  // std::map-backed: keys serialize sorted

inline constexpr int json_schema_version = 1;

// ---- serialization ----

inline Json to_json(const FieldDescriptor& f) {
    Json params;
    switch (f.kind) {
        case FieldDescriptor::Kind::Rationals:
            return Json{{"version", json_schema_version}, {"kind", "rationals"},
                        {"params", Json::object()}};
        case FieldDescriptor::Kind::PrimeField:
            params["p"] = f.p;
            return Json{{"version", json_schema_version}, {"kind", "prime_field"},
                        {"params", params}};
        case FieldDescriptor::Kind::GaloisField:
            params["p"] = f.p;
            params["n"] = f.n;
            params["modulus"] = f.modulus;
            return Json{{"version", json_schema_version}, {"kind", "galois_field"},
                        {"params", params}};
        case FieldDescriptor::Kind::RationalFunctionField:
            params["base"] = f.base ? to_json(*f.base) : Json();
            params["vars"] = f.vars;
            return Json{{"version", json_schema_version},
                        {"kind", "rational_function_field"},
                        {"params", params}};
        case FieldDescriptor::Kind::PurelyInseparableExt: {
            params["base"] = f.base ? to_json(*f.base) : Json();
            Json gens = Json::array();
            for (auto& g : f.generators)
                gens.push_back(Json{{"radicand", g.radicand}, {"root_order", g.root_order}});
            params["generators"] = gens;
            return Json{{"version", json_schema_version},
                        {"kind", "purely_inseparable_ext"},
                        {"params", params}};
        }
    }
    throw error("unknown field descriptor kind");
}

inline Json to_json(const TailSemigroup& z) {
    return Json{{"m", z.tail_start()}, {"c", z.sporadic()}};
}

inline Json elem_to_json(const FiniteField&, const FiniteField::Elem& e) { return Json(e); }
inline Json elem_to_json(const Rationals&, const BigRat& e) { return Json(e.str()); }

template <FieldLike F>
Json elem_to_json(const FunctionField<F>& kk, const typename FunctionField<F>::Elem& e) {
    auto poly = [&](const MPoly<F>& p) {
        Json terms = Json::array();
        for (auto& [expo, coef] : p.terms)
            terms.push_back(Json{{"expo", expo}, {"coef", elem_to_json(kk.base(), coef)}});
        return terms;
    };
    return Json{{"num", poly(e.num)}, {"den", poly(e.den)}};
}

template <FieldLike F>
Json to_json(const F& k, const Subspace<F>& s) {
    Json rows = Json::array();
    for (auto& r : s.rows) {
        Json row = Json::array();
        for (auto& c : r) row.push_back(elem_to_json(k, c));
        rows.push_back(row);
    }
    return Json{{"ambient_dim", s.ambient_dim}, {"rows", rows}};
}

template <FieldLike F>
Json to_json(const ArtinianAlgebra<F>& a, const FieldDescriptor& base) {
    Json factors = Json::array();
    for (auto& f : a.factors()) {
        Json jf{{"var", f.var}, {"trunc", f.trunc}};
        if (f.quad)
            jf["quad"] = Json{{"r", elem_to_json(a.base(), f.quad->r)},
                              {"s", elem_to_json(a.base(), f.quad->s)}};
        else
            jf["quad"] = nullptr;
        factors.push_back(jf);
    }
    return Json{{"version", json_schema_version}, {"base", to_json(base)}, {"factors", factors}};
}

inline const char* family_name(CurveFamily f) {
    switch (f) {
        case CurveFamily::GaPinch: return "p1n";
        case CurveFamily::AffineMonomial: return "a1mc";
        case CurveFamily::TwoPoint: return "p1mncd";
        case CurveFamily::TwoPointPrime: return "p1prime";
        case CurveFamily::ConicDescent: return "conic_descent";
        case CurveFamily::ConicDescentPrime: return "conic_descent_prime";
    }
    return "?";
}

inline const char* normalization_name(NormalizationKind n) {
    switch (n) {
        case NormalizationKind::AffineLine: return "A1";
        case NormalizationKind::ProjectiveLine: return "P1";
        case NormalizationKind::Conic: return "conic";
        case NormalizationKind::RussellCompletion: return "russell_completion";
    }
    return "?";
}

template <FieldLike F>
Json to_json(const PinchDescriptor<F>& d, const FieldDescriptor& base) {
    Json sup = Json::array();
    for (auto& s : d.support)
        sup.push_back(Json{{"label", s.label},
                           {"residue_degree", s.residue_degree},
                           {"neighborhood", s.neighborhood}});
    Json zs = Json::array();
    for (auto& z : d.semigroups) zs.push_back(to_json(z));
    return Json{{"version", json_schema_version},
                {"family", family_name(d.family)},
                {"normalization", normalization_name(d.normalization)},
                {"projective", d.projective},
                {"ztilde", to_json(d.ztilde, base)},
                {"z_sub", to_json(d.base(), d.z_sub)},
                {"semigroups", zs},
                {"ga_n", d.ga_n},
                {"q", d.q},
                {"support", sup}};
}

template <FieldLike F>
Json to_json(const F& k, const StableSubalgebraRecord<F>& r, const FieldDescriptor& base) {
    Json j{{"ambient", to_json(r.ambient, base)}, {"basis", to_json(k, r.basis)}};
    switch (r.kind) {
        case StableKind::GmMonomial: {
            j["kind"] = "gm_monomial";
            Json zs = Json::array();
            for (auto& z : r.semigroups) zs.push_back(to_json(z));
            j["semigroups"] = zs;
            break;
        }
        case StableKind::GmLocal: {
            j["kind"] = "gm_local";
            Json zs = Json::array();
            for (auto& z : r.semigroups) zs.push_back(to_json(z));
            j["semigroups"] = zs;
            break;
        }
        case StableKind::GaTail:
            j["kind"] = "ga_tail";
            j["tail"] = r.tail_start;
            break;
    }
    return j;
}

inline Json to_json(const AbelianGroupDescription& g) {
    return Json{{"free_rank", g.free_rank},
                {"cyclic_orders", g.cyclic_orders},
                {"symbolic", g.symbolic}};
}

inline Json to_json(const UnitsPicReport& r) {
    Json terms = Json::array();
    for (auto& t : r.terms) {
        Json jt{{"name", t.name}};
        if (t.order > 0)
            jt["order"] = t.order;
        else
            jt["token"] = t.token;
        terms.push_back(jt);
    }
    Json maps = Json::array();
    for (auto& m : r.maps) {
        Json jm{{"name", m.name},
                {"image_order", m.image_order},
                {"kernel_order", m.kernel_order}};
        if (!m.table.empty()) {
            Json tbl = Json::array();
            for (auto& [from, to] : m.table) tbl.push_back(Json::array({from, to}));
            jm["table"] = tbl;
        }
        maps.push_back(jm);
    }
    return Json{{"terms", terms},
                {"maps", maps},
                {"exact", r.exactness},
                {"pic_torsion", to_json(r.pic_torsion)},
                {"pic", to_json(r.pic)}};
}

inline Json to_json(const GroupDescriptor& g) {
    Json j{{"kind", g.to_string()}};
    if (g.kind == GroupKind::GmNormTorus) j["q"] = g.q;
    if (g.kind == GroupKind::GaForm) j["splitting_degree"] = g.splitting_degree;
    return j;
}

inline Json to_json(const CurveCaseRecord& rec) {
    Json j{{"case_label", rec.case_label}, {"group", to_json(rec.group)}};
    if (rec.pinch)
        j["pinch"] = to_json(*rec.pinch, FieldDescriptor::of_order(rec.pinch->base().order()));
    else if (rec.symbolic)
        j["pinch"] = Json{{"symbolic", symbolic_curve_name(*rec.symbolic)}};
    else if (rec.russell)
        j["pinch"] = Json{{"symbolic", "russell pinch"},
                          {"kappa_degree", rec.russell->kappa_degree()},
                          {"subfield_degree", rec.russell->subfield_degree()}};
    return j;
}

inline Json to_json(const WorkedExampleReport& r) {
    Json checks = Json::array();
    for (auto& c : r.checks)
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    return Json{{"checks", checks},
                {"derived_substitution", r.derived_substitution},
                {"printed_substitution_matches", r.printed_substitution_matches}};
}

inline Json to_json(const InseparableExtensionReport& r) {
    Json gens = Json::array();
    for (auto& g : r.generators) gens.push_back(g.rendered);
    return Json{{"degree", r.degree}, {"generators", gens}};
}

// ---- parsing, with JSON-pointer paths in error messages ----

namespace json_detail {

inline const Json& require(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object() || !j.contains(key))
        throw parameter_error("missing field " + path + "/" + key);
    return j.at(key);
}

inline void check_version(const Json& j, const std::string& path) {
    auto& v = require(j, "version", path);
    if (!v.is_number_integer() || v.get<int>() != json_schema_version)
        throw parameter_error("unsupported schema version at " + path + "/version");
}

}  // namespace json_detail

inline FieldDescriptor field_from_json(const Json& j, const std::string& path = "") {
    using json_detail::require;
    json_detail::check_version(j, path);
    auto kind = require(j, "kind", path).get<std::string>();
    const Json& params = require(j, "params", path);
    const std::string ppath = path + "/params";
    if (kind == "rationals") return FieldDescriptor::rationals();
    if (kind == "prime_field")
        return FieldDescriptor::prime_field(require(params, "p", ppath).get<uint32_t>());
    if (kind == "galois_field")
        return FieldDescriptor::galois_field(
            require(params, "p", ppath).get<uint32_t>(),
            require(params, "n", ppath).get<uint32_t>(),
            require(params, "modulus", ppath).get<std::vector<uint32_t>>());
    if (kind == "rational_function_field")
        return FieldDescriptor::function_field(
            field_from_json(require(params, "base", ppath), ppath + "/base"),
            require(params, "vars", ppath).get<std::vector<std::string>>());
    if (kind == "purely_inseparable_ext") {
        FieldDescriptor d;
        d.kind = FieldDescriptor::Kind::PurelyInseparableExt;
        d.base = std::make_shared<FieldDescriptor>(
            field_from_json(require(params, "base", ppath), ppath + "/base"));
        d.p = d.base->characteristic();
        for (auto& g : require(params, "generators", ppath))
            d.generators.push_back({g.at("radicand").get<std::string>(),
                                    g.at("root_order").get<uint32_t>()});
        return d;
    }
    throw parameter_error("unknown field kind at " + path + "/kind");
}

inline TailSemigroup semigroup_from_json(const Json& j, const std::string& path = "") {
    using json_detail::require;
    auto m = require(j, "m", path).get<uint32_t>();
    auto c = require(j, "c", path).get<std::vector<uint32_t>>();
    if (m == 0 && c.empty()) return TailSemigroup{};
    return TailSemigroup{m, c};
}

inline FiniteField::Elem ff_elem_from_json(const FiniteField& k, const Json& j,
                                           const std::string& path) {
    if (!j.is_array() || j.size() != k.degree())
        throw parameter_error("bad coefficient array at " + path);
    FiniteField::Elem e = j.get<FiniteField::Elem>();
    for (auto& c : e) c %= k.characteristic();
    return e;
}

inline Subspace<FiniteField> subspace_from_json(const FiniteField& k, const Json& j,
                                                const std::string& path = "") {
    using json_detail::require;
    auto dim = require(j, "ambient_dim", path).get<uint32_t>();
    Mat<FiniteField> rows;
    const Json& jr = require(j, "rows", path);
    for (size_t i = 0; i < jr.size(); ++i) {
        Vec<FiniteField> row;
        for (size_t c = 0; c < jr[i].size(); ++c)
            row.push_back(ff_elem_from_json(
                k, jr[i][c], path + "/rows/" + std::to_string(i) + "/" + std::to_string(c)));
        rows.push_back(std::move(row));
    }
    return echelon_basis(k, dim, std::move(rows));
}

inline ArtinianAlgebra<FiniteField> algebra_from_json(const Json& j,
                                                      const std::string& path = "") {
    using json_detail::require;
    json_detail::check_version(j, path);
    auto fd = field_from_json(require(j, "base", path), path + "/base");
    FiniteField k = (fd.kind == FieldDescriptor::Kind::PrimeField)
                        ? FiniteField(fd.p)
                        : FiniteField(fd.p, fd.modulus);
    if (fd.kind != FieldDescriptor::Kind::PrimeField &&
        fd.kind != FieldDescriptor::Kind::GaloisField)
        throw parameter_error("algebra base must be a finite field at " + path + "/base");
    std::vector<ArtinianAlgebra<FiniteField>::Factor> factors;
    const Json& jf = require(j, "factors", path);
    for (size_t i = 0; i < jf.size(); ++i) {
        const std::string fp = path + "/factors/" + std::to_string(i);
        ArtinianAlgebra<FiniteField>::Factor f;
        f.var = require(jf[i], "var", fp).get<std::string>();
        f.trunc = require(jf[i], "trunc", fp).get<uint32_t>();
        const Json& q = require(jf[i], "quad", fp);
        if (!q.is_null())
            f.quad = QuadraticCoefficients<FiniteField>{
                ff_elem_from_json(k, require(q, "r", fp + "/quad"), fp + "/quad/r"),
                ff_elem_from_json(k, require(q, "s", fp + "/quad"), fp + "/quad/s")};
        factors.push_back(std::move(f));
    }
    return ArtinianAlgebra<FiniteField>(k, std::move(factors));
}

inline PinchDescriptor<FiniteField> pinch_from_json(const Json& j, const std::string& path = "") {
    using json_detail::require;
    json_detail::check_version(j, path);
    auto fam = require(j, "family", path).get<std::string>();
    CurveFamily family;
    if (fam == "p1n") family = CurveFamily::GaPinch;
    else if (fam == "a1mc") family = CurveFamily::AffineMonomial;
    else if (fam == "p1mncd") family = CurveFamily::TwoPoint;
    else if (fam == "p1prime") family = CurveFamily::TwoPointPrime;
    else if (fam == "conic_descent") family = CurveFamily::ConicDescent;
    else if (fam == "conic_descent_prime") family = CurveFamily::ConicDescentPrime;
    else throw parameter_error("unknown family at " + path + "/family");
    auto norm = require(j, "normalization", path).get<std::string>();
    NormalizationKind nk;
    if (norm == "A1") nk = NormalizationKind::AffineLine;
    else if (norm == "P1") nk = NormalizationKind::ProjectiveLine;
    else if (norm == "conic") nk = NormalizationKind::Conic;
    else if (norm == "russell_completion") nk = NormalizationKind::RussellCompletion;
    else throw parameter_error("unknown normalization at " + path + "/normalization");
    auto zt = algebra_from_json(require(j, "ztilde", path), path + "/ztilde");
    auto sub = subspace_from_json(zt.base(), require(j, "z_sub", path), path + "/z_sub");
    if (sub.ambient_dim != zt.dim())
        throw parameter_error("z_sub dimension mismatch at " + path + "/z_sub/ambient_dim");
    std::vector<TailSemigroup> zs;
    const Json& jz = require(j, "semigroups", path);
    for (size_t i = 0; i < jz.size(); ++i)
        zs.push_back(semigroup_from_json(jz[i], path + "/semigroups/" + std::to_string(i)));
    std::vector<SupportPoint> sup;
    for (auto& s : require(j, "support", path))
        sup.push_back({s.at("label").get<std::string>(),
                       s.at("residue_degree").get<uint32_t>(),
                       s.at("neighborhood").get<uint32_t>()});
    return PinchDescriptor<FiniteField>{family,
                                        nk,
                                        require(j, "projective", path).get<bool>(),
                                        std::move(zt),
                                        std::move(sub),
                                        std::move(zs),
                                        require(j, "ga_n", path).get<uint32_t>(),
                                        require(j, "q", path).get<uint64_t>(),
                                        std::move(sup)};
}

}  // namespace pincurve
