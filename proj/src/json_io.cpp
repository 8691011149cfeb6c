#include "tightcalc/json_io.hpp"

#include <limits>

namespace tightcalc::io {

using namespace tightcalc::branched;

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
    return j.at(name);
}

std::string string_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_string()) throw ParseError(std::string("field '") + name + "' must be a string");
    return v.get<std::string>();
}

Slope slope_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("slopes must be \"p/q\" strings");
    return Slope::parse(j.get<std::string>());
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(integer_from_json(j));
    if (!j.is_string()) throw ParseError("rationals must be \"p/q\" strings");
    return parse_rational(j.get<std::string>());
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

Json integer_to_json(const Integer& n) {
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
        return Json(n.convert_to<std::int64_t>());
    return Json(n.str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        Slope s = Slope::parse(j.get<std::string>());
        if (!s.is_integer()) throw ParseError("expected an integer, got " + j.dump());
        return s.numerator();
    }
    throw ParseError("expected an integer, got " + j.dump());
}

Json surface_to_json(const BranchedSurface& surface) {
    Json out = Json::object();
    Json sectors = Json::array();
    for (const auto& s : surface.sectors)
        sectors.push_back({{"id", s.id}, {"cusped_euler", s.cusped_euler}, {"boundary", s.boundary}});
    out["sectors"] = std::move(sectors);
    Json curves = Json::array();
    for (const auto& c : surface.branch_curves) curves.push_back({{"out1", c.out1}, {"out2", c.out2}, {"in", c.in}});
    out["branch_curves"] = std::move(curves);
    Json boundary = Json::array();
    for (const auto& b : surface.boundary_curves) boundary.push_back({{"sector", b.sector}, {"role", to_string(b.role)}});
    out["boundary_curves"] = std::move(boundary);
    Json annuli = Json::array();
    for (const auto& a : surface.vertical_annuli) {
        annuli.push_back({{"id", a.id},
                          {"degree", a.degree},
                          {"boundary_classes", Json::array({to_string(a.first), to_string(a.second)})}});
    }
    out["vertical_annuli"] = std::move(annuli);
    return out;
}

BranchedSurface surface_from_json(const Json& j) {
    return guarded([&] {
        if (!j.is_object()) throw ParseError("branched surface document must be an object");
        BranchedSurface surface;
        auto array = [&](const char* name) -> const Json* {
            if (!j.contains(name)) return nullptr;
            const Json& v = j.at(name);
            if (!v.is_array()) throw ParseError(std::string("'") + name + "' must be an array");
            return &v;
        };
        if (const Json* sectors = array("sectors")) {
            for (const auto& s : *sectors) {
                SectorRecord r;
                r.id = string_field(s, "id");
                if (s.contains("cusped_euler")) r.cusped_euler = s.at("cusped_euler").get<std::int64_t>();
                if (s.contains("boundary")) r.boundary = s.at("boundary").get<bool>();
                surface.sectors.push_back(std::move(r));
            }
        }
        if (const Json* curves = array("branch_curves")) {
            for (const auto& c : *curves) {
                surface.branch_curves.push_back(
                    {string_field(c, "out1"), string_field(c, "out2"), string_field(c, "in")});
            }
        }
        if (const Json* boundary = array("boundary_curves")) {
            for (const auto& b : *boundary) {
                surface.boundary_curves.push_back({string_field(b, "sector"), parse_curve_role(string_field(b, "role"))});
            }
            std::sort(surface.boundary_curves.begin(), surface.boundary_curves.end());
        }
        if (const Json* annuli = array("vertical_annuli")) {
            for (const auto& a : *annuli) {
                VerticalAnnulusRecord r;
                r.id = string_field(a, "id");
                r.degree = field(a, "degree").get<std::int64_t>();
                const Json& classes = field(a, "boundary_classes");
                if (!classes.is_array() || classes.size() != 2)
                    throw ParseError("boundary_classes of '" + r.id + "' must list two classes");
                r.first = parse_boundary_class(classes[0].get<std::string>());
                r.second = parse_boundary_class(classes[1].get<std::string>());
                surface.vertical_annuli.push_back(std::move(r));
            }
        }
        return surface;
    });
}

Json weights_to_json(const WeightFunction& w) {
    Json out = Json::object();
    for (const auto& [id, value] : w) out[id] = value;
    return out;
}

WeightFunction weights_from_json(const Json& j) {
    return guarded([&] {
        if (!j.is_object()) throw ParseError("weight function must be an object mapping sector ids to integers");
        WeightFunction w;
        for (const auto& [id, value] : j.items()) {
            if (!value.is_number_integer()) throw ParseError("weight of '" + id + "' must be an integer");
            w[id] = value.get<Weight>();
        }
        return w;
    });
}

namespace {

Json triple_to_json(const seifert::SeifertTriple& t) {
    return Json::array({t.invariants[0].str(), t.invariants[1].str(), t.invariants[2].str()});
}

seifert::SeifertTriple triple_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw ParseError("a triple is an array of three slopes");
    return seifert::SeifertTriple(slope_from_json(j[0]), slope_from_json(j[1]), slope_from_json(j[2]));
}

}  // namespace

Json report_to_json(const seifert::AnalysisReport& r) {
    Json out = Json::object();
    out["input"] = triple_to_json(r.input);
    out["normalized"] = triple_to_json(r.normalized);
    out["euler_number"] = to_string(r.euler);
    out["inverse_alpha_sum"] = to_string(r.inverse_alpha_sum);
    out["torus_bundle"] = r.torus_bundle;
    out["limit_slope"] = r.limit.str();
    out["duals"] = Json::array({r.dual1.str(), r.dual2.str()});
    if (r.family) {
        out["family"] = {{"r1", integer_to_json(r.family->r1)},
                         {"r2", integer_to_json(r.family->r2)},
                         {"step", to_string(r.family->step)}};
    } else {
        out["family"] = nullptr;
    }
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"k", to_string(row.k)},
                        {"k1", integer_to_json(row.k1)},
                        {"k2", integer_to_json(row.k2)},
                        {"s_k", row.s_k.str()},
                        {"determinant", integer_to_json(row.determinant)},
                        {"edge", row.edge},
                        {"coprime", row.coprime}});
    }
    out["rows"] = std::move(rows);
    out["interval"] = r.wrapped_interval ? "wrapped" : "ordinary";
    out["constant_determinant"] = r.constant_determinant ? integer_to_json(*r.constant_determinant) : Json(nullptr);
    out["converges_from_above"] = r.converges_from_above ? Json(*r.converges_from_above) : Json(nullptr);
    out["verdict"] = seifert::to_string(r.verdict);
    return out;
}

seifert::AnalysisReport report_from_json(const Json& j) {
    return guarded([&] {
        seifert::AnalysisReport r;
        r.input = triple_from_json(field(j, "input"));
        r.normalized = triple_from_json(field(j, "normalized"));
        r.euler = rational_from_json(field(j, "euler_number"));
        r.inverse_alpha_sum = rational_from_json(field(j, "inverse_alpha_sum"));
        r.torus_bundle = field(j, "torus_bundle").get<bool>();
        r.limit = slope_from_json(field(j, "limit_slope"));
        const Json& duals = field(j, "duals");
        if (!duals.is_array() || duals.size() != 2) throw ParseError("duals must list two slopes");
        r.dual1 = slope_from_json(duals[0]);
        r.dual2 = slope_from_json(duals[1]);
        const Json& family = field(j, "family");
        if (!family.is_null()) {
            r.family = seifert::FamilySummary{integer_from_json(field(family, "r1")),
                                              integer_from_json(field(family, "r2")),
                                              rational_from_json(field(family, "step"))};
        }
        for (const auto& row : field(j, "rows")) {
            seifert::SkRow s;
            s.k = rational_from_json(field(row, "k"));
            s.k1 = integer_from_json(field(row, "k1"));
            s.k2 = integer_from_json(field(row, "k2"));
            s.s_k = slope_from_json(field(row, "s_k"));
            s.determinant = integer_from_json(field(row, "determinant"));
            s.edge = field(row, "edge").get<bool>();
            s.coprime = field(row, "coprime").get<bool>();
            r.rows.push_back(std::move(s));
        }
        const std::string interval = string_field(j, "interval");
        if (interval != "wrapped" && interval != "ordinary") throw ParseError("unknown interval '" + interval + "'");
        r.wrapped_interval = interval == "wrapped";
        const Json& d = field(j, "constant_determinant");
        if (!d.is_null()) r.constant_determinant = integer_from_json(d);
        const Json& c = field(j, "converges_from_above");
        if (!c.is_null()) r.converges_from_above = c.get<bool>();
        r.verdict = seifert::parse_verdict(string_field(j, "verdict"));
        return r;
    });
}

Json multicurve_to_json(const multicurve::MulticurveCoordinates& m) {
    return {{"coordinates", m.str()}, {"tight_candidate", multicurve::is_tight_candidate(m)}};
}

multicurve::MulticurveCoordinates multicurve_from_json(const Json& j) {
    return guarded([&] { return multicurve::MulticurveCoordinates::parse(string_field(j, "coordinates")); });
}

Json path_to_json(const farey::FareyPath& path) {
    Json out = Json::array();
    for (const auto& v : path.vertices) out.push_back(v.str());
    return out;
}

farey::FareyPath path_from_json(const Json& j) {
    return guarded([&] {
        if (!j.is_array()) throw ParseError("a path is an array of slopes");
        farey::FareyPath path;
        for (const auto& v : j) path.vertices.push_back(slope_from_json(v));
        return path;
    });
}

}  // namespace tightcalc::io
