#pragma once

// JSON documents for polytopes, covers and reports, plus OFF/OBJ export.
// Polytope documents are integer-only; anything else is a schema error.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "unicover/body.hpp"
#include "unicover/cover.hpp"
#include "unicover/cover_cayley.hpp"
#include "unicover/cover_para.hpp"
#include "unicover/error.hpp"
#include "unicover/idp.hpp"
#include "unicover/polygon.hpp"
#include "unicover/verify.hpp"
#include "unicover/white.hpp"

namespace unicover {

using Json = nlohmann::json;

class SchemaError : public Error {
public:
    using Error::Error;
};

struct ParallelepipedDoc {
    IntPoint3 base;
    std::array<IntVec3, 3> edges;
    friend bool operator==(const ParallelepipedDoc&, const ParallelepipedDoc&) = default;
};

struct CayleyDoc {
    std::vector<IntPoint2> p_vertices;
    std::vector<IntPoint2> q_vertices;
    friend bool operator==(const CayleyDoc&, const CayleyDoc&) = default;
};

struct PrismatoidDoc {
    std::vector<IntPoint2> q1;
    std::vector<IntPoint2> q2;
    Int height = 1;
    friend bool operator==(const PrismatoidDoc&, const PrismatoidDoc&) = default;
};

struct VrepDoc {
    std::vector<IntPoint3> vertices;
    friend bool operator==(const VrepDoc&, const VrepDoc&) = default;
};

struct WhiteDoc {
    Int a = 1;
    Int b = 1;
    friend bool operator==(const WhiteDoc&, const WhiteDoc&) = default;
};

using PolytopeDoc = std::variant<ParallelepipedDoc, CayleyDoc, PrismatoidDoc, VrepDoc, WhiteDoc>;

struct CoverDoc {
    PolytopeDoc target;
    std::vector<Simplex3> simplices;  // canonical order
    int max_recursion_depth = 0;
    std::optional<Json> verification;
};

namespace detail {

inline Int json_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw SchemaError(where + ": expected an integer");
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<Int>::max()))
        throw SchemaError(where + ": integer out of range");
    return j.get<Int>();
}

inline const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError(where + ": missing field '" + key + "'");
    return j.at(key);
}

template <std::size_t N>
std::array<Int, N> json_tuple(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != N) throw SchemaError(where + ": expected " + std::to_string(N) + " integers");
    std::array<Int, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = json_int(j[i], where);
    return out;
}

inline IntPoint3 json_point3(const Json& j, const std::string& where) {
    const auto t = json_tuple<3>(j, where);
    return {t[0], t[1], t[2]};
}

inline IntPoint2 json_point2(const Json& j, const std::string& where) {
    const auto t = json_tuple<2>(j, where);
    return {t[0], t[1]};
}

template <class F>
auto json_list(const Json& j, const std::string& where, F&& item) {
    if (!j.is_array() || j.empty()) throw SchemaError(where + ": expected a nonempty array");
    std::vector<decltype(item(j[0], where))> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(item(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

inline Json to_json(const IntPoint3& p) { return Json::array({p.x, p.y, p.z}); }
inline Json to_json(const IntPoint2& p) { return Json::array({p.x, p.y}); }

template <class P>
Json to_json(const std::vector<P>& ps) {
    Json out = Json::array();
    for (const auto& p : ps) out.push_back(to_json(p));
    return out;
}

inline Json to_json(const Rational& r) { return Json::array({r.num(), r.den()}); }

inline Json to_json(const RatPoint3& p) { return Json::array({to_json(p.x), to_json(p.y), to_json(p.z)}); }

}  // namespace detail

inline Json to_json(const PolytopeDoc& doc) {
    using detail::to_json;
    return std::visit(
        [](const auto& d) -> Json {
            using D = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<D, ParallelepipedDoc>) {
                return {{"type", "parallelepiped"},
                        {"base", to_json(d.base)},
                        {"edges", Json::array({to_json(d.edges[0]), to_json(d.edges[1]), to_json(d.edges[2])})}};
            } else if constexpr (std::is_same_v<D, CayleyDoc>) {
                return {{"type", "cayley"}, {"p_vertices", to_json(d.p_vertices)}, {"q_vertices", to_json(d.q_vertices)}};
            } else if constexpr (std::is_same_v<D, PrismatoidDoc>) {
                return {{"type", "prismatoid"}, {"q1", to_json(d.q1)}, {"q2", to_json(d.q2)}, {"height", d.height}};
            } else if constexpr (std::is_same_v<D, VrepDoc>) {
                return {{"type", "vrep"}, {"vertices", to_json(d.vertices)}};
            } else {
                return {{"type", "white"}, {"a", d.a}, {"b", d.b}};
            }
        },
        doc);
}

inline PolytopeDoc polytope_from_json(const Json& j) {
    using namespace detail;
    if (!j.is_object()) throw SchemaError("polytope: expected an object");
    const Json& type = field(j, "type", "polytope");
    if (!type.is_string()) throw SchemaError("polytope: 'type' must be a string");
    const std::string t = type.get<std::string>();
    if (t == "parallelepiped") {
        const Json& e = field(j, "edges", t);
        if (!e.is_array() || e.size() != 3) throw SchemaError("parallelepiped.edges: expected 3 vectors");
        return ParallelepipedDoc{json_point3(field(j, "base", t), "parallelepiped.base"),
                                 {json_point3(e[0], "parallelepiped.edges[0]"), json_point3(e[1], "parallelepiped.edges[1]"),
                                  json_point3(e[2], "parallelepiped.edges[2]")}};
    }
    if (t == "cayley")
        return CayleyDoc{json_list(field(j, "p_vertices", t), "cayley.p_vertices", json_point2),
                         json_list(field(j, "q_vertices", t), "cayley.q_vertices", json_point2)};
    if (t == "prismatoid")
        return PrismatoidDoc{json_list(field(j, "q1", t), "prismatoid.q1", json_point2),
                             json_list(field(j, "q2", t), "prismatoid.q2", json_point2),
                             json_int(field(j, "height", t), "prismatoid.height")};
    if (t == "vrep") return VrepDoc{json_list(field(j, "vertices", t), "vrep.vertices", json_point3)};
    if (t == "white") return WhiteDoc{json_int(field(j, "a", t), "white.a"), json_int(field(j, "b", t), "white.b")};
    throw SchemaError("polytope: unknown type '" + t + "'");
}

inline std::string type_name(const PolytopeDoc& doc) { return to_json(doc).at("type").get<std::string>(); }

inline CayleySpec cayley_spec(const CayleyDoc& d) { return {Polygon2::hull(d.p_vertices), Polygon2::hull(d.q_vertices)}; }

inline PrismatoidSpec prismatoid_spec(const PrismatoidDoc& d) {
    return {Polygon2::hull(d.q1), Polygon2::hull(d.q2), d.height};
}

/// The body a document describes.
inline Body3 body_of(const PolytopeDoc& doc) {
    return std::visit(
        [](const auto& d) -> Body3 {
            using D = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<D, ParallelepipedDoc>) {
                return Parallelepiped(d.base, d.edges).body();
            } else if constexpr (std::is_same_v<D, CayleyDoc>) {
                return cayley_embed(cayley_spec(d));
            } else if constexpr (std::is_same_v<D, PrismatoidDoc>) {
                return prismatoid_body(prismatoid_spec(d));
            } else if constexpr (std::is_same_v<D, VrepDoc>) {
                return Body3::hull(d.vertices);
            } else {
                const auto v = white_vertices({d.a, d.b});
                return Body3::hull(std::vector<IntPoint3>(v.begin(), v.end()));
            }
        },
        doc);
}

/// Dispatches to the cover construction that applies to the document type.
/// A bare tetrahedron is not a cover target on its own: it needs a container.
inline Cover cover_of(const PolytopeDoc& doc, const CayleyOptions& opts = {}) {
    return std::visit(
        [&](const auto& d) -> Cover {
            using D = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<D, ParallelepipedDoc>) {
                return cover_parallelepiped(Parallelepiped(d.base, d.edges));
            } else if constexpr (std::is_same_v<D, CayleyDoc>) {
                return cover_cayley(cayley_spec(d), opts);
            } else if constexpr (std::is_same_v<D, PrismatoidDoc>) {
                return cover_prismatoid(prismatoid_spec(d), opts);
            } else if constexpr (std::is_same_v<D, VrepDoc>) {
                const Body3 body = Body3::hull(d.vertices);
                if (body.vertices().size() == 4)
                    throw PreconditionError("unsupported_target", "a single tetrahedron needs a container to be covered");
                const auto [p, q] = cayley_bases(body);
                return cover_cayley({p, q}, opts);
            } else {
                throw PreconditionError("unsupported_target", "a White tetrahedron needs a container to be covered");
            }
        },
        doc);
}

inline Json simplex_json(const Simplex3& s) { return detail::to_json(std::vector<IntPoint3>(s.sorted_vertices().begin(), s.sorted_vertices().end())); }

inline Json to_json(const VerifyReport& r) {
    Json j{{"mode", r.mode.to_string()},
           {"n_simplices", r.n_simplices},
           {"all_unimodular", r.all_unimodular},
           {"all_contained", r.all_contained},
           {"coverage", to_string(r.coverage)},
           {"cells_processed", r.cells_processed},
           {"grid_points_checked", r.grid_points_checked}};
    if (r.mode.kind == VerifyMode::Kind::Grid)
        j["note"] = "grid certification at resolution " + std::to_string(r.mode.resolution);
    if (r.first_non_unimodular) j["first_non_unimodular"] = *r.first_non_unimodular;
    if (r.first_outside) j["first_outside"] = *r.first_outside;
    if (r.witness) j["witness"] = detail::to_json(*r.witness);
    if (r.fallback_grid) j["fallback_grid"] = to_string(*r.fallback_grid);
    return j;
}

inline Json to_json(const CoverDoc& doc) {
    Json simplices = Json::array();
    for (const auto& s : doc.simplices) simplices.push_back(simplex_json(s));
    Json j{{"target", to_json(doc.target)},
           {"simplices", simplices},
           {"stats", {{"count", doc.simplices.size()}, {"max_recursion_depth", doc.max_recursion_depth}}}};
    if (doc.verification) j["verification"] = *doc.verification;
    return j;
}

inline CoverDoc make_cover_doc(const PolytopeDoc& target, const Cover& cover) {
    return {target, cover.simplices(), cover.max_depth(), std::nullopt};
}

inline CoverDoc cover_from_json(const Json& j) {
    using namespace detail;
    CoverDoc doc;
    doc.target = polytope_from_json(field(j, "target", "cover"));
    const Json& list = field(j, "simplices", "cover");
    if (!list.is_array()) throw SchemaError("cover.simplices: expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string where = "cover.simplices[" + std::to_string(i) + "]";
        if (!list[i].is_array() || list[i].size() != 4) throw SchemaError(where + ": expected 4 points");
        std::array<IntPoint3, 4> v;
        for (std::size_t k = 0; k < 4; ++k) v[k] = json_point3(list[i][k], where);
        try {
            doc.simplices.emplace_back(v);
        } catch (const PreconditionError&) {
            throw SchemaError(where + ": degenerate simplex");
        }
    }
    std::sort(doc.simplices.begin(), doc.simplices.end());
    if (j.contains("stats") && j["stats"].contains("max_recursion_depth"))
        doc.max_recursion_depth = static_cast<int>(json_int(j["stats"]["max_recursion_depth"], "cover.stats"));
    if (j.contains("verification")) doc.verification = j["verification"];
    return doc;
}

inline Json to_json(const IdpReport& r) {
    Json j{{"checked_up_to", r.checked_up_to}, {"verdict", r.pass ? "pass" : "fail"}};
    Json sizes = Json::array();
    for (auto s : r.dilation_sizes) sizes.push_back(s);
    j["dilation_sizes"] = sizes;
    if (!r.pass)
        j["failure"] = {{"n", *r.failing_n}, {"witness", detail::to_json(*r.witness)}, {"all_witnesses", detail::to_json(r.witnesses)}};
    return j;
}

template <class P>
Json to_json(const PairIdpReport<P>& r) {
    Json j{{"mode", "pair"}, {"verdict", r.pass ? "pass" : "fail"}, {"sum_points", r.sum_points}, {"sumset_size", r.sumset_size}};
    if (r.witness) j["witness"] = detail::to_json(*r.witness);
    return j;
}

inline Json to_json(const NormalForm& nf) {
    Json m = Json::array();
    for (const auto& row : nf.map.matrix.m) m.push_back(Json::array({row[0], row[1], row[2]}));
    Json anomalies = Json::array();
    for (auto a : nf.orbit_anomalies) anomalies.push_back(a);
    return {{"a", nf.form.a},
            {"b", nf.form.b},
            {"matrix", m},
            {"translation", detail::to_json(nf.map.translation)},
            {"orbit_anomalies", anomalies}};
}

/// Mesh export: each simplex contributes its 4 vertices and 4 triangles.
inline void write_off(std::ostream& os, const std::vector<Simplex3>& cover) {
    os << "OFF\n" << 4 * cover.size() << ' ' << 4 * cover.size() << " 0\n";
    for (const auto& s : cover)
        for (const auto& v : s.vertices()) os << v.x << ' ' << v.y << ' ' << v.z << '\n';
    for (std::size_t i = 0; i < cover.size(); ++i) {
        const std::size_t o = 4 * i;
        os << "3 " << o + 1 << ' ' << o + 2 << ' ' << o + 3 << '\n';
        os << "3 " << o << ' ' << o + 3 << ' ' << o + 2 << '\n';
        os << "3 " << o << ' ' << o + 1 << ' ' << o + 3 << '\n';
        os << "3 " << o << ' ' << o + 2 << ' ' << o + 1 << '\n';
    }
}

inline void write_obj(std::ostream& os, const std::vector<Simplex3>& cover) {
    for (const auto& s : cover)
        for (const auto& v : s.vertices()) os << "v " << v.x << ' ' << v.y << ' ' << v.z << '\n';
    for (std::size_t i = 0; i < cover.size(); ++i) {
        const std::size_t o = 4 * i + 1;
        os << "f " << o + 1 << ' ' << o + 2 << ' ' << o + 3 << '\n';
        os << "f " << o << ' ' << o + 3 << ' ' << o + 2 << '\n';
        os << "f " << o << ' ' << o + 1 << ' ' << o + 3 << '\n';
        os << "f " << o << ' ' << o + 2 << ' ' << o + 1 << '\n';
    }
}

}  // namespace unicover
