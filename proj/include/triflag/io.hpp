// JSON encodings of decorated matrices, moves, posets and configurations.
#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "core.hpp"
#include "moves.hpp"
#include "witness.hpp"

namespace triflag {

using json = nlohmann::json;

inline json to_json(const Position& p) { return json::array({p.i, p.j}); }

inline json to_json(const TransportMatrix& mat) {
    return json{{"b", mat.b}, {"c", mat.c}, {"m", mat.m}};
}

inline json to_json(const DecoratedMatrix& x) {
    json j = to_json(x.matrix);
    j["delta"] = json::array();
    for (Position p : x.delta) j["delta"].push_back(to_json(p));
    return j;
}

inline json to_json(const Move& mv) {
    json a = json::array();
    for (Position p : mv.anchors) a.push_back(to_json(p));
    return json{{"kind", to_string(mv.kind)}, {"anchors", a}};
}

namespace detail {

inline Position position_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw Error(ErrorCode::BadShape, "a position must be a pair [i, j]");
    return {j[0].get<int>(), j[1].get<int>()};
}

inline std::vector<int> ints_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw Error(ErrorCode::BadShape, std::string(what) + " must be an array of integers");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw Error(ErrorCode::BadShape, std::string(what) + " must be an array of integers");
        out.push_back(v.get<int>());
    }
    return out;
}

}  // namespace detail

inline TransportMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("b") || !j.contains("c") || !j.contains("m"))
        throw Error(ErrorCode::BadShape, "expected an object with fields b, c, m");
    TransportMatrix mat{detail::ints_from_json(j["b"], "b"), detail::ints_from_json(j["c"], "c"), {}};
    if (!j["m"].is_array()) throw Error(ErrorCode::BadShape, "m must be an array of rows");
    for (const auto& row : j["m"]) mat.m.push_back(detail::ints_from_json(row, "m row"));
    if (auto v = validate(mat)) throw Error(v->code, v->message);
    return mat;
}

// Parses and validates; the decoration may be listed in any order.
inline DecoratedMatrix decorated_from_json(const json& j) {
    DecoratedMatrix x{matrix_from_json(j), {}};
    if (!j.contains("delta") || !j["delta"].is_array()) throw Error(ErrorCode::EmptyDecoration, "missing delta");
    for (const auto& p : j["delta"]) x.delta.push_back(detail::position_from_json(p));
    std::sort(x.delta.begin(), x.delta.end());
    require_valid(x);
    return x;
}

inline Move move_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string() || !j.contains("anchors"))
        throw Error(ErrorCode::BadShape, "expected a move object with kind and anchors");
    auto kind = move_kind_from_string(j["kind"].get<std::string>());
    if (!kind) throw Error(ErrorCode::BadShape, "unknown move kind");
    Move mv{*kind, {}};
    for (const auto& p : j["anchors"]) mv.anchors.push_back(detail::position_from_json(p));
    return mv;
}

inline json to_json(const Poset& P) {
    json els = json::array(), cov = json::array(), kinds = json::array();
    for (const auto& e : P.elements) els.push_back(to_json(e));
    for (const auto& c : P.covers) {
        cov.push_back(json::array({c.from, c.to}));
        kinds.push_back(to_string(c.move.kind));
    }
    return json{{"b", P.b}, {"c", P.c}, {"elements", els}, {"covers", cov}, {"cover_kinds", kinds}};
}

inline std::string rational_string(Rational x) {
    x.canonicalize();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
    Rational x;
    if (x.set_str(s, 10) != 0) throw Error(ErrorCode::BadShape, "bad rational '" + s + "'");
    if (sgn(x.get_den()) == 0) throw Error(ErrorCode::BadShape, "zero denominator in '" + s + "'");
    x.canonicalize();
    return x;
}

inline json to_json(const Configuration& X) {
    auto vec = [](const Vec& v) {
        json a = json::array();
        for (const auto& x : v) a.push_back(rational_string(x));
        return a;
    };
    auto gens = [&](const std::vector<Vec>& g) {
        json a = json::array();
        for (const auto& v : g) a.push_back(vec(v));
        return a;
    };
    json B = json::array(), C = json::array();
    for (const auto& g : X.B) B.push_back(gens(g));
    for (const auto& g : X.C) C.push_back(gens(g));
    return json{{"n", X.n}, {"A", gens(X.A)}, {"B", B}, {"C", C}};
}

inline Configuration configuration_from_json(const json& j) {
    Configuration X;
    X.n = j.at("n").get<int>();
    auto vec = [&](const json& a) {
        Vec v;
        for (const auto& s : a) v.push_back(rational_from_string(s.get<std::string>()));
        if (static_cast<int>(v.size()) != X.n) throw Error(ErrorCode::BadShape, "vector length differs from n");
        return v;
    };
    auto gens = [&](const json& a) {
        std::vector<Vec> g;
        for (const auto& v : a) g.push_back(vec(v));
        return g;
    };
    X.A = gens(j.at("A"));
    for (const auto& g : j.at("B")) X.B.push_back(gens(g));
    for (const auto& g : j.at("C")) X.C.push_back(gens(g));
    return X;
}

}  // namespace triflag
