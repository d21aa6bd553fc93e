#pragma once

// nlohmann::json conversions for the CLI's --json output. Counts that fit in
// int64 are numbers, larger ones are decimal strings. Every document starts
// from json_envelope(), which names the schema file it validates against.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "convcode/matrix.hpp"
#include "convcode/weight_enum.hpp"

namespace convcode {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonSchemaVersion = 1;

inline Json json_envelope(const std::string& schema) { return Json{{"schema", schema}, {"version", kJsonSchemaVersion}}; }

inline Json json_count(const BigInt& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(c);
    return c.str();
}

template <class T>
Json json_optional(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

/// {"alpha": count} with decimal weight keys.
inline void to_json(Json& j, const WeightEnum& w) {
    j = Json::object();
    for (const auto& [a, c] : w.terms()) j[std::to_string(a)] = json_count(c);
}

/// [{"l": l, "terms": {...}}] for every nonzero coefficient of L.
inline void to_json(Json& j, const LSeries& f) {
    j = Json::array();
    for (std::size_t l = 0; l <= f.order(); ++l)
        if (!f[l].is_zero()) j.push_back(Json{{"l", l}, {"terms", f[l]}});
}

inline void to_json(Json& j, const AdjMatrix& a) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < a.size(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < a.size(); ++k) row.push_back(a(i, k));
        rows.push_back(std::move(row));
    }
    j = Json{{"size", a.size()}, {"q", a.q()}, {"n", a.n()}, {"extended", a.extended()}, {"entries", std::move(rows)}};
}

inline void to_json(Json& j, const ConstMatrix& m) {
    j = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto r = m.row(i);
        j.push_back(std::vector<Elem>(r.begin(), r.end()));
    }
}

inline Json field_json(const Field& F) { return Json{{"p", F.p()}, {"m", F.m()}, {"modulus", F.modulus()}}; }

inline void to_json(Json& j, const PolyMatrix& G) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < G.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < G.cols(); ++k) row.push_back(G(i, k).coeffs());
        rows.push_back(std::move(row));
    }
    j = Json{{"field", field_json(G.field())}, {"k", G.rows()}, {"n", G.cols()}, {"rows", std::move(rows)}};
}

}  // namespace convcode
