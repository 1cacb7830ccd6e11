#pragma once

#include <string>

#include <json.hpp>

#include "shifted/errors.hpp"
#include "shifted/kraskiewicz.hpp"
#include "shifted/tableau.hpp"

namespace shifted {

using Json = nlohmann::ordered_json;

inline Json shape_to_json(const StrictPartition& lambda) { return Json(lambda.parts()); }

inline Json rows_to_json(const ShiftedTableau& t) { return Json(t.rows()); }

inline Json tableau_to_json(const ShiftedTableau& t) {
    Json j;
    j["shape"] = shape_to_json(t.shape());
    j["rows"] = rows_to_json(t);
    return j;
}

inline Json pair_to_json(const InsertionPair& pq) {
    Json j;
    j["shape"] = shape_to_json(pq.p.shape());
    j["P"] = rows_to_json(pq.p);
    j["Q"] = rows_to_json(pq.q);
    return j;
}

inline Json parse_json(const std::string& text, const std::string& what) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw UsageError(what + ": invalid JSON");
    return j;
}

inline ShiftedTableau tableau_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("rows"))
        throw UsageError("tableau JSON: expected an object with \"shape\" and \"rows\"");
    StrictPartition shape(j["shape"].get<std::vector<int>>());
    return ShiftedTableau(shape, j["rows"].get<std::vector<std::vector<int>>>());
}

inline InsertionPair pair_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("P") || !j.contains("Q"))
        throw UsageError("insertion-pair JSON: expected an object with \"shape\", \"P\", \"Q\"");
    StrictPartition shape(j["shape"].get<std::vector<int>>());
    return InsertionPair{ShiftedTableau(shape, j["P"].get<std::vector<std::vector<int>>>()),
                         ShiftedTableau(shape, j["Q"].get<std::vector<std::vector<int>>>())};
}

}  // namespace shifted
