#pragma once

#include <json.hpp>

#include "bianchi/claims.hpp"
#include "bianchi/mat2.hpp"

namespace bianchi {

using json = nlohmann::json;

// QuadInt: [x, y] as decimal strings; ring carried by the enclosing context.
inline json quadint_to_json(const QuadInt& z) {
    return json::array({z.x.get_str(), z.y.get_str()});
}

inline QuadInt quadint_from_json(RingId ring, const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("QuadInt JSON must be [x, y]");
    return {ring, Int(j[0].get<std::string>()), Int(j[1].get<std::string>())};
}

// QuadRat: [xn, xd, yn, yd] decimal strings.
inline json quadrat_to_json(const QuadRat& z) {
    return json::array({z.x.get_num().get_str(), z.x.get_den().get_str(),
                        z.y.get_num().get_str(), z.y.get_den().get_str()});
}

// Mat2: {"d": <int>, "entries": [[[x,y],[x,y]],[[x,y],[x,y]]]}, row-major.
inline json mat2_to_json(const Mat2& M) {
    return {{"d", M.ring.d()},
            {"entries",
             json::array({json::array({quadint_to_json(M.a11), quadint_to_json(M.a12)}),
                          json::array({quadint_to_json(M.a21), quadint_to_json(M.a22)})})}};
}

inline Mat2 mat2_from_json(const json& j) {
    RingId ring(j.at("d").get<int>());
    const json& e = j.at("entries");
    if (!e.is_array() || e.size() != 2 || e[0].size() != 2 || e[1].size() != 2)
        throw std::invalid_argument("matrix JSON must have 2x2 entries");
    return {ring, quadint_from_json(ring, e[0][0]), quadint_from_json(ring, e[0][1]),
            quadint_from_json(ring, e[1][0]), quadint_from_json(ring, e[1][1])};
}

inline json claim_report_to_json(const ClaimReport& r) {
    json cex = json::array();
    for (const auto& [m, m2] : r.counterexamples)
        cex.push_back(json::array({mat2_to_json(m), mat2_to_json(m2)}));
    return {{"d", r.ring.d()},
            {"candidates", r.candidates_examined},
            {"counterexamples", cex},
            {"ms", r.elapsed_ms}};
}

}  // namespace bianchi
