#include "newtoncomm/json_io.hpp"

#include "newtoncomm/errors.hpp"
#include "newtoncomm/expression.hpp"

namespace newtoncomm {

nlohmann::json rational_json(const Rational& r) { return r.to_fraction_string(); }

nlohmann::json rationals_json(const std::vector<Rational>& rs) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rs) out.push_back(rational_json(r));
    return out;
}

nlohmann::json derivation_json(const PlanarDerivation& d) {
    return {{"ring", {{"t", 1}}}, {"dx", to_string(d.dx)}, {"dy", to_string(d.dy)}};
}

nlohmann::json derivation_json(const LaurentDerivation& d) {
    return {{"ring", {{"t", d.ring().t}}}, {"dx", to_string(d.dx)}, {"dy", to_string(d.dy)}};
}

namespace {

struct Fields {
    int t;
    std::string dx, dy;
};

Fields read_fields(const nlohmann::json& j) {
    try {
        return {j.at("ring").at("t").get<int>(), j.at("dx").get<std::string>(), j.at("dy").get<std::string>()};
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed derivation document: ") + e.what());
    }
}

} // namespace

PlanarDerivation planar_derivation_from_json(const nlohmann::json& j) {
    const Fields f = read_fields(j);
    if (f.t != 1) throw RingMismatch("planar derivation must have t = 1, got " + std::to_string(f.t));
    return {parse_bipoly(f.dx), parse_bipoly(f.dy)};
}

LaurentDerivation laurent_derivation_from_json(const nlohmann::json& j) {
    const Fields f = read_fields(j);
    return {parse_laurent_bipoly(f.dx, f.t), parse_laurent_bipoly(f.dy, f.t)};
}

} // namespace newtoncomm
