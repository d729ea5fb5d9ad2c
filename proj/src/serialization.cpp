#include "kingman/serialization.hpp"

#include <stdexcept>

namespace kingman {

nlohmann::json polynomial_to_json(const ZetaPolynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& [g, e] : mono)
            for (int i = 0; i < e; ++i) gens.push_back(g.name());
        terms.push_back({{"coeff", to_fraction_string(coeff)}, {"generators", gens}});
    }
    return nlohmann::json{{"terms", terms}};
}

Generator generator_from_name(const std::string& name) {
    if (name == "gamma") return Generator::gamma();
    if (name == "log2") return Generator::log_two();
    if (name.starts_with("zeta(") && name.ends_with(")")) {
        int k = std::stoi(name.substr(5, name.size() - 6));
        return Generator::zeta(k);
    }
    throw std::invalid_argument("generator_from_name: '" + name + "'");
}

ZetaPolynomial polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("polynomial_from_json: expected {\"terms\": [...]}");
    ZetaPolynomial p;
    for (const auto& t : j["terms"]) {
        if (!t.contains("coeff") || !t.contains("generators"))
            throw std::invalid_argument("polynomial_from_json: term missing coeff/generators");
        Rational c = rational_from_string(t["coeff"].get<std::string>());
        Monomial m;
        for (const auto& g : t["generators"]) m[generator_from_name(g.get<std::string>())] += 1;
        p.add_term(m, c);
    }
    return p;
}

}  // namespace kingman
