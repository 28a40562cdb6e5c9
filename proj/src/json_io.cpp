#include "wheelzeta/json_io.hpp"

#include "wheelzeta/errors.hpp"

namespace wheelzeta {

nlohmann::json to_json(const BivariatePolynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"q", e.q}, {"t", e.t}, {"c", to_decimal(c)}});
    return {{"terms", terms}};
}

BivariatePolynomial polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw InvalidArgument("polynomial JSON must be an object with a 'terms' array");
    BivariatePolynomial::TermMap terms;
    for (const auto& term : j["terms"]) {
        if (!term.is_object() || !term.contains("q") || !term.contains("t") || !term.contains("c") ||
            !term["q"].is_number_unsigned() || !term["t"].is_number_unsigned() || !term["c"].is_string())
            throw InvalidArgument("polynomial term must have integer q, t and decimal-string c");
        const Exponent e{term["q"].get<unsigned>(), term["t"].get<unsigned>()};
        if (terms.contains(e)) throw InvalidArgument("duplicate monomial in polynomial JSON");
        terms.emplace(e, parse_decimal(term["c"].get<std::string>()));
    }
    return BivariatePolynomial::from_terms(std::move(terms));
}

nlohmann::json to_json(const SNFResult& s) {
    nlohmann::json f = nlohmann::json::array();
    for (const auto& d : s.invariant_factors) f.push_back(to_decimal(d));
    return {{"invariant_factors", f}};
}

SNFResult snf_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("invariant_factors") || !j["invariant_factors"].is_array())
        throw InvalidArgument("SNF JSON must have an 'invariant_factors' array");
    SNFResult out;
    for (const auto& f : j["invariant_factors"]) out.invariant_factors.push_back(parse_decimal(f.get<std::string>()));
    return out;
}

nlohmann::json to_json(const IntPolynomial& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : p.coefficients()) a.push_back(to_decimal(c));
    return a;
}

} // namespace wheelzeta
