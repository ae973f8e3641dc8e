#include "goncarov/json_io.hpp"

#include "goncarov/error.hpp"

namespace gonc {

namespace {

using nlohmann::json;

json monomial_to_json(const Monomial& m) {
    json out = json::object();
    for (const auto& [var, e] : m.factors()) out[var.name()] = e;
    return out;
}

Monomial monomial_from_json(const json& j) {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "monomial must be an object");
    Monomial m;
    for (const auto& [name, e] : j.items()) {
        if (!e.is_number_unsigned()) throw Error(ErrorCode::ParseError, "exponent must be a nonnegative integer");
        m = m * Monomial(VarId::parse(name), e.get<unsigned>());
    }
    return m;
}

json term_to_json(const Monomial& m, const Rational& c) {
    return json{{"coeff", c.str()}, {"monomial", monomial_to_json(m)}};
}

Rational coeff_from_json(const json& t) {
    if (!t.contains("coeff") || !t.contains("monomial")) {
        throw Error(ErrorCode::ParseError, "term needs coeff and monomial");
    }
    const auto& c = t.at("coeff");
    if (c.is_string()) return Rational::parse(c.get<std::string>());
    if (c.is_number_integer()) return Rational(c.get<long>());
    throw Error(ErrorCode::ParseError, "coeff must be a string p/q");
}

} // namespace

json poly_to_json(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back(term_to_json(m, c));
    return json{{"terms", terms}};
}

MultiPoly poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) {
        throw Error(ErrorCode::ParseError, "polynomial JSON needs a terms array");
    }
    MultiPoly out;
    for (const auto& t : j.at("terms")) out.add_term(monomial_from_json(t.at("monomial")), coeff_from_json(t));
    return out;
}

json series_to_json(const TruncatedSeries& s) {
    json terms = json::array();
    for (unsigned k = 0; k <= s.order(); ++k) {
        for (const auto& [m, c] : s[k].terms()) {
            json t = term_to_json(m, c);
            t["power"] = k;
            terms.push_back(std::move(t));
        }
    }
    return json{{"order", s.order()}, {"terms", terms}};
}

TruncatedSeries series_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("terms")) {
        throw Error(ErrorCode::ParseError, "series JSON needs order and terms");
    }
    const unsigned order = j.at("order").get<unsigned>();
    std::vector<MultiPoly> coeffs(order + 1);
    for (const auto& t : j.at("terms")) {
        const unsigned k = t.at("power").get<unsigned>();
        if (k > order) throw Error(ErrorCode::ParseError, "term power exceeds series order");
        coeffs[k].add_term(monomial_from_json(t.at("monomial")), coeff_from_json(t));
    }
    return TruncatedSeries(order, std::move(coeffs));
}

json sequence_to_json(const PolySequence& p) {
    json entries = json::array();
    for (const auto& e : p.entries()) entries.push_back(poly_to_json(e));
    return json{{"sequence", entries}};
}

PolySequence sequence_from_json(const json& j) {
    if (!j.is_object() || !j.contains("sequence")) throw Error(ErrorCode::ParseError, "sequence JSON needs sequence");
    std::vector<MultiPoly> entries;
    for (const auto& e : j.at("sequence")) entries.push_back(poly_from_json(e));
    return PolySequence(std::move(entries));
}

} // namespace gonc
