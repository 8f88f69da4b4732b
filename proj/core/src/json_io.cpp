#include "baxterlab/json_io.hpp"

#include "baxterlab/errors.hpp"

#include <json.hpp>

#include <utility>

namespace baxterlab {

namespace {

using nlohmann::json;

json ring_to_value(const Ring& ring) {
    json j;
    switch (ring.kind()) {
    case RingKind::Int:
        j["kind"] = "int";
        j["lambda"] = ring.pinned_lambda().to_decimal();
        break;
    case RingKind::ModP:
        j["kind"] = "mod_p";
        j["p"] = ring.modulus();
        j["lambda"] = ring.pinned_lambda().to_decimal();
        break;
    case RingKind::LambdaPoly:
        j["kind"] = "lambda_poly";
        if (ring.is_modular()) {
            j["base"] = json{{"kind", "mod_p"}, {"p", ring.modulus()}};
        } else {
            j["base"] = json{{"kind", "int"}};
        }
        break;
    }
    return j;
}

json coefficient_to_value(const Coefficient& c) {
    switch (c.ring().kind()) {
    case RingKind::Int:
        return c.scalar_value().to_decimal();
    case RingKind::ModP:
        return json{{"mod", c.ring().modulus()}, {"val", c.scalar_value().mod_u64(c.ring().modulus())}};
    case RingKind::LambdaPoly: {
        json list = json::array();
        for (const auto& entry : c.lambda_coeffs()) list.push_back(entry.to_decimal());
        return json{{"lambda", std::move(list)}};
    }
    }
    throw ParseError("coefficient_to_value: unreachable");
}

json base_to_value(const BaseAlgebra& base) {
    if (base.kind == BaseAlgebra::Kind::Poly) return json{{"kind", "poly"}};
    return json{{"kind", "quotient"}, {"p", base.p}};
}

json element_to_value(const BaxterElement& e) {
    json terms = json::array();
    for (const auto& [word, coeff] : e.terms()) {
        json term;
        term["word"] = word.exponents();
        term["coeff"] = coefficient_to_value(coeff);
        terms.push_back(std::move(term));
    }
    return json{{"ring", ring_to_value(e.ring())},
                {"base", base_to_value(e.base())},
                {"terms", std::move(terms)}};
}

BigInt bigint_from_value(const json& v, const char* what) {
    if (v.is_string()) return BigInt::from_decimal(v.get<std::string>());
    if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
    if (v.is_number_unsigned()) return BigInt::from_decimal(v.dump());
    throw ParseError(std::string("JSON: ") + what + " must be a decimal string");
}

Ring ring_from_value(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ParseError("JSON: ring descriptor must be an object with a \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "int") {
        BigInt lambda(1);
        if (j.contains("lambda")) lambda = bigint_from_value(j.at("lambda"), "lambda");
        return Ring::integers(std::move(lambda));
    }
    if (kind == "mod_p") {
        const auto p = j.at("p").get<std::uint64_t>();
        BigInt lambda(1);
        if (j.contains("lambda")) lambda = bigint_from_value(j.at("lambda"), "lambda");
        return Ring::mod_p(p, std::move(lambda));
    }
    if (kind == "lambda_poly") {
        if (!j.contains("base")) return Ring::lambda_int();
        const json& base = j.at("base");
        const std::string base_kind = base.at("kind").get<std::string>();
        if (base_kind == "int") return Ring::lambda_int();
        if (base_kind == "mod_p") return Ring::lambda_mod_p(base.at("p").get<std::uint64_t>());
        throw ParseError("JSON: unknown lambda_poly base kind \"" + base_kind + "\"");
    }
    throw ParseError("JSON: unknown ring kind \"" + kind + "\"");
}

Coefficient coefficient_from_value(const json& v, const Ring& ring) {
    if (v.is_string() || v.is_number_integer() || v.is_number_unsigned()) {
        return Coefficient::from_integer(ring, bigint_from_value(v, "coefficient"));
    }
    if (v.is_object() && v.contains("lambda")) {
        if (!ring.has_formal_lambda())
            throw ParseError("JSON: lambda coefficient list in a ring with pinned lambda");
        if (!v.at("lambda").is_array())
            throw ParseError("JSON: \"lambda\" must be an array of decimal strings");
        std::vector<BigInt> coeffs;
        for (const auto& entry : v.at("lambda")) {
            coeffs.push_back(bigint_from_value(entry, "lambda coefficient"));
        }
        return Coefficient::from_lambda_coeffs(ring, std::move(coeffs));
    }
    if (v.is_object() && v.contains("val")) {
        if (ring.kind() != RingKind::ModP)
            throw ParseError("JSON: residue coefficient outside a mod_p ring");
        if (v.contains("mod") && v.at("mod").get<std::uint64_t>() != ring.modulus())
            throw ParseError("JSON: residue modulus disagrees with the ring");
        return Coefficient::from_integer(ring, bigint_from_value(v.at("val"), "val"));
    }
    throw ParseError("JSON: unrecognized coefficient form");
}

BaseAlgebra base_from_value(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "poly") return BaseAlgebra::poly();
    if (kind == "quotient") return BaseAlgebra::quotient(j.at("p").get<std::uint64_t>());
    throw ParseError("JSON: unknown base kind \"" + kind + "\"");
}

BaxterElement element_from_value(const json& j, const std::optional<Ring>& fallback_ring) {
    if (!j.is_object() || !j.contains("terms"))
        throw ParseError("JSON: element must be an object with a \"terms\" array");
    Ring ring = Ring::lambda_int();
    if (j.contains("ring")) {
        ring = ring_from_value(j.at("ring"));
    } else if (fallback_ring) {
        ring = *fallback_ring;
    } else {
        throw ParseError("JSON: element has no \"ring\" and no fallback was given");
    }
    BaseAlgebra base = BaseAlgebra::poly();
    if (j.contains("base")) base = base_from_value(j.at("base"));

    BaxterElement out(ring, base);
    for (const auto& term : j.at("terms")) {
        if (!term.is_object() || !term.contains("word") || !term.contains("coeff"))
            throw ParseError("JSON: each term needs \"word\" and \"coeff\"");
        const auto& word_json = term.at("word");
        if (!word_json.is_array() || word_json.empty())
            throw ParseError("JSON: words must be non-empty arrays of exponents");
        std::vector<std::uint32_t> exps;
        exps.reserve(word_json.size());
        for (const auto& e : word_json) {
            const auto value = e.get<std::uint64_t>();
            if (!base.exponent_reduced(value))
                throw ParseError("JSON: unreduced exponent " + std::to_string(value) +
                                 " for the base algebra");
            exps.push_back(static_cast<std::uint32_t>(value));
        }
        out.add_term(TensorWord(std::move(exps)), coefficient_from_value(term.at("coeff"), ring));
    }
    return out;
}

json operand_to_value(const VerificationReport::Operand& op) {
    if (std::holds_alternative<BaxterElement>(op)) {
        return element_to_value(std::get<BaxterElement>(op));
    }
    const auto& c = std::get<Coefficient>(op);
    return json{{"ring", ring_to_value(c.ring())}, {"coefficient", coefficient_to_value(c)}};
}

json parse_document(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("JSON: ") + e.what());
    }
}

} // namespace

std::string to_json(const Ring& ring) { return ring_to_value(ring).dump(); }

std::string to_json(const Coefficient& c) { return coefficient_to_value(c).dump(); }

std::string to_json(const BaxterElement& e) { return element_to_value(e).dump(); }

std::string to_json(const VerificationReport& report) {
    json params = json::object();
    for (const auto& [key, value] : report.params) params[key] = value;
    json j{{"identity", std::string(identity_name(report.identity))},
           {"params", std::move(params)},
           {"passed", report.passed}};
    j["lhs"] = report.lhs ? operand_to_value(*report.lhs) : json();
    j["rhs"] = report.rhs ? operand_to_value(*report.rhs) : json();
    return j.dump();
}

Ring ring_from_json(std::string_view text) {
    try {
        return ring_from_value(parse_document(text));
    } catch (const json::exception& e) {
        throw ParseError(std::string("JSON: ") + e.what());
    }
}

Coefficient coefficient_from_json(std::string_view text, const Ring& ring) {
    try {
        return coefficient_from_value(parse_document(text), ring);
    } catch (const json::exception& e) {
        throw ParseError(std::string("JSON: ") + e.what());
    }
}

BaxterElement element_from_json(std::string_view text, const std::optional<Ring>& fallback_ring) {
    try {
        return element_from_value(parse_document(text), fallback_ring);
    } catch (const json::exception& e) {
        throw ParseError(std::string("JSON: ") + e.what());
    }
}

} // namespace baxterlab
