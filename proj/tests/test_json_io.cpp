#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "baxterlab/congruences.hpp"
#include "baxterlab/errors.hpp"
#include "baxterlab/json_io.hpp"
#include "baxterlab/sampling.hpp"

#include "test_support.hpp"

using namespace baxterlab;
using namespace baxterlab::testing;

TEST_CASE("ring descriptors round trip") {
    for (const Ring& ring : {Ring::integers(), Ring::integers(BigInt(3)), Ring::mod_p(5),
                             Ring::mod_p(7, BigInt(2)), Ring::lambda_int(),
                             Ring::lambda_mod_p(11)}) {
        CHECK(ring_from_json(to_json(ring)) == ring);
    }
    CHECK(to_json(Ring::lambda_int()) == "{\"base\":{\"kind\":\"int\"},\"kind\":\"lambda_poly\"}");
    CHECK(ring_from_json("{\"kind\":\"int\"}") == Ring::integers());
    CHECK_THROWS_AS(ring_from_json("{\"kind\":\"field\"}"), ParseError);
    CHECK_THROWS_AS(ring_from_json("{\"kind\":\"mod_p\",\"p\":6}"), NotPrimeError);
    CHECK_THROWS_AS(ring_from_json("[1,2]"), ParseError);
}

TEST_CASE("coefficient JSON forms") {
    const Ring z = Ring::integers();
    CHECK(to_json(Coefficient::from_integer(z, BigInt(-42))) == "\"-42\"");
    CHECK(coefficient_from_json("\"-42\"", z) == Coefficient::from_integer(z, BigInt(-42)));

    const Ring f5 = Ring::mod_p(5);
    CHECK(to_json(Coefficient::from_integer(f5, BigInt(3))) == "{\"mod\":5,\"val\":3}");
    CHECK(coefficient_from_json("{\"mod\":5,\"val\":3}", f5) ==
          Coefficient::from_integer(f5, BigInt(3)));
    CHECK(coefficient_from_json("{\"mod\":5,\"val\":9}", f5) ==
          Coefficient::from_integer(f5, BigInt(4))); // lenient: reduces
    CHECK_THROWS_AS(coefficient_from_json("{\"mod\":7,\"val\":3}", f5), ParseError);

    const Ring lz = Ring::lambda_int();
    CHECK(to_json(lam(2) + lam(3, 1)) == "{\"lambda\":[\"2\",\"3\"]}");
    CHECK(coefficient_from_json("{\"lambda\":[\"2\",\"3\"]}", lz) == lam(2) + lam(3, 1));
    // trailing zeros normalize away
    CHECK(coefficient_from_json("{\"lambda\":[\"1\",\"0\",\"0\"]}", lz) == lam(1));
    CHECK_THROWS_AS(coefficient_from_json("{\"lambda\":[\"1\"]}", z), ParseError);
    CHECK_THROWS_AS(coefficient_from_json("true", z), ParseError);
}

TEST_CASE("element serialization is canonical and re-parses equal") {
    const BaxterElement e = expand_p1x(2);
    const std::string text = to_json(e);
    CHECK(text ==
          "{\"base\":{\"kind\":\"poly\"},"
          "\"ring\":{\"base\":{\"kind\":\"int\"},\"kind\":\"lambda_poly\"},"
          "\"terms\":[{\"coeff\":{\"lambda\":[\"2\"]},\"word\":[0,1,1]},"
          "{\"coeff\":{\"lambda\":[\"0\",\"1\"]},\"word\":[0,2]}]}");
    CHECK(element_from_json(text) == e);
    CHECK(to_json(e) == text); // byte-stable across calls
}

TEST_CASE("element round trips across rings and bases") {
    struct Setup {
        Ring ring;
        BaseAlgebra base;
    };
    const Setup setups[] = {
        {Ring::lambda_int(), BaseAlgebra::poly()},
        {Ring::integers(BigInt(2)), BaseAlgebra::poly()},
        {Ring::mod_p(5), BaseAlgebra::quotient(5)},
        {Ring::lambda_mod_p(3), BaseAlgebra::poly()},
        {Ring::mod_p(2), BaseAlgebra::quotient(2)},
    };
    for (const auto& setup : setups) {
        SplitMix64 rng(99);
        for (int i = 0; i < 40; ++i) {
            const BaxterElement e = sample_element(setup.ring, setup.base, rng);
            CHECK(element_from_json(to_json(e)) == e);
        }
    }
}

TEST_CASE("fallback ring applies only when the document has none") {
    const std::string bare = "{\"terms\":[{\"coeff\":\"2\",\"word\":[0,1]}]}";
    const BaxterElement as_int = element_from_json(bare, Ring::integers());
    CHECK(as_int.ring() == Ring::integers());
    const BaxterElement as_lambda = element_from_json(bare, Ring::lambda_int());
    CHECK(as_lambda.ring() == Ring::lambda_int());
    CHECK_THROWS_AS(element_from_json(bare), ParseError);

    const std::string tagged = to_json(BaxterElement::unit(Ring::mod_p(3)));
    CHECK(element_from_json(tagged, Ring::integers()).ring() == Ring::mod_p(3));
}

TEST_CASE("parser rejects empty words") {
    const std::string doc =
        "{\"ring\":{\"kind\":\"int\"},\"terms\":[{\"coeff\":\"1\",\"word\":[]}]}";
    CHECK_THROWS_AS(element_from_json(doc), ParseError);
}

TEST_CASE("parser rejects unreduced quotient exponents") {
    const std::string doc =
        "{\"base\":{\"kind\":\"quotient\",\"p\":5},\"ring\":{\"kind\":\"mod_p\",\"p\":5},"
        "\"terms\":[{\"coeff\":{\"mod\":5,\"val\":1},\"word\":[5]}]}";
    CHECK_THROWS_AS(element_from_json(doc), ParseError);
    const std::string ok =
        "{\"base\":{\"kind\":\"quotient\",\"p\":5},\"ring\":{\"kind\":\"mod_p\",\"p\":5},"
        "\"terms\":[{\"coeff\":{\"mod\":5,\"val\":1},\"word\":[4]}]}";
    CHECK(element_from_json(ok).term_count() == 1);
}

TEST_CASE("parser accumulates duplicate words") {
    const std::string doc =
        "{\"ring\":{\"kind\":\"int\"},\"terms\":["
        "{\"coeff\":\"2\",\"word\":[1]},{\"coeff\":\"-2\",\"word\":[1]}]}";
    CHECK(element_from_json(doc).is_zero());
}

TEST_CASE("malformed documents raise ParseError") {
    CHECK_THROWS_AS(element_from_json("not json"), ParseError);
    CHECK_THROWS_AS(element_from_json("{\"ring\":{\"kind\":\"int\"}}"), ParseError);
    CHECK_THROWS_AS(element_from_json("{\"ring\":{\"kind\":\"int\"},\"terms\":[{}]}"),
                    ParseError);
    CHECK_THROWS_AS(
        element_from_json(
            "{\"ring\":{\"kind\":\"int\"},\"terms\":[{\"coeff\":\"1\",\"word\":[-1]}]}"),
        ParseError);
}

TEST_CASE("report JSON embeds operands and parameters") {
    const auto report = check_x_power_congruence(3);
    const std::string text = to_json(report);
    CHECK(text.find("\"identity\":\"xpow\"") != std::string::npos);
    CHECK(text.find("\"passed\":true") != std::string::npos);
    CHECK(text.find("\"p\":\"3\"") != std::string::npos);
    CHECK(text.find("\"terms\"") != std::string::npos);
    CHECK(to_json(report) == text);

    const auto coeff_failure = [] {
        VerificationReport r;
        r.identity = IdentityId::RefPart2;
        r.params = {{"n", "4"}};
        r.passed = false;
        r.lhs = Coefficient::lambda_monomial(Ring::lambda_int(), BigInt(14), 2);
        r.rhs = Coefficient::lambda_monomial(Ring::lambda_int(), BigInt(13), 2);
        return r;
    }();
    const std::string failure_text = to_json(coeff_failure);
    CHECK(failure_text.find("\"passed\":false") != std::string::npos);
    CHECK(failure_text.find("\"coefficient\"") != std::string::npos);
}

TEST_CASE("type mismatches surface as ParseError, not library internals") {
    CHECK_THROWS_AS(ring_from_json("{\"kind\":5}"), ParseError);
    CHECK_THROWS_AS(coefficient_from_json("{\"lambda\":5}", Ring::lambda_int()), ParseError);
    CHECK_THROWS_AS(element_from_json("{\"ring\":{\"kind\":\"int\"},\"terms\":5}"), ParseError);
}

TEST_CASE("mutated documents never escape the error contract") {
    const std::string seeds[] = {
        to_json(expand_p1x(2)),
        to_json(BaxterElement::unit(Ring::mod_p(5), BaseAlgebra::quotient(5))),
        "{\"ring\":{\"kind\":\"mod_p\",\"p\":7,\"lambda\":\"2\"},"
        "\"terms\":[{\"coeff\":{\"mod\":7,\"val\":6},\"word\":[3,0]}]}",
    };
    SplitMix64 rng(2718281828);
    int parsed_ok = 0, rejected = 0;
    for (const auto& seed : seeds) {
        for (int i = 0; i < 400; ++i) {
            std::string doc = seed;
            const int edits = 1 + static_cast<int>(rng.below(3));
            for (int e = 0; e < edits; ++e) {
                const std::size_t pos = rng.below(doc.size());
                switch (rng.below(3)) {
                case 0: doc[pos] = static_cast<char>('!' + rng.below(90)); break;
                case 1: doc.erase(pos, 1); break;
                default: doc.insert(pos, 1, static_cast<char>('!' + rng.below(90))); break;
                }
                if (doc.empty()) doc = "{";
            }
            try {
                (void)element_from_json(doc);
                ++parsed_ok;
            } catch (const ParseError&) {
                ++rejected;
            } catch (const NotPrimeError&) {
                ++rejected;
            } catch (const OutOfRangeError&) {
                ++rejected;
            } catch (const RingMismatchError&) {
                ++rejected;
            }
        }
    }
    // most mutations must be rejected, and none may escape the taxonomy above
    CHECK(rejected > parsed_ok);
}
