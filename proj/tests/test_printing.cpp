#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "baxterlab/identities.hpp"
#include "baxterlab/printing.hpp"

#include "test_support.hpp"

using namespace baxterlab;
using namespace baxterlab::testing;

TEST_CASE("coefficient display forms") {
    const Ring lz = Ring::lambda_int();
    CHECK(to_display_string(Coefficient::zero(lz)) == "0");
    CHECK(to_display_string(Coefficient::one(lz)) == "1");
    CHECK(to_display_string(lam(2)) == "2");
    CHECK(to_display_string(lam(-3)) == "-3");
    CHECK(to_display_string(lam(1, 1)) == "λ");
    CHECK(to_display_string(lam(3, 1)) == "3λ");
    CHECK(to_display_string(lam(1, 2)) == "λ^2");
    CHECK(to_display_string(lam(-1, 2)) == "-λ^2");
    CHECK(to_display_string(lam(6, 2)) == "6λ^2");
    CHECK(to_display_string(lam(1) + lam(1, 1)) == "1+λ");
    CHECK(to_display_string(lam(2) + lam(-3, 2)) == "2-3λ^2");

    PrintOptions ascii;
    ascii.ascii = true;
    CHECK(to_display_string(lam(3, 1), ascii) == "3lambda");
    CHECK(to_display_string(lam(1, 2), ascii) == "lambda^2");

    const Ring f5 = Ring::mod_p(5);
    CHECK(to_display_string(Coefficient::from_integer(f5, BigInt(12))) == "2");
}

TEST_CASE("word display") {
    CHECK(to_display_string(word({0})) == "1");
    CHECK(to_display_string(word({1})) == "x");
    CHECK(to_display_string(word({2})) == "x^2");
    CHECK(to_display_string(word({0, 1, 2})) == "1⊗x⊗x^2");
    PrintOptions ascii;
    ascii.ascii = true;
    CHECK(to_display_string(word({0, 1, 2}), ascii) == "1(x)x(x)x^2");
}

TEST_CASE("element display follows the canonical order") {
    CHECK(to_display_string(BaxterElement::zero(Ring::lambda_int())) == "0");
    CHECK(to_display_string(expand_p1x(1)) == "(1⊗x)");
    CHECK(to_display_string(expand_p1x(2)) == "2 (1⊗x⊗x) + λ (1⊗x^2)");
    CHECK(to_display_string(expand_p1x(3)) ==
          "6 (1⊗x⊗x⊗x) + 3λ (1⊗x⊗x^2) + 3λ (1⊗x^2⊗x) + λ^2 (1⊗x^3)");

    PrintOptions ascii;
    ascii.ascii = true;
    CHECK(to_display_string(expand_p1x(2), ascii) == "2 (1(x)x(x)x) + lambda (1(x)x^2)");
}

TEST_CASE("negative and multi-term coefficients in element display") {
    CHECK(to_display_string(elem({{{1}, 1, 0}, {{2}, -2, 0}})) == "(x) - 2 (x^2)");
    CHECK(to_display_string(elem({{{1}, -1, 0}})) == "-1 (x)");
    BaxterElement mixed = elem({{{1}, 1, 0}});
    mixed.add_term(word({1}), lam(1, 1)); // coefficient becomes 1+λ
    CHECK(to_display_string(mixed) == "(1+λ) (x)");
}
