#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "baxterlab/congruences.hpp"
#include "baxterlab/errors.hpp"
#include "baxterlab/json_io.hpp"
#include "baxterlab/sampling.hpp"

#include "test_support.hpp"

using namespace baxterlab;
using namespace baxterlab::testing;

TEST_CASE("non-(p) coefficients of (1⊗x)^p vanish mod p") {
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull}) {
        CHECK(check_sni_congruence(p).passed);
    }
    // p = 3: the coefficients 6, 3λ, 3λ of the non-(3) words
    CHECK(mixcoeff(3, Composition({1, 1, 1})).reduced_mod_p(3).is_zero());
    CHECK(mixcoeff(3, Composition({1, 2})).reduced_mod_p(3).is_zero());
    CHECK(mixcoeff(3, Composition({2, 1})).reduced_mod_p(3).is_zero());
    // p = 2: the coefficient 2 of 1⊗x⊗x
    CHECK(mixcoeff(2, Composition({1, 1})).reduced_mod_p(2).is_zero());

    CHECK_THROWS_AS(check_sni_congruence(4), NotPrimeError);
    CHECK_THROWS_AS(check_sni_congruence(13), OutOfRangeError);
}

TEST_CASE("(1⊗x)^p collapses to λ^{p-1}(1⊗x^p) mod p") {
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull}) {
        const auto report = check_x_power_congruence(p);
        CHECK(report.passed);
        const auto& lhs = std::get<BaxterElement>(*report.lhs);
        CHECK(lhs.term_count() == 1);
        CHECK(lhs.coefficient_of(TensorWord({0, static_cast<std::uint32_t>(p)})) ==
              Coefficient::lambda_power(Ring::lambda_mod_p(p), static_cast<std::uint32_t>(p) - 1));
    }
    CHECK_THROWS_AS(check_x_power_congruence(9), NotPrimeError);
}

TEST_CASE("P(a)^p ≡ λ^{p-1}P(a^p) for small elements") {
    const BaxterElement just_x = elem({{{1}, 1, 0}});
    const BaxterElement unit = BaxterElement::unit(Ring::lambda_int());
    const BaxterElement two_terms = elem({{{1}, 1, 0}, {{2}, 1, 0}}); // x + x^2
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        CHECK(check_pa_congruence(p, just_x).passed);
        CHECK(check_pa_congruence(p, unit).passed); // this is P(1)^p ≡ λ^{p-1}P(1)
        CHECK(check_pa_congruence(p, two_terms).passed);
    }
    // length-2 words and three terms, the stated ceiling
    const BaxterElement widest = elem({{{1, 2}, 2, 1}, {{2, 1}, -1, 0}, {{0, 1}, 3, 0}});
    CHECK(check_pa_congruence(3, widest).passed);

    CHECK_THROWS_AS(check_pa_congruence(7, just_x), OutOfRangeError);
    CHECK_THROWS_AS(check_pa_congruence(6, just_x), NotPrimeError);
    const BaxterElement too_long = elem({{{1, 1, 1}, 1, 0}});
    CHECK_THROWS_AS(check_pa_congruence(3, too_long), OutOfRangeError);
    const BaxterElement too_many =
        elem({{{1}, 1, 0}, {{2}, 1, 0}, {{3}, 1, 0}, {{4}, 1, 0}});
    CHECK_THROWS_AS(check_pa_congruence(3, too_many), OutOfRangeError);
    BaxterElement wrong_ring(Ring::integers());
    CHECK_THROWS_AS(check_pa_congruence(3, wrong_ring), RingMismatchError);
}

TEST_CASE("bcong1 corollary in explicit form: P(1)^p ≡ λ^{p-1}P(1) mod p") {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        const auto k = static_cast<std::uint32_t>(p);
        const BaxterElement lhs =
            reduce_element_mod_p(power(iterated_P_of_one(1), k), p);
        const BaxterElement rhs = reduce_element_mod_p(
            iterated_P_of_one(1).scaled(Coefficient::lambda_power(Ring::lambda_int(), k - 1)), p);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("tensor freshman's dream on words") {
    // (x⊗x^2)^2 ≡ λ·(x^2⊗x^4) mod 2
    const auto r = check_tensor_freshman(2, word({1, 2}));
    CHECK(r.passed);
    CHECK(std::get<BaxterElement>(*r.rhs).coefficient_of(word({2, 4})) ==
          Coefficient::lambda_power(Ring::lambda_mod_p(2), 1));
    // degree-1 words reduce to the base-algebra statement with λ^0
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        CHECK(check_tensor_freshman(p, word({1})).passed);
        CHECK(check_tensor_freshman(p, word({2})).passed);
    }
    // (x⊗x⊗x)^3 ≡ λ^4·(x^3⊗x^3⊗x^3) mod 3
    const auto r3 = check_tensor_freshman(3, word({1, 1, 1}));
    CHECK(r3.passed);
    CHECK(std::get<BaxterElement>(*r3.rhs).coefficient_of(word({3, 3, 3})) ==
          Coefficient::lambda_power(Ring::lambda_mod_p(3), 4));

    CHECK_THROWS_AS(check_tensor_freshman(7, word({1})), OutOfRangeError);
    CHECK_THROWS_AS(check_tensor_freshman(4, word({1})), NotPrimeError);
    CHECK_THROWS_AS(check_tensor_freshman(3, word({1, 1, 1, 1})), OutOfRangeError);
}

TEST_CASE("freshman words may contain unit factors") {
    for (std::uint64_t p : {2ull, 3ull}) {
        CHECK(check_tensor_freshman(p, word({0, 1})).passed);
        CHECK(check_tensor_freshman(p, word({1, 0, 2})).passed);
    }
}

TEST_CASE("xpow is the freshman statement at w = 1⊗x") {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        const auto via_freshman = check_tensor_freshman(p, word({0, 1}));
        const auto via_xpow = check_x_power_congruence(p);
        CHECK(via_freshman.passed);
        CHECK(via_xpow.passed);
        CHECK(std::get<BaxterElement>(*via_freshman.lhs) ==
              std::get<BaxterElement>(*via_xpow.lhs));
        CHECK(std::get<BaxterElement>(*via_freshman.rhs) ==
              std::get<BaxterElement>(*via_xpow.rhs));
    }
}

TEST_CASE("Fermat over the quotient base: a^p = a") {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        const auto report = check_fermat_quotient_base(p, 50, 1);
        CHECK(report.passed);
    }
    CHECK_THROWS_AS(check_fermat_quotient_base(7, 10, 1), OutOfRangeError);
    CHECK_THROWS_AS(check_fermat_quotient_base(4, 10, 1), NotPrimeError);
    CHECK_THROWS_AS(check_fermat_quotient_base(3, 101, 1), OutOfRangeError);
}

TEST_CASE("Fermat check is deterministic for a fixed seed") {
    const auto a = check_fermat_quotient_base(3, 20, 77);
    const auto b = check_fermat_quotient_base(3, 20, 77);
    CHECK(to_json(a) == to_json(b));
}

TEST_CASE("unit tensors are fixed by the p-th power over the quotient") {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        const Ring ring = Ring::mod_p(p, BigInt(1));
        const BaseAlgebra base = BaseAlgebra::quotient(p);
        for (std::size_t n = 1; n <= 4; ++n) {
            const BaxterElement a = BaxterElement::from_word(ring, unit_word(n), base);
            CHECK(power(a, p) == a);
        }
        // the single word x too: x^2 = x in the p = 2 quotient
        const BaxterElement x = BaxterElement::from_word(ring, TensorWord({1}), base);
        CHECK(power(x, p) == x);
    }
}

TEST_CASE("zero element is Frobenius-fixed trivially") {
    const Ring ring = Ring::mod_p(3, BigInt(1));
    const BaxterElement zero = BaxterElement::zero(ring, BaseAlgebra::quotient(3));
    CHECK(power(zero, 3) == zero);
}

TEST_CASE("fermat accepts the maximum trial count") {
    CHECK(check_fermat_quotient_base(2, 100, 123).passed);
}
