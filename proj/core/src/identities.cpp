#include "baxterlab/identities.hpp"

#include "baxterlab/errors.hpp"

namespace baxterlab {

std::string_view identity_name(IdentityId id) {
    switch (id) {
    case IdentityId::Circ: return "circ";
    case IdentityId::ConnSecondKind: return "conn2";
    case IdentityId::ConnFirstKind: return "conn1";
    case IdentityId::RefPart1: return "ref1";
    case IdentityId::RefPart2: return "ref2";
    case IdentityId::EgfTruncation: return "egf";
    case IdentityId::SniCongruence: return "sni";
    case IdentityId::XPowerCongruence: return "xpow";
    case IdentityId::PaCongruence: return "pa";
    case IdentityId::TensorFreshman: return "freshman";
    case IdentityId::FermatQuotient: return "fermat";
    }
    return "?";
}

namespace {

Ring lambda_int() { return Ring::lambda_int(); }

VerificationReport element_comparison(IdentityId id,
                                      std::vector<std::pair<std::string, std::string>> params,
                                      BaxterElement lhs, BaxterElement rhs) {
    VerificationReport r;
    r.identity = id;
    r.params = std::move(params);
    r.passed = lhs == rhs;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

} // namespace

BaxterElement expand_p1x(std::uint32_t n) {
    const Ring ring = lambda_int();
    BaxterElement base = BaxterElement::from_word(ring, TensorWord({0, 1}));
    return power(base, n);
}

BaxterElement iterated_P_of_one(std::uint32_t k) {
    return BaxterElement::from_word(lambda_int(), unit_word(k + 1));
}

Coefficient mixcoeff(std::uint32_t n, const Composition& parts) {
    if (n > 12) throw OutOfRangeError("mixcoeff: n <= 12");
    if (parts.norm() != n)
        throw NormMismatchError("mixcoeff: |I| = " + std::to_string(parts.norm()) +
                                " != n = " + std::to_string(n));
    return expand_p1x(n).coefficient_of(word_for_composition(parts));
}

VerificationReport verify_circ(std::uint32_t k) {
    if (k < 1 || k > 12) throw OutOfRangeError("verify_circ: 1 <= k <= 12");
    const Ring ring = lambda_int();
    BaxterElement lhs = iterated_P_of_one(k) * iterated_P_of_one(1);
    BaxterElement rhs =
        iterated_P_of_one(k + 1).scaled(Coefficient::from_integer(ring, BigInt(k + 1))) +
        iterated_P_of_one(k).scaled(Coefficient::lambda_monomial(ring, BigInt(k), 1));
    return element_comparison(IdentityId::Circ, {{"k", std::to_string(k)}}, std::move(lhs),
                              std::move(rhs));
}

VerificationReport verify_thm_conn_second_kind(std::uint32_t n) {
    if (n < 1 || n > 12) throw OutOfRangeError("verify_thm_conn_second_kind: 1 <= n <= 12");
    const Ring ring = lambda_int();
    BaxterElement lhs = power(iterated_P_of_one(1), n);
    BaxterElement rhs = BaxterElement::zero(ring);
    for (std::uint32_t k = 1; k <= n; ++k) {
        Coefficient c = Coefficient::lambda_monomial(ring, factorial(k) * stirling_second(n, k),
                                                     n - k);
        rhs += iterated_P_of_one(k).scaled(c);
    }
    return element_comparison(IdentityId::ConnSecondKind, {{"n", std::to_string(n)}},
                              std::move(lhs), std::move(rhs));
}

VerificationReport verify_thm_conn_first_kind(std::uint32_t n) {
    if (n < 1 || n > 10) throw OutOfRangeError("verify_thm_conn_first_kind: 1 <= n <= 10");
    const Ring ring = lambda_int();
    BaxterElement lhs = iterated_P_of_one(n).scaled(Coefficient::from_integer(ring, factorial(n)));
    BaxterElement rhs = BaxterElement::zero(ring);
    const BaxterElement p1 = iterated_P_of_one(1);
    for (std::uint32_t k = 1; k <= n; ++k) {
        Coefficient c = Coefficient::lambda_monomial(ring, stirling_first(n, k), n - k);
        rhs += power(p1, k).scaled(c);
    }
    return element_comparison(IdentityId::ConnFirstKind, {{"n", std::to_string(n)}},
                              std::move(lhs), std::move(rhs));
}

VerificationReport verify_thm_ref_part1(std::uint32_t n) {
    if (n < 1 || n > 12) throw OutOfRangeError("verify_thm_ref_part1: 1 <= n <= 12");
    const Ring ring = lambda_int();
    BaxterElement lhs = expand_p1x(n);
    BaxterElement rhs = BaxterElement::zero(ring);
    for (const auto& parts : compositions_of(n)) {
        Coefficient c = Coefficient::lambda_monomial(
            ring, multinomial(n, parts), n - static_cast<std::uint32_t>(parts.length()));
        rhs.add_term(word_for_composition(parts), c);
    }
    return element_comparison(IdentityId::RefPart1, {{"n", std::to_string(n)}}, std::move(lhs),
                              std::move(rhs));
}

VerificationReport verify_thm_ref_part2(std::uint32_t n) {
    if (n < 1 || n > 12) throw OutOfRangeError("verify_thm_ref_part2: 1 <= n <= 12");
    const Ring ring = lambda_int();
    VerificationReport r;
    r.identity = IdentityId::RefPart2;
    r.params = {{"n", std::to_string(n)}};

    // Direct route: group the expansion coefficients by composition length.
    const BaxterElement expansion = expand_p1x(n);
    std::vector<Coefficient> by_length(n + 1, Coefficient::zero(ring));
    for (const auto& parts : compositions_of(n)) {
        by_length[parts.length()] += expansion.coefficient_of(word_for_composition(parts));
    }
    for (std::uint32_t k = 1; k <= n; ++k) {
        Coefficient expected = Coefficient::lambda_monomial(
            ring, factorial(k) * stirling_second(n, k), n - k);
        if (by_length[k] != expected) {
            r.passed = false;
            r.lhs = by_length[k];
            r.rhs = expected;
            return r;
        }
    }

    // Proof route: the homomorphism x -> 1 carries the expansion onto (1⊗1)^n.
    BaxterElement lhs = specialize_x_to_one(expansion);
    BaxterElement rhs = power(iterated_P_of_one(1), n);
    r.passed = lhs == rhs;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

VerificationReport egf_truncation_check(std::uint32_t n_max) {
    if (n_max < 1 || n_max > 10) throw OutOfRangeError("egf_truncation_check: 1 <= N <= 10");
    VerificationReport r;
    r.identity = IdentityId::EgfTruncation;
    r.params = {{"n_max", std::to_string(n_max)}};

    // The exponential remark truncates to the second-kind connection identity
    // in each u^n/n! slot.
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        VerificationReport inner = verify_thm_conn_second_kind(n);
        if (!inner.passed) {
            r.params.emplace_back("failing_n", std::to_string(n));
            r.lhs = std::move(inner.lhs);
            r.rhs = std::move(inner.rhs);
            return r;
        }
    }

    // The geometric remark truncates to: the order-N partial sum of the
    // (1⊗x)^m equals the multinomially-built combination Σ (n;I)λ^{n-ℓ(I)}
    // over all compositions with norm <= N, plus the unit for m = 0. Words
    // of norm n arise only from the m = n summand, so the sum separates.
    const Ring ring = Ring::lambda_int();
    BaxterElement truncated = BaxterElement::zero(ring);
    for (std::uint32_t m = 0; m <= n_max; ++m) truncated += expand_p1x(m);
    BaxterElement expected = BaxterElement::unit(ring);
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        for (const auto& parts : compositions_of(n)) {
            Coefficient c = Coefficient::lambda_monomial(
                ring, multinomial(n, parts), n - static_cast<std::uint32_t>(parts.length()));
            expected.add_term(word_for_composition(parts), c);
        }
    }
    r.passed = truncated == expected;
    r.lhs = std::move(truncated);
    r.rhs = std::move(expected);
    return r;
}

} // namespace baxterlab
