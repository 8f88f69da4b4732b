#include "baxterlab/congruences.hpp"

#include "baxterlab/errors.hpp"
#include "baxterlab/sampling.hpp"

#include <utility>

namespace baxterlab {

namespace {

void require_prime_in(std::uint64_t p, std::uint64_t max_p, const char* who) {
    if (!is_prime(p)) throw NotPrimeError(std::string(who) + ": p must be prime");
    if (p > max_p) throw OutOfRangeError(std::string(who) + ": p <= " + std::to_string(max_p));
}

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

VerificationReport check_sni_congruence(std::uint64_t p) {
    require_prime_in(p, 11, "check_sni_congruence");
    VerificationReport r;
    r.identity = IdentityId::SniCongruence;
    r.params = {{"p", std::to_string(p)}};

    const auto n = static_cast<std::uint32_t>(p);
    const BaxterElement expansion = expand_p1x(n);
    const Coefficient zero_mod = Coefficient::zero(Ring::lambda_mod_p(p));
    for (const auto& parts : compositions_of(n)) {
        if (parts.length() == 1) continue; // the surviving term I = (p)
        Coefficient reduced = expansion.coefficient_of(word_for_composition(parts)).reduced_mod_p(p);
        if (!reduced.is_zero()) {
            r.passed = false;
            r.lhs = std::move(reduced);
            r.rhs = zero_mod;
            return r;
        }
    }

    // The classical Stirling congruence follows; check it off the table.
    for (std::uint32_t k = 2; k < n; ++k) {
        if (stirling_second(n, k).mod_u64(p) != 0) {
            r.passed = false;
            r.lhs = Coefficient::from_integer(Ring::mod_p(p), stirling_second(n, k));
            r.rhs = Coefficient::zero(Ring::mod_p(p));
            return r;
        }
    }
    r.passed = true;
    r.lhs = zero_mod;
    r.rhs = zero_mod;
    return r;
}

VerificationReport check_x_power_congruence(std::uint64_t p) {
    require_prime_in(p, 11, "check_x_power_congruence");
    const auto n = static_cast<std::uint32_t>(p);
    BaxterElement lhs = reduce_element_mod_p(expand_p1x(n), p);
    BaxterElement rhs(Ring::lambda_mod_p(p));
    rhs.add_term(TensorWord({0, n}), Coefficient::lambda_power(rhs.ring(), n - 1));
    return element_comparison(IdentityId::XPowerCongruence, {{"p", std::to_string(p)}},
                              std::move(lhs), std::move(rhs));
}

VerificationReport check_pa_congruence(std::uint64_t p, const BaxterElement& a) {
    require_prime_in(p, 5, "check_pa_congruence");
    if (a.ring() != Ring::lambda_int() || a.base() != BaseAlgebra::poly())
        throw RingMismatchError("check_pa_congruence: element must live over LAMBDA_POLY(Z)");
    if (a.term_count() > 3 || a.max_word_length() > 2)
        throw OutOfRangeError("check_pa_congruence: at most 3 terms of word length <= 2");

    const auto k = static_cast<std::uint32_t>(p);
    BaxterElement lhs = reduce_element_mod_p(power(baxter_P(a), k), p);
    BaxterElement rhs = reduce_element_mod_p(
        baxter_P(power(a, k)).scaled(Coefficient::lambda_power(a.ring(), k - 1)), p);
    return element_comparison(IdentityId::PaCongruence, {{"p", std::to_string(p)}},
                              std::move(lhs), std::move(rhs));
}

VerificationReport check_tensor_freshman(std::uint64_t p, const TensorWord& w) {
    require_prime_in(p, 5, "check_tensor_freshman");
    if (w.length() > 3) throw OutOfRangeError("check_tensor_freshman: |w| <= 3");

    const Ring ring = Ring::lambda_int();
    const BaseAlgebra base = BaseAlgebra::poly();
    const auto k = static_cast<std::uint32_t>(p);
    const auto n = static_cast<std::uint32_t>(w.length());

    BaxterElement lhs = reduce_element_mod_p(power(BaxterElement::from_word(ring, w), k), p);

    std::vector<std::uint32_t> powered;
    powered.reserve(n);
    for (auto e : w.exponents()) powered.push_back(base.power_exponent(e, k));
    BaxterElement rhs_int(ring, base);
    rhs_int.add_term(TensorWord(std::move(powered)),
                     Coefficient::lambda_power(ring, (n - 1) * (k - 1)));
    BaxterElement rhs = reduce_element_mod_p(rhs_int, p);

    std::string word_str = "(";
    for (std::size_t i = 0; i < w.exponents().size(); ++i) {
        if (i) word_str += ',';
        word_str += std::to_string(w.exponents()[i]);
    }
    word_str += ')';
    return element_comparison(IdentityId::TensorFreshman,
                              {{"p", std::to_string(p)}, {"word", word_str}}, std::move(lhs),
                              std::move(rhs));
}

VerificationReport check_fermat_quotient_base(std::uint64_t p, std::uint32_t trials,
                                              std::uint64_t seed) {
    require_prime_in(p, 5, "check_fermat_quotient_base");
    if (trials > 100) throw OutOfRangeError("check_fermat_quotient_base: trials <= 100");

    VerificationReport r;
    r.identity = IdentityId::FermatQuotient;
    r.params = {{"p", std::to_string(p)},
                {"trials", std::to_string(trials)},
                {"seed", std::to_string(seed)}};

    const Ring ring = Ring::mod_p(p, BigInt(1)); // λ pinned to 1
    const BaseAlgebra base = BaseAlgebra::quotient(p);
    SplitMix64 master(seed);
    for (std::uint32_t t = 0; t < trials; ++t) {
        SplitMix64 rng(master.fork(t));
        const BaxterElement a = sample_element(ring, base, rng);
        BaxterElement lhs = power(a, p);
        if (lhs != a) {
            r.passed = false;
            r.params.emplace_back("failing_trial", std::to_string(t));
            r.lhs = std::move(lhs);
            r.rhs = a;
            return r;
        }
    }
    r.passed = true;
    const BaxterElement unit = BaxterElement::unit(ring, base);
    r.lhs = unit;
    r.rhs = unit;
    return r;
}

} // namespace baxterlab
