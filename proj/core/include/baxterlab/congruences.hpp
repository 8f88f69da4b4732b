#pragma once

#include "baxterlab/identities.hpp"

#include <cstdint>

namespace baxterlab {

// p | coefficient of every word in (1⊗x)^p except 1⊗x^p, and
// S(p,k) ≡ 0 mod p for 1 < k < p. Primes 2..11.
VerificationReport check_sni_congruence(std::uint64_t p);

// (1⊗x)^p ≡ λ^{p-1}·(1⊗x^p) mod p. Primes 2..11.
VerificationReport check_x_power_congruence(std::uint64_t p);

// P(a)^p ≡ λ^{p-1}·P(a^p) mod p for an element a over LAMBDA_POLY(ℤ)
// with at most 3 terms of word length <= 2. Primes 2..5.
VerificationReport check_pa_congruence(std::uint64_t p, const BaxterElement& a);

// w^p ≡ λ^{(n-1)(p-1)}·(w with every factor raised to the p-th power) mod p
// for a word w of length n <= 3 over the polynomial base. Primes 2..5.
VerificationReport check_tensor_freshman(std::uint64_t p, const TensorWord& w);

// a^p = a for seeded random elements over the quotient base x^p = x with
// coefficients in ℤ/p and λ pinned to 1. Primes 2..5, trials <= 100.
VerificationReport check_fermat_quotient_base(std::uint64_t p, std::uint32_t trials,
                                              std::uint64_t seed);

} // namespace baxterlab
