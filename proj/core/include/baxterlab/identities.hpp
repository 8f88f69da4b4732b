#pragma once

#include "baxterlab/baxter_element.hpp"
#include "baxterlab/combinatorics.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace baxterlab {

enum class IdentityId {
    Circ,             // P^k(1)·P(1) = (k+1)P^{k+1}(1) + kλP^k(1)
    ConnSecondKind,   // P(1)^n = Σ k!S(n,k)λ^{n-k}P^k(1)
    ConnFirstKind,    // n!P^n(1) = Σ s(n,k)λ^{n-k}P(1)^k
    RefPart1,         // coefficient of 1⊗x^{⊗I} in (1⊗x)^n is (n;I)λ^{n-ℓ(I)}
    RefPart2,         // those coefficients grouped by length sum to k!S(n,k)λ^{n-k}
    EgfTruncation,    // finite truncations of both generating-function remarks
    SniCongruence,    // p | coefficient of every non-(p) word in (1⊗x)^p
    XPowerCongruence, // (1⊗x)^p ≡ λ^{p-1}(1⊗x^p) mod p
    PaCongruence,     // P(a)^p ≡ λ^{p-1}P(a^p) mod p
    TensorFreshman,   // w^p ≡ λ^{(n-1)(p-1)}·(p-th power factors) mod p
    FermatQuotient,   // a^p = a over the Frobenius-fixed quotient base
};

std::string_view identity_name(IdentityId id);

/// Outcome of one mechanical identity check. `passed` holds exactly when
/// the recorded lhs and rhs compare equal; for multi-part checks they are
/// the first failing pair, or a representative equal pair on success.
struct VerificationReport {
    using Operand = std::variant<Coefficient, BaxterElement>;

    IdentityId identity;
    std::vector<std::pair<std::string, std::string>> params;
    bool passed = false;
    std::optional<Operand> lhs;
    std::optional<Operand> rhs;
};

// (1⊗x)^n over LAMBDA_POLY(ℤ); n = 0 gives the unit.
BaxterElement expand_p1x(std::uint32_t n);

// P^k(1) = 1^{⊗(k+1)} over LAMBDA_POLY(ℤ).
BaxterElement iterated_P_of_one(std::uint32_t k);

// Full coefficient of 1⊗x^{⊗I} in (1⊗x)^n, λ-power included.
// Requires |I| = n and n <= 12.
Coefficient mixcoeff(std::uint32_t n, const Composition& parts);

VerificationReport verify_circ(std::uint32_t k);                  // 1 <= k <= 12
VerificationReport verify_thm_conn_second_kind(std::uint32_t n);  // 1 <= n <= 12
VerificationReport verify_thm_conn_first_kind(std::uint32_t n);   // 1 <= n <= 10
VerificationReport verify_thm_ref_part1(std::uint32_t n);         // 1 <= n <= 12
VerificationReport verify_thm_ref_part2(std::uint32_t n);         // 1 <= n <= 12
VerificationReport egf_truncation_check(std::uint32_t n_max);     // 1 <= N <= 10

} // namespace baxterlab
