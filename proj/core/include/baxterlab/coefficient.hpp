#pragma once

#include "baxterlab/bigint.hpp"

#include <cstdint>
#include <vector>

namespace baxterlab {

bool is_prime(std::uint64_t n) noexcept;

enum class RingKind : std::uint8_t { Int, ModP, LambdaPoly };

/**
 * Descriptor of the working commutative ring C.
 *
 * Three kinds are supported: the integers, the field of residues modulo a
 * prime p, and univariate polynomials in the weight symbol λ over either.
 * With a LambdaPoly ring, λ stays a formal indeterminate, so any identity
 * checked there holds for every weight at once. With an Int or ModP ring,
 * λ is pinned to a fixed ring constant chosen at construction.
 */
class Ring {
public:
    static Ring integers(BigInt pinned_lambda = BigInt(1));
    static Ring mod_p(std::uint64_t p, BigInt pinned_lambda = BigInt(1)); // throws NotPrimeError
    static Ring lambda_int();
    static Ring lambda_mod_p(std::uint64_t p);                            // throws NotPrimeError

    RingKind kind() const { return kind_; }
    bool has_formal_lambda() const { return kind_ == RingKind::LambdaPoly; }
    bool is_modular() const;        // residue arithmetic anywhere in the ring
    std::uint64_t modulus() const;  // valid when is_modular()
    const BigInt& pinned_lambda() const; // valid for Int and ModP rings

    friend bool operator==(const Ring& a, const Ring& b) = default;

private:
    Ring() = default;
    RingKind kind_ = RingKind::Int;
    std::uint64_t p_ = 0;        // modulus; 0 when the base is the integers
    bool base_mod_ = false;      // LambdaPoly only: base ring is ModP(p_)
    BigInt pinned_lambda_;       // Int/ModP only; reduced into [0,p) for ModP
};

/**
 * Exact element of a Ring.
 *
 * Stored as a dense list of λ-power coefficients (index = exponent of λ);
 * Int and ModP values occupy index 0 only. Canonical form: no trailing
 * zero entries, so the zero element is the empty list regardless of kind,
 * and equality is a plain field-by-field comparison. ModP entries are
 * always reduced into [0, p).
 */
class Coefficient {
public:
    static Coefficient zero(const Ring& ring);
    static Coefficient one(const Ring& ring);
    static Coefficient lambda(const Ring& ring);
    static Coefficient lambda_power(const Ring& ring, std::uint32_t e);
    // c·λ^e; e must be 0 for rings with pinned λ unless you want c·pin^e.
    static Coefficient lambda_monomial(const Ring& ring, BigInt c, std::uint32_t e);
    static Coefficient from_integer(const Ring& ring, BigInt v);
    static Coefficient from_lambda_coeffs(const Ring& ring, std::vector<BigInt> coeffs);

    const Ring& ring() const { return ring_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;

    // λ-power coefficient list in canonical form (empty = zero).
    const std::vector<BigInt>& lambda_coeffs() const { return coeffs_; }
    // Scalar value for Int/ModP rings (the constant term otherwise).
    BigInt scalar_value() const;

    friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
    Coefficient operator-() const;
    Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }
    Coefficient& operator-=(const Coefficient& o) { return *this = *this - o; }
    Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }

    friend bool operator==(const Coefficient& a, const Coefficient& b) = default;

    // Multiplication by λ^j: a coefficient-list shift when λ is formal,
    // a constant multiple when λ is pinned.
    Coefficient times_lambda_power(std::uint32_t j) const;

    // Ring homomorphism onto the mod-p image: Int -> ModP(p),
    // LambdaPoly(Int) -> LambdaPoly(ModP(p)). Throws NotPrimeError for
    // composite p and RingMismatchError when the ring is already modular.
    Coefficient reduced_mod_p(std::uint64_t p) const;

private:
    Coefficient(Ring ring, std::vector<BigInt> coeffs);
    void canonicalize();

    Ring ring_;
    std::vector<BigInt> coeffs_;
};

} // namespace baxterlab
