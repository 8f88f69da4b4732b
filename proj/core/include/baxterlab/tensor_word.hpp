#pragma once

#include "baxterlab/combinatorics.hpp"

#include <cstdint>
#include <vector>

namespace baxterlab {

/**
 * The base algebra A the tensor factors live in: either the polynomial
 * algebra on one generator x, or its quotient by x^p = x for a prime p.
 * In the quotient, exponents are kept canonical in [0, p-1]: the unit
 * stays exponent 0 and any e >= 1 reduces to ((e-1) mod (p-1)) + 1.
 */
struct BaseAlgebra {
    enum class Kind : std::uint8_t { Poly, Quotient };

    Kind kind = Kind::Poly;
    std::uint64_t p = 0;

    static BaseAlgebra poly() { return {}; }
    static BaseAlgebra quotient(std::uint64_t p); // throws NotPrimeError

    friend bool operator==(const BaseAlgebra& a, const BaseAlgebra& b) = default;

    bool exponent_reduced(std::uint64_t e) const;
    std::uint32_t reduce_exponent(std::uint64_t e) const;
    // x^a · x^b, canonical.
    std::uint32_t multiply_exponents(std::uint32_t a, std::uint32_t b) const;
    // (x^e)^k, canonical.
    std::uint32_t power_exponent(std::uint32_t e, std::uint64_t k) const;
};

/**
 * Basis element of A^{⊗n}: a non-empty sequence of monomial exponents,
 * exponent 0 standing for the unit of A. Words carry no scalars; those
 * live in BaxterElement. The word (1) of length 1 is the algebra unit.
 */
class TensorWord {
public:
    explicit TensorWord(std::vector<std::uint32_t> exponents);
    static TensorWord unit() { return TensorWord({0}); }
    static TensorWord single(std::uint32_t e) { return TensorWord({e}); }

    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    std::size_t length() const { return exps_.size(); }

    friend bool operator==(const TensorWord& a, const TensorWord& b) = default;

private:
    std::vector<std::uint32_t> exps_;
};

// Canonical term order: longer words first, then lexicographic on exponents.
// This is the order elements iterate, print and serialize in.
struct CanonicalWordLess {
    bool operator()(const TensorWord& a, const TensorWord& b) const {
        if (a.length() != b.length()) return a.length() > b.length();
        return a.exponents() < b.exponents();
    }
};

// The word 1⊗1⊗...⊗1 of the given length (>= 1).
TensorWord unit_word(std::size_t length);

// The word 1 ⊗ x^{i1} ⊗ ... ⊗ x^{ik} indexed by a composition.
TensorWord word_for_composition(const Composition& parts);

} // namespace baxterlab
