#pragma once

#include "baxterlab/coefficient.hpp"
#include "baxterlab/tensor_word.hpp"

#include <cstdint>
#include <map>
#include <span>

namespace baxterlab {

/**
 * Element of the free Baxter algebra ⊕_{n>=1} A^{⊗n} over a coefficient
 * ring C: a finite C-linear combination of tensor words in canonical form.
 *
 * Canonical form: no zero coefficients are stored and terms sit in a map
 * under CanonicalWordLess, so two elements are equal exactly when their
 * ring, base algebra and term maps are equal, and iteration order is
 * deterministic everywhere (printing, serialization, golden files).
 *
 * The multiplication is the mixable shuffle product of weight λ: head
 * factors multiply in A and the tails interleave, with an optional
 * λ-weighted merge of one factor from each side. Together with the
 * operator baxter_P (prepend the unit factor) this realizes the free
 * Baxter algebra on A, so the Baxter identity
 *   P(a)P(b) = P(aP(b)) + P(P(a)b) + λP(ab)
 * holds identically; tests exercise it on random elements.
 *
 * A product of words of lengths m and n expands into D(m-1,n-1) summands
 * (a Delannoy number), so term counts grow quickly with word length —
 * callers working past length ~12 should expect that.
 *
 * Elements are value types; treat them as immutable once built and they
 * are safe to share across threads.
 */
class BaxterElement {
public:
    using TermMap = std::map<TensorWord, Coefficient, CanonicalWordLess>;

    explicit BaxterElement(Ring ring, BaseAlgebra base = BaseAlgebra::poly());

    static BaxterElement zero(const Ring& ring, BaseAlgebra base = BaseAlgebra::poly());
    // The multiplicative unit: the word (1) with coefficient 1.
    static BaxterElement unit(const Ring& ring, BaseAlgebra base = BaseAlgebra::poly());
    static BaxterElement from_word(const Ring& ring, TensorWord word,
                                   BaseAlgebra base = BaseAlgebra::poly());

    const Ring& ring() const { return ring_; }
    const BaseAlgebra& base() const { return base_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::size_t max_word_length() const;

    // Accumulates c·w into the combination, dropping the term if it cancels.
    // Rejects coefficients from a different ring and, under a quotient base,
    // words with unreduced exponents.
    void add_term(const TensorWord& word, const Coefficient& c);

    // Stored coefficient of w, or ring zero when absent.
    Coefficient coefficient_of(const TensorWord& word) const;

    // Sum of all coefficients (the image under words -> 1).
    Coefficient coefficient_sum() const;

    friend BaxterElement operator+(const BaxterElement& a, const BaxterElement& b);
    friend BaxterElement operator-(const BaxterElement& a, const BaxterElement& b);
    BaxterElement operator-() const;
    // Mixable shuffle product (bilinear; associative and commutative).
    friend BaxterElement operator*(const BaxterElement& a, const BaxterElement& b);
    BaxterElement& operator+=(const BaxterElement& o) { return *this = *this + o; }
    BaxterElement& operator-=(const BaxterElement& o) { return *this = *this - o; }
    BaxterElement& operator*=(const BaxterElement& o) { return *this = *this * o; }

    BaxterElement scaled(const Coefficient& c) const;

    friend bool operator==(const BaxterElement& a, const BaxterElement& b) = default;

private:
    Ring ring_;
    BaseAlgebra base_;
    TermMap terms_;
};

/**
 * Weight-λ shuffle of two factor sequences (the tail recursion of the
 * mixable shuffle product):
 *   empty ⧢ v = v,  u ⧢ empty = u,
 *   (a·u) ⧢ (b·v) = a⊗(u ⧢ b·v) + b⊗(a·u ⧢ v) + λ·(ab)⊗(u ⧢ v).
 * At least one side must be non-empty (the product handles two bare heads
 * directly and never reaches the empty/empty case).
 */
BaxterElement shuffle_tails(const Ring& ring, const BaseAlgebra& base,
                            std::span<const std::uint32_t> u,
                            std::span<const std::uint32_t> v);

// The Baxter operator: prepends the unit factor to every word, linearly.
BaxterElement baxter_P(const BaxterElement& a);

// a^n by iterated multiplication; a^0 is the unit.
BaxterElement power(const BaxterElement& a, std::uint64_t n);

// The Baxter algebra homomorphism induced by x -> 1: every factor becomes
// the unit, like terms merge. Polynomial base only (UnsupportedBaseError).
BaxterElement specialize_x_to_one(const BaxterElement& a);

// Termwise coefficient reduction mod p; terms vanishing mod p are dropped.
BaxterElement reduce_element_mod_p(const BaxterElement& a, std::uint64_t p);

} // namespace baxterlab
