#pragma once

#include "baxterlab/baxter_element.hpp"

#include <cstdint>

namespace baxterlab {

/// Deterministic 64-bit generator (splitmix64). Same seed, same stream,
/// on every platform; all randomized checks in the library go through it.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, bound); bound >= 1. Bias is irrelevant at
    // the tiny bounds used here.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // Derived seed for an independent child stream.
    std::uint64_t fork(std::uint64_t index) {
        SplitMix64 child(state_ ^ (0x2545f4914f6cdd1dull * (index + 1)));
        return child.next();
    }

private:
    std::uint64_t state_;
};

struct ElementShape {
    std::uint32_t max_terms = 3;
    std::uint32_t max_word_length = 3;
    std::uint32_t max_exponent = 3;   // poly base only; quotient uses [0, p-1]
    std::int64_t max_abs_coeff = 3;   // integer-based rings only
    std::uint32_t max_lambda_power = 1; // formal-λ rings only
};

// Random canonical element over the given ring and base. Coefficients are
// small λ-monomials (formal λ) or small scalars; at least one term is
// attempted, though cancellation can still produce zero.
BaxterElement sample_element(const Ring& ring, const BaseAlgebra& base, SplitMix64& rng,
                             const ElementShape& shape = {});

} // namespace baxterlab
