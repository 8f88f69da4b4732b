#pragma once

#include "baxterlab/bigint.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace baxterlab {

/// Ordered partition of a positive integer: a non-empty sequence of parts >= 1.
class Composition {
public:
    explicit Composition(std::vector<std::uint32_t> parts);
    static Composition single(std::uint32_t n) { return Composition({n}); }

    const std::vector<std::uint32_t>& parts() const { return parts_; }
    std::uint64_t norm() const;
    std::size_t length() const { return parts_.size(); }

    friend bool operator==(const Composition& a, const Composition& b) = default;

    std::string to_string() const; // "(1,2,2)"

private:
    std::vector<std::uint32_t> parts_;
};

/**
 * Memoized triangle of Stirling numbers, grown on demand.
 *
 * Second kind rows come from the recurrence
 * S(n+1,k+1) = S(n,k) + (k+1) S(n,k+1); first kind rows are the signed
 * coefficients of the falling factorial t(t-1)...(t-n+1), built by
 * literally expanding it one linear factor at a time.
 */
class StirlingTable {
public:
    enum class Kind { First, Second };

    explicit StirlingTable(Kind kind) : kind_(kind) { grow(0); }

    Kind kind() const { return kind_; }
    std::size_t max_n() const { return rows_.empty() ? 0 : rows_.size() - 1; }

    void grow(std::size_t n);
    // Value by convention 0 outside the triangle (k > n). Grows if needed.
    BigInt at(std::size_t n, std::size_t k);
    // Read-only lookup; requires n <= max_n().
    const BigInt& value(std::size_t n, std::size_t k) const;

private:
    Kind kind_;
    std::vector<std::vector<BigInt>> rows_;
};

// Process-wide cached lookups; thread-safe (readers share, growth is exclusive).
BigInt stirling_second(std::size_t n, std::size_t k);
BigInt stirling_first(std::size_t n, std::size_t k); // signed
BigInt binomial(std::size_t n, std::size_t k);
BigInt factorial(std::size_t n);

// Coefficient list of the falling factorial t(t-1)...(t-n+1); index = power of t.
std::vector<BigInt> falling_factorial_coeffs(std::size_t n);

// S(n,k) by the forward-difference formula (1/k!) sum_j (-1)^{k-j} C(k,j) j^n,
// independent of the recurrence table. Requires n,k <= 64.
BigInt stirling_second_oracle(std::size_t n, std::size_t k);

// Brute-force count of surjections {1..n} -> {1..k}; equals k!·S(n,k).
// Requires n,k <= 8.
BigInt surjection_count_oracle(std::size_t n, std::size_t k);

// n! / (i1!···ik!), computed as a product of binomials over prefix sums.
// Throws NormMismatchError unless |I| = n.
BigInt multinomial(std::uint64_t n, const Composition& parts);

// All 2^(n-1) compositions of n in graded-lexicographic order: increasing
// length first, then lexicographic on parts. Requires 1 <= n <= 20.
std::vector<Composition> compositions_of(std::uint32_t n);

// Monotone lattice paths from (0,0) to (m,n) with unit right/up/diagonal steps.
BigInt delannoy(std::size_t m, std::size_t n);

} // namespace baxterlab
