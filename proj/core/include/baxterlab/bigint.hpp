#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace baxterlab {

/**
 * Signed arbitrary-precision integer.
 *
 * Sign/magnitude representation with little-endian base-2^32 limbs.
 * Canonical form: no leading zero limbs, sign is 0 exactly for zero.
 * Every value is immutable in spirit: all operators return fresh values,
 * compound assignments replace the whole number.
 */
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);

    static BigInt from_u64(std::uint64_t v);

    // Parses an optional leading '-' followed by decimal digits.
    static BigInt from_decimal(std::string_view s);

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ > 0 && limbs_.size() == 1 && limbs_[0] == 1; }
    bool is_negative() const { return sign_ < 0; }
    int signum() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    friend bool operator==(const BigInt& a, const BigInt& b) = default;
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    // Quotient and remainder under a single-limb divisor; requires *this >= 0.
    std::pair<BigInt, std::uint32_t> divmod_u32(std::uint32_t d) const;

    // Least non-negative residue modulo m (m >= 1); correct for negative values.
    std::uint64_t mod_u64(std::uint64_t m) const;

    std::string to_decimal() const;

    // Value as int64 when representable; throws OutOfRangeError otherwise.
    std::int64_t to_i64() const;

    BigInt pow_u32(std::uint32_t e) const;

private:
    int sign_ = 0;                       // -1, 0, +1
    std::vector<std::uint32_t> limbs_;   // little-endian magnitude, trimmed

    void trim();
    static int compare_magnitude(const std::vector<std::uint32_t>& a,
                                 const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    void mul_add_small(std::uint32_t mul, std::uint32_t add);
};

} // namespace baxterlab
