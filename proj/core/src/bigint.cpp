#include "baxterlab/bigint.hpp"

#include "baxterlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace baxterlab {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
} // namespace

BigInt::BigInt(std::int64_t v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // Avoid overflow on INT64_MIN by negating in unsigned space.
    std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffull));
    if (mag >> 32) limbs_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

BigInt BigInt::from_u64(std::uint64_t v) {
    BigInt r;
    if (v == 0) return r;
    r.sign_ = 1;
    r.limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffull));
    if (v >> 32) r.limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    return r;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

int BigInt::compare_magnitude(const std::vector<std::uint32_t>& a,
                              const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    const auto& lo = a.size() >= b.size() ? b : a;
    const auto& hi = a.size() >= b.size() ? a : b;
    std::vector<std::uint32_t> out;
    out.reserve(hi.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        out.push_back(static_cast<std::uint32_t>(s & 0xffffffffull));
        carry = s >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

std::vector<std::uint32_t> BigInt::sub_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (d < 0) {
            d += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(d));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> BigInt::mul_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        const std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(out[i + j]) + ai * b[j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = static_cast<std::uint64_t>(out[k]) + carry;
            out[k] = static_cast<std::uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.limbs_ = BigInt::add_magnitude(a.limbs_, b.limbs_);
        r.sign_ = a.sign_;
        return r;
    }
    int c = BigInt::compare_magnitude(a.limbs_, b.limbs_);
    if (c == 0) return BigInt();
    if (c > 0) {
        r.limbs_ = BigInt::sub_magnitude(a.limbs_, b.limbs_);
        r.sign_ = a.sign_;
    } else {
        r.limbs_ = BigInt::sub_magnitude(b.limbs_, a.limbs_);
        r.sign_ = b.sign_;
    }
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.limbs_ = BigInt::mul_magnitude(a.limbs_, b.limbs_);
    r.sign_ = a.sign_ == b.sign_ ? 1 : -1;
    r.trim();
    return r;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = BigInt::compare_magnitude(a.limbs_, b.limbs_);
    if (a.sign_ < 0) c = -c;
    return c <=> 0;
}

std::pair<BigInt, std::uint32_t> BigInt::divmod_u32(std::uint32_t d) const {
    if (d == 0) throw OutOfRangeError("BigInt: division by zero");
    if (sign_ < 0) throw OutOfRangeError("BigInt: divmod_u32 requires a non-negative value");
    BigInt q;
    q.limbs_.assign(limbs_.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        q.limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    q.sign_ = 1;
    q.trim();
    return {q, static_cast<std::uint32_t>(rem)};
}

std::uint64_t BigInt::mod_u64(std::uint64_t m) const {
    if (m == 0) throw OutOfRangeError("BigInt: modulus must be positive");
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        rem = ((rem << 32) | limbs_[i]) % m;
    }
    std::uint64_t r = static_cast<std::uint64_t>(rem);
    if (sign_ < 0 && r != 0) r = m - r;
    return r;
}

void BigInt::mul_add_small(std::uint32_t mul, std::uint32_t add) {
    std::uint64_t carry = add;
    for (auto& limb : limbs_) {
        std::uint64_t cur = static_cast<std::uint64_t>(limb) * mul + carry;
        limb = static_cast<std::uint32_t>(cur & 0xffffffffull);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    if (!limbs_.empty()) sign_ = sign_ == 0 ? 1 : sign_;
    trim();
}

BigInt BigInt::from_decimal(std::string_view s) {
    if (s.empty()) throw ParseError("BigInt: empty decimal literal");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw ParseError("BigInt: sign without digits");
    BigInt r;
    while (i < s.size()) {
        std::uint32_t chunk = 0;
        std::uint32_t scale = 1;
        std::size_t take = std::min<std::size_t>(9, s.size() - i);
        for (std::size_t j = 0; j < take; ++j, ++i) {
            char c = s[i];
            if (c < '0' || c > '9') throw ParseError("BigInt: invalid decimal digit");
            chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
            scale *= 10;
        }
        r.mul_add_small(scale, chunk);
    }
    if (neg && r.sign_ != 0) r.sign_ = -1;
    return r;
}

std::string BigInt::to_decimal() const {
    if (sign_ == 0) return "0";
    BigInt cur = abs();
    std::string out;
    while (!cur.is_zero()) {
        auto [q, r] = cur.divmod_u32(1000000000u);
        cur = std::move(q);
        std::string chunk = std::to_string(r);
        if (!cur.is_zero()) chunk.insert(0, 9 - chunk.size(), '0');
        out.insert(0, chunk);
    }
    if (sign_ < 0) out.insert(out.begin(), '-');
    return out;
}

std::int64_t BigInt::to_i64() const {
    if (sign_ == 0) return 0;
    if (limbs_.size() > 2) throw OutOfRangeError("BigInt: value does not fit in int64");
    std::uint64_t mag = limbs_[0];
    if (limbs_.size() == 2) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (sign_ > 0) {
        if (mag > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
            throw OutOfRangeError("BigInt: value does not fit in int64");
        return static_cast<std::int64_t>(mag);
    }
    if (mag > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) + 1)
        throw OutOfRangeError("BigInt: value does not fit in int64");
    return -static_cast<std::int64_t>(mag - 1) - 1;
}

BigInt BigInt::pow_u32(std::uint32_t e) const {
    BigInt acc(1);
    for (std::uint32_t i = 0; i < e; ++i) acc *= *this;
    return acc;
}

} // namespace baxterlab
