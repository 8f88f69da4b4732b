#include "baxterlab/coefficient.hpp"

#include "baxterlab/errors.hpp"

#include <utility>

namespace baxterlab {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Ring Ring::integers(BigInt pinned_lambda) {
    Ring r;
    r.kind_ = RingKind::Int;
    r.pinned_lambda_ = std::move(pinned_lambda);
    return r;
}

Ring Ring::mod_p(std::uint64_t p, BigInt pinned_lambda) {
    if (!is_prime(p)) throw NotPrimeError("Ring: modulus " + std::to_string(p) + " is not prime");
    Ring r;
    r.kind_ = RingKind::ModP;
    r.p_ = p;
    r.pinned_lambda_ = BigInt::from_u64(pinned_lambda.mod_u64(p));
    return r;
}

Ring Ring::lambda_int() {
    Ring r;
    r.kind_ = RingKind::LambdaPoly;
    return r;
}

Ring Ring::lambda_mod_p(std::uint64_t p) {
    if (!is_prime(p)) throw NotPrimeError("Ring: modulus " + std::to_string(p) + " is not prime");
    Ring r;
    r.kind_ = RingKind::LambdaPoly;
    r.p_ = p;
    r.base_mod_ = true;
    return r;
}

bool Ring::is_modular() const {
    return kind_ == RingKind::ModP || (kind_ == RingKind::LambdaPoly && base_mod_);
}

std::uint64_t Ring::modulus() const {
    if (!is_modular()) throw RingMismatchError("Ring: no modulus in an integer-based ring");
    return p_;
}

const BigInt& Ring::pinned_lambda() const {
    if (kind_ == RingKind::LambdaPoly)
        throw RingMismatchError("Ring: lambda is formal, not pinned");
    return pinned_lambda_;
}

Coefficient::Coefficient(Ring ring, std::vector<BigInt> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    canonicalize();
}

void Coefficient::canonicalize() {
    if (ring_.is_modular()) {
        const std::uint64_t p = ring_.modulus();
        for (auto& c : coeffs_) {
            if (c.is_negative() || !(c < BigInt::from_u64(p)) || c.is_zero()) {
                // Reduce anything outside [0,p); mod_u64 also normalizes negatives.
                c = BigInt::from_u64(c.mod_u64(p));
            }
        }
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Coefficient Coefficient::zero(const Ring& ring) { return Coefficient(ring, {}); }

Coefficient Coefficient::one(const Ring& ring) { return Coefficient(ring, {BigInt(1)}); }

Coefficient Coefficient::lambda(const Ring& ring) {
    if (ring.has_formal_lambda()) return Coefficient(ring, {BigInt(0), BigInt(1)});
    return Coefficient(ring, {ring.pinned_lambda()});
}

Coefficient Coefficient::lambda_power(const Ring& ring, std::uint32_t e) {
    return one(ring).times_lambda_power(e);
}

Coefficient Coefficient::lambda_monomial(const Ring& ring, BigInt c, std::uint32_t e) {
    return from_integer(ring, std::move(c)).times_lambda_power(e);
}

Coefficient Coefficient::from_integer(const Ring& ring, BigInt v) {
    std::vector<BigInt> cs;
    cs.push_back(std::move(v));
    return Coefficient(ring, std::move(cs));
}

Coefficient Coefficient::from_lambda_coeffs(const Ring& ring, std::vector<BigInt> coeffs) {
    if (!ring.has_formal_lambda() && coeffs.size() > 1)
        throw RingMismatchError("Coefficient: lambda coefficients in a ring with pinned lambda");
    return Coefficient(ring, std::move(coeffs));
}

bool Coefficient::is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

BigInt Coefficient::scalar_value() const {
    return coeffs_.empty() ? BigInt(0) : coeffs_[0];
}

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
    if (a.ring_ != b.ring_) throw RingMismatchError("Coefficient: '+' across different rings");
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return Coefficient(a.ring_, std::move(out));
}

Coefficient operator-(const Coefficient& a, const Coefficient& b) { return a + (-b); }

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    if (a.ring_ != b.ring_) throw RingMismatchError("Coefficient: '*' across different rings");
    if (a.coeffs_.empty() || b.coeffs_.empty()) return Coefficient::zero(a.ring_);
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Coefficient(a.ring_, std::move(out));
}

Coefficient Coefficient::operator-() const {
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(-c);
    return Coefficient(ring_, std::move(out));
}

Coefficient Coefficient::times_lambda_power(std::uint32_t j) const {
    if (j == 0 || is_zero()) return *this;
    if (ring_.has_formal_lambda()) {
        std::vector<BigInt> out(coeffs_.size() + j, BigInt(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + j] = coeffs_[i];
        return Coefficient(ring_, std::move(out));
    }
    Coefficient pin = from_integer(ring_, ring_.pinned_lambda());
    Coefficient acc = *this;
    for (std::uint32_t i = 0; i < j; ++i) acc *= pin;
    return acc;
}

Coefficient Coefficient::reduced_mod_p(std::uint64_t p) const {
    if (!is_prime(p)) throw NotPrimeError("Coefficient: modulus " + std::to_string(p) + " is not prime");
    if (ring_.is_modular())
        throw RingMismatchError("Coefficient: ring is already modular");
    Ring target = ring_.has_formal_lambda()
                      ? Ring::lambda_mod_p(p)
                      : Ring::mod_p(p, ring_.pinned_lambda());
    return Coefficient(target, coeffs_);
}

} // namespace baxterlab
