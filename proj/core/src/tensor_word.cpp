#include "baxterlab/tensor_word.hpp"

#include "baxterlab/coefficient.hpp"
#include "baxterlab/errors.hpp"

#include <limits>
#include <utility>

namespace baxterlab {

BaseAlgebra BaseAlgebra::quotient(std::uint64_t p) {
    if (!is_prime(p))
        throw NotPrimeError("BaseAlgebra: quotient modulus " + std::to_string(p) + " is not prime");
    BaseAlgebra b;
    b.kind = Kind::Quotient;
    b.p = p;
    return b;
}

bool BaseAlgebra::exponent_reduced(std::uint64_t e) const {
    if (kind == Kind::Poly) return e <= std::numeric_limits<std::uint32_t>::max();
    return e < p;
}

std::uint32_t BaseAlgebra::reduce_exponent(std::uint64_t e) const {
    if (kind == Kind::Poly) {
        if (e > std::numeric_limits<std::uint32_t>::max())
            throw OutOfRangeError("BaseAlgebra: exponent overflow");
        return static_cast<std::uint32_t>(e);
    }
    if (e == 0) return 0;
    return static_cast<std::uint32_t>((e - 1) % (p - 1) + 1);
}

std::uint32_t BaseAlgebra::multiply_exponents(std::uint32_t a, std::uint32_t b) const {
    return reduce_exponent(static_cast<std::uint64_t>(a) + b);
}

std::uint32_t BaseAlgebra::power_exponent(std::uint32_t e, std::uint64_t k) const {
    if (k == 0 || e == 0) return 0; // (x^e)^0 = 1 and 1^k = 1
    if (kind == Kind::Poly) {
        unsigned __int128 prod = static_cast<unsigned __int128>(e) * k;
        if (prod > std::numeric_limits<std::uint32_t>::max())
            throw OutOfRangeError("BaseAlgebra: exponent overflow");
        return static_cast<std::uint32_t>(prod);
    }
    // Non-unit exponents cycle with period p-1; the residue 0 stands for p-1.
    std::uint64_t r = (e % (p - 1)) * (k % (p - 1)) % (p - 1);
    return r == 0 ? static_cast<std::uint32_t>(p - 1) : static_cast<std::uint32_t>(r);
}

TensorWord::TensorWord(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {
    if (exps_.empty()) throw OutOfRangeError("TensorWord: needs at least one factor");
}

TensorWord unit_word(std::size_t length) {
    if (length == 0) throw OutOfRangeError("unit_word: length >= 1");
    return TensorWord(std::vector<std::uint32_t>(length, 0));
}

TensorWord word_for_composition(const Composition& parts) {
    std::vector<std::uint32_t> exps;
    exps.reserve(parts.length() + 1);
    exps.push_back(0);
    for (auto p : parts.parts()) exps.push_back(p);
    return TensorWord(std::move(exps));
}

} // namespace baxterlab
