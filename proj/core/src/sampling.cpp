#include "baxterlab/sampling.hpp"

namespace baxterlab {

BaxterElement sample_element(const Ring& ring, const BaseAlgebra& base, SplitMix64& rng,
                             const ElementShape& shape) {
    BaxterElement out(ring, base);
    const std::uint32_t terms = 1 + static_cast<std::uint32_t>(rng.below(shape.max_terms));
    for (std::uint32_t t = 0; t < terms; ++t) {
        const std::uint32_t len = 1 + static_cast<std::uint32_t>(rng.below(shape.max_word_length));
        std::vector<std::uint32_t> exps(len);
        for (auto& e : exps) {
            const std::uint64_t bound = base.kind == BaseAlgebra::Kind::Quotient
                                            ? base.p
                                            : shape.max_exponent + 1ull;
            e = static_cast<std::uint32_t>(rng.below(bound));
        }
        Coefficient c = Coefficient::zero(ring);
        if (ring.is_modular()) {
            const std::uint64_t p = ring.modulus();
            c = Coefficient::from_integer(ring, BigInt::from_u64(rng.below(p)));
        } else {
            const std::uint64_t span = 2 * static_cast<std::uint64_t>(shape.max_abs_coeff) + 1;
            const std::int64_t v =
                static_cast<std::int64_t>(rng.below(span)) - shape.max_abs_coeff;
            c = Coefficient::from_integer(ring, BigInt(v));
        }
        if (ring.has_formal_lambda() && shape.max_lambda_power > 0) {
            c = c.times_lambda_power(
                static_cast<std::uint32_t>(rng.below(shape.max_lambda_power + 1ull)));
        }
        out.add_term(TensorWord(std::move(exps)), c);
    }
    return out;
}

} // namespace baxterlab
