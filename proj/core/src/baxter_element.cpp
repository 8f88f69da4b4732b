#include "baxterlab/baxter_element.hpp"

#include "baxterlab/errors.hpp"

#include <utility>

namespace baxterlab {

BaxterElement::BaxterElement(Ring ring, BaseAlgebra base)
    : ring_(std::move(ring)), base_(base) {}

BaxterElement BaxterElement::zero(const Ring& ring, BaseAlgebra base) {
    return BaxterElement(ring, base);
}

BaxterElement BaxterElement::unit(const Ring& ring, BaseAlgebra base) {
    BaxterElement e(ring, base);
    e.add_term(TensorWord::unit(), Coefficient::one(ring));
    return e;
}

BaxterElement BaxterElement::from_word(const Ring& ring, TensorWord word, BaseAlgebra base) {
    BaxterElement e(ring, base);
    e.add_term(word, Coefficient::one(ring));
    return e;
}

std::size_t BaxterElement::max_word_length() const {
    // Canonical order puts the longest words first.
    return terms_.empty() ? 0 : terms_.begin()->first.length();
}

void BaxterElement::add_term(const TensorWord& word, const Coefficient& c) {
    if (c.ring() != ring_) throw RingMismatchError("BaxterElement: term coefficient ring differs");
    for (auto e : word.exponents()) {
        if (!base_.exponent_reduced(e))
            throw OutOfRangeError("BaxterElement: unreduced exponent for the base algebra");
    }
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(word, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Coefficient BaxterElement::coefficient_of(const TensorWord& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? Coefficient::zero(ring_) : it->second;
}

Coefficient BaxterElement::coefficient_sum() const {
    Coefficient s = Coefficient::zero(ring_);
    for (const auto& [w, c] : terms_) s += c;
    return s;
}

BaxterElement operator+(const BaxterElement& a, const BaxterElement& b) {
    if (a.ring_ != b.ring_ || a.base_ != b.base_)
        throw RingMismatchError("BaxterElement: '+' across different algebras");
    BaxterElement out = a;
    for (const auto& [w, c] : b.terms_) out.add_term(w, c);
    return out;
}

BaxterElement operator-(const BaxterElement& a, const BaxterElement& b) { return a + (-b); }

BaxterElement BaxterElement::operator-() const {
    BaxterElement out(ring_, base_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

BaxterElement BaxterElement::scaled(const Coefficient& c) const {
    if (c.ring() != ring_) throw RingMismatchError("BaxterElement: scalar from a different ring");
    BaxterElement out(ring_, base_);
    if (c.is_zero()) return out;
    for (const auto& [w, tc] : terms_) out.add_term(w, tc * c);
    return out;
}

namespace {

// Recursive weight-λ shuffle of the tail sequences u and v. Factors picked
// so far sit in `word`; `merges` counts λ-weighted merge steps. Each
// completed interleaving lands in `out` with coefficient scale·λ^merges,
// with the λ-power multiples precomputed once per (u,v) pair.
struct TailShuffler {
    const BaseAlgebra& base;
    std::span<const std::uint32_t> u, v;
    BaxterElement& out;
    std::vector<std::uint32_t> word;
    std::vector<Coefficient> scaled; // scaled[m] = scale·λ^m

    TailShuffler(const BaseAlgebra& base_in, std::span<const std::uint32_t> u_in,
                 std::span<const std::uint32_t> v_in, const Coefficient& scale,
                 BaxterElement& out_in, std::vector<std::uint32_t> head)
        : base(base_in), u(u_in), v(v_in), out(out_in), word(std::move(head)) {
        word.reserve(word.size() + u.size() + v.size());
        const std::size_t max_merges = std::min(u.size(), v.size());
        scaled.reserve(max_merges + 1);
        scaled.push_back(scale);
        for (std::size_t m = 1; m <= max_merges; ++m)
            scaled.push_back(scaled.back().times_lambda_power(1));
    }

    void run(std::size_t i, std::size_t j, std::uint32_t merges) {
        if (i == u.size() && j == v.size()) {
            out.add_term(TensorWord(word), scaled[merges]);
            return;
        }
        if (i < u.size()) {
            word.push_back(u[i]);
            run(i + 1, j, merges);
            word.pop_back();
        }
        if (j < v.size()) {
            word.push_back(v[j]);
            run(i, j + 1, merges);
            word.pop_back();
        }
        if (i < u.size() && j < v.size()) {
            word.push_back(base.multiply_exponents(u[i], v[j]));
            run(i + 1, j + 1, merges + 1);
            word.pop_back();
        }
    }
};

void accumulate_word_product(BaxterElement& out, const BaseAlgebra& base,
                             const TensorWord& wa, const TensorWord& wb,
                             const Coefficient& scale) {
    const auto& ea = wa.exponents();
    const auto& eb = wb.exponents();
    std::vector<std::uint32_t> head{base.multiply_exponents(ea[0], eb[0])};
    TailShuffler shuffler(base, std::span(ea).subspan(1), std::span(eb).subspan(1), scale, out,
                          std::move(head));
    shuffler.run(0, 0, 0);
}

} // namespace

BaxterElement shuffle_tails(const Ring& ring, const BaseAlgebra& base,
                            std::span<const std::uint32_t> u,
                            std::span<const std::uint32_t> v) {
    if (u.empty() && v.empty())
        throw OutOfRangeError("shuffle_tails: at least one sequence must be non-empty");
    BaxterElement out(ring, base);
    TailShuffler shuffler(base, u, v, Coefficient::one(ring), out, {});
    shuffler.run(0, 0, 0);
    return out;
}

BaxterElement operator*(const BaxterElement& a, const BaxterElement& b) {
    if (a.ring_ != b.ring_ || a.base_ != b.base_)
        throw RingMismatchError("BaxterElement: '*' across different algebras");
    BaxterElement out(a.ring_, a.base_);
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            accumulate_word_product(out, a.base_, wa, wb, ca * cb);
        }
    }
    return out;
}

BaxterElement baxter_P(const BaxterElement& a) {
    BaxterElement out(a.ring(), a.base());
    for (const auto& [w, c] : a.terms()) {
        std::vector<std::uint32_t> exps;
        exps.reserve(w.length() + 1);
        exps.push_back(0);
        exps.insert(exps.end(), w.exponents().begin(), w.exponents().end());
        out.add_term(TensorWord(std::move(exps)), c);
    }
    return out;
}

BaxterElement power(const BaxterElement& a, std::uint64_t n) {
    BaxterElement acc = BaxterElement::unit(a.ring(), a.base());
    for (std::uint64_t i = 0; i < n; ++i) acc *= a;
    return acc;
}

BaxterElement specialize_x_to_one(const BaxterElement& a) {
    if (a.base().kind != BaseAlgebra::Kind::Poly)
        throw UnsupportedBaseError("specialize_x_to_one: polynomial base required");
    BaxterElement out(a.ring(), a.base());
    for (const auto& [w, c] : a.terms()) {
        out.add_term(unit_word(w.length()), c);
    }
    return out;
}

BaxterElement reduce_element_mod_p(const BaxterElement& a, std::uint64_t p) {
    if (a.ring().is_modular())
        throw RingMismatchError("reduce_element_mod_p: ring is already modular");
    BaxterElement out(a.ring().has_formal_lambda() ? Ring::lambda_mod_p(p)
                                                   : Ring::mod_p(p, a.ring().pinned_lambda()),
                      a.base());
    for (const auto& [w, c] : a.terms()) {
        out.add_term(w, c.reduced_mod_p(p));
    }
    return out;
}

} // namespace baxterlab
