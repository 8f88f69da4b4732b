#include "baxterlab/shuffle_oracle.hpp"

#include "baxterlab/errors.hpp"

#include <utility>

namespace baxterlab {

namespace {

struct PartialPath {
    std::size_t i = 0;
    std::size_t j = 0;
    std::vector<std::uint32_t> factors;
    std::uint32_t merges = 0;
};

} // namespace

std::vector<ShufflePath> enumerate_shuffle_paths(const BaseAlgebra& base,
                                                 std::span<const std::uint32_t> u,
                                                 std::span<const std::uint32_t> v) {
    std::vector<ShufflePath> out;
    std::vector<PartialPath> stack;
    stack.push_back({});
    while (!stack.empty()) {
        PartialPath cur = std::move(stack.back());
        stack.pop_back();
        if (cur.i == u.size() && cur.j == v.size()) {
            out.push_back({std::move(cur.factors), cur.merges});
            continue;
        }
        // Push in reverse of the emission order (right, up, diagonal) so the
        // stack pops them right-first; the order is fixed but arbitrary.
        if (cur.i < u.size() && cur.j < v.size()) {
            PartialPath next = cur;
            next.factors.push_back(base.multiply_exponents(u[cur.i], v[cur.j]));
            ++next.i;
            ++next.j;
            ++next.merges;
            stack.push_back(std::move(next));
        }
        if (cur.j < v.size()) {
            PartialPath next = cur;
            next.factors.push_back(v[cur.j]);
            ++next.j;
            stack.push_back(std::move(next));
        }
        if (cur.i < u.size()) {
            PartialPath next = std::move(cur);
            next.factors.push_back(u[next.i]);
            ++next.i;
            stack.push_back(std::move(next));
        }
    }
    return out;
}

BaxterElement product_oracle(const BaxterElement& a, const BaxterElement& b) {
    if (a.ring() != b.ring() || a.base() != b.base())
        throw RingMismatchError("product_oracle: operands from different algebras");
    if (a.max_word_length() > 8 || b.max_word_length() > 8)
        throw OutOfRangeError("product_oracle: word lengths <= 8");
    BaxterElement out(a.ring(), a.base());
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            const Coefficient scale = ca * cb;
            const auto& ea = wa.exponents();
            const auto& eb = wb.exponents();
            const std::uint32_t head = a.base().multiply_exponents(ea[0], eb[0]);
            auto paths = enumerate_shuffle_paths(a.base(), std::span(ea).subspan(1),
                                                 std::span(eb).subspan(1));
            for (const auto& path : paths) {
                std::vector<std::uint32_t> word;
                word.reserve(path.factors.size() + 1);
                word.push_back(head);
                word.insert(word.end(), path.factors.begin(), path.factors.end());
                out.add_term(TensorWord(std::move(word)),
                             scale.times_lambda_power(path.merge_count));
            }
        }
    }
    return out;
}

} // namespace baxterlab
