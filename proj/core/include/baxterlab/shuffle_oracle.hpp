#pragma once

#include "baxterlab/baxter_element.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace baxterlab {

/// One monotone lattice path from (0,0) to (|u|,|v|): the tail factors it
/// emits in order, and how many diagonal (merge) steps it took.
struct ShufflePath {
    std::vector<std::uint32_t> factors;
    std::uint32_t merge_count = 0;
};

// Every monotone right/up/diagonal path, in a fixed traversal order. A
// diagonal step at (i,j) emits the base-algebra product u[i]·v[j]; the
// path count is the Delannoy number D(|u|,|v|).
std::vector<ShufflePath> enumerate_shuffle_paths(const BaseAlgebra& base,
                                                 std::span<const std::uint32_t> u,
                                                 std::span<const std::uint32_t> v);

/**
 * Cross-validation twin of the mixable shuffle product: instead of the
 * product recursion, each pair of words is expanded through the explicit
 * path bijection above (a path contributes its interleaved word with
 * coefficient λ^{merge steps}). Same contract as operator*, limited to
 * word lengths <= 8.
 */
BaxterElement product_oracle(const BaxterElement& a, const BaxterElement& b);

} // namespace baxterlab
