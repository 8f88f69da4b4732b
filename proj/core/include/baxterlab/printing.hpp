#pragma once

#include "baxterlab/baxter_element.hpp"

#include <string>

namespace baxterlab {

struct PrintOptions {
    // Replaces "⊗" with "(x)" and "λ" with "lambda" for plain-ASCII output.
    bool ascii = false;
};

// "2", "-3", "λ", "3λ", "λ^2", "1+λ", "2-3λ^2", "0"
std::string to_display_string(const Coefficient& c, const PrintOptions& opts = {});

// "1", "x", "x^2", "1⊗x⊗x^2"
std::string to_display_string(const TensorWord& w, const PrintOptions& opts = {});

// Terms in canonical order: "2 (1⊗x⊗x) + λ (1⊗x^2)"; the zero element is "0".
// Unit coefficients print bare words; multi-term coefficients are
// parenthesized: "(1+λ) (1⊗x)".
std::string to_display_string(const BaxterElement& e, const PrintOptions& opts = {});

} // namespace baxterlab
