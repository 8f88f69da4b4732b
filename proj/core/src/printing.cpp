#include "baxterlab/printing.hpp"

namespace baxterlab {

namespace {

const char* lambda_symbol(const PrintOptions& opts) { return opts.ascii ? "lambda" : "λ"; }
const char* tensor_symbol(const PrintOptions& opts) { return opts.ascii ? "(x)" : "⊗"; }

std::string lambda_piece(const BigInt& c, std::size_t power, const PrintOptions& opts) {
    if (power == 0) return c.to_decimal();
    std::string suffix = lambda_symbol(opts);
    if (power > 1) suffix += "^" + std::to_string(power);
    if (c.is_one()) return suffix;
    if ((-c).is_one()) return "-" + suffix;
    return c.to_decimal() + suffix;
}

// Appends with a glued sign: "a" then "-b" becomes "a-b".
void append_signed(std::string& out, const std::string& piece) {
    if (!out.empty() && piece.front() != '-') out += '+';
    out += piece;
}

} // namespace

std::string to_display_string(const Coefficient& c, const PrintOptions& opts) {
    if (c.is_zero()) return "0";
    const auto& coeffs = c.lambda_coeffs();
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        append_signed(out, lambda_piece(coeffs[i], i, opts));
    }
    return out;
}

std::string to_display_string(const TensorWord& w, const PrintOptions& opts) {
    std::string out;
    for (std::size_t i = 0; i < w.exponents().size(); ++i) {
        if (i) out += tensor_symbol(opts);
        const auto e = w.exponents()[i];
        if (e == 0) {
            out += '1';
        } else if (e == 1) {
            out += 'x';
        } else {
            out += "x^" + std::to_string(e);
        }
    }
    return out;
}

std::string to_display_string(const BaxterElement& e, const PrintOptions& opts) {
    if (e.is_zero()) return "0";
    std::string out;
    for (const auto& [word, coeff] : e.terms()) {
        std::string prefix;
        if (!coeff.is_one()) {
            std::size_t nonzero = 0;
            for (const auto& c : coeff.lambda_coeffs()) nonzero += !c.is_zero();
            std::string cs = to_display_string(coeff, opts);
            prefix = nonzero > 1 ? "(" + cs + ") " : cs + " ";
        }
        std::string term = prefix + "(" + to_display_string(word, opts) + ")";
        if (out.empty()) {
            out = term;
        } else if (term.front() == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

} // namespace baxterlab
