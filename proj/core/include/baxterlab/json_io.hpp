#pragma once

#include "baxterlab/identities.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace baxterlab {

/**
 * Compact, canonical JSON for the public data types. Object keys are
 * emitted sorted and terms keep canonical order, so serialization is
 * byte-deterministic and anything emitted re-parses to an equal value.
 *
 * Ring descriptors:
 *   {"kind":"int","lambda":"1"}
 *   {"kind":"mod_p","p":5,"lambda":"1"}
 *   {"kind":"lambda_poly","base":{"kind":"int"}}
 *   {"kind":"lambda_poly","base":{"kind":"mod_p","p":5}}
 * Coefficients: integers as decimal strings ("-42"); mod-p residues as
 * {"mod":5,"val":3}; λ-polynomials as {"lambda":["c0","c1",...]} with
 * index = λ-power and entries as decimal strings.
 * Elements: {"base":...,"ring":...,"terms":[{"coeff":...,"word":[0,1]}]}
 * with "base" {"kind":"poly"} or {"kind":"quotient","p":5}. The parser
 * rejects empty words and, under a quotient base, unreduced exponents.
 */

std::string to_json(const Ring& ring);
std::string to_json(const Coefficient& c);
std::string to_json(const BaxterElement& e);
std::string to_json(const VerificationReport& report);

Ring ring_from_json(std::string_view text);
Coefficient coefficient_from_json(std::string_view text, const Ring& ring);
// `fallback_ring` supplies the coefficient ring when the document has no
// "ring" field (wins only in that case).
BaxterElement element_from_json(std::string_view text,
                                const std::optional<Ring>& fallback_ring = {});

} // namespace baxterlab
