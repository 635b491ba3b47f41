#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "garside/laurent.hpp"
#include "garside/system.hpp"
#include "garside/word.hpp"

namespace garside {

/// Cancels adjacent x x⁻¹ pairs (stack pass).
Word free_reduce(const Word& w);

/// True iff u and v are connected by relation applications.
/// Throws Error{ClosureCapExceeded} when the closure of u hits the cap.
bool positive_equiv(const GarsideSystem& sys, const PositiveWord& u, const PositiveWord& v);

/// The simple represented by w, if w is a word of a simple.
std::optional<SimpleId> is_simple_word(const GarsideSystem& sys, const PositiveWord& w);

/// Product of the letter images; inverse letters use exact inverses.
/// Throws Error{NonInvertibleGenerator} or Error{NoRepresentation} (empty rep).
LaurentMatrix matrix_eval(const std::vector<LaurentMatrix>& rep, const Word& w);

/// τ^e applied letter-wise.
Word tau_word(const GarsideSystem& sys, const Word& w, std::int64_t e);
PositiveWord tau_word(const GarsideSystem& sys, const PositiveWord& w, std::int64_t e);

/// Canonical Δ word repeated |p| times, formally inverted when p < 0.
Word delta_power_word(const GarsideSystem& sys, std::int64_t p);

/// Exponent sum of each letter weighted by the system's atom weights, when present.
std::optional<std::int64_t> weight(const GarsideSystem& sys, const Word& w);

}  // namespace garside
