#pragma once

#include <cstdint>
#include <vector>

#include "garside/word.hpp"

namespace garside::hnn {

/// Atom ids in the free base group ⟨a, b⟩ and the stable letter t.
inline constexpr AtomId kA = 0, kB = 1, kT = 2;

/// Letters a, b, t (B3) used for parsing and rendering HNN words.
const Alphabet& b3_alphabet();
/// Letters a, b (the free base group).
const Alphabet& base_alphabet();

struct HnnNormalForm {
  std::int64_t p = 0;
  Word v;
  friend bool operator==(const HnnNormalForm&, const HnnNormalForm&) = default;
};

/// t^p · V(a, b) with V freely reduced, using at = tb and bt = tba⁻¹.
HnnNormalForm b3_hnn_nf(const Word& w);

/// a ↦ σ1σ2σ1⁻², b ↦ σ2σ1⁻¹, t ↦ σ1, over atoms σ1 = 0, σ2 = 1.
Word b3_to_braid(const Word& w);

/// Freely reduced w^{t1^m} over {a, b}; a ↦ b, b ↦ ba⁻¹b² for m > 0 and the inverse
/// substitution a ↦ a²b⁻¹a, b ↦ a for m < 0.
Word b4_t1_image(const Word& w, std::int64_t m);

struct GrowthRow {
  std::int64_t m = 0;
  std::uint64_t alpha_bar = 0;
  std::uint64_t beta = 0;
  std::uint64_t length = 0;
  bool recurrence_ok = false;
  double closed_form = 0;
  double rel_err = 0;
};

inline constexpr std::int64_t kGrowthBudget = 14;

/// Rows m = 0..max_m measured on the materialized reduced words b^{t1^m}.
/// Throws BudgetExceeded when max_m exceeds the budget.
std::vector<GrowthRow> b4_growth(std::int64_t max_m, std::int64_t budget = kGrowthBudget);

}  // namespace garside::hnn
