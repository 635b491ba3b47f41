#pragma once

#include <compare>
#include <functional>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "garside/system.hpp"
#include "garside/word.hpp"

namespace garside {

class Oracle;

/// Left normal form Δ^p s1⋯sl with every si proper and (si, si+1) left-greedy.
struct NormalForm {
  std::int64_t p = 0;
  std::vector<SimpleId> factors;

  std::int64_t inf() const { return p; }
  std::int64_t sup() const { return p + static_cast<std::int64_t>(factors.size()); }
  std::size_t cl() const { return factors.size(); }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

struct NormalFormHash {
  std::size_t operator()(const NormalForm& nf) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(nf.p);
    for (SimpleId s : nf.factors) h = h * 1000003u ^ s;
    return h;
  }
};

/// Right multiplication by one letter, keeping the form normal.
void multiply_right(const GarsideSystem& sys, NormalForm& nf, Letter x);
/// Right multiplication by a simple (including 1 and Δ).
void multiply_right_simple(const GarsideSystem& sys, NormalForm& nf, SimpleId s);
/// Normal form of Δ^p s1⋯sl for an arbitrary sequence of simples.
NormalForm normalize(const GarsideSystem& sys, std::int64_t p, const std::vector<SimpleId>& simples);

/// Table-driven left-greedy normal form.
NormalForm greedy_reference(const GarsideSystem& sys, const Word& w);

/// True iff every junction satisfies ∂(si) ∧ si+1 = 1 and all factors are proper.
bool is_left_greedy(const GarsideSystem& sys, const NormalForm& nf);

/// τ^e applied factor-wise.
NormalForm tau_nf(const GarsideSystem& sys, const NormalForm& nf, std::int64_t e);

/// Δ^p (canonical Δ word) followed by the canonical factor words.
Word to_word(const GarsideSystem& sys, const NormalForm& nf);

/// `p=<int> factors=<w1>,<w2>,...` with compact canonical factor words.
std::string render(const GarsideSystem& sys, const NormalForm& nf);
/// Inverse of `render`. Throws Error{Parse}.
NormalForm parse_normal_form(const GarsideSystem& sys, std::string_view text);

struct StageBOutput {
  std::int64_t k = 0;
  PositiveWord word;
  friend bool operator==(const StageBOutput&, const StageBOutput&) = default;
};
struct StageCOutput {
  std::int64_t k = 0;
  PositiveWord word;
  std::int64_t q = 0;
  friend bool operator==(const StageCOutput&, const StageCOutput&) = default;
};

/// Slides every Δ⁻¹ to the left: w = Δ^{-k} w_b with w_b positive.
StageBOutput stage_fb(const GarsideSystem& sys, const Word& w);
/// Extracts the maximal Δ power: w_b = w_c Δ^q (Algorithm 1 with a word-problem oracle).
StageCOutput stage_fc(const GarsideSystem& sys, std::int64_t k, const PositiveWord& wb, const Oracle& oracle);
/// Reads off maximal simple prefixes of τ^q(w_c).
NormalForm stage_fd(const GarsideSystem& sys, std::int64_t k, const PositiveWord& wc, std::int64_t q);
/// stage_fd ∘ stage_fc ∘ stage_fb, optionally after free reduction.
NormalForm lnf(const GarsideSystem& sys, const Word& w, const Oracle& oracle, bool reduce_first = false);

}  // namespace garside
