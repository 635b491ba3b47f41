#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "garside/normal_form.hpp"
#include "garside/oracle.hpp"
#include "garside/system.hpp"

namespace garside {

/// Which factors of a normal form with negative infimum absorb a Δ⁻¹.
struct GeodesicPlan {
  std::int64_t t = 0;                 // threshold; 0 when every factor is chosen
  std::vector<std::size_t> indices;   // 0-based factor positions, increasing
  std::vector<Word> neg_words;        // inverse of the canonical word of ∂(s) per chosen factor
};

/// Greatest t with at least |p| factors of length ≥ t. Requires p < 0 and |p| < cl.
std::int64_t threshold(const GarsideSystem& sys, const NormalForm& nf);

/// Plan for p < 0 (empty for p ≥ 0).
GeodesicPlan geodesic_plan(const GarsideSystem& sys, const NormalForm& nf);

/// Geodesic word for the element with this normal form. Throws Error{NotHomogeneous}.
Word geodesic_from_nf(const GarsideSystem& sys, const NormalForm& nf);
/// Normal form via the pipeline, then the geodesic word. Throws Error{NotHomogeneous}.
Word geodesic_nf(const GarsideSystem& sys, const Word& w, const Oracle& oracle);

/// Exact word length of w̄ by breadth-first search of the Cayley graph.
/// Throws Error{CapExceeded} when the length exceeds `cap`.
std::size_t bfs_geodesic_length(const GarsideSystem& sys, const Word& w, std::size_t cap);

/// Every element within `radius` of the identity, with its word length.
std::unordered_map<NormalForm, std::size_t, NormalFormHash> cayley_ball(const GarsideSystem& sys, std::size_t radius);

}  // namespace garside
