#pragma once

#include <string>
#include <vector>

#include "garside/oracle.hpp"
#include "garside/system.hpp"

namespace garside {

struct AxiomResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// ∂̃ = ∂⁻¹, ∂² = τ on simples, τ^ord = id with ord minimal, the spindle meet
/// condition, the join corollary, and unique words for proper simples.
std::vector<AxiomResult> axiom_suite(const GarsideSystem& sys);

/// Pipeline normal form against the greedy reference on every signed word up to max_len.
AxiomResult oracle_agreement(const GarsideSystem& sys, const Oracle& oracle, std::size_t max_len);

}  // namespace garside
