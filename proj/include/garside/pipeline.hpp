#pragma once

#include <functional>
#include <string>
#include <vector>

#include "garside/stages.hpp"
#include "garside/transducer.hpp"

namespace garside {

using InputFamily = std::function<std::vector<Symbol>(std::size_t n)>;

struct ProfileRow {
  std::size_t n = 0;
  SpaceReport report;
};

/// Least-squares fit peak_work_bits ≈ a + b·log2 n.
struct ProfileFit {
  double a = 0, b = 0;
  std::vector<double> residuals;
};

struct Profile {
  std::vector<ProfileRow> rows;
  ProfileFit fit;
};

Profile space_profile(const Transducer& t, const InputFamily& family, const std::vector<std::size_t>& sizes,
                      const RunOptions& options = {});

ProfileFit fit_log2(const std::vector<ProfileRow>& rows);

/// Deterministic words of exactly n letters built from Δ words, two-letter
/// noise "a b", and cancelling pairs x x⁻¹.
std::vector<Symbol> delta_noise_family(const GarsideSystem& sys, std::size_t n);

/// Header `n peak_work_bits peak_oracle_bits oracle_calls output_len`, tab separated.
std::string format_profile_tsv(const Profile& profile);

}  // namespace garside
