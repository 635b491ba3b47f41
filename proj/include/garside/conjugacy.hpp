#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "garside/normal_form.hpp"
#include "garside/oracle.hpp"
#include "garside/system.hpp"
#include "garside/word.hpp"

namespace garside {

struct SummitEdge {
  NormalForm from;
  SimpleId conjugator = 0;
  NormalForm to;
};

struct SummitData {
  std::int64_t inf_s = 0, sup_s = 0, cl_s = 0;
  NormalForm representative;
  std::set<NormalForm> sss;
  std::vector<SummitEdge> edges;
};

struct ConjugacyOptions {
  std::size_t saturation_cap = 100000;
};

/// A normal form together with a word g such that g⁻¹·(start)·g = nf.
struct Conjugate {
  NormalForm nf;
  Word conjugator;
};

/// c(b) = Δ^p s2⋯sl τ^{-p}(s1). Throws ZeroCanonicalLength when cl = 0.
NormalForm cycle(const GarsideSystem& sys, const NormalForm& nf);
/// d(b) = Δ^p τ^p(sl) s1⋯s(l-1). Throws ZeroCanonicalLength when cl = 0.
NormalForm decycle(const GarsideSystem& sys, const NormalForm& nf);
/// s⁻¹·b·s for a simple s.
NormalForm conjugate_by_simple(const GarsideSystem& sys, const NormalForm& nf, SimpleId s);

/// τ^{-p}(s1) ∧ ∂(sl) = 1. Only meaningful for cl ≥ 2; false otherwise.
bool is_rigid(const GarsideSystem& sys, const NormalForm& nf);

/// Least n ≥ 1 with τⁿ(b) = b.
std::int64_t element_order(const GarsideSystem& sys, const NormalForm& nf);

/// Conjugates of b reachable by simple conjugations while keeping inf ≥ inf(b) and
/// sup ≤ sup(b), tightening the window whenever a better conjugate appears. The final
/// set is the super summit set. Throws CapExceeded past options.saturation_cap.
struct Saturation {
  std::int64_t inf_s = 0, sup_s = 0;
  NormalForm root;
  std::vector<NormalForm> members;
  std::map<NormalForm, std::size_t> index;
  std::vector<std::size_t> parent;
  std::vector<SimpleId> via;
  Word root_conjugator;

  std::optional<std::size_t> find(const NormalForm& nf) const;
  Word path_to(const GarsideSystem& sys, std::size_t member) const;
};
Saturation saturate(const GarsideSystem& sys, const NormalForm& nf, const ConjugacyOptions& options = {});

Conjugate sss_representative_with_conjugator(const GarsideSystem& sys, const NormalForm& nf, const Oracle& oracle,
                                            const ConjugacyOptions& options = {});
NormalForm sss_representative(const GarsideSystem& sys, const NormalForm& nf, const Oracle& oracle,
                              const ConjugacyOptions& options = {});
SummitData sss_enumerate(const GarsideSystem& sys, const NormalForm& nf, const Oracle& oracle,
                         const ConjugacyOptions& options = {});

bool decide_conjugacy(const GarsideSystem& sys, const Word& w1, const Word& w2, const Oracle& oracle,
                      const ConjugacyOptions& options = {});
/// A word g with g⁻¹·w1·g = w2, verified with the oracle; nullopt if not conjugate.
/// Throws WitnessVerificationFailed if the assembled word fails verification.
std::optional<Word> conjugacy_witness(const GarsideSystem& sys, const Word& w1, const Word& w2, const Oracle& oracle,
                                      const ConjugacyOptions& options = {});

}  // namespace garside
