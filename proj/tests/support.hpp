#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "garside/normal_form.hpp"
#include "garside/system.hpp"
#include "garside/word.hpp"

namespace testing {

using garside::GarsideSystem;
using garside::NormalForm;
using garside::SystemDef;
using garside::Word;

using Str = std::vector<std::uint32_t>;

/// Calls fn on every signed word of exactly len letters over n atoms.
void for_each_word(std::size_t n_atoms, std::size_t len, const std::function<void(const Word&)>& fn);
/// Calls fn on every signed word of length 0..max_len.
void for_each_word_upto(std::size_t n_atoms, std::size_t max_len, const std::function<void(const Word&)>& fn);

Word random_word(std::mt19937_64& rng, std::size_t n_atoms, std::size_t max_len);
Word random_word_exact(std::mt19937_64& rng, std::size_t n_atoms, std::size_t len);

/// Defining relations of a definition as pairs of atom strings (chain 0 = chain i, plus extras).
std::vector<std::pair<Str, Str>> relations_of(const SystemDef& def);

/// All positive words equal to w by relation applications, with words capped at max_len letters.
std::set<Str> brute_class(const std::vector<std::pair<Str, Str>>& rels, const Str& w, std::size_t max_len);

/// Divisors of Δ as classes of positive words, by prefix closure of Δ's class.
struct BruteSimples {
  std::vector<std::set<Str>> classes;
  std::set<Str> delta_class;
  std::size_t find(const Str& w) const;
};
BruteSimples brute_simples(const SystemDef& def);

/// Super summit set by saturation under conjugation by all simples, with conjugates
/// formed as words and normalized by greedy_reference.
std::set<NormalForm> brute_sss(const GarsideSystem& sys, const NormalForm& nf);

/// Every left normal form with |p| ≤ max_p and at most max_cl proper factors.
std::vector<NormalForm> all_normal_forms(const GarsideSystem& sys, std::int64_t max_p, std::size_t max_cl);

/// Distances from the identity in the Cayley graph keyed by an element key function.
std::map<std::string, std::size_t> cayley_distances(const GarsideSystem& sys, std::size_t radius,
                                                    const std::function<std::string(const Word&)>& key);
/// Element key from exact matrix evaluation; requires a rep.
std::string matrix_key(const GarsideSystem& sys, const Word& w);

}  // namespace testing
