#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "garside/laurent.hpp"
#include "garside/word.hpp"

namespace garside {

using Relation = std::pair<PositiveWord, PositiveWord>;

/// Presentation of a Garside monoid. Spindle systems are given by one
/// Δ-chain per atom (chain i starts with atom i, all chains equal Δ);
/// general fixtures use explicit relations plus a designated Δ word.
struct SystemDef {
  std::string name;
  std::vector<std::string> atoms;
  std::vector<PositiveWord> delta_chains;
  std::vector<Relation> extra_relations;
  std::optional<PositiveWord> delta_word;
  std::map<AtomId, LaurentMatrix> matrix_rep;
};

struct BuildOptions {
  /// Maximum number of words in one equivalence class.
  std::size_t max_class_size = 100000;
  /// Words in a class may not exceed this multiple of max(|w|, longest Δ word).
  std::size_t length_factor = 3;

  /// Defaults, with `GARSIDE_CLOSURE_CAP` overriding `max_class_size`.
  static BuildOptions from_environment();
};

/// Every positive word equivalent to `w` under the relations (applied in both
/// directions). Sorted. Throws Error{ClosureCapExceeded} when a cap is hit.
std::vector<PositiveWord> equivalence_class(const std::vector<Relation>& relations, const PositiveWord& w,
                                            std::size_t max_class_size, std::size_t max_length);

struct SimpleEntry {
  SimpleId id = 0;
  PositiveWord canonical_word;
  std::vector<PositiveWord> all_words;
  std::size_t len = 0;
};

class GarsideSystem;

GarsideSystem build_system(const SystemDef& def, const BuildOptions& options = BuildOptions::from_environment());

/// Immutable after construction; safe to share between threads.
class GarsideSystem {
 public:
  static constexpr SimpleId kNone = static_cast<SimpleId>(-1);

  const std::string& name() const { return name_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t atom_count() const { return alphabet_.size(); }
  std::size_t simple_count() const { return simples_.size(); }
  const BuildOptions& options() const { return options_; }

  SimpleId identity() const { return 0; }
  SimpleId delta() const { return static_cast<SimpleId>(simples_.size() - 1); }
  bool is_proper(SimpleId s) const { return s != identity() && s != delta(); }
  const SimpleEntry& simple(SimpleId s) const { return simples_.at(s); }
  SimpleId atom_simple(AtomId a) const { return atom_simple_.at(a); }
  /// Canonical Δ word (chain of the first atom for spindle definitions).
  const PositiveWord& delta_word() const { return simples_.back().canonical_word; }

  bool left_divides(SimpleId s, SimpleId t) const { return left_div_[idx(s, t)]; }
  bool right_divides(SimpleId s, SimpleId t) const { return right_div_[idx(s, t)]; }
  SimpleId meet_left(SimpleId s, SimpleId t) const { return meet_left_[idx(s, t)]; }
  SimpleId meet_right(SimpleId s, SimpleId t) const { return meet_right_[idx(s, t)]; }
  SimpleId join_left(SimpleId s, SimpleId t) const { return join_left_[idx(s, t)]; }
  SimpleId join_right(SimpleId s, SimpleId t) const { return join_right_[idx(s, t)]; }
  /// s·t when it is simple, else kNone.
  SimpleId product(SimpleId s, SimpleId t) const { return product_[idx(s, t)]; }
  /// c with s·c = t, or kNone when s does not left-divide t.
  SimpleId left_quotient(SimpleId s, SimpleId t) const { return left_quot_[idx(s, t)]; }
  /// c with c·s = t, or kNone when s does not right-divide t.
  SimpleId right_quotient(SimpleId s, SimpleId t) const { return right_quot_[idx(s, t)]; }

  SimpleId dpartial(SimpleId s) const { return dpartial_.at(s); }
  SimpleId dpartial_inv(SimpleId s) const { return dpartial_inv_.at(s); }
  SimpleId tau(SimpleId s) const { return tau_power(s, 1); }
  /// τ^e for any integer e.
  SimpleId tau_power(SimpleId s, std::int64_t e) const;
  AtomId tau_atom(AtomId a) const { return tau_atom_power(a, 1); }
  AtomId tau_atom_power(AtomId a, std::int64_t e) const;
  const std::vector<AtomId>& tau_atoms() const { return tau_pow_atoms_.at(1 % order_); }

  int order() const { return order_; }
  std::size_t len_min() const { return len_min_; }
  std::size_t len_max() const { return len_max_; }
  bool homogeneous() const { return homogeneous_; }
  bool defined_by_chains() const { return !chains_.empty(); }
  const std::vector<PositiveWord>& delta_chains() const { return chains_; }
  const std::vector<Relation>& relations() const { return relations_; }

  /// Positive additive weight constant on all Δ words, when one exists.
  const std::optional<std::vector<std::int64_t>>& atom_weights() const { return weights_; }
  std::int64_t delta_weight() const { return delta_weight_; }

  bool has_matrix_rep() const { return !rep_.empty(); }
  const std::vector<LaurentMatrix>& matrix_rep() const { return rep_; }

  // Trie over every word of every simple.
  using TrieNode = std::uint32_t;
  TrieNode trie_root() const { return 0; }
  /// Child of `node` along atom `a`, or nullopt when the extension is not simple.
  std::optional<TrieNode> trie_step(TrieNode node, AtomId a) const;
  SimpleId trie_simple(TrieNode node) const { return trie_.at(node).simple; }
  std::size_t trie_size() const { return trie_.size(); }

 private:
  friend GarsideSystem build_system(const SystemDef&, const BuildOptions&);

  std::size_t idx(SimpleId s, SimpleId t) const { return static_cast<std::size_t>(s) * simples_.size() + t; }

  struct TrieEntry {
    SimpleId simple = kNone;
    std::vector<TrieNode> child;  // indexed by atom, 0 = absent
  };

  std::string name_;
  Alphabet alphabet_;
  BuildOptions options_;
  std::vector<SimpleEntry> simples_;
  std::vector<SimpleId> atom_simple_;
  std::vector<bool> left_div_, right_div_;
  std::vector<SimpleId> meet_left_, meet_right_, join_left_, join_right_;
  std::vector<SimpleId> product_, left_quot_, right_quot_;
  std::vector<SimpleId> dpartial_, dpartial_inv_;
  std::vector<std::vector<SimpleId>> tau_pow_;        // [e mod order][s]
  std::vector<std::vector<AtomId>> tau_pow_atoms_;    // [e mod order][a]
  int order_ = 1;
  std::size_t len_min_ = 0, len_max_ = 0;
  bool homogeneous_ = false;
  std::vector<PositiveWord> chains_;
  std::vector<Relation> relations_;
  std::optional<std::vector<std::int64_t>> weights_;
  std::int64_t delta_weight_ = 0;
  std::vector<LaurentMatrix> rep_;
  std::vector<TrieEntry> trie_;
};

struct SpindleOk {};
struct SpindleWitness {
  SimpleId first = 0;
  SimpleId second = 0;
  SimpleId gcd = 0;
  bool right_gcd = false;  // which meet table violated the condition
};
using SpindleResult = std::variant<SpindleOk, SpindleWitness>;

/// First violating pair in (SimpleId, SimpleId) order, or Ok.
SpindleResult spindle_check(const GarsideSystem& sys);

struct MeetJoin {
  SimpleId left_gcd, right_gcd, left_lcm, right_lcm;
  friend bool operator==(const MeetJoin&, const MeetJoin&) = default;
};
MeetJoin lattice_meet_join(const GarsideSystem& sys, SimpleId s, SimpleId t);

struct Complements {
  SimpleId dpartial, dpartial_inv, tau;
  friend bool operator==(const Complements&, const Complements&) = default;
};
Complements complement_maps(const GarsideSystem& sys, SimpleId s);

int system_order(const GarsideSystem& sys);

/// Looks up a simple by one of its words (space-separated text).
SimpleId simple_by_word(const GarsideSystem& sys, std::string_view text);
std::string render_simple(const GarsideSystem& sys, SimpleId s);

}  // namespace garside
