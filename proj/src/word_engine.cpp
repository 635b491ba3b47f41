#include "garside/word_engine.hpp"

#include <algorithm>

#include "garside/error.hpp"

namespace garside {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == invert(x)) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

bool positive_equiv(const GarsideSystem& sys, const PositiveWord& u, const PositiveWord& v) {
  if (u == v) return true;
  std::size_t longest = std::max({u.size(), v.size(), sys.len_max()});
  auto cls = equivalence_class(sys.relations(), u, sys.options().max_class_size, sys.options().length_factor * longest);
  return std::binary_search(cls.begin(), cls.end(), v);
}

std::optional<SimpleId> is_simple_word(const GarsideSystem& sys, const PositiveWord& w) {
  GarsideSystem::TrieNode node = sys.trie_root();
  for (AtomId a : w) {
    auto next = sys.trie_step(node, a);
    if (!next) return std::nullopt;
    node = *next;
  }
  SimpleId s = sys.trie_simple(node);
  if (s == GarsideSystem::kNone) return std::nullopt;
  return s;
}

LaurentMatrix matrix_eval(const std::vector<LaurentMatrix>& rep, const Word& w) {
  if (rep.empty()) fail(ErrorKind::NoRepresentation, "system has no matrix representation");
  std::vector<std::optional<LaurentMatrix>> inv(rep.size());
  LaurentMatrix m = LaurentMatrix::identity(rep.front().dim());
  for (Letter x : w) {
    if (x.atom >= rep.size()) fail(ErrorKind::Internal, "letter outside the representation");
    if (!x.inverse) {
      m = m * rep[x.atom];
    } else {
      if (!inv[x.atom]) inv[x.atom] = rep[x.atom].inverse();
      m = m * *inv[x.atom];
    }
  }
  return m;
}

Word tau_word(const GarsideSystem& sys, const Word& w, std::int64_t e) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) out.push_back({sys.tau_atom_power(x.atom, e), x.inverse});
  return out;
}

PositiveWord tau_word(const GarsideSystem& sys, const PositiveWord& w, std::int64_t e) {
  PositiveWord out;
  out.reserve(w.size());
  for (AtomId a : w) out.push_back(sys.tau_atom_power(a, e));
  return out;
}

Word delta_power_word(const GarsideSystem& sys, std::int64_t p) {
  Word d = to_word(sys.delta_word());
  if (p < 0) d = inverse(d);
  Word out;
  for (std::int64_t i = 0; i < (p < 0 ? -p : p); ++i) out.insert(out.end(), d.begin(), d.end());
  return out;
}

std::optional<std::int64_t> weight(const GarsideSystem& sys, const Word& w) {
  const auto& wts = sys.atom_weights();
  if (!wts) return std::nullopt;
  std::int64_t total = 0;
  for (Letter x : w) total += x.inverse ? -(*wts)[x.atom] : (*wts)[x.atom];
  return total;
}

}  // namespace garside
