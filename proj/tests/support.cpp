#include "support.hpp"

#include <algorithm>
#include <deque>

#include "garside/word_engine.hpp"

namespace testing {

using garside::Letter;
using garside::SimpleId;

void for_each_word(std::size_t n_atoms, std::size_t len, const std::function<void(const Word&)>& fn) {
  const std::size_t k = 2 * n_atoms;
  std::vector<std::size_t> digits(len, 0);
  Word w(len);
  for (;;) {
    for (std::size_t i = 0; i < len; ++i) w[i] = {static_cast<garside::AtomId>(digits[i] / 2), digits[i] % 2 == 1};
    fn(w);
    std::size_t i = 0;
    while (i < len && ++digits[i] == k) digits[i++] = 0;
    if (i == len) return;
  }
}

void for_each_word_upto(std::size_t n_atoms, std::size_t max_len, const std::function<void(const Word&)>& fn) {
  for (std::size_t len = 0; len <= max_len; ++len) for_each_word(n_atoms, len, fn);
}

Word random_word_exact(std::mt19937_64& rng, std::size_t n_atoms, std::size_t len) {
  Word w;
  for (std::size_t i = 0; i < len; ++i) {
    const auto x = rng() % (2 * n_atoms);
    w.push_back({static_cast<garside::AtomId>(x / 2), x % 2 == 1});
  }
  return w;
}

Word random_word(std::mt19937_64& rng, std::size_t n_atoms, std::size_t max_len) {
  return random_word_exact(rng, n_atoms, rng() % (max_len + 1));
}

std::vector<std::pair<Str, Str>> relations_of(const SystemDef& def) {
  auto str = [](const garside::PositiveWord& w) { return Str(w.begin(), w.end()); };
  std::vector<std::pair<Str, Str>> out;
  for (std::size_t i = 1; i < def.delta_chains.size(); ++i) out.push_back({str(def.delta_chains[0]), str(def.delta_chains[i])});
  for (const auto& [u, v] : def.extra_relations) out.push_back({str(u), str(v)});
  return out;
}

std::set<Str> brute_class(const std::vector<std::pair<Str, Str>>& rels, const Str& w, std::size_t max_len) {
  std::set<Str> seen{w};
  std::deque<Str> queue{w};
  while (!queue.empty()) {
    const Str u = queue.front();
    queue.pop_front();
    for (const auto& [l, r] : rels) {
      for (int dir = 0; dir < 2; ++dir) {
        const Str& from = dir ? r : l;
        const Str& to = dir ? l : r;
        for (std::size_t pos = 0; pos + from.size() <= u.size(); ++pos) {
          if (!std::equal(from.begin(), from.end(), u.begin() + static_cast<std::ptrdiff_t>(pos))) continue;
          Str v(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(pos));
          v.insert(v.end(), to.begin(), to.end());
          v.insert(v.end(), u.begin() + static_cast<std::ptrdiff_t>(pos + from.size()), u.end());
          if (v.size() <= max_len && seen.insert(v).second) queue.push_back(v);
        }
      }
    }
  }
  return seen;
}

std::size_t BruteSimples::find(const Str& w) const {
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (classes[k].count(w)) return k;
  }
  return classes.size();
}

BruteSimples brute_simples(const SystemDef& def) {
  const auto rels = relations_of(def);
  const garside::PositiveWord& dw = def.delta_word ? *def.delta_word : def.delta_chains.at(0);
  std::size_t longest = dw.size();
  for (const auto& c : def.delta_chains) longest = std::max(longest, c.size());
  const std::size_t cap = 3 * longest;
  BruteSimples out;
  out.delta_class = brute_class(rels, Str(dw.begin(), dw.end()), cap);
  std::set<Str> prefixes;
  for (const auto& w : out.delta_class) {
    for (std::size_t k = 0; k <= w.size(); ++k) prefixes.insert(Str(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)));
  }
  for (const auto& p : prefixes) {
    if (out.find(p) == out.classes.size()) out.classes.push_back(brute_class(rels, p, cap));
  }
  return out;
}

std::set<NormalForm> brute_sss(const GarsideSystem& sys, const NormalForm& start) {
  NormalForm b = start;
  std::int64_t lo = b.inf(), hi = b.sup();
  for (;;) {
    std::set<NormalForm> seen{b};
    std::vector<NormalForm> stack{b};
    bool improved = false;
    while (!stack.empty() && !improved) {
      const NormalForm x = stack.back();
      stack.pop_back();
      const Word xw = garside::to_word(sys, x);
      for (SimpleId s = 1; s < sys.simple_count(); ++s) {
        const Word sw = garside::to_word(sys.simple(s).canonical_word);
        Word w = garside::inverse(sw);
        w.insert(w.end(), xw.begin(), xw.end());
        w.insert(w.end(), sw.begin(), sw.end());
        const NormalForm y = garside::greedy_reference(sys, w);
        if (y.inf() < lo || y.sup() > hi) continue;
        if (y.inf() > lo || y.sup() < hi) {
          lo = y.inf();
          hi = y.sup();
          b = y;
          improved = true;
          break;
        }
        if (seen.insert(y).second) stack.push_back(y);
      }
    }
    if (!improved) return seen;
  }
}

std::vector<NormalForm> all_normal_forms(const GarsideSystem& sys, std::int64_t max_p, std::size_t max_cl) {
  std::vector<std::vector<SimpleId>> seqs{{}};
  for (std::size_t start = 0; start < seqs.size(); ++start) {
    if (seqs[start].size() == max_cl) continue;
    for (SimpleId s = 1; s + 1 < sys.simple_count(); ++s) {
      auto next = seqs[start];
      next.push_back(s);
      if (garside::is_left_greedy(sys, NormalForm{0, next})) seqs.push_back(next);
    }
  }
  std::vector<NormalForm> out;
  for (std::int64_t p = -max_p; p <= max_p; ++p) {
    for (const auto& s : seqs) out.push_back({p, s});
  }
  return out;
}

std::map<std::string, std::size_t> cayley_distances(const GarsideSystem& sys, std::size_t radius,
                                                    const std::function<std::string(const Word&)>& key) {
  std::map<std::string, std::size_t> dist{{key({}), 0}};
  std::vector<Word> frontier{{}};
  for (std::size_t d = 1; d <= radius; ++d) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (garside::AtomId a = 0; a < sys.atom_count(); ++a) {
        for (bool inv : {false, true}) {
          Word v = w;
          v.push_back({a, inv});
          if (dist.emplace(key(v), d).second) next.push_back(std::move(v));
        }
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

std::string matrix_key(const GarsideSystem& sys, const Word& w) {
  return garside::matrix_eval(sys.matrix_rep(), w).to_string();
}

}  // namespace testing
