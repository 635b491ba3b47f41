#include "garside/system.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "garside/error.hpp"

namespace garside {

namespace {

using Key = std::string;  // one char per atom

Key to_key(const PositiveWord& w) {
  Key k;
  k.reserve(w.size());
  for (AtomId a : w) k.push_back(static_cast<char>(a));
  return k;
}

PositiveWord from_key(const Key& k) {
  PositiveWord w;
  w.reserve(k.size());
  for (char c : k) w.push_back(static_cast<AtomId>(static_cast<unsigned char>(c)));
  return w;
}

bool shortlex_less(const Key& a, const Key& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<Key> closure_keys(const std::vector<std::pair<Key, Key>>& rel, const Key& start, std::size_t max_class,
                              std::size_t max_len) {
  std::unordered_set<Key> seen{start};
  std::deque<Key> queue{start};
  auto visit = [&](Key next) {
    if (next.size() > max_len) {
      fail(ErrorKind::ClosureCapExceeded, "closure produced a word of length " + std::to_string(next.size()) +
                                              " (limit " + std::to_string(max_len) + ")");
    }
    if (seen.insert(next).second) {
      if (seen.size() > max_class) {
        fail(ErrorKind::ClosureCapExceeded, "equivalence class exceeds " + std::to_string(max_class) + " words");
      }
      queue.push_back(std::move(next));
    }
  };
  while (!queue.empty()) {
    Key w = std::move(queue.front());
    queue.pop_front();
    for (const auto& [l, r] : rel) {
      for (int dir = 0; dir < 2; ++dir) {
        const Key& from = dir ? r : l;
        const Key& to = dir ? l : r;
        for (std::size_t pos = w.find(from); pos != Key::npos; pos = w.find(from, pos + 1)) {
          Key next = w;
          next.replace(pos, from.size(), to);
          visit(std::move(next));
        }
      }
    }
  }
  std::vector<Key> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Key, Key>> relation_keys(const std::vector<Relation>& relations) {
  std::vector<std::pair<Key, Key>> out;
  for (const auto& [u, v] : relations) out.emplace_back(to_key(u), to_key(v));
  return out;
}

using Rational = boost::multiprecision::cpp_rational;

// Positive integer weights w with w(u) = w(v) for every relation, if an
// obvious candidate exists: all ones, or a one-dimensional solution space.
std::optional<std::vector<std::int64_t>> solve_weights(const std::vector<Relation>& relations, std::size_t n,
                                                       bool homogeneous) {
  if (homogeneous) return std::vector<std::int64_t>(n, 1);
  std::vector<std::vector<Rational>> rows;
  for (const auto& [u, v] : relations) {
    std::vector<Rational> row(n, 0);
    for (AtomId a : u) row[a] += 1;
    for (AtomId a : v) row[a] -= 1;
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    Rational lead = rows[r][c];
    for (auto& x : rows[r]) x /= lead;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c] == 0) continue;
      Rational f = rows[k][c];
      for (std::size_t cc = 0; cc < n; ++cc) rows[k][cc] -= f * rows[r][cc];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (n - pivot_col.size() != 1) return std::nullopt;
  std::size_t free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::vector<Rational> sol(n, 0);
  sol[free_col] = 1;
  for (std::size_t k = 0; k < pivot_col.size(); ++k) sol[pivot_col[k]] = -rows[k][free_col];

  BigInt den = 1;
  for (const auto& x : sol) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
  std::vector<BigInt> ints;
  BigInt g = 0;
  for (const auto& x : sol) {
    BigInt v = boost::multiprecision::numerator(x) * (den / boost::multiprecision::denominator(x));
    ints.push_back(v);
    g = boost::multiprecision::gcd(g, v);
  }
  if (g == 0) return std::nullopt;
  bool all_pos = std::all_of(ints.begin(), ints.end(), [](const BigInt& v) { return v > 0; });
  bool all_neg = std::all_of(ints.begin(), ints.end(), [](const BigInt& v) { return v < 0; });
  if (!all_pos && !all_neg) return std::nullopt;
  std::vector<std::int64_t> out;
  for (const auto& v : ints) {
    BigInt w = abs(v / g);
    if (w > 1000000) return std::nullopt;
    out.push_back(static_cast<std::int64_t>(w));
  }
  return out;
}

LaurentMatrix eval_positive(const std::vector<LaurentMatrix>& rep, const PositiveWord& w) {
  LaurentMatrix m = LaurentMatrix::identity(rep.front().dim());
  for (AtomId a : w) m = m * rep[a];
  return m;
}

int perm_order(const std::vector<AtomId>& perm) {
  std::vector<bool> done(perm.size(), false);
  long long order = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (done[i]) continue;
    long long len = 0;
    for (std::size_t j = i; !done[j]; j = perm[j]) {
      done[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return static_cast<int>(order);
}

}  // namespace

BuildOptions BuildOptions::from_environment() {
  BuildOptions o;
  if (const char* env = std::getenv("GARSIDE_CLOSURE_CAP")) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(env, &used);
      if (used != std::string_view(env).size() || v == 0) throw std::invalid_argument(env);
      o.max_class_size = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, std::string("GARSIDE_CLOSURE_CAP must be a positive integer, got '") + env + "'");
    }
  }
  return o;
}

std::vector<PositiveWord> equivalence_class(const std::vector<Relation>& relations, const PositiveWord& w,
                                            std::size_t max_class_size, std::size_t max_length) {
  std::vector<PositiveWord> out;
  for (const Key& k : closure_keys(relation_keys(relations), to_key(w), max_class_size, max_length)) {
    out.push_back(from_key(k));
  }
  return out;
}

SimpleId GarsideSystem::tau_power(SimpleId s, std::int64_t e) const {
  std::int64_t r = e % order_;
  if (r < 0) r += order_;
  return tau_pow_[static_cast<std::size_t>(r)].at(s);
}

AtomId GarsideSystem::tau_atom_power(AtomId a, std::int64_t e) const {
  std::int64_t r = e % order_;
  if (r < 0) r += order_;
  return tau_pow_atoms_[static_cast<std::size_t>(r)].at(a);
}

std::optional<GarsideSystem::TrieNode> GarsideSystem::trie_step(TrieNode node, AtomId a) const {
  const auto& e = trie_.at(node);
  if (a >= e.child.size() || e.child[a] == 0) return std::nullopt;
  return e.child[a];
}

GarsideSystem build_system(const SystemDef& def, const BuildOptions& options) {
  const std::size_t n = def.atoms.size();
  if (n == 0) fail(ErrorKind::MalformedDef, "system '" + def.name + "' has no atoms");
  if (n > 255) fail(ErrorKind::MalformedDef, "at most 255 atoms are supported");

  GarsideSystem sys;
  sys.name_ = def.name;
  sys.alphabet_ = Alphabet(def.atoms);
  sys.options_ = options;

  auto check_word = [&](const PositiveWord& w, const char* what) {
    if (w.empty()) fail(ErrorKind::MalformedDef, std::string(what) + " is empty");
    for (AtomId a : w) {
      if (a >= n) fail(ErrorKind::MalformedDef, std::string(what) + " uses an unknown atom");
    }
  };

  PositiveWord delta;
  std::vector<Relation> relations;
  if (!def.delta_chains.empty()) {
    if (def.delta_chains.size() != n) {
      fail(ErrorKind::MalformedDef, "expected one Δ chain per atom (" + std::to_string(n) + "), got " +
                                        std::to_string(def.delta_chains.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
      check_word(def.delta_chains[i], "Δ chain");
      if (def.delta_chains[i].front() != i) {
        fail(ErrorKind::MalformedDef, "Δ chain " + std::to_string(i + 1) + " must begin with atom '" + def.atoms[i] + "'");
      }
      if (i > 0) relations.emplace_back(def.delta_chains[0], def.delta_chains[i]);
    }
    delta = def.delta_chains[0];
    sys.chains_ = def.delta_chains;
  } else if (def.delta_word) {
    delta = *def.delta_word;
    check_word(delta, "Δ word");
  } else {
    fail(ErrorKind::MalformedDef, "no Δ given: need a delta chain line or a delta-word");
  }
  for (const auto& [u, v] : def.extra_relations) {
    check_word(u, "relation side");
    check_word(v, "relation side");
    relations.emplace_back(u, v);
  }
  sys.relations_ = relations;
  sys.homogeneous_ = std::all_of(relations.begin(), relations.end(),
                                 [](const Relation& r) { return r.first.size() == r.second.size(); });

  std::size_t longest = delta.size();
  for (const auto& c : def.delta_chains) longest = std::max(longest, c.size());
  const std::size_t max_len = options.length_factor * longest;
  const auto rel = relation_keys(relations);
  const std::vector<Key> delta_class = closure_keys(rel, to_key(delta), options.max_class_size, max_len);

  std::set<Key> prefixes, suffixes;
  for (const Key& w : delta_class) {
    for (std::size_t i = 0; i <= w.size(); ++i) {
      prefixes.insert(w.substr(0, i));
      suffixes.insert(w.substr(i));
    }
  }
  if (prefixes != suffixes) {
    fail(ErrorKind::NotBalanced, "left and right divisor sets of Δ differ in system '" + def.name + "'");
  }

  // Group prefixes into classes.
  std::map<Key, std::size_t> class_of;
  std::vector<std::vector<Key>> classes;
  for (const Key& p : prefixes) {
    if (class_of.count(p)) continue;
    std::vector<Key> cls = closure_keys(rel, p, options.max_class_size, max_len);
    for (const Key& w : cls) {
      if (!prefixes.count(w)) fail(ErrorKind::Internal, "divisor class escapes the prefix set");
      class_of[w] = classes.size();
    }
    classes.push_back(std::move(cls));
  }
  const Key delta_key = to_key(delta);
  const std::size_t delta_cls = class_of.at(delta_key);
  const std::size_t ident_cls = class_of.at(Key{});

  auto canonical = [&](std::size_t c) {
    if (c == delta_cls) return delta_key;
    return *std::min_element(classes[c].begin(), classes[c].end(), shortlex_less);
  };
  std::vector<std::size_t> order;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (c != delta_cls && c != ident_cls) order.push_back(c);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return shortlex_less(canonical(x), canonical(y)); });
  order.insert(order.begin(), ident_cls);
  order.push_back(delta_cls);

  const std::size_t ns = order.size();
  std::vector<SimpleId> id_of_class(classes.size());
  for (std::size_t i = 0; i < ns; ++i) {
    const std::size_t c = order[i];
    id_of_class[c] = static_cast<SimpleId>(i);
    SimpleEntry e;
    e.id = static_cast<SimpleId>(i);
    e.canonical_word = from_key(canonical(c));
    for (const Key& w : classes[c]) e.all_words.push_back(from_key(w));
    e.len = e.canonical_word.size();
    if (sys.defined_by_chains() && i != 0 && i + 1 != ns && e.all_words.size() != 1) {
      fail(ErrorKind::MalformedDef, "proper simple '" + sys.alphabet_.render(e.canonical_word) + "' has " +
                                        std::to_string(e.all_words.size()) + " distinct words");
    }
    sys.simples_.push_back(std::move(e));
  }
  auto sid = [&](const Key& w) { return id_of_class[class_of.at(w)]; };

  for (AtomId a = 0; a < n; ++a) {
    Key k(1, static_cast<char>(a));
    if (!class_of.count(k)) fail(ErrorKind::MalformedDef, "atom '" + def.atoms[a] + "' does not divide Δ");
    sys.atom_simple_.push_back(sid(k));
  }

  constexpr SimpleId kNone = GarsideSystem::kNone;
  const std::size_t nn = ns * ns;
  sys.left_div_.assign(nn, false);
  sys.right_div_.assign(nn, false);
  sys.product_.assign(nn, kNone);
  sys.left_quot_.assign(nn, kNone);
  sys.right_quot_.assign(nn, kNone);
  auto at = [ns](SimpleId s, SimpleId t) { return static_cast<std::size_t>(s) * ns + t; };
  for (const Key& w : prefixes) {
    const SimpleId t = sid(w);
    for (std::size_t i = 0; i <= w.size(); ++i) {
      const SimpleId s = sid(w.substr(0, i));
      const SimpleId c = sid(w.substr(i));
      sys.product_[at(s, c)] = t;
      sys.left_div_[at(s, t)] = true;
      sys.right_div_[at(c, t)] = true;
      SimpleId& lq = sys.left_quot_[at(s, t)];
      SimpleId& rq = sys.right_quot_[at(c, t)];
      if ((lq != kNone && lq != c) || (rq != kNone && rq != s)) {
        fail(ErrorKind::NotCancellative, "cancellation fails among the divisors of Δ in system '" + def.name + "'");
      }
      lq = c;
      rq = s;
    }
  }

  // Lattice tables: unique maximal common divisor / minimal common multiple.
  sys.meet_left_.assign(nn, kNone);
  sys.meet_right_.assign(nn, kNone);
  sys.join_left_.assign(nn, kNone);
  sys.join_right_.assign(nn, kNone);
  const auto& ld = sys.left_div_;
  const auto& rd = sys.right_div_;
  auto extremum = [&](const std::vector<SimpleId>& cand, const std::vector<bool>& div, bool greatest) {
    for (SimpleId x : cand) {
      bool ok = std::all_of(cand.begin(), cand.end(), [&](SimpleId y) { return greatest ? div[at(y, x)] : div[at(x, y)]; });
      if (ok) return x;
    }
    return kNone;
  };
  std::vector<SimpleId> cand;
  for (SimpleId s = 0; s < ns; ++s) {
    for (SimpleId t = 0; t < ns; ++t) {
      struct Spec {
        const std::vector<bool>& div;
        bool meet;
        std::vector<SimpleId>& table;
      } specs[] = {{ld, true, sys.meet_left_}, {rd, true, sys.meet_right_}, {ld, false, sys.join_left_}, {rd, false, sys.join_right_}};
      for (auto& sp : specs) {
        cand.clear();
        for (SimpleId u = 0; u < ns; ++u) {
          bool common = sp.meet ? (sp.div[at(u, s)] && sp.div[at(u, t)]) : (sp.div[at(s, u)] && sp.div[at(t, u)]);
          if (common) cand.push_back(u);
        }
        SimpleId x = extremum(cand, sp.div, sp.meet);
        if (x == kNone) {
          fail(ErrorKind::NotLattice, std::string(sp.meet ? "gcd" : "lcm") + " of '" + sys.alphabet_.render(sys.simples_[s].canonical_word) +
                                          "' and '" + sys.alphabet_.render(sys.simples_[t].canonical_word) + "' does not exist among the simples");
        }
        sp.table[at(s, t)] = x;
      }
    }
  }

  const SimpleId D = static_cast<SimpleId>(ns - 1);
  for (SimpleId s = 0; s < ns; ++s) {
    sys.dpartial_.push_back(sys.left_quot_[at(s, D)]);
    sys.dpartial_inv_.push_back(sys.right_quot_[at(s, D)]);
    if (sys.dpartial_.back() == kNone || sys.dpartial_inv_.back() == kNone) {
      fail(ErrorKind::Internal, "complement of a simple is missing");
    }
  }
  std::vector<SimpleId> tau(ns);
  for (SimpleId s = 0; s < ns; ++s) tau[s] = sys.dpartial_[sys.dpartial_[s]];
  std::vector<AtomId> tau_atoms(n);
  std::vector<SimpleId> simple_atom(ns, kNone);
  for (AtomId a = 0; a < n; ++a) simple_atom[sys.atom_simple_[a]] = a;
  for (AtomId a = 0; a < n; ++a) {
    SimpleId img = tau[sys.atom_simple_[a]];
    if (simple_atom[img] == kNone) fail(ErrorKind::Internal, "τ does not map atoms to atoms");
    tau_atoms[a] = simple_atom[img];
  }
  sys.order_ = perm_order(tau_atoms);
  sys.tau_pow_.push_back({});
  sys.tau_pow_atoms_.push_back({});
  for (SimpleId s = 0; s < ns; ++s) sys.tau_pow_[0].push_back(s);
  for (AtomId a = 0; a < n; ++a) sys.tau_pow_atoms_[0].push_back(a);
  for (int e = 1; e < sys.order_; ++e) {
    std::vector<SimpleId> ts(ns);
    std::vector<AtomId> ta(n);
    for (SimpleId s = 0; s < ns; ++s) ts[s] = tau[sys.tau_pow_[e - 1][s]];
    for (AtomId a = 0; a < n; ++a) ta[a] = tau_atoms[sys.tau_pow_atoms_[e - 1][a]];
    sys.tau_pow_.push_back(std::move(ts));
    sys.tau_pow_atoms_.push_back(std::move(ta));
  }
  for (SimpleId s = 0; s < ns; ++s) {
    if (tau[sys.tau_pow_[sys.order_ - 1][s]] != s) fail(ErrorKind::Internal, "τ order on simples differs from its order on atoms");
  }

  sys.len_min_ = sys.len_max_ = delta_class.front().size();
  for (const Key& w : delta_class) {
    sys.len_min_ = std::min(sys.len_min_, w.size());
    sys.len_max_ = std::max(sys.len_max_, w.size());
  }

  sys.weights_ = solve_weights(relations, n, sys.homogeneous_);
  if (sys.weights_) {
    for (AtomId a : delta) sys.delta_weight_ += (*sys.weights_)[a];
  }

  if (!def.matrix_rep.empty()) {
    std::vector<LaurentMatrix> rep(n);
    for (AtomId a = 0; a < n; ++a) {
      auto it = def.matrix_rep.find(a);
      if (it == def.matrix_rep.end()) fail(ErrorKind::MalformedDef, "no matrix given for atom '" + def.atoms[a] + "'");
      rep[a] = it->second;
      if (rep[a].dim() == 0 || rep[a].dim() != rep[0].dim()) fail(ErrorKind::MalformedDef, "matrix dimensions disagree");
    }
    for (const auto& [u, v] : relations) {
      if (!(eval_positive(rep, u) == eval_positive(rep, v))) {
        fail(ErrorKind::MalformedDef, "matrix representation violates relation " + sys.alphabet_.render(u) + " = " +
                                          sys.alphabet_.render(v));
      }
    }
    sys.rep_ = std::move(rep);
  }

  sys.trie_.push_back({kNone, std::vector<GarsideSystem::TrieNode>(n, 0)});
  for (const SimpleEntry& e : sys.simples_) {
    for (const PositiveWord& w : e.all_words) {
      GarsideSystem::TrieNode node = 0;
      for (AtomId a : w) {
        if (sys.trie_[node].child[a] == 0) {
          sys.trie_[node].child[a] = static_cast<GarsideSystem::TrieNode>(sys.trie_.size());
          sys.trie_.push_back({kNone, std::vector<GarsideSystem::TrieNode>(n, 0)});
        }
        node = sys.trie_[node].child[a];
      }
      sys.trie_[node].simple = e.id;
    }
  }
  return sys;
}

SpindleResult spindle_check(const GarsideSystem& sys) {
  const auto n = static_cast<SimpleId>(sys.simple_count());
  for (SimpleId s = 0; s < n; ++s) {
    for (SimpleId t = 0; t < n; ++t) {
      for (bool right : {false, true}) {
        SimpleId g = right ? sys.meet_right(s, t) : sys.meet_left(s, t);
        if (g != s && g != t && g != sys.identity()) return SpindleWitness{s, t, g, right};
      }
    }
  }
  return SpindleOk{};
}

MeetJoin lattice_meet_join(const GarsideSystem& sys, SimpleId s, SimpleId t) {
  return {sys.meet_left(s, t), sys.meet_right(s, t), sys.join_left(s, t), sys.join_right(s, t)};
}

Complements complement_maps(const GarsideSystem& sys, SimpleId s) {
  return {sys.dpartial(s), sys.dpartial_inv(s), sys.tau(s)};
}

int system_order(const GarsideSystem& sys) { return sys.order(); }

SimpleId simple_by_word(const GarsideSystem& sys, std::string_view text) {
  PositiveWord w = sys.alphabet().parse_positive(text);
  GarsideSystem::TrieNode node = sys.trie_root();
  for (AtomId a : w) {
    auto next = sys.trie_step(node, a);
    if (!next) fail(ErrorKind::Parse, "'" + std::string(text) + "' is not a simple element");
    node = *next;
  }
  return sys.trie_simple(node);
}

std::string render_simple(const GarsideSystem& sys, SimpleId s) {
  if (s == sys.identity()) return "1";
  return sys.alphabet().render_compact(sys.simple(s).canonical_word);
}

}  // namespace garside
