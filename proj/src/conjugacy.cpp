#include "garside/conjugacy.hpp"

#include <algorithm>
#include <deque>

#include "garside/error.hpp"
#include "garside/word_engine.hpp"

namespace garside {

namespace {

Word simple_word(const GarsideSystem& sys, SimpleId s) { return to_word(sys.simple(s).canonical_word); }

void append(Word& out, const Word& w) { out.insert(out.end(), w.begin(), w.end()); }

Word simples_word(const GarsideSystem& sys, const std::vector<SimpleId>& ss, std::int64_t twist) {
  Word out;
  for (SimpleId s : ss) append(out, simple_word(sys, sys.tau_power(s, twist)));
  return out;
}

void require_factors(const NormalForm& nf) {
  if (nf.cl() == 0) fail(ErrorKind::ZeroCanonicalLength, "cycling needs at least one non-Δ factor");
}

std::size_t cap_check(std::size_t size, const ConjugacyOptions& options) {
  if (size > options.saturation_cap) {
    fail(ErrorKind::CapExceeded, "super summit search exceeded " + std::to_string(options.saturation_cap) + " elements");
  }
  return size;
}

}  // namespace

NormalForm cycle(const GarsideSystem& sys, const NormalForm& nf) {
  require_factors(nf);
  std::vector<SimpleId> ss(nf.factors.begin() + 1, nf.factors.end());
  ss.push_back(sys.tau_power(nf.factors.front(), -nf.p));
  return normalize(sys, nf.p, ss);
}

NormalForm decycle(const GarsideSystem& sys, const NormalForm& nf) {
  require_factors(nf);
  std::vector<SimpleId> ss{sys.tau_power(nf.factors.back(), nf.p)};
  ss.insert(ss.end(), nf.factors.begin(), nf.factors.end() - 1);
  return normalize(sys, nf.p, ss);
}

NormalForm conjugate_by_simple(const GarsideSystem& sys, const NormalForm& nf, SimpleId s) {
  if (s == sys.identity()) return nf;
  if (s == sys.delta()) return tau_nf(sys, nf, 1);
  std::vector<SimpleId> ss{sys.tau_power(sys.dpartial_inv(s), nf.p)};
  ss.insert(ss.end(), nf.factors.begin(), nf.factors.end());
  ss.push_back(s);
  return normalize(sys, nf.p - 1, ss);
}

bool is_rigid(const GarsideSystem& sys, const NormalForm& nf) {
  if (nf.cl() < 2) return false;
  const SimpleId first = sys.tau_power(nf.factors.front(), -nf.p);
  return sys.meet_left(first, sys.dpartial(nf.factors.back())) == sys.identity();
}

std::int64_t element_order(const GarsideSystem& sys, const NormalForm& nf) {
  for (std::int64_t n = 1; n < sys.order(); ++n) {
    if (tau_nf(sys, nf, n) == nf) return n;
  }
  return sys.order();
}

std::optional<std::size_t> Saturation::find(const NormalForm& nf) const {
  auto it = index.find(nf);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

Word Saturation::path_to(const GarsideSystem& sys, std::size_t member) const {
  std::vector<SimpleId> chain;
  for (std::size_t k = member; k != 0; k = parent[k]) chain.push_back(via[k]);
  Word out;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) append(out, simple_word(sys, *it));
  return out;
}

Saturation saturate(const GarsideSystem& sys, const NormalForm& nf, const ConjugacyOptions& options) {
  Saturation sat;
  sat.root = nf;
  sat.inf_s = nf.inf();
  sat.sup_s = nf.sup();
  std::size_t explored = 0;
  for (bool restart = true; restart;) {
    restart = false;
    sat.members = {sat.root};
    sat.index = {{sat.root, 0}};
    sat.parent = {0};
    sat.via = {sys.identity()};
    for (std::size_t k = 0; k < sat.members.size() && !restart; ++k) {
      for (SimpleId s = 1; s < sys.simple_count(); ++s) {
        NormalForm x = conjugate_by_simple(sys, sat.members[k], s);
        if (x.inf() < sat.inf_s || x.sup() > sat.sup_s) continue;
        cap_check(++explored, options);
        if (x.inf() > sat.inf_s || x.sup() < sat.sup_s) {
          append(sat.root_conjugator, sat.path_to(sys, k));
          append(sat.root_conjugator, simple_word(sys, s));
          sat.root = x;
          sat.inf_s = x.inf();
          sat.sup_s = x.sup();
          restart = true;
          break;
        }
        if (sat.index.emplace(x, sat.members.size()).second) {
          sat.members.push_back(std::move(x));
          sat.parent.push_back(k);
          sat.via.push_back(s);
        }
      }
    }
  }
  return sat;
}

Conjugate sss_representative_with_conjugator(const GarsideSystem& sys, const NormalForm& nf, const Oracle& oracle,
                                            const ConjugacyOptions& options) {
  const std::size_t l = nf.cl();
  if (l == 0) return {nf, {}};
  if (l == 1) {
    Saturation sat = saturate(sys, nf, options);
    return {sat.root, sat.root_conjugator};
  }
  if (is_rigid(sys, nf)) return {nf, {}};
  const std::int64_t p = nf.p;
  const auto& s = nf.factors;
  Conjugate out;
  bool found = false;
  for (std::size_t p0 = l / 2; p0 >= 1 && !found; --p0) {
    const std::vector<SimpleId> tail(s.end() - static_cast<std::ptrdiff_t>(p0), s.end());
    Word lhs = simples_word(sys, tail, p);
    append(lhs, simples_word(sys, std::vector<SimpleId>(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(p0 - 1)), 0));
    const SimpleId target = s[p0 - 1];
    for (SimpleId prefix = 0; prefix < sys.simple_count() && !found; ++prefix) {
      if (!sys.left_divides(prefix, target)) continue;
      Word w = lhs;
      append(w, simple_word(sys, prefix));
      append(w, delta_power_word(sys, -static_cast<std::int64_t>(p0)));
      if (!oracle.is_identity(w)) continue;
      found = true;
      const SimpleId rest = sys.left_quotient(prefix, target);
      out.conjugator = inverse(simples_word(sys, tail, 0));
      const auto mid_begin = s.begin() + static_cast<std::ptrdiff_t>(p0);
      const auto mid_end = s.end() - static_cast<std::ptrdiff_t>(p0);
      std::vector<SimpleId> mid;
      if (rest != sys.identity()) mid.push_back(rest);
      if (mid_begin < mid_end) mid.insert(mid.end(), mid_begin, mid_end);
      out.nf = normalize(sys, p + static_cast<std::int64_t>(p0), mid);
      if (rest == sys.identity() && out.nf.cl() >= 1) {
        const SimpleId first = sys.tau_power(out.nf.factors.back(), out.nf.p);
        if (sys.meet_left(sys.dpartial(first), out.nf.factors.front()) != sys.identity()) {
          append(out.conjugator, inverse(simple_word(sys, out.nf.factors.back())));
          out.nf = decycle(sys, out.nf);
        }
      }
    }
  }
  if (!found) {
    out.conjugator = inverse(simple_word(sys, s.back()));
    out.nf = decycle(sys, nf);
  }
  if (out.nf.cl() == 1) {
    Saturation sat = saturate(sys, out.nf, options);
    append(out.conjugator, sat.root_conjugator);
    out.nf = sat.root;
  }
  return out;
}

NormalForm sss_representative(const GarsideSystem& sys, const NormalForm& nf, const Oracle& oracle,
                              const ConjugacyOptions& options) {
  return sss_representative_with_conjugator(sys, nf, oracle, options).nf;
}

SummitData sss_enumerate(const GarsideSystem& sys, const NormalForm& nf, const Oracle& oracle,
                         const ConjugacyOptions& options) {
  SummitData data;
  data.representative = sss_representative(sys, nf, oracle, options);
  data.inf_s = data.representative.inf();
  data.sup_s = data.representative.sup();
  data.cl_s = data.sup_s - data.inf_s;
  if (data.cl_s == 0) {
    data.sss.insert(data.representative);
    return data;
  }
  if (data.cl_s == 1) {
    const Saturation sat = saturate(sys, data.representative, options);
    data.sss.insert(sat.members.begin(), sat.members.end());
    for (const auto& m : sat.members) {
      for (SimpleId s = 1; s < sys.simple_count(); ++s) {
        NormalForm x = conjugate_by_simple(sys, m, s);
        if (data.sss.count(x)) data.edges.push_back({m, s, std::move(x)});
      }
    }
    return data;
  }
  std::deque<NormalForm> queue{data.representative};
  data.sss.insert(data.representative);
  while (!queue.empty()) {
    const NormalForm b = queue.front();
    queue.pop_front();
    if (b.inf() != data.inf_s || b.sup() != data.sup_s) {
      fail(ErrorKind::Internal, "summit closure left the super summit interval");
    }
    const std::pair<SimpleId, NormalForm> moves[] = {
        {sys.tau_power(b.factors.front(), -b.p), cycle(sys, b)},
        {sys.delta(), tau_nf(sys, b, 1)},
    };
    for (const auto& [g, x] : moves) {
      data.edges.push_back({b, g, x});
      if (data.sss.insert(x).second) {
        cap_check(data.sss.size(), options);
        queue.push_back(x);
      }
    }
  }
  return data;
}

namespace {

struct Match {
  Conjugate r1, r2;
  Word shift;
};

std::optional<Match> match(const GarsideSystem& sys, const Word& w1, const Word& w2, const Oracle& oracle,
                           const ConjugacyOptions& options) {
  Match m;
  m.r1 = sss_representative_with_conjugator(sys, lnf(sys, w1, oracle), oracle, options);
  m.r2 = sss_representative_with_conjugator(sys, lnf(sys, w2, oracle), oracle, options);
  const NormalForm& b1 = m.r1.nf;
  const NormalForm& b2 = m.r2.nf;
  if (b1.p != b2.p || b1.cl() != b2.cl()) return std::nullopt;
  const std::size_t l = b1.cl();
  if (l == 0) return m;
  if (l == 1) {
    const Saturation sat = saturate(sys, b1, options);
    auto k = sat.find(b2);
    if (!k) return std::nullopt;
    m.shift = sat.root_conjugator;
    append(m.shift, sat.path_to(sys, *k));
    return m;
  }
  const std::int64_t r = element_order(sys, b1);
  const std::int64_t p = b1.p;
  std::vector<SimpleId> tuple(l);
  for (std::size_t j = 0; j < l; ++j) {
    for (std::int64_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < l; ++k) {
        tuple[k] = k + j < l ? sys.tau_power(b1.factors[k + j], i) : sys.tau_power(b1.factors[k + j - l], i - p);
      }
      if (tuple != b2.factors) continue;
      m.shift = delta_power_word(sys, i);
      append(m.shift, simples_word(sys, std::vector<SimpleId>(b1.factors.begin(), b1.factors.begin() + static_cast<std::ptrdiff_t>(j)), i - p));
      return m;
    }
  }
  return std::nullopt;
}

}  // namespace

bool decide_conjugacy(const GarsideSystem& sys, const Word& w1, const Word& w2, const Oracle& oracle,
                      const ConjugacyOptions& options) {
  return match(sys, w1, w2, oracle, options).has_value();
}

std::optional<Word> conjugacy_witness(const GarsideSystem& sys, const Word& w1, const Word& w2, const Oracle& oracle,
                                      const ConjugacyOptions& options) {
  auto m = match(sys, w1, w2, oracle, options);
  if (!m) return std::nullopt;
  Word g = m->r1.conjugator;
  append(g, m->shift);
  append(g, inverse(m->r2.conjugator));
  g = free_reduce(g);
  Word check = inverse(g);
  append(check, w1);
  append(check, g);
  append(check, inverse(w2));
  if (!oracle.is_identity(check)) {
    fail(ErrorKind::WitnessVerificationFailed, "assembled conjugator does not conjugate the inputs");
  }
  return g;
}

}  // namespace garside
