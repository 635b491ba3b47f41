#include "garside/geodesic.hpp"

#include <algorithm>

#include "garside/error.hpp"
#include "garside/word_engine.hpp"

namespace garside {

namespace {

void require_homogeneous(const GarsideSystem& sys) {
  if (!sys.homogeneous()) {
    fail(ErrorKind::NotHomogeneous,
         "system '" + sys.name() +
             "' has a non-homogeneous presentation; geodesic normal forms need all relations length-preserving "
             "(in T(p,q) with p != q, reducing a^-p b yields b^-(q-1), so reduction may increase word length)");
  }
}

Word canonical(const GarsideSystem& sys, SimpleId s) { return to_word(sys.simple(s).canonical_word); }

Word neg_word(const GarsideSystem& sys, SimpleId s) { return inverse(canonical(sys, sys.dpartial(s))); }

void append(Word& out, const Word& w) { out.insert(out.end(), w.begin(), w.end()); }

}  // namespace

std::int64_t threshold(const GarsideSystem& sys, const NormalForm& nf) {
  const std::size_t r = static_cast<std::size_t>(-nf.p);
  if (nf.p >= 0 || r >= nf.cl()) fail(ErrorKind::Internal, "threshold needs p < 0 and |p| < cl");
  std::vector<std::size_t> lens;
  for (SimpleId s : nf.factors) lens.push_back(sys.simple(s).len);
  std::sort(lens.rbegin(), lens.rend());
  return static_cast<std::int64_t>(lens[r - 1]);
}

GeodesicPlan geodesic_plan(const GarsideSystem& sys, const NormalForm& nf) {
  GeodesicPlan plan;
  if (nf.p >= 0) return plan;
  const std::size_t r = static_cast<std::size_t>(-nf.p);
  const std::size_t l = nf.cl();
  if (r >= l) {
    for (std::size_t k = 0; k < l; ++k) plan.indices.push_back(k);
  } else {
    plan.t = threshold(sys, nf);
    const auto t = static_cast<std::size_t>(plan.t);
    std::size_t longer = 0;
    for (SimpleId s : nf.factors) longer += sys.simple(s).len > t;
    std::size_t ties = r - longer;
    for (std::size_t k = 0; k < l; ++k) {
      const std::size_t len = sys.simple(nf.factors[k]).len;
      if (len > t || (len == t && ties > 0)) {
        if (len == t) --ties;
        plan.indices.push_back(k);
      }
    }
  }
  for (std::size_t k : plan.indices) plan.neg_words.push_back(neg_word(sys, nf.factors[k]));
  return plan;
}

Word geodesic_from_nf(const GarsideSystem& sys, const NormalForm& nf) {
  require_homogeneous(sys);
  if (nf.p >= 0) return to_word(sys, nf);
  const std::int64_t r = -nf.p;
  const auto l = static_cast<std::int64_t>(nf.cl());
  const GeodesicPlan plan = geodesic_plan(sys, nf);
  Word out;
  if (r >= l) {
    out = delta_power_word(sys, -(r - l));
    for (std::int64_t k = 0; k < l; ++k) append(out, tau_word(sys, plan.neg_words[static_cast<std::size_t>(k)], l - 1 - k));
    return out;
  }
  // τ^r(u0) τ^{r-1}(w'_{i1} u1) ⋯ τ^0(w'_{ir} ur)
  std::int64_t twist = r;
  std::size_t next = 0;
  for (std::size_t k = 0; k < nf.factors.size(); ++k) {
    if (next < plan.indices.size() && plan.indices[next] == k) {
      --twist;
      append(out, tau_word(sys, plan.neg_words[next], twist));
      ++next;
    } else {
      append(out, tau_word(sys, canonical(sys, nf.factors[k]), twist));
    }
  }
  return out;
}

Word geodesic_nf(const GarsideSystem& sys, const Word& w, const Oracle& oracle) {
  require_homogeneous(sys);
  return geodesic_from_nf(sys, lnf(sys, w, oracle));
}

std::size_t bfs_geodesic_length(const GarsideSystem& sys, const Word& w, std::size_t cap) {
  const NormalForm target = greedy_reference(sys, w);
  std::unordered_map<NormalForm, std::size_t, NormalFormHash> dist{{NormalForm{}, 0}};
  std::vector<NormalForm> frontier{NormalForm{}};
  for (std::size_t d = 0;; ++d) {
    for (const auto& nf : frontier) {
      if (nf == target) return d;
    }
    if (d == cap) fail(ErrorKind::CapExceeded, "word length exceeds the search cap " + std::to_string(cap));
    std::vector<NormalForm> next;
    for (const auto& nf : frontier) {
      for (AtomId a = 0; a < sys.atom_count(); ++a) {
        for (bool inv : {false, true}) {
          NormalForm m = nf;
          multiply_right(sys, m, {a, inv});
          if (dist.emplace(m, d + 1).second) next.push_back(std::move(m));
        }
      }
    }
    frontier = std::move(next);
  }
}

std::unordered_map<NormalForm, std::size_t, NormalFormHash> cayley_ball(const GarsideSystem& sys, std::size_t radius) {
  std::unordered_map<NormalForm, std::size_t, NormalFormHash> dist{{NormalForm{}, 0}};
  std::vector<NormalForm> frontier{NormalForm{}};
  for (std::size_t d = 0; d < radius; ++d) {
    std::vector<NormalForm> next;
    for (const auto& nf : frontier) {
      for (AtomId a = 0; a < sys.atom_count(); ++a) {
        for (bool inv : {false, true}) {
          NormalForm m = nf;
          multiply_right(sys, m, {a, inv});
          if (dist.emplace(m, d + 1).second) next.push_back(std::move(m));
        }
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace garside
