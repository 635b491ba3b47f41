#include "garside/axioms.hpp"

#include <variant>

#include "garside/normal_form.hpp"

namespace garside {

namespace {

std::string pair_detail(const GarsideSystem& sys, SimpleId s, SimpleId t) {
  return render_simple(sys, s) + "," + render_simple(sys, t);
}

}  // namespace

std::vector<AxiomResult> axiom_suite(const GarsideSystem& sys) {
  std::vector<AxiomResult> out;
  const SimpleId n = static_cast<SimpleId>(sys.simple_count());

  AxiomResult inv{"dpartial-inverse", true, ""};
  for (SimpleId s = 0; s < n && inv.pass; ++s) {
    const SimpleId d = sys.dpartial(s);
    if (sys.dpartial_inv(d) != s || sys.dpartial(sys.dpartial_inv(s)) != s || sys.product(s, d) != sys.delta() ||
        sys.product(sys.dpartial_inv(s), s) != sys.delta()) {
      inv = {inv.name, false, render_simple(sys, s)};
    }
  }
  out.push_back(inv);

  AxiomResult sq{"dpartial-squared-is-tau", true, ""};
  for (SimpleId s = 0; s < n && sq.pass; ++s) {
    if (sys.dpartial(sys.dpartial(s)) != sys.tau(s)) sq = {sq.name, false, render_simple(sys, s)};
  }
  out.push_back(sq);

  AxiomResult ord{"tau-order", true, "ord=" + std::to_string(sys.order())};
  for (int k = 1; k <= sys.order() && ord.pass; ++k) {
    bool id = true;
    for (SimpleId s = 0; s < n; ++s) id = id && sys.tau_power(s, k) == s;
    if (id != (k == sys.order())) ord = {ord.name, false, "tau^" + std::to_string(k)};
  }
  out.push_back(ord);

  const SpindleResult spindle = spindle_check(sys);
  if (const auto* w = std::get_if<SpindleWitness>(&spindle)) {
    out.push_back({"spindle-meet", false,
                   pair_detail(sys, w->first, w->second) + (w->right_gcd ? " right-gcd=" : " left-gcd=") +
                       render_simple(sys, w->gcd)});
  } else {
    out.push_back({"spindle-meet", true, ""});
  }

  AxiomResult join{"spindle-join", true, ""};
  for (SimpleId s = 0; s < n && join.pass; ++s) {
    for (SimpleId t = 0; t < n && join.pass; ++t) {
      for (SimpleId j : {sys.join_left(s, t), sys.join_right(s, t)}) {
        if (j != s && j != t && j != sys.delta()) join = {join.name, false, pair_detail(sys, s, t)};
      }
    }
  }
  out.push_back(join);

  AxiomResult uniq{"unique-proper-words", true, ""};
  for (SimpleId s = 0; s < n && uniq.pass; ++s) {
    if (sys.is_proper(s) && sys.simple(s).all_words.size() != 1) uniq = {uniq.name, false, render_simple(sys, s)};
  }
  out.push_back(uniq);
  return out;
}

AxiomResult oracle_agreement(const GarsideSystem& sys, const Oracle& oracle, std::size_t max_len) {
  const std::size_t k = 2 * sys.atom_count();
  std::size_t words = 0;
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<std::size_t> digits(len, 0);
    for (bool more = true; more;) {
      Word w;
      for (std::size_t d : digits) w.push_back({static_cast<AtomId>(d / 2), d % 2 == 1});
      ++words;
      if (lnf(sys, w, oracle) != greedy_reference(sys, w)) {
        return {"oracle-agreement", false, sys.alphabet().render(w)};
      }
      more = false;
      for (std::size_t i = 0; i < len; ++i) {
        if (++digits[i] < k) {
          more = true;
          break;
        }
        digits[i] = 0;
      }
    }
  }
  return {"oracle-agreement", true, std::to_string(words) + " words"};
}

}  // namespace garside
