#include "garside/normal_form.hpp"

#include <algorithm>
#include <map>

#include "garside/error.hpp"
#include "garside/word_engine.hpp"

namespace garside {

namespace {

void settle(const GarsideSystem& sys, NormalForm& nf) {
  auto& f = nf.factors;
  const SimpleId one = sys.identity();
  const SimpleId D = sys.delta();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = f.size(); i-- > 1;) {
      SimpleId m = sys.meet_left(sys.dpartial(f[i - 1]), f[i]);
      if (m == one) continue;
      f[i - 1] = sys.product(f[i - 1], m);
      f[i] = sys.left_quotient(m, f[i]);
      changed = true;
    }
    std::size_t before = f.size();
    f.erase(std::remove(f.begin(), f.end(), one), f.end());
    changed = changed || f.size() != before;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] != D) continue;
      for (std::size_t j = 0; j < i; ++j) f[j] = sys.tau(f[j]);
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
      ++nf.p;
      changed = true;
      --i;
    }
  }
}

}  // namespace

void multiply_right_simple(const GarsideSystem& sys, NormalForm& nf, SimpleId s) {
  if (s == sys.identity()) return;
  if (s == sys.delta()) {
    for (auto& f : nf.factors) f = sys.tau(f);
    ++nf.p;
    return;
  }
  nf.factors.push_back(s);
  settle(sys, nf);
}

void multiply_right(const GarsideSystem& sys, NormalForm& nf, Letter x) {
  const SimpleId a = sys.atom_simple(x.atom);
  if (!x.inverse) {
    multiply_right_simple(sys, nf, a);
    return;
  }
  // x⁻¹ = ∂(x) Δ⁻¹, and s Δ⁻¹ = Δ⁻¹ τ⁻¹(s).
  multiply_right_simple(sys, nf, sys.dpartial(a));
  for (auto& f : nf.factors) f = sys.tau_power(f, -1);
  --nf.p;
}

NormalForm normalize(const GarsideSystem& sys, std::int64_t p, const std::vector<SimpleId>& simples) {
  NormalForm nf{p, {}};
  for (SimpleId s : simples) multiply_right_simple(sys, nf, s);
  return nf;
}

NormalForm greedy_reference(const GarsideSystem& sys, const Word& w) {
  NormalForm nf;
  for (Letter x : w) multiply_right(sys, nf, x);
  return nf;
}

bool is_left_greedy(const GarsideSystem& sys, const NormalForm& nf) {
  for (std::size_t i = 0; i < nf.factors.size(); ++i) {
    if (!sys.is_proper(nf.factors[i])) return false;
    if (i + 1 < nf.factors.size() && sys.meet_left(sys.dpartial(nf.factors[i]), nf.factors[i + 1]) != sys.identity()) {
      return false;
    }
  }
  return true;
}

NormalForm tau_nf(const GarsideSystem& sys, const NormalForm& nf, std::int64_t e) {
  NormalForm out = nf;
  for (auto& f : out.factors) f = sys.tau_power(f, e);
  return out;
}

Word to_word(const GarsideSystem& sys, const NormalForm& nf) {
  Word out = delta_power_word(sys, nf.p);
  for (SimpleId s : nf.factors) {
    for (AtomId a : sys.simple(s).canonical_word) out.push_back(pos(a));
  }
  return out;
}

std::string render(const GarsideSystem& sys, const NormalForm& nf) {
  std::string out = "p=" + std::to_string(nf.p) + " factors=";
  for (std::size_t i = 0; i < nf.factors.size(); ++i) {
    if (i) out += ',';
    out += render_simple(sys, nf.factors[i]);
  }
  return out;
}

NormalForm parse_normal_form(const GarsideSystem& sys, std::string_view text) {
  std::string s(text);
  const std::string sep = " factors=";
  auto cut = s.find(sep);
  if (s.rfind("p=", 0) != 0 || cut == std::string::npos) fail(ErrorKind::Parse, "expected 'p=<int> factors=...'");
  NormalForm nf;
  try {
    std::size_t used = 0;
    nf.p = std::stoll(s.substr(2, cut - 2), &used);
    if (used != cut - 2) throw std::invalid_argument("p");
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, "bad exponent in '" + s + "'");
  }
  std::map<std::string, SimpleId> by_name;
  for (SimpleId i = 0; i < sys.simple_count(); ++i) {
    if (sys.is_proper(i)) by_name.emplace(render_simple(sys, i), i);
  }
  std::string rest = s.substr(cut + sep.size());
  std::size_t start = 0;
  while (start < rest.size()) {
    std::size_t comma = rest.find(',', start);
    std::string tok = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    auto it = by_name.find(tok);
    if (it == by_name.end()) fail(ErrorKind::Parse, "unknown proper simple '" + tok + "'");
    nf.factors.push_back(it->second);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return nf;
}

}  // namespace garside
