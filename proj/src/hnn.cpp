#include "garside/hnn.hpp"

#include <cmath>

#include "garside/error.hpp"
#include "garside/word_engine.hpp"

namespace garside::hnn {

namespace {

using Images = std::vector<Word>;

void push_reduced(Word& out, Letter x) {
  if (!out.empty() && out.back() == invert(x)) {
    out.pop_back();
  } else {
    out.push_back(x);
  }
}

Word substitute(const Word& w, const Images& images) {
  Word out;
  out.reserve(w.size() * 2);
  for (Letter x : w) {
    const Word& img = images.at(x.atom);
    if (x.inverse) {
      for (auto it = img.rbegin(); it != img.rend(); ++it) push_reduced(out, invert(*it));
    } else {
      for (Letter y : img) push_reduced(out, y);
    }
  }
  return out;
}

const Images& b3_conj_t() {
  static const Images m{{pos(kB)}, {pos(kB), neg(kA)}};
  return m;
}

const Images& b3_conj_t_inv() {
  static const Images m{{neg(kB), pos(kA)}, {pos(kA)}};
  return m;
}

const Images& b4_t1() {
  static const Images m{{pos(kB)}, {pos(kB), neg(kA), pos(kB), pos(kB)}};
  return m;
}

const Images& b4_t1_inv() {
  static const Images m{{pos(kA), pos(kA), neg(kB), pos(kA)}, {pos(kA)}};
  return m;
}

}  // namespace

const Alphabet& b3_alphabet() {
  static const Alphabet a({"a", "b", "t"});
  return a;
}

const Alphabet& base_alphabet() {
  static const Alphabet a({"a", "b"});
  return a;
}

HnnNormalForm b3_hnn_nf(const Word& w) {
  HnnNormalForm nf;
  for (Letter x : w) {
    if (x.atom == kT) {
      nf.v = substitute(nf.v, x.inverse ? b3_conj_t_inv() : b3_conj_t());
      nf.p += x.inverse ? -1 : 1;
    } else if (x.atom == kA || x.atom == kB) {
      push_reduced(nf.v, x);
    } else {
      fail(ErrorKind::Parse, "HNN word letter outside {a, b, t}");
    }
  }
  return nf;
}

Word b3_to_braid(const Word& w) {
  const AtomId s1 = 0, s2 = 1;
  Word out;
  for (Letter x : w) {
    Word img;
    switch (x.atom) {
      case kA:
        img = {pos(s1), pos(s2), neg(s1), neg(s1)};
        break;
      case kB:
        img = {pos(s2), neg(s1)};
        break;
      case kT:
        img = {pos(s1)};
        break;
      default:
        fail(ErrorKind::Parse, "HNN word letter outside {a, b, t}");
    }
    if (x.inverse) img = inverse(img);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

Word b4_t1_image(const Word& w, std::int64_t m) {
  Word out = free_reduce(w);
  const Images& images = m >= 0 ? b4_t1() : b4_t1_inv();
  for (std::int64_t k = 0; k < std::abs(m); ++k) out = substitute(out, images);
  return out;
}

std::vector<GrowthRow> b4_growth(std::int64_t max_m, std::int64_t budget) {
  if (max_m > budget) {
    fail(ErrorKind::BudgetExceeded,
         "b4-growth up to m=" + std::to_string(max_m) + " exceeds the budget m<=" + std::to_string(budget));
  }
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<GrowthRow> rows;
  Word w{pos(kB)};
  for (std::int64_t m = 0; m <= max_m; ++m) {
    if (m > 0) w = substitute(w, b4_t1());
    GrowthRow row;
    row.m = m;
    for (Letter x : w) {
      if (x.atom == kA && x.inverse) ++row.alpha_bar;
      if (x.atom == kB && !x.inverse) ++row.beta;
    }
    row.length = w.size();
    if (m == 0) {
      row.recurrence_ok = row.length == 1;
    } else if (m == 1) {
      row.recurrence_ok = row.length == 4;
    } else {
      const auto& r1 = rows[static_cast<std::size_t>(m - 1)];
      const auto& r2 = rows[static_cast<std::size_t>(m - 2)];
      row.recurrence_ok = row.length == 3 * r1.length - r2.length;
    }
    const double e = static_cast<double>(2 * m + 1);
    row.closed_form = std::pow(phi, e) - std::pow(phi, -e);
    row.rel_err = std::abs(row.closed_form - static_cast<double>(row.length)) / static_cast<double>(row.length);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace garside::hnn
